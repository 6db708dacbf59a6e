#include "minmaxcert/json_io.hpp"

#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace minmax {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
    throw std::runtime_error("field \"" + field + "\": " + what);
}

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::runtime_error("malformed JSON input");
    return j;
}

int get_int(const json& j, const std::string& field) {
    if (!j.contains(field)) fail(field, "missing");
    if (!j[field].is_number_integer()) fail(field, "expected an integer");
    return j[field].get<int>();
}

double get_num(const json& j, const std::string& field) {
    if (!j.contains(field)) fail(field, "missing");
    if (!j[field].is_number()) fail(field, "expected a number");
    const double v = j[field].get<double>();
    if (!std::isfinite(v)) fail(field, "must be finite");
    return v;
}

Vector get_vector_arr(const json& arr, const std::string& field, int expected) {
    if (!arr.is_array()) fail(field, "expected an array");
    if (expected >= 0 && static_cast<int>(arr.size()) != expected)
        fail(field, "expected length " + std::to_string(expected) + ", got " +
                        std::to_string(arr.size()));
    Vector v(static_cast<Eigen::Index>(arr.size()));
    for (size_t q = 0; q < arr.size(); ++q) {
        if (!arr[q].is_number()) fail(field, "entry " + std::to_string(q) + " is not a number");
        v(static_cast<Eigen::Index>(q)) = arr[q].get<double>();
        if (!std::isfinite(v(static_cast<Eigen::Index>(q))))
            fail(field, "entry " + std::to_string(q) + " must be finite");
    }
    return v;
}

Vector get_vector(const json& j, const std::string& field, int expected) {
    if (!j.contains(field)) fail(field, "missing");
    return get_vector_arr(j[field], field, expected);
}

// fixed 17-significant-digit formatting for reproducible output bytes
std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void append_vector(std::string& out, const Vector& v) {
    out += '[';
    for (Eigen::Index r = 0; r < v.size(); ++r) {
        if (r) out += ',';
        out += fmt(v(r));
    }
    out += ']';
}

} // namespace

const char* norm_name(Norm norm) {
    switch (norm) {
    case Norm::L1: return "l1";
    case Norm::L2: return "l2";
    case Norm::LInf: return "linf";
    }
    return "?";
}

Norm parse_norm(const std::string& name) {
    if (name == "l1") return Norm::L1;
    if (name == "l2") return Norm::L2;
    if (name == "linf") return Norm::LInf;
    fail("norm", "expected one of l1, l2, linf (got \"" + name + "\")");
}

MinMaxModel parse_model_json(const std::string& text) {
    const json j = parse(text);
    const int d = get_int(j, "d"), m = get_int(j, "m"), n = get_int(j, "n");
    if (d < 1 || m < 1 || n < 1) fail("d/m/n", "must all be >= 1");
    if (!j.contains("a") || !j["a"].is_array() || static_cast<int>(j["a"].size()) != m)
        fail("a", "expected an array of m component blocks");
    if (!j.contains("b") || !j["b"].is_array() || static_cast<int>(j["b"].size()) != m)
        fail("b", "expected an array of m offset rows");
    Matrix a(static_cast<Eigen::Index>(m) * n, d);
    Matrix b(m, n);
    for (int i = 0; i < m; ++i) {
        const json& ai = j["a"][i];
        if (!ai.is_array() || static_cast<int>(ai.size()) != n)
            fail("a", "component " + std::to_string(i) + " must hold n slope vectors");
        for (int jj = 0; jj < n; ++jj)
            a.row(i * n + jj) =
                get_vector_arr(ai[jj], "a[" + std::to_string(i) + "][" + std::to_string(jj) + "]",
                               d)
                    .transpose();
    }
    for (int i = 0; i < m; ++i) {
        const json& bi = j["b"][i];
        if (!bi.is_array() || static_cast<int>(bi.size()) != n)
            fail("b", "row " + std::to_string(i) + " must hold n numbers");
        for (int jj = 0; jj < n; ++jj) {
            if (!bi[jj].is_number()) fail("b", "entry is not a number");
            b(i, jj) = bi[jj].get<double>();
        }
    }
    return MinMaxModel(m, n, d, std::move(a), std::move(b));
}

AttackSet parse_attack_set_json(const std::string& text) {
    const json j = parse(text);
    AttackSet set;
    set.d = get_int(j, "d");
    if (set.d < 1) fail("d", "must be >= 1");
    if (!j.contains("constraints") || !j["constraints"].is_array())
        fail("constraints", "missing or not an array");
    for (const json& c : j["constraints"]) {
        if (!c.contains("type") || !c["type"].is_string()) fail("type", "missing");
        const std::string type = c["type"].get<std::string>();
        if (type == "norm_ball") {
            NormBall ball;
            if (!c.contains("norm") || !c["norm"].is_string()) fail("norm", "missing");
            ball.norm = parse_norm(c["norm"].get<std::string>());
            ball.center = get_vector(c, "center", set.d);
            ball.radius = get_num(c, "radius");
            set.constraints.emplace_back(std::move(ball));
        } else if (type == "half_space") {
            HalfSpace hs;
            hs.psi = get_vector(c, "psi", set.d);
            hs.omega = get_num(c, "omega");
            set.constraints.emplace_back(std::move(hs));
        } else if (type == "box") {
            const Vector lo = get_vector(c, "lo", set.d);
            const Vector hi = get_vector(c, "hi", set.d);
            const AttackSet box = make_box(lo, hi);
            set.constraints.insert(set.constraints.end(), box.constraints.begin(),
                                   box.constraints.end());
        } else {
            fail("type", "expected norm_ball, half_space, or box (got \"" + type + "\")");
        }
    }
    validate(set);
    return set;
}

ReluNet1H parse_relu_net_json(const std::string& text) {
    const json j = parse(text);
    ReluNet1H net;
    net.d = get_int(j, "d");
    net.h = get_int(j, "h");
    if (net.d < 1 || net.h < 1) fail("d/h", "must be >= 1");
    if (!j.contains("W1") || !j["W1"].is_array() || static_cast<int>(j["W1"].size()) != net.h)
        fail("W1", "expected h rows");
    net.W1.resize(net.h, net.d);
    for (int k = 0; k < net.h; ++k)
        net.W1.row(k) =
            get_vector_arr(j["W1"][k], "W1[" + std::to_string(k) + "]", net.d).transpose();
    net.b1 = get_vector(j, "b1", net.h);
    net.w2 = get_vector(j, "w2", net.h);
    net.b2 = get_num(j, "b2");
    return net;
}

std::string model_to_json(const MinMaxModel& model) {
    std::string out = "{\"d\":" + std::to_string(model.dim()) +
                      ",\"m\":" + std::to_string(model.num_components()) +
                      ",\"n\":" + std::to_string(model.num_pieces()) + ",\"a\":[";
    for (int i = 0; i < model.num_components(); ++i) {
        if (i) out += ',';
        out += '[';
        for (int j = 0; j < model.num_pieces(); ++j) {
            if (j) out += ',';
            append_vector(out, model.slope(i, j));
        }
        out += ']';
    }
    out += "],\"b\":[";
    for (int i = 0; i < model.num_components(); ++i) {
        if (i) out += ',';
        out += '[';
        for (int j = 0; j < model.num_pieces(); ++j) {
            if (j) out += ',';
            out += fmt(model.offset(i, j));
        }
        out += ']';
    }
    out += "]}\n";
    return out;
}

std::string attack_set_to_json(const AttackSet& set) {
    std::string out = "{\"d\":" + std::to_string(set.d) + ",\"constraints\":[";
    bool first = true;
    for (const auto& c : set.constraints) {
        if (!first) out += ',';
        first = false;
        if (const auto* ball = std::get_if<NormBall>(&c)) {
            out += "{\"type\":\"norm_ball\",\"norm\":\"";
            out += norm_name(ball->norm);
            out += "\",\"center\":";
            append_vector(out, ball->center);
            out += ",\"radius\":" + fmt(ball->radius) + "}";
        } else {
            const auto& hs = std::get<HalfSpace>(c);
            out += "{\"type\":\"half_space\",\"psi\":";
            append_vector(out, hs.psi);
            out += ",\"omega\":" + fmt(hs.omega) + "}";
        }
    }
    out += "]}\n";
    return out;
}

std::string certification_to_json(const CertificationResult& result) {
    std::string out = "{\"status\":\"";
    out += to_string(result.status);
    out += "\",\"p_star\":" + fmt(result.p_star) + ",\"lower\":" + fmt(result.lower) +
           ",\"upper\":" + fmt(result.upper) + ",\"gap\":" + fmt(result.gap) + ",\"slater\":\"";
    out += to_string(result.slater);
    out += "\",\"attack\":";
    append_vector(out, result.attack);
    out += ",\"atom_weights\":";
    append_vector(out, result.atom_weights);
    out += ",\"diagnostics\":\"";
    for (char ch : result.diagnostics) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    out += "\"}\n";
    return out;
}

std::string attack_to_json(const Vector& attack, double value) {
    std::string out = "{\"attack\":";
    append_vector(out, attack);
    out += ",\"value\":" + fmt(value) + "}\n";
    return out;
}

std::string read_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void save_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

MinMaxModel load_model(const std::string& path) { return parse_model_json(read_text(path)); }
AttackSet load_attack_set(const std::string& path) {
    return parse_attack_set_json(read_text(path));
}
ReluNet1H load_relu_net(const std::string& path) { return parse_relu_net_json(read_text(path)); }

} // namespace minmax
