#include "CLI11.hpp"

#include "minmaxcert/certify.hpp"
#include "minmaxcert/control_demo.hpp"
#include "minmaxcert/convert.hpp"
#include "minmaxcert/datasets.hpp"
#include "minmaxcert/json_io.hpp"
#include "minmaxcert/train.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace minmax;

constexpr const char* kVersion = "1.0.0";

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// FNV-1a over the output bytes, recorded in the manifest
std::string digest(const std::string& text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct Manifest {
    std::string subcommand;
    std::vector<std::pair<std::string, std::string>> entries;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

    void add(const std::string& key, const std::string& value) { entries.emplace_back(key, value); }

    void write(const std::string& out_path, const std::string& result_bytes) const {
        if (out_path.empty()) return;
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        std::string j = "{\"subcommand\":\"" + subcommand + "\"";
        for (const auto& [k, v] : entries) j += ",\"" + k + "\":\"" + v + "\"";
        j += ",\"tool_version\":\"" + std::string(kVersion) + "\"";
        j += ",\"wall_clock_seconds\":" + fmt(secs);
        j += ",\"result_digest\":\"" + digest(result_bytes) + "\"}\n";
        save_text(out_path + ".manifest.json", j);
    }
};

void emit(const std::string& out, const std::string& text, Manifest& manifest) {
    if (out.empty())
        std::cout << text;
    else
        save_text(out, text);
    manifest.write(out, text);
}

Vector parse_point(const std::string& csv) {
    std::vector<double> vals;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) vals.push_back(std::stod(item));
    if (vals.empty()) throw std::runtime_error("field \"point\": empty");
    return Eigen::Map<Vector>(vals.data(), static_cast<Eigen::Index>(vals.size()));
}

// CSV rows x_1,...,x_d,target with a header line
void read_dataset_csv(const std::string& path, std::vector<Vector>& xs,
                      std::vector<double>& ys) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("field \"data\": empty file");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const Vector row = parse_point(line);
        if (row.size() < 2) throw std::runtime_error("field \"data\": rows need x and target");
        xs.push_back(row.head(row.size() - 1));
        ys.push_back(row(row.size() - 1));
    }
    if (xs.empty()) throw std::runtime_error("field \"data\": no rows");
}

int status_code(CertStatus status) {
    switch (status) {
    case CertStatus::CertifiedRobust: return 0;
    case CertStatus::Falsified: return 1;
    case CertStatus::Indeterminate: return 2;
    }
    return 2;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact robustness certificates and worst-case attacks for min-max affine "
                 "models over convex attack sets"};
    app.require_subcommand(1);

    std::string model_path, set_path, out_path, net_path, data_path, point_csv, norm_name_s =
                                                                                    "linf";
    std::string out_dir = ".", loss_name = "mse";
    double tol = 1e-6, eps = 0.1, eps_max = 1.0, radius_tol = 1e-3;
    std::uint64_t seed = 0;
    std::uint64_t control_seed = 3, mnist_seed = 7;
    int cap = 14, down_factor = 5, epochs = 100, batch = 32, m_comp = 4, n_piece = 4;
    int sensitive = 1, jobs = 1;
    double lr = 0.01;

    auto add_common = [&](CLI::App* cmd, bool needs_set) {
        cmd->add_option("--model", model_path, "model JSON path")->required();
        if (needs_set) cmd->add_option("--attack-set", set_path, "attack set JSON path")->required();
        cmd->add_option("--out", out_path, "output path (default: stdout)");
        cmd->add_option("--tol", tol, "certification tolerance");
    };

    auto* c_eval = app.add_subcommand("eval", "evaluate the model at a point");
    add_common(c_eval, false);
    c_eval->add_option("--point", point_csv, "comma-separated coordinates")->required();

    auto* c_certify = app.add_subcommand("certify", "exact robustness certificate over a set");
    add_common(c_certify, true);

    auto* c_attack = app.add_subcommand("attack", "worst-case attack over a set");
    add_common(c_attack, true);

    auto* c_radius = app.add_subcommand("radius", "largest certified ball radius at a point");
    add_common(c_radius, false);
    c_radius->add_option("--point", point_csv, "comma-separated center")->required();
    c_radius->add_option("--norm", norm_name_s, "l1 | l2 | linf");
    c_radius->add_option("--epsilon-max", eps_max, "search upper bound");
    c_radius->add_option("--radius-tol", radius_tol, "bisection tolerance");

    auto* c_accuracy = app.add_subcommand("accuracy", "certified accuracy on a CSV dataset");
    add_common(c_accuracy, false);
    c_accuracy->add_option("--data", data_path, "dataset CSV")->required();
    c_accuracy->add_option("--eps", eps, "attack radius");
    c_accuracy->add_option("--norm", norm_name_s, "l1 | l2 | linf");
    c_accuracy->add_option("--sensitive", sensitive, "label whose points are certified");
    c_accuracy->add_option("--jobs", jobs, "worker cap (certification is run sequentially)");

    auto* c_prune = app.add_subcommand("prune", "drop never-active affine pieces");
    add_common(c_prune, false);

    auto* c_slater = app.add_subcommand("slater", "check the constraint qualification");
    add_common(c_slater, true);

    auto* c_convert = app.add_subcommand("convert", "ReLU network to min-max affine model");
    c_convert->add_option("--net", net_path, "network JSON path")->required();
    c_convert->add_option("--out", out_path, "output path (default: stdout)");
    c_convert->add_option("--cap", cap, "max units per sign before refusing");

    auto* c_train = app.add_subcommand("train", "fit a model to a CSV dataset");
    c_train->add_option("--data", data_path, "dataset CSV")->required();
    c_train->add_option("--out", out_path, "output path (default: stdout)");
    c_train->add_option("--m", m_comp, "components");
    c_train->add_option("--n", n_piece, "pieces per component");
    c_train->add_option("--epochs", epochs, "training epochs");
    c_train->add_option("--lr", lr, "learning rate");
    c_train->add_option("--batch", batch, "minibatch size");
    c_train->add_option("--seed", seed, "RNG seed");
    c_train->add_option("--loss", loss_name, "mse | logistic");

    auto* c_demo_control = app.add_subcommand("demo-control", "intersection policy demo");
    c_demo_control->add_option("--out-dir", out_dir, "output directory");
    // default seed matches ControlDemoOptions: a documented seed whose trained
    // policy certifies (training is stochastic; other seeds may not)
    c_demo_control->add_option("--seed", control_seed, "RNG seed");

    auto* c_demo_mnist = app.add_subcommand("demo-mnist", "digit-pair certification demo");
    c_demo_mnist->add_option("--out-dir", out_dir, "output directory");
    c_demo_mnist->add_option("--seed", mnist_seed, "RNG seed");
    c_demo_mnist->add_option("--downsample", down_factor, "mean-pool factor");
    c_demo_mnist->add_option("--images", data_path, "IDX image file (synthetic if omitted)");
    c_demo_mnist->add_option("--labels", net_path, "IDX label file");
    c_demo_mnist->add_option("--jobs", jobs, "worker cap (certification is run sequentially)");
    int curve_points = 10;
    c_demo_mnist->add_option("--curve-points", curve_points,
                             "points per class used for the accuracy curve (0 = all; each "
                             "certificate costs a few seconds)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3; // usage errors share the IO-error exit code
    }
    CLI::App* cmd = app.get_subcommands().front();
    if (cmd->get_name() == "demo-control") seed = control_seed;
    if (cmd->get_name() == "demo-mnist") seed = mnist_seed;
    Manifest manifest;
    manifest.subcommand = cmd->get_name();
    manifest.add("seed", std::to_string(seed));
    if (!model_path.empty()) manifest.add("model", model_path);
    if (!set_path.empty()) manifest.add("attack_set", set_path);
    if (!data_path.empty()) manifest.add("data", data_path);
    if (!net_path.empty()) manifest.add("net", net_path);

    CertifyOptions copts;
    copts.tol = tol;

    if (cmd == c_eval) {
        const MinMaxModel model = load_model(model_path);
        const Vector x = parse_point(point_csv);
        emit(out_path, "{\"value\":" + fmt(evaluate(model, x)) + "}\n", manifest);
        return 0;
    }
    if (cmd == c_certify || cmd == c_attack) {
        const MinMaxModel model = load_model(model_path);
        const AttackSet set = load_attack_set(set_path);
        const CertificationResult result = certify(model, set, copts);
        if (cmd == c_certify) {
            emit(out_path, certification_to_json(result), manifest);
        } else {
            if (result.status == CertStatus::Indeterminate) {
                std::cerr << "attack: " << result.diagnostics << "\n";
                return 2;
            }
            emit(out_path, attack_to_json(result.attack, evaluate(model, result.attack)),
                 manifest);
        }
        return status_code(result.status);
    }
    if (cmd == c_radius) {
        const MinMaxModel model = load_model(model_path);
        RadiusOptions ropts;
        ropts.eps_max = eps_max;
        ropts.tol = radius_tol;
        ropts.certify = copts;
        const double radius =
            certified_radius(model, parse_point(point_csv), parse_norm(norm_name_s), ropts);
        emit(out_path, "{\"radius\":" + fmt(radius) + "}\n", manifest);
        return 0;
    }
    if (cmd == c_accuracy) {
        const MinMaxModel model = load_model(model_path);
        std::vector<Vector> xs;
        std::vector<double> ys;
        read_dataset_csv(data_path, xs, ys);
        std::vector<int> labels(ys.size());
        for (size_t q = 0; q < ys.size(); ++q) labels[q] = static_cast<int>(std::lround(ys[q]));
        const double acc = certified_accuracy(model, xs, labels, eps, sensitive,
                                              parse_norm(norm_name_s), copts);
        emit(out_path,
             "{\"eps\":" + fmt(eps) + ",\"certified_accuracy\":" + fmt(acc) + "}\n", manifest);
        return 0;
    }
    if (cmd == c_prune) {
        const MinMaxModel model = load_model(model_path);
        auto [pruned, report] = prune_redundant(model);
        std::string text = model_to_json(pruned);
        emit(out_path, text, manifest);
        std::cerr << "removed " << report.removed.size() << " pieces\n";
        return 0;
    }
    if (cmd == c_slater) {
        const MinMaxModel model = load_model(model_path);
        const AttackSet set = load_attack_set(set_path);
        auto [pruned, report] = prune_redundant(model);
        const SlaterStatus status = verify_slater(pruned, set);
        emit(out_path, std::string("{\"slater\":\"") + to_string(status) + "\"}\n", manifest);
        return status == SlaterStatus::Ok ? 0 : 2;
    }
    if (cmd == c_convert) {
        const ReluNet1H net = load_relu_net(net_path);
        emit(out_path, model_to_json(relu_to_minmax(net, cap)), manifest);
        return 0;
    }
    if (cmd == c_train) {
        std::vector<Vector> xs;
        std::vector<double> ys;
        read_dataset_csv(data_path, xs, ys);
        TrainConfig tc;
        tc.epochs = epochs;
        tc.lr = lr;
        tc.batch = batch;
        tc.seed = seed;
        if (loss_name == "mse")
            tc.loss = Loss::Mse;
        else if (loss_name == "logistic")
            tc.loss = Loss::Logistic;
        else
            throw std::runtime_error("field \"loss\": expected mse or logistic");
        double lo = ys[0], hi = ys[0];
        for (double y : ys) {
            lo = std::min(lo, y);
            hi = std::max(hi, y);
        }
        const MinMaxModel init =
            init_model(m_comp, n_piece, static_cast<int>(xs[0].size()), seed, lo, hi);
        const TrainResult result = train(init, xs, ys, tc);
        emit(out_path, model_to_json(result.model), manifest);
        if (!result.epoch_loss.empty())
            std::cerr << "final loss " << result.epoch_loss.back() << "\n";
        return 0;
    }
    if (cmd == c_demo_control) {
        ControlDemoOptions opts;
        opts.seed = seed;
        const ControlDemoReport report = run_control_demo(opts);
        write_sweep_csv(out_dir + "/control_sweep.csv", report.sweep);
        std::string j = "{\"certification\":" + certification_to_json(report.certification);
        j.erase(j.size() - 1); // drop the inner trailing newline
        j += ",\"collisions\":" + std::to_string(report.collisions) +
             ",\"final_loss\":" + fmt(report.final_loss) +
             ",\"sweep_csv\":\"control_sweep.csv\"}\n";
        emit(out_dir + "/control_report.json", j, manifest);
        return status_code(report.certification.status);
    }
    if (cmd == c_demo_mnist) {
        LabeledSet raw;
        if (!data_path.empty() && !net_path.empty())
            raw = load_idx(data_path, net_path);
        else
            raw = synth_digit_pair(seed, 60);
        raw = filter_binary(raw, 3, 8);
        if (raw.points.empty()) throw std::runtime_error("dataset holds no 3s or 8s");
        const LabeledSet data = downsample(raw, down_factor);

        std::vector<Vector> xs = data.points;
        std::vector<double> ys;
        std::vector<int> labels = data.labels;
        for (int label : labels) ys.push_back(label == 3 ? 1.0 : -1.0);

        TrainConfig tc;
        tc.epochs = 40;
        tc.lr = 0.02;
        tc.batch = 16;
        tc.seed = seed;
        tc.loss = Loss::Logistic;
        tc.adversarial = AdversarialSchedule{0.0, 0.05, 20, Norm::LInf, 10};
        const MinMaxModel init = init_model(15, 15, data.d, seed, -1.0, 1.0);
        const TrainResult trained = train(init, xs, ys, tc);
        auto [model, prep] = prune_redundant(trained.model);

        CertifyOptions fast = copts;
        fast.prune = false; // pruned once above

        // cap the curve's evaluation set so the demo finishes in minutes
        std::vector<Vector> curve_xs;
        std::vector<int> curve_labels;
        int kept3 = 0, kept8 = 0;
        for (size_t i = 0; i < xs.size(); ++i) {
            int& kept = labels[i] == 3 ? kept3 : kept8;
            if (curve_points > 0 && kept >= curve_points) continue;
            ++kept;
            curve_xs.push_back(xs[i]);
            curve_labels.push_back(labels[i]);
        }
        std::string csv = "eps,certified_accuracy\n";
        for (int step = 0; step <= 10; ++step) {
            const double e = 0.01 * step;
            const double acc =
                certified_accuracy(model, curve_xs, curve_labels, e, 3, Norm::LInf, fast);
            csv += fmt(e) + "," + fmt(acc) + "\n";
        }
        save_text(out_dir + "/accuracy_curve.csv", csv);
        save_text(out_dir + "/digit_model.json", model_to_json(model));
        emit(out_dir + "/mnist_report.json",
             "{\"d\":" + std::to_string(data.d) +
                 ",\"points\":" + std::to_string(xs.size()) +
                 ",\"final_loss\":" + fmt(trained.epoch_loss.back()) +
                 ",\"curve_points\":" + std::to_string(curve_xs.size()) +
                 ",\"curve_csv\":\"accuracy_curve.csv\",\"model\":\"digit_model.json\"}\n",
             manifest);
        return 0;
    }
    return 3;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
