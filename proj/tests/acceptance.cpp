// Acceptance harness: one pass/fail line per shipped guarantee. Each check
// gates on an independent reference (enumeration oracle, dense grids, closed
// forms, or analytic formulas), never on the code path under test.

#include "minmaxcert/certify.hpp"
#include "minmaxcert/control_demo.hpp"
#include "minmaxcert/convert.hpp"
#include "minmaxcert/datasets.hpp"
#include "minmaxcert/json_io.hpp"
#include "minmaxcert/train.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace minmax;
using clock_type = std::chrono::steady_clock;

namespace {

double elapsed_s(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("criterion %2d: %s — %s\n", criterion, pass ? "PASS" : "FAIL",
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

MinMaxModel random_model(std::mt19937_64& rng, int m, int n, int d, double slope_scale = 1.0,
                         double offset_scale = 0.5) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix a(m * n, d), b(m, n);
    for (int r = 0; r < m * n; ++r)
        for (int c = 0; c < d; ++c) a(r, c) = slope_scale * gauss(rng);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) b(i, j) = offset_scale * gauss(rng);
    return MinMaxModel(m, n, d, a, b);
}

// family 0/1/2: LInf / L1 / L2 ball; family 3: bounded polytope with 2d+3
// half-spaces (a box plus three cuts at positive distance from its center).
AttackSet random_set(std::mt19937_64& rng, int d, int family) {
    std::uniform_real_distribution<double> unif(-0.5, 0.5);
    Vector center(d);
    for (int r = 0; r < d; ++r) center(r) = unif(rng);
    if (family < 3) {
        const Norm norm = family == 0 ? Norm::LInf : (family == 1 ? Norm::L1 : Norm::L2);
        std::uniform_real_distribution<double> rad(0.3, 1.0);
        return make_ball(norm, center, rad(rng));
    }
    std::uniform_real_distribution<double> side(0.5, 1.0);
    const double s = side(rng);
    Vector lo = center.array() - s, hi = center.array() + s;
    AttackSet set = make_box(lo, hi);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> margin(0.2, 0.6);
    for (int k = 0; k < 3; ++k) {
        Vector psi(d);
        do {
            for (int r = 0; r < d; ++r) psi(r) = gauss(rng);
        } while (psi.norm() < 1e-3);
        // keep the box center strictly feasible so the set has interior
        set.constraints.push_back(HalfSpace{psi, -psi.dot(center) - margin(rng)});
    }
    return set;
}

void criteria_1_2_3() {
    std::mt19937_64 rng(20260826);
    std::uniform_int_distribution<int> dim(1, 4), comp(1, 6), piece(1, 6), fam(0, 3);

    const int total = 200;
    int slater_ok = 0;
    int c1_fail = 0, c2_gap_fail = 0, c2_weak_fail = 0;
    int c3_fail = 0, atoms_checked = 0, atom_fail = 0;
    double c1_worst = 0.0, c2_worst = 0.0, c3_worst = 0.0;

    const auto start = clock_type::now();
    for (int t = 0; t < total; ++t) {
        const int d = dim(rng), m = comp(rng), n = piece(rng);
        MinMaxModel model = prune_redundant(random_model(rng, m, n, d)).first;
        AttackSet set = random_set(rng, d, fam(rng));

        CertificationResult res = certify(model, set);
        const double oracle = enumerate_oracle(model, set);

        if (res.slater == SlaterStatus::Ok) {
            ++slater_ok;
            const double err = std::abs(res.lower - oracle);
            c1_worst = std::max(c1_worst, err / (1.0 + std::abs(oracle)));
            if (!(err <= 1e-5 * (1.0 + std::abs(oracle)))) ++c1_fail;
            const double gap = std::abs(res.lower - res.upper);
            c2_worst = std::max(c2_worst, gap / (1.0 + std::abs(res.lower)));
            if (!(gap <= 1e-5 * (1.0 + std::abs(res.lower)))) ++c2_gap_fail;
        }
        if (std::isfinite(res.lower) && std::isfinite(res.upper)) {
            if (!(res.upper <= res.lower + 1e-6 * (1.0 + std::abs(res.lower))))
                ++c2_weak_fail;
        } else {
            ++c2_weak_fail; // solver failure: no bounds produced at all
        }

        if (res.status != CertStatus::Indeterminate) {
            const double gv = evaluate(model, res.attack);
            const double verr = std::abs(gv - res.p_star);
            c3_worst = std::max(c3_worst, verr / (1.0 + std::abs(res.p_star)));
            if (res.attack.size() != d || !contains(set, res.attack, 1e-6) ||
                !(verr <= 1e-6 * (1.0 + std::abs(res.p_star))))
                ++c3_fail;

            // re-derive the full atom list from the lower program to check
            // every retained atom, not just the reported argmin
            ConicProgram prog = build_primal(model, set);
            auto sol = prog.solve({});
            const int mm = model.num_components();
            for (int i = 0; i < mm; ++i) {
                const double lam = sol.primal(i);
                if (lam <= 1e-7) continue;
                ++atoms_checked;
                const Vector atom = sol.primal.segment(2 * mm + i * d, d) / lam;
                if (!(std::abs(evaluate(model, atom) - res.p_star) <=
                      1e-5 * (1.0 + std::abs(res.p_star))))
                    ++atom_fail;
            }
        } else {
            ++c3_fail;
        }
    }
    const double secs = elapsed_s(start);

    report(1,
           c1_fail == 0 && secs < 60.0,
           std::to_string(total) + " instances, " + std::to_string(slater_ok) +
               " with a verified interior point, worst oracle mismatch " + fmt(c1_worst) +
               ", " + fmt(secs) + " s");
    report(2, c2_gap_fail == 0 && c2_weak_fail == 0,
           "worst relative duality gap " + fmt(c2_worst) + "; upper bound never exceeds "
           "the lower bound beyond 1e-6");
    report(3, c3_fail == 0 && atom_fail == 0,
           "all attacks feasible and tight at 1e-6; " + std::to_string(atoms_checked) +
               " retained atoms tight at 1e-5 (worst attack slack " + fmt(c3_worst) + ")");
}

void criterion_4() {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> comp(1, 3), piece(1, 3), fam(0, 3);
    const double h = 1e-3;
    int fail = 0;
    double worst_lo = 0.0, worst_hi = 0.0;
    const auto start = clock_type::now();

    for (int t = 0; t < 50; ++t) {
        const int d = t < 25 ? 1 : 2;
        MinMaxModel model = prune_redundant(random_model(rng, comp(rng), piece(rng), d)).first;

        // generate the set together with its bounding box (the polytope's
        // extra cuts only shrink the box, so the box stays a valid cover)
        Vector lo(d), hi(d);
        AttackSet set;
        const int family = fam(rng);
        if (family < 3) {
            const Norm norm = family == 0 ? Norm::LInf : (family == 1 ? Norm::L1 : Norm::L2);
            std::uniform_real_distribution<double> unif(-0.5, 0.5), rad(0.3, 0.7);
            Vector center(d);
            for (int r = 0; r < d; ++r) center(r) = unif(rng);
            const double radius = rad(rng);
            set = make_ball(norm, center, radius);
            lo = center.array() - radius;
            hi = center.array() + radius;
        } else {
            std::uniform_real_distribution<double> unif(-0.5, 0.5), side(0.4, 0.7);
            std::normal_distribution<double> gauss(0.0, 1.0);
            std::uniform_real_distribution<double> margin(0.2, 0.6);
            Vector center(d);
            for (int r = 0; r < d; ++r) center(r) = unif(rng);
            const double s = side(rng);
            lo = center.array() - s;
            hi = center.array() + s;
            set = make_box(lo, hi);
            for (int k = 0; k < 3; ++k) {
                Vector psi(d);
                do {
                    for (int r = 0; r < d; ++r) psi(r) = gauss(rng);
                } while (psi.norm() < 1e-3);
                set.constraints.push_back(HalfSpace{psi, -psi.dot(center) - margin(rng)});
            }
        }

        CertificationResult res = certify(model, set);
        if (res.status == CertStatus::Indeterminate) {
            ++fail;
            continue;
        }

        double grid_min = std::numeric_limits<double>::infinity();
        Vector pt(d);
        const int nx = static_cast<int>(std::floor((hi(0) - lo(0)) / h)) + 1;
        const int ny = d == 2 ? static_cast<int>(std::floor((hi(1) - lo(1)) / h)) + 1 : 1;
        for (int ix = 0; ix < nx; ++ix) {
            pt(0) = lo(0) + ix * h;
            for (int iy = 0; iy < ny; ++iy) {
                if (d == 2) pt(1) = lo(1) + iy * h;
                if (!contains(set, pt, 1e-12)) continue;
                grid_min = std::min(grid_min, evaluate(model, pt));
            }
        }

        double lips = 0.0;
        for (int r = 0; r < model.slopes().rows(); ++r)
            lips = std::max(lips, model.slopes().row(r).norm());
        worst_lo = std::max(worst_lo, res.p_star - grid_min);
        worst_hi = std::max(worst_hi, grid_min - res.p_star);
        if (!(res.p_star <= grid_min + 1e-6) || !(grid_min <= res.p_star + lips * h * std::sqrt(2.0)))
            ++fail;
    }
    report(4, fail == 0,
           "50 dense grids (h = 1e-3); certificate below every feasible grid point (slack " +
               fmt(worst_lo) + ") and within the slope-bound of the grid minimum (" +
               fmt(worst_hi) + "); " + fmt(elapsed_s(start)) + " s");
}

void criterion_5() {
    std::mt19937_64 rng(55);
    std::uniform_int_distribution<int> comp(1, 2), piece(2, 4);
    const double hg = 5e-3, box = 2.5, margin = 0.5;
    int done = 0, fail = 0, attempts = 0;
    const auto start = clock_type::now();

    while (done < 100 && attempts < 1000) {
        ++attempts;
        const int d = 2;
        MinMaxModel model =
            prune_redundant(random_model(rng, comp(rng), piece(rng), d, 0.6, 0.5)).first;
        std::uniform_int_distribution<int> pick(0, model.num_components() - 1);
        const int i = pick(rng);
        const int n = model.num_pieces();

        // y strictly inside the slope hull of component i keeps its conjugate
        // finite with a bounded maximizer
        std::uniform_real_distribution<double> wdist(0.2, 1.0);
        Vector w(n);
        for (int j = 0; j < n; ++j) w(j) = wdist(rng);
        w /= w.sum();
        Vector y = Vector::Zero(d);
        for (int j = 0; j < n; ++j) y += w(j) * model.slope(i, j);

        // dense estimate of sup_x y.x - g_i(x); interior-argmax guard
        const int cells = static_cast<int>(2 * box / hg) + 1;
        double best = -std::numeric_limits<double>::infinity();
        int bx = 0, by = 0;
        Vector pt(2);
        for (int ix = 0; ix < cells; ++ix) {
            pt(0) = -box + ix * hg;
            for (int iy = 0; iy < cells; ++iy) {
                pt(1) = -box + iy * hg;
                const double v = y.dot(pt) - model.component(i, pt);
                if (v > best) {
                    best = v;
                    bx = ix;
                    by = iy;
                }
            }
        }
        if (bx < 5 || bx > cells - 6 || by < 5 || by > cells - 6) continue;

        double lips = 0.0;
        for (int r = 0; r < model.slopes().rows(); ++r)
            lips = std::max(lips, model.slopes().row(r).norm());
        if (10.0 * lips * hg >= margin) continue; // marginal probe, skip

        ++done;
        if (conjugate_dominated(model, i, y, best + margin) != SolveStatus::Optimal) ++fail;
        if (conjugate_dominated(model, i, y, best - margin) != SolveStatus::Infeasible) ++fail;
    }
    report(5, done == 100 && fail == 0,
           std::to_string(done) +
               " non-marginal triples; multiplier-system feasibility matches the grid "
               "conjugate on both sides; " +
               fmt(elapsed_s(start)) + " s");
}

void criterion_6() {
    std::mt19937_64 rng(66);
    std::uniform_int_distribution<int> dim(1, 4), units(1, 10);
    std::normal_distribution<double> gauss(0.0, 1.0);
    int fail = 0;
    double worst = 0.0, slowest = 0.0;

    for (int t = 0; t < 20; ++t) {
        ReluNet1H net;
        net.d = dim(rng);
        net.h = units(rng);
        net.W1 = Matrix(net.h, net.d);
        net.b1 = Vector(net.h);
        net.w2 = Vector(net.h);
        for (int r = 0; r < net.h; ++r) {
            for (int c = 0; c < net.d; ++c) net.W1(r, c) = gauss(rng);
            net.b1(r) = gauss(rng);
            do {
                net.w2(r) = gauss(rng);
            } while (std::abs(net.w2(r)) < 1e-3);
        }
        net.b2 = gauss(rng);

        const auto start = clock_type::now();
        MinMaxModel g = relu_to_minmax(net);
        slowest = std::max(slowest, elapsed_s(start));

        std::uniform_real_distribution<double> pts(-10.0, 10.0);
        Vector x(net.d);
        for (int k = 0; k < 10000; ++k) {
            for (int r = 0; r < net.d; ++r) x(r) = pts(rng);
            worst = std::max(worst, std::abs(evaluate(net, x) - evaluate(g, x)));
        }
        if (worst > 1e-9 || slowest >= 5.0) ++fail;
    }
    report(6, fail == 0,
           "20 networks; max |f - g| = " + fmt(worst) + " over 1e4 points each; slowest "
           "conversion " + fmt(slowest) + " s");
}

void criterion_7() {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> dim(1, 3), comp(2, 4), piece(2, 4), fam(0, 2);
    int fail = 0, strict = 0;
    double worst = 0.0;

    for (int t = 0; t < 100; ++t) {
        const int d = dim(rng);
        MinMaxModel model = prune_redundant(random_model(rng, comp(rng), piece(rng), d)).first;
        const int which = fam(rng);
        const Norm norm = which == 0 ? Norm::LInf : (which == 1 ? Norm::L1 : Norm::L2);
        std::uniform_real_distribution<double> unif(-1.0, 1.0);
        Vector center(d);
        for (int r = 0; r < d; ++r) center(r) = unif(rng);
        const double eps = 0.3;

        const double p_star = enumerate_oracle(model, make_ball(norm, center, eps));
        const Vector x_pgd = pgd_attack(model, center, eps, norm);
        const double g_pgd = evaluate(model, x_pgd);
        if (!(p_star <= g_pgd + 1e-6)) ++fail;
        worst = std::max(worst, p_star - g_pgd);
        if (g_pgd - p_star > 1e-3) ++strict;
    }
    report(7, fail == 0 && strict >= 1,
           "exact optimum never above the local-search value (worst margin " + fmt(worst) +
               "); strictly better on " + std::to_string(strict) + "/100 instances");
}

void criterion_8() {
    const auto start = clock_type::now();
    ControlDemoOptions opts; // shipped configuration, pinned seed
    ControlDemoReport rep = run_control_demo(opts);
    const std::string csv = "acceptance_control_sweep.csv";
    write_sweep_csv(csv, rep.sweep);
    std::ifstream in(csv);
    int lines = 0;
    for (std::string line; std::getline(in, line);) ++lines;
    std::remove(csv.c_str());
    const double secs = elapsed_s(start);

    const bool pass = rep.certification.status == CertStatus::CertifiedRobust &&
                      rep.certification.p_star > 0.0 && rep.sweep.size() >= 400 &&
                      lines == static_cast<int>(rep.sweep.size()) + 1 && secs < 300.0;
    report(8, pass,
           "seed " + std::to_string(opts.seed) + ": policy minimum " +
               fmt(rep.certification.p_star) + " > 0 over the approach region, " +
               std::to_string(rep.sweep.size()) + "-point sweep CSV, " + fmt(secs) + " s");

    // other seeds are informational only: training is stochastic
    for (std::uint64_t seed : {1ULL, 2024ULL}) {
        ControlDemoOptions other;
        other.seed = seed;
        other.grid = 2;
        ControlDemoReport r = run_control_demo(other);
        std::printf("              seed %llu (not gating): %s, minimum %s\n",
                    static_cast<unsigned long long>(seed), to_string(r.certification.status),
                    fmt(r.certification.p_star).c_str());
    }
}

void criterion_9() {
    const auto start = clock_type::now();
    LabeledSet raw = filter_binary(synth_digit_pair(7, 60), 3, 8);
    LabeledSet data = downsample(raw, 5); // 28x28 -> 6x6, d = 36
    std::vector<double> ys;
    for (int label : data.labels) ys.push_back(label == 3 ? 1.0 : -1.0);

    TrainConfig tc;
    tc.epochs = 40;
    tc.lr = 0.02;
    tc.batch = 16;
    tc.seed = 7;
    tc.loss = Loss::Logistic;
    tc.adversarial = AdversarialSchedule{0.0, 0.05, 20, Norm::LInf, 10};
    MinMaxModel model =
        prune_redundant(train(init_model(15, 15, data.d, 7, -1.0, 1.0), data.points, ys, tc)
                            .model)
            .first;

    CertifyOptions fast;
    fast.prune = false;
    std::ostringstream why;
    bool pass = true;

    // single certification call on a trained-scale model stays under 5 s
    const auto t0 = clock_type::now();
    CertificationResult one =
        certify(model, make_ball(Norm::LInf, data.points.front(), 0.05), fast);
    const double single = elapsed_s(t0);
    if (one.status == CertStatus::Indeterminate || single >= 5.0) {
        pass = false;
        why << "single call " << fmt(single) << " s or indeterminate; ";
    }

    // certified accuracy at radius 0 is exactly the clean sensitive accuracy
    int pos = 0, pos_ok = 0;
    for (size_t i = 0; i < data.points.size(); ++i)
        if (data.labels[i] == 3) {
            ++pos;
            if (evaluate(model, data.points[i]) >= 0.0) ++pos_ok;
        }
    const double clean = pos ? static_cast<double>(pos_ok) / pos : 0.0;
    const double acc0 = certified_accuracy(model, data.points, data.labels, 0.0, 3,
                                           Norm::LInf, fast);
    if (acc0 != clean) {
        pass = false;
        why << "radius-0 accuracy " << acc0 << " != clean " << clean << "; ";
    }

    // accuracy curve on a fixed evaluation subset (desk-scale cost control)
    std::vector<Vector> curve_pts;
    std::vector<int> curve_labels;
    for (size_t i = 0; i < data.points.size() && curve_pts.size() < 5; ++i)
        if (data.labels[i] == 3) {
            curve_pts.push_back(data.points[i]);
            curve_labels.push_back(3);
        }
    double prev = 2.0;
    std::string curve;
    for (int step = 0; step <= 10; ++step) {
        const double acc = certified_accuracy(model, curve_pts, curve_labels, 0.01 * step, 3,
                                              Norm::LInf, fast);
        curve += (step ? " " : "") + fmt(acc);
        if (acc > prev + 1e-12) {
            pass = false;
            why << "curve not monotone at radius " << 0.01 * step << "; ";
        }
        prev = acc;
    }

    // certified radius: re-certifies at its value, falsified just above it
    RadiusOptions ro;
    ro.eps_max = 0.12;
    ro.certify = fast;
    int radius_checks = 0;
    for (size_t i = 0; i < data.points.size() && radius_checks < 2; ++i) {
        if (data.labels[i] != 3 || evaluate(model, data.points[i]) < 0.0) continue;
        CertificationResult probe =
            certify(model, make_ball(Norm::LInf, data.points[i], ro.eps_max), fast);
        if (probe.status != CertStatus::Falsified) continue; // radius capped, not informative
        ++radius_checks;
        const double r = certified_radius(model, data.points[i], Norm::LInf, ro);
        if (!(r > 0.0) || r >= ro.eps_max) {
            pass = false;
            why << "radius " << fmt(r) << " degenerate; ";
            continue;
        }
        CertificationResult at =
            certify(model, make_ball(Norm::LInf, data.points[i], r), fast);
        CertificationResult above =
            certify(model, make_ball(Norm::LInf, data.points[i], r + 2.0 * ro.tol), fast);
        if (at.status != CertStatus::CertifiedRobust || above.status != CertStatus::Falsified) {
            pass = false;
            why << "radius " << fmt(r) << " boundary check failed; ";
        }
    }
    if (radius_checks == 0) {
        pass = false;
        why << "no point with an interior certified radius; ";
    }

    report(9, pass,
           (why.str().empty() ? std::string("d = 36, clean sensitive accuracy " + fmt(clean) +
                                            ", curve [" + curve + "], single call " +
                                            fmt(single) + " s, " +
                                            std::to_string(radius_checks) + " radius checks")
                              : why.str()) +
               "; " + fmt(elapsed_s(start)) + " s");
}

void criterion_10() {
    bool pass = true;
    std::ostringstream why;
    auto expect = [&](bool ok, const char* what) {
        if (!ok) {
            pass = false;
            why << what << "; ";
        }
    };
    const double exact = 1e-12;

    // perspectives of the constraint functions
    Vector v2(2);
    v2 << 1, 0;
    NormBall l2ball{Norm::L2, v2, 0.5};
    {
        Vector x(2);
        x << 1, 0;
        expect(std::abs(perspective_constraint(l2ball, x, 0.0) - 1.0) <= exact,
               "closure of the scaled ball constraint at scale 0");
        expect(std::abs(perspective_constraint(l2ball, x, 1.0) -
                        constraint_value(l2ball, x)) <= exact,
               "scale 1 reproduces the constraint");
        Vector c(2), xx(2);
        c << 2, 2;
        xx << 1, 1;
        NormBall li{Norm::LInf, c, 1.0};
        expect(std::abs(perspective_constraint(li, xx, 0.5) - (-0.5)) <= exact,
               "scaled sup-norm ball value");
    }

    // conjugates
    {
        Vector c(2), z(2);
        c << 1, 1;
        z << 0.6, 0;
        NormBall ball{Norm::L2, c, 0.5};
        ExtReal cv = conjugate_constraint(ball, z);
        expect(cv.is_finite() && std::abs(cv.value() - 1.1) <= exact,
               "ball conjugate inside the dual unit ball");
        z << 3, 0;
        expect(!conjugate_constraint(ball, z).is_finite(),
               "ball conjugate infinite outside the dual unit ball");
        z.setZero();
        ExtReal at0 = conjugate_constraint(ball, z);
        expect(at0.is_finite() && std::abs(at0.value() - 0.5) <= exact,
               "ball conjugate at zero equals the radius");
    }

    // perspectives of the conjugates
    {
        Vector c(2), z(2);
        c << 1, 0;
        NormBall l1ball{Norm::L1, c, 2.0};
        z.setZero();
        ExtReal at0 = perspective_conjugate(l1ball, z, 0.0);
        expect(at0.is_finite() && std::abs(at0.value()) <= exact,
               "scaled conjugate vanishes at the origin");
        z << 0.1, 0;
        expect(!perspective_conjugate(l1ball, z, 0.0).is_finite(),
               "scaled conjugate infinite off the origin at scale 0");
        z << 1, 1;
        ExtReal at2 = perspective_conjugate(l1ball, z, 2.0);
        expect(at2.is_finite() && std::abs(at2.value() - 5.0) <= exact,
               "scaled conjugate direct value");
    }

    // half-space calculus
    {
        Vector psi(2), x(2), z(2);
        psi << 1, -2;
        x << 3, 1;
        HalfSpace hs{psi, 0.25};
        expect(std::abs(perspective_constraint(hs, x, 0.5) - (psi.dot(x) + 0.125)) <= exact,
               "scaled half-space value");
        ExtReal at = conjugate_constraint(hs, psi);
        expect(at.is_finite() && std::abs(at.value() + 0.25) <= exact,
               "half-space conjugate on its ray");
        z = psi * 0.3; // off the defining direction (scale differs from 1)
        expect(!conjugate_constraint(hs, z).is_finite(),
               "half-space conjugate off its ray");
        ExtReal pc = perspective_conjugate(hs, 2.0 * psi, 2.0);
        expect(pc.is_finite() && std::abs(pc.value() + 0.5) <= exact,
               "scaled half-space conjugate");
    }

    // dual norms
    {
        Vector a(2), b3(3);
        a << 3, 4;
        expect(dual_norm(Norm::L2, a) == 5.0, "self-dual euclidean norm");
        b3 << 1, -2, 3;
        expect(dual_norm(Norm::LInf, b3) == 6.0, "dual of sup norm is the sum norm");
        a << 1, -2;
        expect(dual_norm(Norm::L1, a) == 2.0, "dual of sum norm is the sup norm");
    }

    // scale -> 0 limits of the perspectives
    {
        std::mt19937_64 rng(101);
        std::normal_distribution<double> gauss(0.0, 1.0);
        for (int t = 0; t < 20; ++t) {
            Vector c(2), x(2);
            c << gauss(rng), gauss(rng);
            x << gauss(rng), gauss(rng);
            for (Norm norm : {Norm::L1, Norm::L2, Norm::LInf}) {
                NormBall ball{norm, c, 0.7};
                const double limit = perspective_constraint(ball, x, 0.0);
                for (double t_small : {1e-4, 1e-5, 1e-6, 1e-7, 1e-8})
                    expect(std::abs(perspective_constraint(ball, x, t_small) - limit) <=
                               1e-3 * (1.0 + std::abs(limit)),
                           "ball perspective limit at scale 0");
                // the scaled conjugate's domain shrinks to the origin
                Vector z = x / (dual_norm(norm, x) + 1e-9);
                for (double t_small : {1e-4, 1e-5, 1e-6, 1e-7, 1e-8}) {
                    ExtReal pv = perspective_conjugate(ball, t_small * z, t_small);
                    expect(pv.is_finite() && std::abs(pv.value()) <= 1e-3,
                           "scaled conjugate limit at scale 0");
                }
            }
            HalfSpace hs{c, 0.3};
            const double limit = perspective_constraint(hs, x, 0.0);
            for (double t_small : {1e-4, 1e-5, 1e-6, 1e-7, 1e-8}) {
                expect(std::abs(perspective_constraint(hs, x, t_small) - limit) <=
                           1e-3 * (1.0 + std::abs(limit)),
                       "half-space perspective limit");
                ExtReal pv = perspective_conjugate(hs, t_small * c, t_small);
                expect(pv.is_finite() && std::abs(pv.value()) <= 1e-3,
                       "scaled half-space conjugate limit");
            }
        }
    }

    // conjugate/value inequality on random samples, every constraint family
    {
        std::mt19937_64 rng(102);
        std::normal_distribution<double> gauss(0.0, 1.0);
        for (Norm norm : {Norm::L1, Norm::L2, Norm::LInf}) {
            Vector c(3);
            c << 0.3, -0.2, 0.1;
            NormBall ball{norm, c, 0.8};
            int bad = 0;
            for (int k = 0; k < 10000; ++k) {
                Vector x(3), z(3);
                for (int r = 0; r < 3; ++r) {
                    x(r) = gauss(rng);
                    z(r) = gauss(rng);
                }
                // keep the conjugate finite: back strictly inside the dual
                // unit ball so rounding cannot push the norm past 1
                z /= std::max(1.0, dual_norm(norm, z) * (1.0 + 1e-9));
                ExtReal cz = conjugate_constraint(ball, z);
                if (!cz.is_finite() ||
                    constraint_value(ball, x) + cz.value() < z.dot(x) - 1e-9)
                    ++bad;
            }
            expect(bad == 0, "conjugate inequality for a norm ball");
        }
        Vector psi(3);
        psi << 1.0, -0.5, 2.0;
        HalfSpace hs{psi, -0.4};
        int bad = 0;
        for (int k = 0; k < 10000; ++k) {
            Vector x(3);
            for (int r = 0; r < 3; ++r) x(r) = gauss(rng);
            ExtReal cz = conjugate_constraint(hs, psi);
            if (!cz.is_finite() ||
                std::abs(constraint_value(hs, x) + cz.value() - psi.dot(x)) > 1e-9)
                ++bad;
        }
        expect(bad == 0, "conjugate identity for a half-space");
    }

    // component-conjugate closed forms through the multiplier system
    {
        Matrix a(2, 1), b(1, 2);
        a << 1, -1;
        b << 0, 0;
        MinMaxModel vee(1, 2, 1, a, b); // max(x, -x): conjugate 0 on [-1, 1]
        Vector y(1);
        y << 0.4;
        expect(conjugate_dominated(vee, 0, y, 1e-3) == SolveStatus::Optimal,
               "conjugate of the vee dominated by a positive level");
        expect(conjugate_dominated(vee, 0, y, -1e-3) == SolveStatus::Infeasible,
               "conjugate of the vee not dominated by a negative level");
        Matrix b2(1, 2);
        b2 << -1, -1;
        MinMaxModel shifted(1, 2, 1, a, b2); // conjugate 1 on [-1, 1]
        expect(conjugate_dominated(shifted, 0, y, 1.0 + 1e-3) == SolveStatus::Optimal,
               "shifted conjugate dominated above 1");
        expect(conjugate_dominated(shifted, 0, y, 1.0 - 1e-3) == SolveStatus::Infeasible,
               "shifted conjugate not dominated below 1");
    }

    report(10, pass,
           pass ? "closed-form calculus values, scale-0 limits, and 1e4-sample conjugate "
                  "inequalities all hold"
                : why.str());
}

void criterion_11() {
    std::mt19937_64 rng(111);
    MinMaxModel model = prune_redundant(random_model(rng, 3, 3, 2)).first;
    AttackSet set = random_set(rng, 2, 2);

    const std::string cert_a = certification_to_json(certify(model, set));
    const std::string cert_b = certification_to_json(certify(model, set));

    std::vector<Vector> xs;
    std::vector<double> ys;
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (int k = 0; k < 40; ++k) {
        Vector x(2);
        x << unif(rng), unif(rng);
        xs.push_back(x);
        ys.push_back(std::abs(x(0)));
    }
    TrainConfig tc;
    tc.epochs = 15;
    tc.seed = 9;
    const std::string model_a =
        model_to_json(train(init_model(2, 2, 2, 9), xs, ys, tc).model);
    const std::string model_b =
        model_to_json(train(init_model(2, 2, 2, 9), xs, ys, tc).model);

    const bool pass = cert_a == cert_b && model_a == model_b && !cert_a.empty();
    report(11, pass, "repeated certification and training runs emit byte-identical JSON");
}

} // namespace

int main() {
    const auto start = clock_type::now();
    criteria_1_2_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    std::printf("acceptance: %d/11 criteria passed in %.1f s\n", 11 - g_failures,
                elapsed_s(start));
    return g_failures == 0 ? 0 : 1;
}
