#include "minmaxcert/control_demo.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <random>
#include <stdexcept>

namespace minmax {

namespace {

double clamp_input(double u, const SimConfig& config) {
    return std::clamp(u, config.input_lo, config.input_hi);
}

bool in_intersection(double position, const SimConfig& config) {
    return std::abs(position) < config.half_width;
}

Vector state_vector(const VehicleState& s) {
    Vector v(4);
    v << s.x, s.xdot, s.y, s.ydot;
    return v;
}

} // namespace

VehicleState step(const VehicleState& state, double u, const SimConfig& config) {
    const double a = clamp_input(u, config);
    VehicleState next;
    next.x = state.x + state.xdot * config.dt;
    next.xdot = state.xdot;
    next.y = state.y + state.ydot * config.dt + 0.5 * a * config.dt * config.dt;
    next.ydot = state.ydot + a * config.dt;
    return next;
}

double expert_policy(const VehicleState& state, const SimConfig& config) {
    const double tail = state.x - 0.5 * config.vehicle_length;
    if (tail > config.half_width + config.delta)
        return config.input_hi; // crossing traffic has cleared: full throttle
    const double y_stop = -config.half_width - config.delta;
    if (state.ydot <= 0.0) return 0.0; // already stopped (or drifting back)
    const double gap = y_stop - state.y;
    if (gap <= 1e-9) return config.input_lo; // at/past the stop point: brake hard
    return -state.ydot * state.ydot / (2.0 * gap);
}

std::vector<ExpertSample> simulate_expert(VehicleState init, const SimConfig& config,
                                          int steps) {
    std::vector<ExpertSample> traj;
    traj.reserve(steps);
    VehicleState s = init;
    for (int t = 0; t < steps; ++t) {
        const double u = expert_policy(s, config);
        traj.push_back({s, u});
        VehicleState next;
        next.x = s.x + s.xdot * config.dt;
        next.xdot = s.xdot;
        next.y = s.y + s.ydot * config.dt + 0.5 * u * config.dt * config.dt;
        next.ydot = std::max(0.0, s.ydot + u * config.dt); // braking ends at rest
        s = next;
    }
    return traj;
}

AttackSet certification_region(const SimConfig& config) {
    Vector lo(4), hi(4);
    const double w = config.half_width, d = config.delta;
    lo << -3.0 + d, 0.5 + d, -3.0 + d, d;
    hi << w, 2.5 - d, -w, 2.0 - d;
    return make_box(lo, hi);
}

ControlDemoReport run_control_demo(const ControlDemoOptions& opts) {
    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    // expert rollouts; targets are the braking command -u
    std::vector<Vector> xs;
    std::vector<double> ys;
    int collisions = 0;
    for (int traj = 0; traj < opts.trajectories; ++traj) {
        VehicleState s;
        double* fields[4] = {&s.x, &s.xdot, &s.y, &s.ydot};
        for (int r = 0; r < 4; ++r)
            *fields[r] = opts.sim.init_lo[r] +
                         unit(rng) * (opts.sim.init_hi[r] - opts.sim.init_lo[r]);
        bool collided = false;
        for (const ExpertSample& sample : simulate_expert(s, opts.sim, opts.sim.steps)) {
            xs.push_back(state_vector(sample.state));
            ys.push_back(-sample.u);
            if (in_intersection(sample.state.x, opts.sim) &&
                in_intersection(sample.state.y, opts.sim))
                collided = true;
        }
        if (collided) ++collisions;
    }

    double target_lo = ys[0], target_hi = ys[0];
    for (double y : ys) {
        target_lo = std::min(target_lo, y);
        target_hi = std::max(target_hi, y);
    }

    TrainConfig tc = opts.train;
    tc.seed = opts.seed;
    const MinMaxModel init = init_model(opts.m, opts.n, 4, opts.seed + 1, target_lo, target_hi);
    TrainResult trained = train(init, xs, ys, tc);

    ControlDemoReport report{std::move(trained.model), {}, {}, collisions,
                             trained.epoch_loss.empty() ? 0.0 : trained.epoch_loss.back()};

    const AttackSet region = certification_region(opts.sim);
    report.certification = certify(report.policy, region);

    // per-ego-state worst case: fix (y, ydot), maximize u = -policy over the
    // eastbound box; each slice is solved exactly per component
    const double y_lo = opts.sim.init_lo[2] + opts.sim.delta;
    const double y_hi = -opts.sim.half_width;
    const double yd_lo = opts.sim.delta;
    const double yd_hi = 2.0 - opts.sim.delta;
    Vector slice_lo(2), slice_hi(2);
    slice_lo << -3.0 + opts.sim.delta, 0.5 + opts.sim.delta;
    slice_hi << opts.sim.half_width, 2.5 - opts.sim.delta;
    const AttackSet slice_box = make_box(slice_lo, slice_hi);
    for (int gy = 0; gy < opts.grid; ++gy)
        for (int gv = 0; gv < opts.grid; ++gv) {
            SweepPoint pt;
            pt.y = y_lo + (y_hi - y_lo) * gy / (opts.grid - 1);
            pt.ydot = yd_lo + (yd_hi - yd_lo) * gv / (opts.grid - 1);
            Vector fixed(2);
            fixed << pt.y, pt.ydot;
            const MinMaxModel sliced = restrict_model(report.policy, {2, 3}, fixed);
            pt.worst_u = -enumerate_oracle(sliced, slice_box);
            report.sweep.push_back(pt);
        }
    return report;
}

void write_sweep_csv(const std::string& path, const std::vector<SweepPoint>& sweep) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "y,ydot,worst_u\n";
    char buf[96];
    for (const auto& pt : sweep) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", pt.y, pt.ydot, pt.worst_u);
        out << buf;
    }
}

} // namespace minmax
