#pragma once

#include "minmaxcert/attack_set.hpp"
#include "minmaxcert/model.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace minmax {

enum class Loss { Mse, Logistic };

/// Linear ramp of the attack radius used to harden the model during
/// training: radius(epoch) interpolates start -> end over ramp_epochs and
/// stays at end afterwards.
struct AdversarialSchedule {
    double start_radius = 0.0;
    double end_radius = 0.0;
    int ramp_epochs = 1;
    Norm norm = Norm::LInf;
    int pgd_steps = 10;
};

struct TrainConfig {
    int epochs = 100;
    double lr = 0.01;
    int batch = 32;
    double beta1 = 0.9;   // first-moment decay
    double beta2 = 0.999; // second-moment decay
    double eps = 1e-8;    // moment-normalization floor
    std::uint64_t seed = 0;
    Loss loss = Loss::Mse;
    std::optional<AdversarialSchedule> adversarial;
};

struct TrainResult {
    MinMaxModel model;
    std::vector<double> epoch_loss;
};

/// Slopes i.i.d. normal scaled by 1/sqrt(d); offsets spread uniformly over
/// the target range so every min-component starts active somewhere.
MinMaxModel init_model(int m, int n, int d, std::uint64_t seed, double target_lo = -1.0,
                       double target_hi = 1.0);

/// Mean loss of the model over the dataset.
double dataset_loss(const MinMaxModel& model, const std::vector<Vector>& xs,
                    const std::vector<double>& ys, Loss loss);

/// Minibatch subgradient training with adaptive moments. Deterministic for a
/// fixed seed. Throws on NaN loss.
TrainResult train(const MinMaxModel& init, const std::vector<Vector>& xs,
                  const std::vector<double>& ys, const TrainConfig& config);

/// Projected subgradient descent on g over the eps-ball around center.
/// Always returns a point inside the ball with g no larger than g(center).
Vector pgd_attack(const MinMaxModel& model, const Vector& center, double eps,
                  Norm norm = Norm::LInf, int steps = 10, double step_size = -1.0);

} // namespace minmax
