#include "minmaxcert/train.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace minmax {

namespace {

double loss_value(double g, double y, Loss loss) {
    switch (loss) {
    case Loss::Mse: return (g - y) * (g - y);
    case Loss::Logistic: {
        // log(1 + exp(-y g)) computed stably
        const double t = -y * g;
        return t > 0 ? t + std::log1p(std::exp(-t)) : std::log1p(std::exp(t));
    }
    }
    return 0.0;
}

// dL/dg
double loss_slope(double g, double y, Loss loss) {
    switch (loss) {
    case Loss::Mse: return 2.0 * (g - y);
    case Loss::Logistic: return -y / (1.0 + std::exp(y * g));
    }
    return 0.0;
}

void project_ball(Vector& x, const Vector& center, double eps, Norm norm) {
    Vector delta = x - center;
    switch (norm) {
    case Norm::LInf:
        delta = delta.cwiseMax(-eps).cwiseMin(eps);
        break;
    case Norm::L2:
        if (delta.norm() > eps) delta *= eps / delta.norm();
        break;
    case Norm::L1: // radial retraction: feasible, cheap, monotone-safe
        if (delta.lpNorm<1>() > eps) delta *= eps / delta.lpNorm<1>();
        break;
    }
    x = center + delta;
}

// Projected subgradient descent on sign * g over the ball; returns the best
// visited point by sign * g, which includes the untouched center.
Vector pgd_core(const MinMaxModel& model, const Vector& center, double eps, Norm norm,
                int steps, double step_size, double sign) {
    if (eps < 0.0) throw std::invalid_argument("pgd_attack: eps must be nonnegative");
    if (eps == 0.0 || steps <= 0) return center;
    if (step_size <= 0.0) step_size = eps / 4.0;

    Vector x = center;
    Vector best = center;
    double best_val = sign * evaluate(model, center);
    for (int s = 0; s < steps; ++s) {
        x -= step_size * sign * subgradient(model, x);
        project_ball(x, center, eps, norm);
        const double v = sign * evaluate(model, x);
        if (v < best_val) {
            best_val = v;
            best = x;
        }
    }
    return best;
}

} // namespace

MinMaxModel init_model(int m, int n, int d, std::uint64_t seed, double target_lo,
                       double target_hi) {
    if (m < 1 || n < 1 || d < 1) throw std::invalid_argument("init_model: m, n, d must be >= 1");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> slope_dist(0.0, 1.0 / std::sqrt(static_cast<double>(d)));
    std::uniform_real_distribution<double> offset_dist(std::min(target_lo, target_hi),
                                                       std::max(target_lo, target_hi));
    Matrix a(static_cast<Eigen::Index>(m) * n, d);
    Matrix b(m, n);
    for (Eigen::Index row = 0; row < a.rows(); ++row)
        for (int r = 0; r < d; ++r) a(row, r) = slope_dist(rng);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) b(i, j) = offset_dist(rng);
    return MinMaxModel(m, n, d, std::move(a), std::move(b));
}

double dataset_loss(const MinMaxModel& model, const std::vector<Vector>& xs,
                    const std::vector<double>& ys, Loss loss) {
    if (xs.size() != ys.size() || xs.empty())
        throw std::invalid_argument("dataset_loss: empty or mismatched dataset");
    double total = 0.0;
    for (size_t q = 0; q < xs.size(); ++q)
        total += loss_value(evaluate(model, xs[q]), ys[q], loss);
    return total / static_cast<double>(xs.size());
}

TrainResult train(const MinMaxModel& init, const std::vector<Vector>& xs,
                  const std::vector<double>& ys, const TrainConfig& config) {
    if (xs.size() != ys.size() || xs.empty())
        throw std::invalid_argument("train: empty or mismatched dataset");
    for (const auto& x : xs)
        if (x.size() != init.dim()) throw std::invalid_argument("train: sample dimension mismatch");
    if (config.epochs < 0 || config.lr <= 0.0 || config.batch < 1)
        throw std::invalid_argument("train: epochs must be >= 0, lr > 0, batch >= 1");
    if (config.adversarial && config.adversarial->start_radius > config.adversarial->end_radius)
        throw std::invalid_argument("train: adversarial start_radius must be <= end_radius");

    const int m = init.num_components();
    const int n = init.num_pieces();
    const int d = init.dim();
    Matrix a = init.slopes();
    Matrix b = init.offsets();
    Matrix ma = Matrix::Zero(a.rows(), a.cols()), va = ma;
    Matrix mb = Matrix::Zero(b.rows(), b.cols()), vb = mb;

    std::mt19937_64 rng(config.seed);
    std::vector<size_t> order(xs.size());
    std::iota(order.begin(), order.end(), size_t{0});

    TrainResult result{init, {}};
    long t = 0;
    for (int epoch = 0; epoch < config.epochs; ++epoch) {
        double radius = 0.0;
        if (config.adversarial) {
            const auto& sched = *config.adversarial;
            const double frac =
                sched.ramp_epochs <= 1
                    ? 1.0
                    : std::min(1.0, static_cast<double>(epoch) / (sched.ramp_epochs - 1));
            radius = sched.start_radius + frac * (sched.end_radius - sched.start_radius);
        }

        std::shuffle(order.begin(), order.end(), rng);
        MinMaxModel current(m, n, d, a, b);
        for (size_t start = 0; start < order.size(); start += config.batch) {
            const size_t stop = std::min(order.size(), start + config.batch);
            Matrix ga = Matrix::Zero(a.rows(), a.cols());
            Matrix gb = Matrix::Zero(b.rows(), b.cols());
            for (size_t q = start; q < stop; ++q) {
                Vector x = xs[order[q]];
                const double y = ys[order[q]];
                if (radius > 0.0) {
                    // inner maximizer of the loss: descend y * g for
                    // logistic labels, ascend the residual for mse
                    const double sign = config.loss == Loss::Logistic
                                            ? (y >= 0 ? 1.0 : -1.0)
                                            : (evaluate(current, x) >= y ? -1.0 : 1.0);
                    x = pgd_core(current, x, radius, config.adversarial->norm,
                                 config.adversarial->pgd_steps, -1.0, sign);
                }
                const EvalTrace trace = evaluate_trace(current, x);
                const double dg = loss_slope(trace.value, y, config.loss);
                ga.row(trace.argmin_i * n + trace.argmax_j) += dg * x.transpose();
                gb(trace.argmin_i, trace.argmax_j) += dg;
            }
            const double scale = 1.0 / static_cast<double>(stop - start);
            ga *= scale;
            gb *= scale;
            if (!ga.allFinite() || !gb.allFinite())
                throw std::runtime_error("train: non-finite loss gradient at epoch " +
                                         std::to_string(epoch) +
                                         " (check the data and learning rate)");

            ++t;
            const double c1 = 1.0 - std::pow(config.beta1, t);
            const double c2 = 1.0 - std::pow(config.beta2, t);
            ma = config.beta1 * ma + (1.0 - config.beta1) * ga;
            va = config.beta2 * va + (1.0 - config.beta2) * ga.cwiseProduct(ga);
            mb = config.beta1 * mb + (1.0 - config.beta1) * gb;
            vb = config.beta2 * vb + (1.0 - config.beta2) * gb.cwiseProduct(gb);
            a -= config.lr * (ma / c1).cwiseQuotient(((va / c2).cwiseSqrt().array() + config.eps).matrix());
            b -= config.lr * (mb / c1).cwiseQuotient(((vb / c2).cwiseSqrt().array() + config.eps).matrix());
            current = MinMaxModel(m, n, d, a, b);
        }

        const double epoch_loss = dataset_loss(current, xs, ys, config.loss);
        if (!std::isfinite(epoch_loss))
            throw std::runtime_error("train: non-finite loss at epoch " + std::to_string(epoch) +
                                     " (try a smaller learning rate)");
        result.epoch_loss.push_back(epoch_loss);
    }
    result.model = MinMaxModel(m, n, d, std::move(a), std::move(b));
    return result;
}

Vector pgd_attack(const MinMaxModel& model, const Vector& center, double eps, Norm norm,
                  int steps, double step_size) {
    if (center.size() != model.dim())
        throw std::invalid_argument("pgd_attack: center dimension mismatch");
    return pgd_core(model, center, eps, norm, steps, step_size, 1.0);
}

} // namespace minmax
