#include "minmaxcert/model.hpp"

#include <cmath>
#include <stdexcept>

namespace minmax {

namespace {

void check_finite(const Matrix& m, const char* name) {
    if (!m.allFinite())
        throw std::invalid_argument(std::string("MinMaxModel: non-finite entries in ") + name);
}

} // namespace

MinMaxModel::MinMaxModel(int m, int n, int d, Matrix a, Matrix b)
    : m_(m), n_(n), d_(d), a_(std::move(a)), b_(std::move(b)) {
    if (m < 1 || n < 1 || d < 1)
        throw std::invalid_argument("MinMaxModel: m, n, d must all be >= 1");
    if (a_.rows() != static_cast<Eigen::Index>(m) * n || a_.cols() != d)
        throw std::invalid_argument("MinMaxModel: slope matrix must be (m*n) x d");
    if (b_.rows() != m || b_.cols() != n)
        throw std::invalid_argument("MinMaxModel: offset matrix must be m x n");
    check_finite(a_, "a");
    check_finite(b_, "b");
}

double MinMaxModel::component(int i, const Vector& x) const {
    return (a_.middleRows(static_cast<Eigen::Index>(i) * n_, n_) * x + b_.row(i).transpose())
        .maxCoeff();
}

double MinMaxModel::operator()(const Vector& x) const { return evaluate(*this, x); }

double evaluate(const MinMaxModel& model, const Vector& x) {
    if (x.size() != model.dim())
        throw std::invalid_argument("evaluate: point dimension does not match model");
    // values(i, j) = a_ij . x + b_ij for all pieces at once
    Eigen::VectorXd vals = model.slopes() * x;
    double best = std::numeric_limits<double>::infinity();
    const int n = model.num_pieces();
    for (int i = 0; i < model.num_components(); ++i) {
        double gi = -std::numeric_limits<double>::infinity();
        for (int j = 0; j < n; ++j)
            gi = std::max(gi, vals(i * n + j) + model.offset(i, j));
        best = std::min(best, gi);
    }
    return best;
}

EvalTrace evaluate_trace(const MinMaxModel& model, const Vector& x) {
    if (x.size() != model.dim())
        throw std::invalid_argument("evaluate_trace: point dimension does not match model");
    Eigen::VectorXd vals = model.slopes() * x;
    const int n = model.num_pieces();
    EvalTrace trace;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < model.num_components(); ++i) {
        double gi = -std::numeric_limits<double>::infinity();
        int ji = 0;
        for (int j = 0; j < n; ++j) {
            const double v = vals(i * n + j) + model.offset(i, j);
            if (v > gi) { // strict: ties keep the lowest j
                gi = v;
                ji = j;
            }
        }
        if (gi < best) { // strict: ties keep the lowest i
            best = gi;
            trace.argmin_i = i;
            trace.argmax_j = ji;
        }
    }
    trace.value = best;
    return trace;
}

Vector subgradient(const MinMaxModel& model, const Vector& x) {
    const EvalTrace t = evaluate_trace(model, x);
    return model.slope(t.argmin_i, t.argmax_j);
}

MinMaxModel normalize_components(const RaggedMinMax& ragged) {
    const int m = static_cast<int>(ragged.components.size());
    const int d = ragged.d;
    if (m < 1 || d < 1)
        throw std::invalid_argument("normalize_components: empty model");
    int n = 0;
    for (const auto& comp : ragged.components) {
        if (comp.empty())
            throw std::invalid_argument("normalize_components: component with no pieces");
        for (const auto& piece : comp)
            if (piece.slope.size() != d)
                throw std::invalid_argument("normalize_components: piece dimension mismatch");
        n = std::max(n, static_cast<int>(comp.size()));
    }

    Matrix a(static_cast<Eigen::Index>(m) * n, d);
    Matrix b(m, n);
    for (int i = 0; i < m; ++i) {
        const auto& comp = ragged.components[i];
        const int ni = static_cast<int>(comp.size());
        for (int j = 0; j < ni; ++j) {
            a.row(i * n + j) = comp[j].slope.transpose();
            b(i, j) = comp[j].offset;
        }
        if (ni < n) {
            // Global underestimator of g_i: the active piece at x = 0 gives a
            // subgradient there; pad with (that slope, g_i(0)).
            int jstar = 0;
            double gi0 = comp[0].offset;
            for (int j = 1; j < ni; ++j) {
                if (comp[j].offset > gi0) {
                    gi0 = comp[j].offset;
                    jstar = j;
                }
            }
            for (int j = ni; j < n; ++j) {
                a.row(i * n + j) = comp[jstar].slope.transpose();
                b(i, j) = gi0;
            }
        }
    }
    return MinMaxModel(m, n, d, std::move(a), std::move(b));
}

} // namespace minmax
