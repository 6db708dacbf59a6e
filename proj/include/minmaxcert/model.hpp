#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace minmax {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Min-max affine function g(x) = min_i max_j (a_ij . x + b_ij).
///
/// Slopes are stored as an m*n x d matrix with row index i*n + j; offsets
/// as an m x n matrix. Instances are immutable after construction and all
/// operations on them are pure.
class MinMaxModel {
  public:
    /// a: (m*n) x d slope rows in i-major order, b: m x n offsets.
    MinMaxModel(int m, int n, int d, Matrix a, Matrix b);

    int num_components() const { return m_; } // |I|
    int num_pieces() const { return n_; }     // |J|
    int dim() const { return d_; }

    /// Slope vector a_ij.
    Eigen::VectorXd slope(int i, int j) const { return a_.row(i * n_ + j); }
    double offset(int i, int j) const { return b_(i, j); }
    const Matrix& slopes() const { return a_; }
    const Matrix& offsets() const { return b_; }

    /// g_i(x) = max_j (a_ij . x + b_ij).
    double component(int i, const Vector& x) const;

    double operator()(const Vector& x) const;

  private:
    int m_, n_, d_;
    Matrix a_; // (m*n) x d
    Matrix b_; // m x n
};

struct EvalTrace {
    double value = 0.0;
    int argmin_i = 0;
    int argmax_j = 0;
};

/// min_i max_j (a_ij . x + b_ij). Throws on dimension mismatch.
double evaluate(const MinMaxModel& model, const Vector& x);

/// As evaluate, with the lowest-index active (i, j) pair recorded.
EvalTrace evaluate_trace(const MinMaxModel& model, const Vector& x);

/// Subgradient of g at x: the slope a_{i*j*} of the lowest-index active piece.
Vector subgradient(const MinMaxModel& model, const Vector& x);

/// One affine piece x -> slope . x + offset.
struct AffinePiece {
    Vector slope;
    double offset = 0.0;
};

/// Min-max function with per-component piece lists of possibly different
/// sizes, i.e. before the common-J normalization.
struct RaggedMinMax {
    int d = 0;
    std::vector<std::vector<AffinePiece>> components;
};

/// Pads every component to the common piece count n = max_i |J_i| by
/// appending affine global underestimators: slope = the slope of a piece
/// attaining g_i(0) (lowest index), offset = g_i(0). Pointwise values are
/// unchanged.
MinMaxModel normalize_components(const RaggedMinMax& ragged);

} // namespace minmax
