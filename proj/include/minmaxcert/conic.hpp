#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <ostream>
#include <vector>

namespace minmax {

enum class SolveStatus { Optimal, Infeasible, Unbounded, Inaccurate };

const char* to_string(SolveStatus status);

struct SolveOptions {
    double feas_tol = 1e-8;
    double gap_tol = 1e-8;
    int max_iters = 200;
};

struct ConicSolution {
    SolveStatus status = SolveStatus::Inaccurate;
    Eigen::VectorXd primal;   // one entry per variable
    Eigen::VectorXd eq_duals; // one entry per equality row
    double objective = std::numeric_limits<double>::quiet_NaN();
    // Residuals at the reported point (scaled, see solver docs).
    double primal_residual = std::numeric_limits<double>::infinity();
    double dual_residual = std::numeric_limits<double>::infinity();
    double duality_gap = std::numeric_limits<double>::infinity();
    int iterations = 0;
};

/// Linear-objective program over free variables, linear equalities,
/// nonnegative variables, and second-order cones:
///
///   min/max  c . v
///   s.t.     A v = b
///            v_i >= 0                 for Nonnegative-tagged i
///            v_t >= ||(v_u1..v_uk)||  for SecondOrder tuples (t, u1..uk)
///
/// Inequalities are added through a slack variable so the stored form stays
/// in this shape. Mutation after finalize() throws; solve() finalizes.
/// Solved by a homogeneous self-dual interior-point method (see conic.cpp).
class ConicProgram {
  public:
    enum class Sense { Minimize, Maximize };

    int add_variable();
    int add_variables(int count); // returns the first of a contiguous block

    void set_sense(Sense sense);
    void set_objective_term(int var, double coeff);

    using Term = std::pair<int, double>;

    /// sum coeff*v = rhs. Returns the equality row index.
    int add_equality(const std::vector<Term>& terms, double rhs);
    /// sum coeff*v <= rhs, realized as equality plus nonnegative slack.
    void add_inequality(const std::vector<Term>& terms, double rhs);

    void mark_nonneg(int var);
    /// vars[0] >= || vars[1..] ||_2.
    void add_soc(const std::vector<int>& vars);

    void finalize();
    bool finalized() const { return finalized_; }

    int num_variables() const { return num_vars_; }
    int num_equalities() const { return static_cast<int>(eq_rhs_.size()); }

    ConicSolution solve(const SolveOptions& opts = {});

    /// Plain-text objective/equalities/cones listing for diagnosis.
    void dump(std::ostream& os) const;

  private:
    void check_var(int var) const;
    void check_mutable() const;

    int num_vars_ = 0;
    Sense sense_ = Sense::Minimize;
    std::vector<std::pair<int, double>> objective_;
    std::vector<std::vector<Term>> eq_terms_;
    std::vector<double> eq_rhs_;
    std::vector<int> nonneg_;
    std::vector<std::vector<int>> socs_;
    std::vector<signed char> cone_tagged_; // one cone tag per variable
    bool finalized_ = false;
};

} // namespace minmax
