#pragma once

#include "minmaxcert/attack_set.hpp"
#include "minmaxcert/conic.hpp"
#include "minmaxcert/model.hpp"

#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace minmax {

/// Nonredundancy pruning: drops every piece (i, j) whose activity LP
/// { (a_il - a_ij).x + (b_il - b_ij) <= 0 for all l } is infeasible.
/// The pruned model equals the input pointwise.
struct PruneReport {
    std::vector<std::pair<int, int>> removed;
};
std::pair<MinMaxModel, PruneReport> prune_redundant(const MinMaxModel& model);

enum class SlaterStatus { Ok, Fail, Indeterminate };
const char* to_string(SlaterStatus status);

enum class CertStatus { CertifiedRobust, Falsified, Indeterminate };
const char* to_string(CertStatus status);

struct CertifyOptions {
    SolveOptions solver;
    double tol = 1e-6;         // certification-level comparisons
    double slater_eps = 1e-6;  // tightening for the Slater probe
    double lambda_min = 1e-7;  // atom weight threshold for extraction
    bool run_slater = true;
    bool prune = true;         // prune/normalize internally before building
};

struct PrimalSolution {
    Vector lambda;               // length m simplex weights
    Vector eta;                  // length m
    std::vector<Vector> x_atoms; // the scaled variables x_i of the lower program
    double objective = 0.0;
};

struct DualSolution {
    double alpha = 0.0;
    double objective = 0.0; // -alpha
};

struct CertificationResult {
    CertStatus status = CertStatus::Indeterminate;
    double p_star = std::numeric_limits<double>::quiet_NaN();
    double gap = std::numeric_limits<double>::quiet_NaN(); // |lower - upper|
    Vector attack;                                         // empty when indeterminate
    Vector atom_weights;
    SlaterStatus slater = SlaterStatus::Indeterminate;
    SolveStatus primal_status = SolveStatus::Inaccurate;
    SolveStatus dual_status = SolveStatus::Inaccurate;
    double lower = std::numeric_limits<double>::quiet_NaN(); // primal optimum
    double upper = std::numeric_limits<double>::quiet_NaN(); // dual optimum
    std::string diagnostics;
};

/// Lower program: min sum eta_i over perspective-feasible atoms.
/// Requires the model pruned/normalized and X bounded.
ConicProgram build_primal(const MinMaxModel& model, const AttackSet& set);

/// Upper program: max -alpha with the conjugate constraint replaced by the
/// nu-substitution. slater_eps > 0 tightens every norm cone for the Slater
/// probe.
ConicProgram build_dual(const MinMaxModel& model, const AttackSet& set, double slater_eps = 0.0);

SlaterStatus verify_slater(const MinMaxModel& model, const AttackSet& set,
                           double slater_eps = 1e-6, const SolveOptions& opts = {});

/// Argmin over recovered atoms x_i / lambda_i with lambda_i above the
/// threshold. Empty optional when all weights are numerically degenerate.
std::optional<std::pair<Vector, Vector>> extract_attack(const PrimalSolution& primal,
                                                        const MinMaxModel& model,
                                                        const AttackSet& set,
                                                        double lambda_min = 1e-7);

CertificationResult certify(const MinMaxModel& model, const AttackSet& set,
                            const CertifyOptions& opts = {});

/// Unrolls the min over i into m direct convex solves (epigraph of each
/// max-affine component over X). Exact for this problem class; used as the
/// independent oracle for certify.
double enumerate_oracle(const MinMaxModel& model, const AttackSet& set,
                        const SolveOptions& opts = {});

struct RadiusOptions {
    double eps_max = 1.0;
    double tol = 1e-3;
    CertifyOptions certify;
};

/// Largest LInf/L1/L2-radius (binary search, conservative side) such that
/// the ball around center is certified robust. Returns 0 when the clean
/// prediction is already nonpositive. Throws on Indeterminate probes.
double certified_radius(const MinMaxModel& model, const Vector& center, Norm norm,
                        const RadiusOptions& opts = {});

/// Fraction of sensitive-label points that evaluate >= 0 and certify over
/// the eps-ball. eps = 0 degenerates to clean sensitive-class accuracy.
double certified_accuracy(const MinMaxModel& model, const std::vector<Vector>& points,
                          const std::vector<int>& labels, double eps, int sensitive_label,
                          Norm norm = Norm::LInf, const CertifyOptions& opts = {});

/// Feasibility of the multiplier system certifying g_i^*(y) <= h for
/// component i (exact under nonredundancy).
SolveStatus conjugate_dominated(const MinMaxModel& model, int i, const Vector& y, double h,
                                const SolveOptions& opts = {});

/// Substitutes fixed values for a subset of coordinates, producing a model
/// over the remaining ones (used by the control-demo slice sweep).
MinMaxModel restrict_model(const MinMaxModel& model, const std::vector<int>& fixed_coords,
                           const Vector& fixed_values);

} // namespace minmax
