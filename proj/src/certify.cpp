#include "minmaxcert/certify.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace minmax {

const char* to_string(SlaterStatus status) {
    switch (status) {
    case SlaterStatus::Ok: return "ok";
    case SlaterStatus::Fail: return "fail";
    case SlaterStatus::Indeterminate: return "indeterminate";
    }
    return "unknown";
}

const char* to_string(CertStatus status) {
    switch (status) {
    case CertStatus::CertifiedRobust: return "certified";
    case CertStatus::Falsified: return "falsified";
    case CertStatus::Indeterminate: return "indeterminate";
    }
    return "unknown";
}

namespace {

using Term = ConicProgram::Term;

// A solve that stalled just short of the 1e-8 solver tolerance is still an
// order of magnitude inside the 1e-6 certification budget; accept it but
// leave a note in the diagnostics.
bool usable(const ConicSolution& sol) {
    if (sol.status == SolveStatus::Optimal) return true;
    return sol.status == SolveStatus::Inaccurate && sol.primal_residual <= 1e-6 &&
           sol.dual_residual <= 1e-6 && sol.duality_gap <= 1e-6;
}

// Appends the constraint psi.x + omega*t <= 0 / perspective norm-ball
// constraint for atom variables x (block starting at x0) and scale t.
// t is either the variable t_var (t_const ignored) or, when t_var < 0, the
// constant t_const (used by the enumeration oracle at t = 1).
void encode_membership(ConicProgram& prog, const ConstraintFn& c, int x0, int d, int t_var,
                       double t_const) {
    auto with_t = [&](std::vector<Term> terms, double t_coeff, double rhs) {
        if (t_var >= 0)
            terms.emplace_back(t_var, t_coeff);
        else
            rhs -= t_coeff * t_const;
        return std::make_pair(terms, rhs);
    };

    if (const auto* hs = std::get_if<HalfSpace>(&c)) {
        std::vector<Term> terms;
        for (int r = 0; r < d; ++r)
            if (hs->psi(r) != 0.0) terms.emplace_back(x0 + r, hs->psi(r));
        auto [row, rhs] = with_t(std::move(terms), hs->omega, 0.0);
        prog.add_inequality(row, rhs);
        return;
    }

    const auto& ball = std::get<NormBall>(c);
    switch (ball.norm) {
    case Norm::L2: {
        // || x - t xbar || <= eps t as a second-order cone on auxiliaries
        const int tv = prog.add_variable();
        const int vv = prog.add_variables(d);
        {
            auto [row, rhs] = with_t({{tv, 1.0}}, -ball.radius, 0.0);
            prog.add_equality(row, rhs);
        }
        for (int r = 0; r < d; ++r) {
            auto [row, rhs] = with_t({{vv + r, 1.0}, {x0 + r, -1.0}}, ball.center(r), 0.0);
            prog.add_equality(row, rhs);
        }
        std::vector<int> cone{tv};
        for (int r = 0; r < d; ++r) cone.push_back(vv + r);
        prog.add_soc(cone);
        break;
    }
    case Norm::LInf: {
        for (int r = 0; r < d; ++r) {
            for (double sign : {1.0, -1.0}) {
                auto [row, rhs] = with_t({{x0 + r, sign}},
                                         -sign * ball.center(r) - ball.radius, 0.0);
                prog.add_inequality(row, rhs);
            }
        }
        break;
    }
    case Norm::L1: {
        const int u = prog.add_variables(d);
        std::vector<Term> sum;
        for (int r = 0; r < d; ++r) {
            prog.mark_nonneg(u + r);
            for (double sign : {1.0, -1.0}) {
                auto [row, rhs] =
                    with_t({{x0 + r, sign}, {u + r, -1.0}}, -sign * ball.center(r), 0.0);
                prog.add_inequality(row, rhs);
            }
            sum.emplace_back(u + r, 1.0);
        }
        auto [row, rhs] = with_t(std::move(sum), -ball.radius, 0.0);
        prog.add_inequality(row, rhs);
        break;
    }
    }
}

// Dual-norm cone ||z||_* <= beta - eps for the z block starting at z0.
void encode_dual_norm_cone(ConicProgram& prog, Norm norm, int z0, int d, int beta,
                           double eps) {
    switch (norm) {
    case Norm::L2: {
        const int tv = prog.add_variable();
        const int vv = prog.add_variables(d);
        prog.add_equality({{tv, 1.0}, {beta, -1.0}}, -eps);
        for (int r = 0; r < d; ++r) prog.add_equality({{vv + r, 1.0}, {z0 + r, -1.0}}, 0.0);
        std::vector<int> cone{tv};
        for (int r = 0; r < d; ++r) cone.push_back(vv + r);
        prog.add_soc(cone);
        break;
    }
    case Norm::LInf: { // dual norm is L1
        const int u = prog.add_variables(d);
        std::vector<Term> sum;
        for (int r = 0; r < d; ++r) {
            prog.mark_nonneg(u + r);
            prog.add_inequality({{z0 + r, 1.0}, {u + r, -1.0}}, 0.0);
            prog.add_inequality({{z0 + r, -1.0}, {u + r, -1.0}}, 0.0);
            sum.emplace_back(u + r, 1.0);
        }
        sum.emplace_back(beta, -1.0);
        prog.add_inequality(sum, -eps);
        break;
    }
    case Norm::L1: { // dual norm is LInf
        for (int r = 0; r < d; ++r) {
            prog.add_inequality({{z0 + r, 1.0}, {beta, -1.0}}, -eps);
            prog.add_inequality({{z0 + r, -1.0}, {beta, -1.0}}, -eps);
        }
        break;
    }
    }
}

void require_bounded(const AttackSet& set) {
    const Boundedness b = verify_bounded(set);
    if (b == Boundedness::Unbounded)
        throw std::invalid_argument("attack set is unbounded");
    if (b == Boundedness::Infeasible)
        throw std::invalid_argument("attack set is empty");
}

} // namespace

std::pair<MinMaxModel, PruneReport> prune_redundant(const MinMaxModel& model) {
    const int m = model.num_components();
    const int n = model.num_pieces();
    const int d = model.dim();
    PruneReport report;
    RaggedMinMax kept;
    kept.d = d;
    kept.components.resize(m);

    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            // feasibility of (a_il - a_ij).x + (b_il - b_ij) <= 0 for all l,
            // probed as min s with the rows relaxed by s and s >= -1
            ConicProgram lp;
            const int x = lp.add_variables(d);
            const int s = lp.add_variable();
            lp.set_objective_term(s, 1.0);
            lp.add_inequality({{s, -1.0}}, 1.0);
            const Vector aij = model.slope(i, j);
            for (int l = 0; l < n; ++l) {
                std::vector<Term> row;
                const Vector diff = model.slope(i, l) - aij;
                for (int r = 0; r < d; ++r)
                    if (diff(r) != 0.0) row.emplace_back(x + r, diff(r));
                row.emplace_back(s, -1.0);
                lp.add_inequality(row, model.offset(i, j) - model.offset(i, l));
            }
            auto sol = lp.solve();
            if (!usable(sol))
                throw std::runtime_error("prune_redundant: activity LP did not converge");
            if (sol.objective <= 1e-7)
                kept.components[i].push_back({aij, model.offset(i, j)});
            else
                report.removed.emplace_back(i, j);
        }
        // the max-attaining piece at any point is always feasible
        if (kept.components[i].empty())
            throw std::logic_error("prune_redundant: component lost all pieces");
    }
    return {normalize_components(kept), std::move(report)};
}

// Variable layout: lambda_i = i, eta_i = m + i, x_i = 2m + i*d .. +d-1,
// followed by encoding auxiliaries.
ConicProgram build_primal(const MinMaxModel& model, const AttackSet& set) {
    if (model.dim() != set.d)
        throw std::invalid_argument("build_primal: model/set dimension mismatch");
    require_bounded(set);
    const int m = model.num_components();
    const int n = model.num_pieces();
    const int d = model.dim();

    ConicProgram prog;
    const int lambda0 = prog.add_variables(m);
    const int eta0 = prog.add_variables(m);
    const int x0 = prog.add_variables(m * d);

    std::vector<Term> simplex;
    for (int i = 0; i < m; ++i) {
        prog.mark_nonneg(lambda0 + i);
        simplex.emplace_back(lambda0 + i, 1.0);
        prog.set_objective_term(eta0 + i, 1.0);
    }
    prog.add_equality(simplex, 1.0);

    for (int i = 0; i < m; ++i) {
        const int xi = x0 + i * d;
        // perspective of g_i below eta_i: a_ij.x_i + b_ij lambda_i <= eta_i
        for (int j = 0; j < n; ++j) {
            std::vector<Term> row;
            const Vector aij = model.slope(i, j);
            for (int r = 0; r < d; ++r)
                if (aij(r) != 0.0) row.emplace_back(xi + r, aij(r));
            row.emplace_back(lambda0 + i, model.offset(i, j));
            row.emplace_back(eta0 + i, -1.0);
            prog.add_inequality(row, 0.0);
        }
        for (const auto& c : set.constraints)
            encode_membership(prog, c, xi, d, lambda0 + i, 1.0);
    }
    return prog;
}

// Variable layout: alpha = 0, y_i = 1 + i*d, theta_i = 1 + m*d + i*n,
// beta_ik = 1 + m*d + m*n + i*K + k, z_ik = (after betas) + (i*K + k)*d,
// nu_ij = (after z) + (i*n + j)*n, followed by encoding auxiliaries.
ConicProgram build_dual(const MinMaxModel& model, const AttackSet& set, double slater_eps) {
    if (model.dim() != set.d)
        throw std::invalid_argument("build_dual: model/set dimension mismatch");
    require_bounded(set);
    const int m = model.num_components();
    const int n = model.num_pieces();
    const int d = model.dim();
    const int K = static_cast<int>(set.constraints.size());

    ConicProgram prog;
    const int alpha = prog.add_variable();
    const int y0 = prog.add_variables(m * d);
    const int theta0 = prog.add_variables(m * n);
    const int beta0 = prog.add_variables(m * K);
    const int z0 = prog.add_variables(m * K * d);
    const int nu0 = prog.add_variables(m * n * n);

    prog.set_sense(ConicProgram::Sense::Maximize);
    prog.set_objective_term(alpha, -1.0);

    for (int i = 0; i < m; ++i) {
        const int yi = y0 + i * d;
        const int ti = theta0 + i * n;

        // theta_i on the simplex with y_i = sum_j theta_ij a_ij
        std::vector<Term> simplex;
        for (int j = 0; j < n; ++j) {
            prog.mark_nonneg(ti + j);
            simplex.emplace_back(ti + j, 1.0);
        }
        prog.add_equality(simplex, 1.0);
        for (int r = 0; r < d; ++r) {
            std::vector<Term> row{{yi + r, 1.0}};
            for (int j = 0; j < n; ++j) row.emplace_back(ti + j, -model.slope(i, j)(r));
            prog.add_equality(row, 0.0);
        }

        // y_i + sum_k z_ik = 0
        for (int r = 0; r < d; ++r) {
            std::vector<Term> row{{yi + r, 1.0}};
            for (int k = 0; k < K; ++k) row.emplace_back(z0 + (i * K + k) * d + r, 1.0);
            prog.add_equality(row, 0.0);
        }

        // per-constraint dual structure
        for (int k = 0; k < K; ++k) {
            const int beta = beta0 + i * K + k;
            const int zik = z0 + (i * K + k) * d;
            prog.mark_nonneg(beta);
            const auto& c = set.constraints[k];
            if (const auto* ball = std::get_if<NormBall>(&c)) {
                encode_dual_norm_cone(prog, ball->norm, zik, d, beta, slater_eps);
            } else {
                // z_ik = beta_ik psi_k structurally (measure-zero domain)
                const auto& hs = std::get<HalfSpace>(c);
                for (int r = 0; r < d; ++r)
                    prog.add_equality({{zik + r, 1.0}, {beta, -hs.psi(r)}}, 0.0);
            }
        }

        // conjugate-domination multipliers with h = alpha - sum_k conjugate terms
        for (int j = 0; j < n; ++j) {
            const int nu = nu0 + (i * n + j) * n;
            const Vector aij = model.slope(i, j);
            for (int l = 0; l < n; ++l) prog.mark_nonneg(nu + l);
            // y_i - a_ij + sum_l nu_l (a_ij - a_il) = 0
            for (int r = 0; r < d; ++r) {
                std::vector<Term> row{{yi + r, 1.0}};
                for (int l = 0; l < n; ++l) {
                    const double coeff = aij(r) - model.slope(i, l)(r);
                    if (coeff != 0.0) row.emplace_back(nu + l, coeff);
                }
                prog.add_equality(row, aij(r));
            }
            // sum_l nu_l (b_ij - b_il) - alpha + sum_k Phi_ik <= b_ij
            std::vector<Term> row;
            for (int l = 0; l < n; ++l) {
                const double coeff = model.offset(i, j) - model.offset(i, l);
                if (coeff != 0.0) row.emplace_back(nu + l, coeff);
            }
            row.emplace_back(alpha, -1.0);
            for (int k = 0; k < K; ++k) {
                const int beta = beta0 + i * K + k;
                const int zik = z0 + (i * K + k) * d;
                const auto& c = set.constraints[k];
                if (const auto* ball = std::get_if<NormBall>(&c)) {
                    for (int r = 0; r < d; ++r)
                        if (ball->center(r) != 0.0) row.emplace_back(zik + r, ball->center(r));
                    row.emplace_back(beta, ball->radius);
                } else {
                    row.emplace_back(beta, -std::get<HalfSpace>(c).omega);
                }
            }
            prog.add_inequality(row, model.offset(i, j));
        }
    }
    return prog;
}

SlaterStatus verify_slater(const MinMaxModel& model, const AttackSet& set, double slater_eps,
                           const SolveOptions& opts) {
    bool has_ball = false;
    for (const auto& c : set.constraints)
        if (std::holds_alternative<NormBall>(c)) has_ball = true;

    // fast path: a point satisfying every norm-ball constraint strictly and
    // every linear constraint (which is exempt from strictness) witnesses the
    // qualification directly
    {
        std::vector<Vector> candidates;
        Vector mean = Vector::Zero(set.d);
        int balls = 0;
        for (const auto& c : set.constraints)
            if (const auto* ball = std::get_if<NormBall>(&c)) {
                candidates.push_back(ball->center);
                mean += ball->center;
                ++balls;
            }
        if (balls > 1) candidates.push_back(mean / balls);
        for (const auto& x : candidates) {
            bool strict = true;
            for (const auto& c : set.constraints) {
                const double v = constraint_value(c, x);
                if (std::holds_alternative<NormBall>(c) ? v >= -1e-9 : v > 0.0) {
                    strict = false;
                    break;
                }
            }
            if (strict) return SlaterStatus::Ok;
        }
    }
    // Purely polyhedral duals have only linear constraints, which Slater
    // points are not required to satisfy strictly.
    ConicProgram prog = build_dual(model, set, has_ball ? slater_eps : 0.0);
    auto sol = prog.solve(opts);
    switch (sol.status) {
    case SolveStatus::Optimal:
    case SolveStatus::Unbounded: return SlaterStatus::Ok;
    case SolveStatus::Infeasible: return SlaterStatus::Fail;
    case SolveStatus::Inaccurate: return usable(sol) ? SlaterStatus::Ok : SlaterStatus::Indeterminate;
    }
    return SlaterStatus::Indeterminate;
}

std::optional<std::pair<Vector, Vector>> extract_attack(const PrimalSolution& primal,
                                                        const MinMaxModel& model,
                                                        const AttackSet& set, double lambda_min) {
    const int m = model.num_components();
    std::vector<Vector> atoms;
    std::vector<double> weights;
    for (int i = 0; i < m; ++i) {
        if (primal.lambda(i) > lambda_min) {
            atoms.push_back(primal.x_atoms[i] / primal.lambda(i));
            weights.push_back(primal.lambda(i));
        }
    }
    if (atoms.empty()) return std::nullopt;
    // Small-weight atoms are recovered by dividing by lambda_i and can be
    // numerically noisy, so prefer the argmin among atoms that verifiably lie
    // in the attack set.
    auto argmin = [&](bool require_contained) -> int {
        int best = -1;
        double best_val = std::numeric_limits<double>::infinity();
        for (size_t q = 0; q < atoms.size(); ++q) {
            if (require_contained && !contains(set, atoms[q], 1e-6)) continue;
            const double v = evaluate(model, atoms[q]);
            if (v < best_val) {
                best_val = v;
                best = static_cast<int>(q);
            }
        }
        return best;
    };
    int best = argmin(true);
    if (best < 0) best = argmin(false);
    Vector w = Eigen::Map<Vector>(weights.data(), static_cast<Eigen::Index>(weights.size()));
    return std::make_pair(atoms[best], w);
}

CertificationResult certify(const MinMaxModel& input_model, const AttackSet& set,
                            const CertifyOptions& opts) {
    CertificationResult result;
    std::ostringstream diag;

    validate(set);
    require_bounded(set);

    MinMaxModel model = input_model;
    if (opts.prune) {
        auto [pruned, report] = prune_redundant(input_model);
        model = std::move(pruned);
        if (!report.removed.empty())
            diag << "pruned " << report.removed.size() << " redundant pieces; ";
    }

    if (opts.run_slater) {
        result.slater = verify_slater(model, set, opts.slater_eps, opts.solver);
        if (result.slater != SlaterStatus::Ok)
            diag << "slater check: " << to_string(result.slater) << "; ";
    } else {
        result.slater = SlaterStatus::Indeterminate;
        diag << "slater check skipped; ";
    }

    ConicProgram primal_prog = build_primal(model, set);
    auto psol = primal_prog.solve(opts.solver);
    result.primal_status = psol.status;

    ConicProgram dual_prog = build_dual(model, set, 0.0);
    auto dsol = dual_prog.solve(opts.solver);
    result.dual_status = dsol.status;

    if (!usable(psol) || !usable(dsol)) {
        diag << "solver failure: primal " << to_string(psol.status) << ", dual "
             << to_string(dsol.status);
        result.diagnostics = diag.str();
        return result;
    }
    if (psol.status == SolveStatus::Inaccurate || dsol.status == SolveStatus::Inaccurate)
        diag << "reduced solver accuracy (residuals <= 1e-6); ";

    result.lower = psol.objective;
    result.upper = dsol.objective;
    result.gap = std::abs(result.lower - result.upper);
    result.p_star = result.lower;

    const int m = model.num_components();
    const int d = model.dim();
    PrimalSolution primal;
    primal.lambda = psol.primal.segment(0, m);
    primal.eta = psol.primal.segment(m, m);
    primal.x_atoms.resize(m);
    for (int i = 0; i < m; ++i) primal.x_atoms[i] = psol.primal.segment(2 * m + i * d, d);
    primal.objective = psol.objective;

    auto extracted = extract_attack(primal, model, set, opts.lambda_min);
    if (!extracted) {
        diag << "attack extraction degenerate: all atom weights below threshold";
        result.diagnostics = diag.str();
        return result;
    }
    result.attack = extracted->first;
    result.atom_weights = extracted->second;

    // consistency gates before claiming anything
    const double gap_tol = 1e-5 * (1.0 + std::abs(result.lower));
    if (result.slater == SlaterStatus::Ok && result.gap > gap_tol) {
        diag << "primal/dual disagree beyond tolerance (gap " << result.gap << ")";
        result.diagnostics = diag.str();
        return result;
    }
    if (!contains(set, result.attack, opts.tol)) {
        diag << "extracted attack left the attack set";
        result.diagnostics = diag.str();
        return result;
    }
    const double attack_val = evaluate(model, result.attack);
    if (std::abs(attack_val - result.p_star) > 10.0 * opts.tol * (1.0 + std::abs(result.p_star))) {
        diag << "extracted attack value " << attack_val << " inconsistent with p* "
             << result.p_star;
        result.diagnostics = diag.str();
        return result;
    }
    if (result.slater != SlaterStatus::Ok) {
        diag << "weak-duality bound only: [" << result.upper << ", " << result.lower << "]";
        result.diagnostics = diag.str();
        return result;
    }

    result.status = result.p_star >= 0.0 ? CertStatus::CertifiedRobust : CertStatus::Falsified;
    result.diagnostics = diag.str();
    return result;
}

double enumerate_oracle(const MinMaxModel& model, const AttackSet& set, const SolveOptions& opts) {
    if (model.dim() != set.d)
        throw std::invalid_argument("enumerate_oracle: model/set dimension mismatch");
    require_bounded(set);
    const int d = model.dim();
    const int n = model.num_pieces();
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < model.num_components(); ++i) {
        ConicProgram prog;
        const int x = prog.add_variables(d);
        const int t = prog.add_variable();
        prog.set_objective_term(t, 1.0);
        for (int j = 0; j < n; ++j) {
            std::vector<Term> row;
            const Vector aij = model.slope(i, j);
            for (int r = 0; r < d; ++r)
                if (aij(r) != 0.0) row.emplace_back(x + r, aij(r));
            row.emplace_back(t, -1.0);
            prog.add_inequality(row, -model.offset(i, j));
        }
        for (const auto& c : set.constraints) encode_membership(prog, c, x, d, -1, 1.0);
        auto sol = prog.solve(opts);
        if (!usable(sol))
            throw std::runtime_error(std::string("enumerate_oracle: component solve ") +
                                     to_string(sol.status));
        best = std::min(best, sol.objective);
    }
    return best;
}

double certified_radius(const MinMaxModel& model, const Vector& center, Norm norm,
                        const RadiusOptions& opts) {
    if (evaluate(model, center) < 0.0) return 0.0;

    auto robust_at = [&](double eps) {
        const auto result = certify(model, make_ball(norm, center, eps), opts.certify);
        if (result.status == CertStatus::Indeterminate)
            throw std::runtime_error("certified_radius: indeterminate probe at eps=" +
                                     std::to_string(eps) + " (" + result.diagnostics + ")");
        return result.status == CertStatus::CertifiedRobust;
    };

    if (robust_at(opts.eps_max)) return opts.eps_max;
    double lo = 0.0, hi = opts.eps_max;
    while (hi - lo > opts.tol) {
        const double mid = 0.5 * (lo + hi);
        if (robust_at(mid))
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

double certified_accuracy(const MinMaxModel& model, const std::vector<Vector>& points,
                          const std::vector<int>& labels, double eps, int sensitive_label,
                          Norm norm, const CertifyOptions& opts) {
    if (points.size() != labels.size())
        throw std::invalid_argument("certified_accuracy: points/labels size mismatch");
    if (eps < 0.0) throw std::invalid_argument("certified_accuracy: eps must be nonnegative");
    int sensitive = 0, certified = 0;
    for (size_t q = 0; q < points.size(); ++q) {
        if (labels[q] != sensitive_label) continue;
        ++sensitive;
        if (evaluate(model, points[q]) < 0.0) continue;
        if (eps == 0.0) {
            ++certified;
            continue;
        }
        const auto result = certify(model, make_ball(norm, points[q], eps), opts);
        if (result.status == CertStatus::CertifiedRobust) ++certified;
    }
    return sensitive == 0 ? 0.0 : static_cast<double>(certified) / sensitive;
}

SolveStatus conjugate_dominated(const MinMaxModel& model, int i, const Vector& y, double h,
                                const SolveOptions& opts) {
    const int n = model.num_pieces();
    const int d = model.dim();
    if (y.size() != d) throw std::invalid_argument("conjugate_dominated: dimension mismatch");

    ConicProgram prog;
    const int theta = prog.add_variables(n);
    const int nu0 = prog.add_variables(n * n);
    std::vector<Term> simplex;
    for (int j = 0; j < n; ++j) {
        prog.mark_nonneg(theta + j);
        simplex.emplace_back(theta + j, 1.0);
    }
    prog.add_equality(simplex, 1.0);
    for (int r = 0; r < d; ++r) {
        std::vector<Term> row;
        for (int j = 0; j < n; ++j) row.emplace_back(theta + j, model.slope(i, j)(r));
        prog.add_equality(row, y(r));
    }
    for (int j = 0; j < n; ++j) {
        const int nu = nu0 + j * n;
        const Vector aij = model.slope(i, j);
        for (int l = 0; l < n; ++l) prog.mark_nonneg(nu + l);
        for (int r = 0; r < d; ++r) {
            std::vector<Term> row;
            for (int l = 0; l < n; ++l) {
                const double coeff = aij(r) - model.slope(i, l)(r);
                if (coeff != 0.0) row.emplace_back(nu + l, coeff);
            }
            prog.add_equality(row, aij(r) - y(r));
        }
        std::vector<Term> row;
        for (int l = 0; l < n; ++l) {
            const double coeff = model.offset(i, j) - model.offset(i, l);
            if (coeff != 0.0) row.emplace_back(nu + l, coeff);
        }
        prog.add_inequality(row, h + model.offset(i, j));
    }
    return prog.solve(opts).status;
}

MinMaxModel restrict_model(const MinMaxModel& model, const std::vector<int>& fixed_coords,
                           const Vector& fixed_values) {
    if (fixed_coords.size() != static_cast<size_t>(fixed_values.size()))
        throw std::invalid_argument("restrict_model: coords/values size mismatch");
    const int d = model.dim();
    std::vector<bool> fixed(d, false);
    for (int c : fixed_coords) {
        if (c < 0 || c >= d) throw std::out_of_range("restrict_model: coordinate out of range");
        fixed[c] = true;
    }
    std::vector<int> free_coords;
    for (int r = 0; r < d; ++r)
        if (!fixed[r]) free_coords.push_back(r);
    if (free_coords.empty()) throw std::invalid_argument("restrict_model: no free coordinates");

    const int m = model.num_components();
    const int n = model.num_pieces();
    const int dq = static_cast<int>(free_coords.size());
    Matrix a(static_cast<Eigen::Index>(m) * n, dq);
    Matrix b(m, n);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            const Vector aij = model.slope(i, j);
            double offset = model.offset(i, j);
            for (size_t q = 0; q < fixed_coords.size(); ++q)
                offset += aij(fixed_coords[q]) * fixed_values(static_cast<Eigen::Index>(q));
            for (int r = 0; r < dq; ++r) a(i * n + j, r) = aij(free_coords[r]);
            b(i, j) = offset;
        }
    }
    return MinMaxModel(m, n, dq, std::move(a), std::move(b));
}

} // namespace minmax
