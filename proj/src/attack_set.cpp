#include "minmaxcert/attack_set.hpp"

#include "minmaxcert/conic.hpp"

#include <cmath>
#include <stdexcept>

namespace minmax {

double primal_norm(Norm norm, const Vector& z) {
    switch (norm) {
    case Norm::L1: return z.lpNorm<1>();
    case Norm::L2: return z.norm();
    case Norm::LInf: return z.lpNorm<Eigen::Infinity>();
    }
    throw std::logic_error("primal_norm: bad norm tag");
}

double dual_norm(Norm norm, const Vector& z) {
    switch (norm) {
    case Norm::L1: return z.lpNorm<Eigen::Infinity>();
    case Norm::L2: return z.norm();
    case Norm::LInf: return z.lpNorm<1>();
    }
    throw std::logic_error("dual_norm: bad norm tag");
}

int constraint_dim(const ConstraintFn& c) {
    if (const auto* ball = std::get_if<NormBall>(&c)) return static_cast<int>(ball->center.size());
    return static_cast<int>(std::get<HalfSpace>(c).psi.size());
}

namespace {

void check_constraint(const ConstraintFn& c) {
    if (const auto* ball = std::get_if<NormBall>(&c)) {
        if (!(ball->radius > 0.0))
            throw std::invalid_argument("NormBall: radius must be positive");
        if (!ball->center.allFinite())
            throw std::invalid_argument("NormBall: non-finite center");
    } else {
        const auto& hs = std::get<HalfSpace>(c);
        if (hs.psi.size() == 0 || hs.psi.isZero(0.0))
            throw std::invalid_argument("HalfSpace: psi must be nonzero");
    }
}

void check_dim(const ConstraintFn& c, const Vector& x, const char* where) {
    if (constraint_dim(c) != x.size())
        throw std::invalid_argument(std::string(where) + ": dimension mismatch");
}

// Direct-evaluation equality tolerance for the measure-zero Prop. 8 domains.
constexpr double kExactTol = 1e-9;

} // namespace

double constraint_value(const ConstraintFn& c, const Vector& x) {
    check_dim(c, x, "constraint_value");
    if (const auto* ball = std::get_if<NormBall>(&c))
        return primal_norm(ball->norm, x - ball->center) - ball->radius;
    const auto& hs = std::get<HalfSpace>(c);
    return hs.psi.dot(x) + hs.omega;
}

double perspective_constraint(const ConstraintFn& c, const Vector& x, double t) {
    check_dim(c, x, "perspective_constraint");
    if (t < 0.0) throw std::invalid_argument("perspective_constraint: t must be nonnegative");
    if (const auto* ball = std::get_if<NormBall>(&c))
        return primal_norm(ball->norm, x - t * ball->center) - ball->radius * t;
    const auto& hs = std::get<HalfSpace>(c);
    return hs.psi.dot(x) + hs.omega * t;
}

ExtReal conjugate_constraint(const ConstraintFn& c, const Vector& z) {
    check_dim(c, z, "conjugate_constraint");
    if (const auto* ball = std::get_if<NormBall>(&c)) {
        if (dual_norm(ball->norm, z) > 1.0) return ExtReal::infinity();
        return z.dot(ball->center) + ball->radius;
    }
    const auto& hs = std::get<HalfSpace>(c);
    if ((z - hs.psi).lpNorm<Eigen::Infinity>() > kExactTol) return ExtReal::infinity();
    return -hs.omega;
}

ExtReal perspective_conjugate(const ConstraintFn& c, const Vector& z, double t) {
    check_dim(c, z, "perspective_conjugate");
    if (t < 0.0) throw std::invalid_argument("perspective_conjugate: t must be nonnegative");
    if (const auto* ball = std::get_if<NormBall>(&c)) {
        if (dual_norm(ball->norm, z) > t) return ExtReal::infinity();
        return z.dot(ball->center) + ball->radius * t;
    }
    const auto& hs = std::get<HalfSpace>(c);
    if ((z - t * hs.psi).lpNorm<Eigen::Infinity>() > kExactTol) return ExtReal::infinity();
    return -hs.omega * t;
}

AttackSet make_ball(Norm norm, const Vector& center, double radius) {
    AttackSet set;
    set.d = static_cast<int>(center.size());
    set.constraints.push_back(NormBall{norm, center, radius});
    validate(set);
    return set;
}

AttackSet make_box(const Vector& lo, const Vector& hi) {
    if (lo.size() != hi.size()) throw std::invalid_argument("make_box: lo/hi dimension mismatch");
    const int d = static_cast<int>(lo.size());
    AttackSet set;
    set.d = d;
    for (int r = 0; r < d; ++r) {
        if (lo(r) > hi(r)) throw std::invalid_argument("make_box: lo > hi");
        Vector up = Vector::Zero(d), down = Vector::Zero(d);
        up(r) = 1.0;
        down(r) = -1.0;
        set.constraints.push_back(HalfSpace{up, -hi(r)});  //  x_r - hi <= 0
        set.constraints.push_back(HalfSpace{down, lo(r)}); // -x_r + lo <= 0
    }
    validate(set);
    return set;
}

void validate(const AttackSet& set) {
    if (set.constraints.empty()) throw std::invalid_argument("AttackSet: no constraints");
    if (set.d < 1) throw std::invalid_argument("AttackSet: dimension must be positive");
    for (const auto& c : set.constraints) {
        check_constraint(c);
        if (constraint_dim(c) != set.d)
            throw std::invalid_argument("AttackSet: constraint dimension mismatch");
    }
}

bool contains(const AttackSet& set, const Vector& x, double tol) {
    for (const auto& c : set.constraints)
        if (constraint_value(c, x) > tol) return false;
    return true;
}

Boundedness verify_bounded(const AttackSet& set) {
    validate(set);
    for (const auto& c : set.constraints)
        if (std::holds_alternative<NormBall>(c)) return Boundedness::Bounded;

    // Purely polyhedral: probe max/min of every coordinate.
    for (int r = 0; r < set.d; ++r) {
        for (double sign : {1.0, -1.0}) {
            ConicProgram lp;
            const int x = lp.add_variables(set.d);
            lp.set_sense(ConicProgram::Sense::Maximize);
            lp.set_objective_term(x + r, sign);
            for (const auto& c : set.constraints) {
                const auto& hs = std::get<HalfSpace>(c);
                std::vector<ConicProgram::Term> row;
                for (int q = 0; q < set.d; ++q)
                    if (hs.psi(q) != 0.0) row.emplace_back(x + q, hs.psi(q));
                lp.add_inequality(row, -hs.omega);
            }
            auto sol = lp.solve();
            if (sol.status == SolveStatus::Infeasible) return Boundedness::Infeasible;
            if (sol.status == SolveStatus::Unbounded) return Boundedness::Unbounded;
            if (sol.status != SolveStatus::Optimal)
                throw std::runtime_error("verify_bounded: LP probe failed to converge");
        }
    }
    return Boundedness::Bounded;
}

} // namespace minmax
