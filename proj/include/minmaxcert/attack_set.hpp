#pragma once

#include "minmaxcert/extended_real.hpp"
#include "minmaxcert/model.hpp"

#include <variant>
#include <vector>

namespace minmax {

enum class Norm { L1, L2, LInf };

/// ||z||_* for the declared primal norm (L1 <-> LInf, L2 <-> L2).
double dual_norm(Norm norm, const Vector& z);
double primal_norm(Norm norm, const Vector& z);

/// c(x) = ||x - center|| - radius, a 0-sublevel description of a norm ball.
struct NormBall {
    Norm norm = Norm::LInf;
    Vector center;
    double radius = 0.0;
};

/// c(x) = psi . x + omega.
struct HalfSpace {
    Vector psi;
    double omega = 0.0;
};

using ConstraintFn = std::variant<NormBall, HalfSpace>;

int constraint_dim(const ConstraintFn& c);

/// c(x).
double constraint_value(const ConstraintFn& c, const Vector& x);

/// Perspective t c(x/t) with its closure at t = 0:
///   norm ball:  ||x - t center|| - radius t
///   half-space: psi . x + omega t
double perspective_constraint(const ConstraintFn& c, const Vector& x, double t);

/// Conjugate c*(z):
///   norm ball:  z . center + radius  when ||z||_* <= 1, else +inf
///   half-space: -omega when z == psi (tolerance 1e-9), else +inf
ExtReal conjugate_constraint(const ConstraintFn& c, const Vector& z);

/// Perspective of the conjugate:
///   norm ball:  z . center + radius t  when ||z||_* <= t, else +inf
///   half-space: -omega t when z == t psi, else +inf
ExtReal perspective_conjugate(const ConstraintFn& c, const Vector& z, double t);

/// Convex attack set X = {x : c_k(x) <= 0 for all k}.
struct AttackSet {
    int d = 0;
    std::vector<ConstraintFn> constraints;
};

AttackSet make_ball(Norm norm, const Vector& center, double radius);
/// Axis-aligned box as 2d half-spaces (lo_r <= x_r <= hi_r).
AttackSet make_box(const Vector& lo, const Vector& hi);

void validate(const AttackSet& set);

bool contains(const AttackSet& set, const Vector& x, double tol);

enum class Boundedness { Bounded, Unbounded, Infeasible };

/// Bounded if a norm-ball constraint is present; otherwise probes all 2d
/// coordinate-wise LPs max/min x_r over X.
Boundedness verify_bounded(const AttackSet& set);

} // namespace minmax
