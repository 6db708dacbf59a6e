#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "minmaxcert/attack_set.hpp"

#include <random>

using namespace minmax;

namespace {

Vector rand_vec(std::mt19937_64& rng, int d, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    Vector v(d);
    for (int r = 0; r < d; ++r) v(r) = u(rng);
    return v;
}

} // namespace

TEST_CASE("norm pairs and hand values") {
    Vector z(3);
    z << 3.0, -4.0, 0.0;
    CHECK(primal_norm(Norm::L1, z) == doctest::Approx(7.0));
    CHECK(primal_norm(Norm::L2, z) == doctest::Approx(5.0));
    CHECK(primal_norm(Norm::LInf, z) == doctest::Approx(4.0));
    CHECK(dual_norm(Norm::L1, z) == doctest::Approx(4.0));  // dual of L1 is LInf
    CHECK(dual_norm(Norm::LInf, z) == doctest::Approx(7.0)); // dual of LInf is L1
    CHECK(dual_norm(Norm::L2, z) == doctest::Approx(5.0));
}

TEST_CASE("holder inequality for each declared pair") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const int d = 1 + static_cast<int>(rng() % 4);
        const Vector x = rand_vec(rng, d, 2.0);
        const Vector z = rand_vec(rng, d, 2.0);
        for (Norm norm : {Norm::L1, Norm::L2, Norm::LInf})
            CHECK(z.dot(x) <= primal_norm(norm, x) * dual_norm(norm, z) + 1e-12);
    }
}

TEST_CASE("perspective agrees with t c(x/t) for t > 0") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> tpick(0.05, 3.0);
    for (int trial = 0; trial < 100; ++trial) {
        const int d = 1 + static_cast<int>(rng() % 3);
        const double t = tpick(rng);
        const Vector x = rand_vec(rng, d, 2.0);
        for (Norm norm : {Norm::L1, Norm::L2, Norm::LInf}) {
            const NormBall ball{norm, rand_vec(rng, d), 0.5};
            CHECK(perspective_constraint(ball, x, t) ==
                  doctest::Approx(t * constraint_value(ball, x / t)).epsilon(1e-10));
        }
        const HalfSpace hs{rand_vec(rng, d), 0.3};
        CHECK(perspective_constraint(hs, x, t) ==
              doctest::Approx(t * constraint_value(hs, x / t)).epsilon(1e-10));
    }
}

TEST_CASE("perspective closure at t = 0") {
    Vector x(2), center(2), psi(2);
    x << 1.0, -2.0;
    center << 5.0, 5.0;
    psi << 2.0, 1.0;
    CHECK(perspective_constraint(NormBall{Norm::L2, center, 0.7}, x, 0.0) ==
          doctest::Approx(x.norm()));
    CHECK(perspective_constraint(HalfSpace{psi, 4.0}, x, 0.0) == doctest::Approx(psi.dot(x)));
}

TEST_CASE("norm-ball conjugate hand values and domain") {
    Vector center(2);
    center << 1.0, 2.0;
    const NormBall ball{Norm::L2, center, 0.5};
    Vector z(2);
    z << 0.6, 0.8; // unit L2 norm
    const ExtReal inside = conjugate_constraint(ball, z);
    REQUIRE(inside.is_finite());
    CHECK(inside.value() == doctest::Approx(z.dot(center) + 0.5));
    CHECK_FALSE(conjugate_constraint(ball, Vector(1.01 * z)).is_finite());
}

TEST_CASE("conjugate matches a grid supremum oracle in low dimension") {
    // c*(z) = sup_x (z.x - c(x)); the grid gives a lower bound that should
    // approach the closed form
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        const int d = 1 + static_cast<int>(rng() % 2);
        const Vector center = rand_vec(rng, d);
        for (Norm norm : {Norm::L1, Norm::L2, Norm::LInf}) {
            const NormBall ball{norm, center, 0.8};
            Vector z = rand_vec(rng, d);
            if (dual_norm(norm, z) > 1.0) z /= 1.0001 * dual_norm(norm, z);
            const ExtReal closed = conjugate_constraint(ball, z);
            REQUIRE(closed.is_finite());
            double grid_sup = -std::numeric_limits<double>::infinity();
            const int steps = 60;
            const double lo = -4.0, hi = 4.0;
            Vector x(d);
            if (d == 1) {
                for (int q = 0; q <= steps; ++q) {
                    x(0) = lo + (hi - lo) * q / steps;
                    grid_sup = std::max(grid_sup, z.dot(x) - constraint_value(ball, x));
                }
            } else {
                for (int q = 0; q <= steps; ++q)
                    for (int w = 0; w <= steps; ++w) {
                        x(0) = lo + (hi - lo) * q / steps;
                        x(1) = lo + (hi - lo) * w / steps;
                        grid_sup = std::max(grid_sup, z.dot(x) - constraint_value(ball, x));
                    }
            }
            CHECK(closed.value() >= grid_sup - 1e-9);
            CHECK(closed.value() <= grid_sup + 0.3); // grid resolution slack
        }
    }
}

TEST_CASE("half-space conjugate is -omega exactly at psi and +inf elsewhere") {
    Vector psi(2);
    psi << 1.0, -2.0;
    const HalfSpace hs{psi, 0.25};
    const ExtReal at_psi = conjugate_constraint(hs, psi);
    REQUIRE(at_psi.is_finite());
    CHECK(at_psi.value() == doctest::Approx(-0.25));
    CHECK_FALSE(conjugate_constraint(hs, Vector(1.001 * psi)).is_finite());
}

TEST_CASE("fenchel-young inequality for all constraint types") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 100; ++trial) {
        const int d = 1 + static_cast<int>(rng() % 3);
        const Vector x = rand_vec(rng, d, 2.0);
        for (Norm norm : {Norm::L1, Norm::L2, Norm::LInf}) {
            const NormBall ball{norm, rand_vec(rng, d), 0.4};
            Vector z = rand_vec(rng, d);
            if (dual_norm(norm, z) > 1.0) z /= (1.0 + 1e-9) * dual_norm(norm, z);
            const ExtReal conj = conjugate_constraint(ball, z);
            REQUIRE(conj.is_finite());
            CHECK(constraint_value(ball, x) + conj.value() >= z.dot(x) - 1e-10);
        }
        const HalfSpace hs{rand_vec(rng, d), 0.1};
        const ExtReal conj = conjugate_constraint(hs, hs.psi);
        REQUIRE(conj.is_finite());
        CHECK(constraint_value(hs, x) + conj.value() >= hs.psi.dot(x) - 1e-10);
    }
}

TEST_CASE("perspective-conjugate equals t c*(z/t) for t > 0 and its closure at 0") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> tpick(0.1, 2.0);
    for (int trial = 0; trial < 50; ++trial) {
        const int d = 1 + static_cast<int>(rng() % 3);
        const double t = tpick(rng);
        for (Norm norm : {Norm::L1, Norm::L2, Norm::LInf}) {
            const NormBall ball{norm, rand_vec(rng, d), 0.6};
            Vector z = rand_vec(rng, d);
            if (dual_norm(norm, z) > t) z *= t / ((1.0 + 1e-9) * dual_norm(norm, z));
            const ExtReal pc = perspective_conjugate(ball, z, t);
            const ExtReal scaled = conjugate_constraint(ball, Vector(z / t));
            REQUIRE(pc.is_finite());
            REQUIRE(scaled.is_finite());
            CHECK(pc.value() == doctest::Approx(t * scaled.value()).epsilon(1e-9));
            // outside the scaled domain it must be +inf
            Vector far = Vector::Ones(d);
            far *= 2.0 * t / dual_norm(norm, far);
            CHECK_FALSE(perspective_conjugate(ball, far, t).is_finite());
        }
    }

    // t = 0: finite (value 0) only at z = 0
    const NormBall ball{Norm::L2, Vector::Zero(2), 1.0};
    const ExtReal at_zero = perspective_conjugate(ball, Vector::Zero(2), 0.0);
    REQUIRE(at_zero.is_finite());
    CHECK(at_zero.value() == doctest::Approx(0.0));
    CHECK_FALSE(perspective_conjugate(ball, Vector::Ones(2), 0.0).is_finite());
    const HalfSpace hs{Vector::Ones(2), 1.0};
    CHECK(perspective_conjugate(hs, Vector::Zero(2), 0.0).is_finite());
    CHECK_FALSE(perspective_conjugate(hs, Vector::Ones(2), 0.0).is_finite());
}

TEST_CASE("make_box builds 2d half-spaces and membership works") {
    Vector lo(2), hi(2);
    lo << -1.0, 0.0;
    hi << 1.0, 2.0;
    const AttackSet box = make_box(lo, hi);
    CHECK(box.d == 2);
    CHECK(box.constraints.size() == 4);
    Vector inside(2), outside(2);
    inside << 0.5, 1.0;
    outside << 1.5, 1.0;
    CHECK(contains(box, inside, 1e-9));
    CHECK_FALSE(contains(box, outside, 1e-9));
}

TEST_CASE("validate rejects malformed sets") {
    AttackSet ok = make_ball(Norm::L2, Vector::Zero(2), 1.0);
    CHECK_NOTHROW(validate(ok));

    AttackSet bad_radius = ok;
    std::get<NormBall>(bad_radius.constraints[0]).radius = 0.0;
    CHECK_THROWS(validate(bad_radius));

    AttackSet bad_dim = ok;
    bad_dim.constraints.push_back(HalfSpace{Vector::Ones(3), 0.0});
    CHECK_THROWS(validate(bad_dim));

    AttackSet empty;
    empty.d = 2;
    CHECK_THROWS(validate(empty));
}

TEST_CASE("boundedness classification") {
    CHECK(verify_bounded(make_ball(Norm::LInf, Vector::Zero(2), 1.0)) == Boundedness::Bounded);

    Vector lo(2), hi(2);
    lo << -1.0, -1.0;
    hi << 1.0, 1.0;
    CHECK(verify_bounded(make_box(lo, hi)) == Boundedness::Bounded);

    AttackSet half;
    half.d = 2;
    half.constraints.push_back(HalfSpace{Vector::Ones(2), 0.0});
    CHECK(verify_bounded(half) == Boundedness::Unbounded);

    AttackSet contradictory;
    contradictory.d = 1;
    Vector plus(1), minus(1);
    plus << 1.0;
    minus << -1.0;
    contradictory.constraints.push_back(HalfSpace{plus, 1.0});   // x <= -1
    contradictory.constraints.push_back(HalfSpace{minus, 1.0});  // x >= 1
    CHECK(verify_bounded(contradictory) == Boundedness::Infeasible);
}
