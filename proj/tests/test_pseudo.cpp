#include <doctest.h>

#include <stdexcept>

#include "nullflat/pseudo.hpp"

using namespace nullflat;

TEST_CASE("reference curve products in R^{2,1}") {
    for (double tau : {-2.0, -0.5, 0.0, 1.0, 3.5}) {
        const VecJet u = basis_u_r21(tau, 3);
        const PseudoVec u0 = u.value();
        const PseudoVec u1 = u.derivative(1);
        CHECK(inner(u0, u0) == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(inner(u0, u1) == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(inner(u1, u1) == doctest::Approx(-4.0));
        // Third derivative vanishes identically.
        for (int i = 0; i < 3; ++i) CHECK(u.components[i][3] == 0.0);
    }
}

TEST_CASE("spanning pair products in R^{2,2}") {
    for (double tau : {-1.0, 0.0, 0.25, 2.0}) {
        const auto [u, v] = basis_uv_r22(tau, 2);
        const PseudoVec vecs[4] = {u.value(), u.derivative(1), v.value(), v.derivative(1)};
        // Rows and columns ordered u, u', v, v'.
        const double expected[4][4] = {
            {0, 0, 0, 2},
            {0, 0, -2, 0},
            {0, -2, 0, 0},
            {2, 0, 0, 0},
        };
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                CHECK(inner(vecs[i], vecs[j]) == doctest::Approx(expected[i][j]));
    }
}

TEST_CASE("inner product validates dimensions and signatures") {
    const PseudoVec a{{1, 2, 3}, sig_r2n(1)};
    const PseudoVec b{{1, 2, 3, 4}, sig_r2n(2)};
    CHECK_THROWS_AS(inner(a, b), std::invalid_argument);
    const PseudoVec c{{1, 2, 3}, Signature{1, 2}};
    CHECK_THROWS_AS(inner(a, c), std::invalid_argument);
}

TEST_CASE("signature weights are negative on the first two axes") {
    const Signature sig = sig_r2n(3);
    CHECK(sig.dim() == 5);
    CHECK(sig.weight(0) == -1.0);
    CHECK(sig.weight(1) == -1.0);
    CHECK(sig.weight(2) == 1.0);
    CHECK(sig.weight(4) == 1.0);
}

TEST_CASE("null residual reads the velocity, not the position") {
    // The reference line itself is not arc-null: (u', u') = -4 everywhere.
    const VecJet u = basis_u_r21(0.8, 3);
    CHECK(null_residual(u).value() == doctest::Approx(-4.0).epsilon(1e-12));

    VecJet still;
    still.signature = sig_r2n(1);
    still.components = {Jet::constant(1, 2), Jet::constant(2, 2), Jet::constant(3, 2)};
    CHECK(null_residual(still).value() == 0.0);
}

TEST_CASE("vec jet order requires uniform component orders") {
    VecJet germ;
    germ.signature = sig_r2n(1);
    germ.components = {Jet::constant(0, 2), Jet::constant(0, 2), Jet::constant(0, 1)};
    CHECK_THROWS_AS(germ.order(), std::invalid_argument);
}
