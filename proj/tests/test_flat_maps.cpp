#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "nullflat/curve_spec.hpp"
#include "nullflat/errors.hpp"
#include "nullflat/flat_maps.hpp"
#include "nullflat/pseudo.hpp"
#include "nullflat/sampling.hpp"

using namespace nullflat;

namespace {

constexpr double kTight = 1e-12;

Jet jet_of(const char* spec, double tau, int order) {
    return CurveSpec::parse(spec).eval_jet(tau, order);
}

double dist(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

}  // namespace

TEST_CASE("cubic flat output gives the frozen curve") {
    for (double tau : {-1.0, 0.0, 0.5, 2.0}) {
        const VecJet x = wh_map_r21(jet_of("poly:0,0,0,1", tau, 5), tau);
        const PseudoVec pos = x.value();
        CHECK(pos.components[0] == doctest::Approx(6 * tau - 2 * tau * tau * tau).epsilon(kTight));
        CHECK(pos.components[1] == doctest::Approx(6 * tau * tau).epsilon(kTight));
        CHECK(pos.components[2] == doctest::Approx(6 * tau + 2 * tau * tau * tau).epsilon(kTight));
        // Velocity is the light cone line scaled by f''': 6 u(tau).
        const PseudoVec vel = x.derivative(1);
        CHECK(vel.components[0] == doctest::Approx(6 * (1 - tau * tau)).epsilon(kTight));
        CHECK(vel.components[1] == doctest::Approx(12 * tau).epsilon(kTight));
        CHECK(vel.components[2] == doctest::Approx(6 * (1 + tau * tau)).epsilon(kTight));
        CHECK(null_residual(x).value() == doctest::Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("quadratic flat output collapses to one point") {
    for (double tau : {-3.0, 0.0, 1.7}) {
        const VecJet x = wh_map_r21(jet_of("poly:0,0,1", tau, 5), tau);
        const PseudoVec pos = x.value();
        CHECK(pos.components[0] == doctest::Approx(2.0).epsilon(kTight));
        CHECK(pos.components[1] == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(pos.components[2] == doctest::Approx(2.0).epsilon(kTight));
        const PseudoVec vel = x.derivative(1);
        for (double c : vel.components) CHECK(c == doctest::Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("zero flat output with constant speed traces the reference curve") {
    for (double tau : {-1.0, 0.3, 1.0}) {
        const VecJet x = delta_map(jet_of("poly:0", tau, 5), Jet::constant(2.0, 4), tau);
        const VecJet u = basis_u_r21(tau, x.order());
        for (int i = 0; i < 3; ++i)
            CHECK(x.components[i][0] == doctest::Approx(u.components[i][0]).epsilon(kTight));
        CHECK(null_residual(x).value() == doctest::Approx(-4.0).epsilon(kTight));
    }
}

TEST_CASE("cubic with unit speed gives the frozen shifted curve") {
    for (double tau : {-0.5, 0.0, 1.25}) {
        const VecJet x = delta_map(jet_of("poly:0,0,0,1", tau, 5), Jet::constant(1.0, 4), tau);
        const PseudoVec pos = x.value();
        const double t3 = tau * tau * tau;
        CHECK(pos.components[0] ==
              doctest::Approx(6 * tau - 2 * t3 + 0.5 * (1 - tau * tau)).epsilon(kTight));
        CHECK(pos.components[1] == doctest::Approx(6 * tau * tau + tau).epsilon(kTight));
        CHECK(pos.components[2] ==
              doctest::Approx(6 * tau + 2 * t3 + 0.5 * (1 + tau * tau)).epsilon(kTight));
        CHECK(null_residual(x).value() == doctest::Approx(-1.0).epsilon(kTight));
    }
}

TEST_CASE("one linear extra reproduces the unit-speed block") {
    FlatInputR21 input;
    input.f = CurveSpec::parse("poly:0,0,0,1");
    input.extras = {CurveSpec::parse("poly:0,1")};
    for (double tau : {-0.5, 0.0, 1.25}) {
        const VecJet x = r2n_map(input, tau, 3);
        REQUIRE(x.dim() == 4);
        const VecJet block = delta_map(jet_of("poly:0,0,0,1", tau, 5),
                                       Jet::constant(1.0, 4), tau);
        for (int i = 0; i < 3; ++i)
            CHECK(x.components[i][0] ==
                  doctest::Approx(block.components[i][0]).epsilon(kTight));
        CHECK(x.components[3][0] == doctest::Approx(tau).epsilon(kTight));
        // The extra's speed cancels the block's -1 residual.
        CHECK(null_residual(x).value() == doctest::Approx(0.0).epsilon(kTight).scale(1));
    }
}

TEST_CASE("two linear extras combine speeds pythagorean-style") {
    FlatInputR21 input;
    input.f = CurveSpec::parse("poly:0,0,0,1");
    input.extras = {CurveSpec::parse("poly:0,3"), CurveSpec::parse("poly:0,4")};
    const VecJet x = r2n_map(input, 0.0, 3);
    REQUIRE(x.dim() == 5);
    // delta = 5, so the first block at 0 is (5/2) u(0) = (2.5, 0, 2.5).
    CHECK(x.components[0][0] == doctest::Approx(2.5).epsilon(kTight));
    CHECK(x.components[1][0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(x.components[2][0] == doctest::Approx(2.5).epsilon(kTight));
    CHECK(null_residual(x).value() == doctest::Approx(0.0).epsilon(kTight).scale(1));
}

TEST_CASE("constant extras take the radical-free branch") {
    FlatInputR21 input;
    input.f = CurveSpec::parse("poly:0,0,0,1");
    input.extras = {CurveSpec::parse("poly:7")};
    for (double tau : {-1.0, 0.0, 0.6}) {
        const VecJet x = r2n_map(input, tau, 3);
        const VecJet plain = wh_map_r21(jet_of("poly:0,0,0,1", tau, 5), tau);
        for (int i = 0; i < 3; ++i)
            CHECK(x.components[i][0] ==
                  doctest::Approx(plain.components[i][0]).epsilon(kTight));
        CHECK(x.components[3][0] == doctest::Approx(7.0).epsilon(kTight));
        CHECK(null_residual(x).value() == doctest::Approx(0.0).epsilon(kTight).scale(1));
    }
}

TEST_CASE("vanishing radical is a located degeneracy") {
    FlatInputR21 input;
    input.f = CurveSpec::parse("poly:0,0,0,1");
    input.extras = {CurveSpec::parse("poly:0,0,1")};  // w' = 2 tau, zero at 0
    try {
        r2n_map(input, 0.0, 2);
        FAIL("expected DegeneracyError");
    } catch (const DegeneracyError& e) {
        CHECK(e.kind() == Degeneracy::DegenerateDelta);
        REQUIRE(e.tau().has_value());
        CHECK(*e.tau() == doctest::Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("two-line map frozen examples") {
    FlatInputR22 input;
    input.f = CurveSpec::parse("poly:0,0,1");
    input.g = CurveSpec::parse("poly:0");
    for (double tau : {-1.0, 0.0, 0.7}) {
        const VecJet x = r22_map(input, tau, 2);
        const PseudoVec pos = x.value();
        CHECK(pos.components[0] == doctest::Approx(2 * tau).epsilon(kTight));
        CHECK(pos.components[1] == doctest::Approx(tau * tau).epsilon(kTight));
        CHECK(pos.components[2] == doctest::Approx(2 * tau).epsilon(kTight));
        CHECK(pos.components[3] == doctest::Approx(-tau * tau).epsilon(kTight));
        // x' = 2 u(tau) = (2, 2 tau, 2, -2 tau).
        const PseudoVec vel = x.derivative(1);
        CHECK(vel.components[0] == doctest::Approx(2.0).epsilon(kTight));
        CHECK(vel.components[1] == doctest::Approx(2 * tau).epsilon(kTight));
        CHECK(vel.components[2] == doctest::Approx(2.0).epsilon(kTight));
        CHECK(vel.components[3] == doctest::Approx(-2 * tau).epsilon(kTight));
    }

    input.f = CurveSpec::parse("poly:0");
    input.g = CurveSpec::parse("poly:0,0,1");
    const VecJet x = r22_map(input, 0.5, 2);
    const PseudoVec pos = x.value();
    CHECK(pos.components[0] == doctest::Approx(-0.25).epsilon(kTight));
    CHECK(pos.components[1] == doctest::Approx(1.0).epsilon(kTight));
    CHECK(pos.components[2] == doctest::Approx(0.25).epsilon(kTight));
    CHECK(pos.components[3] == doctest::Approx(1.0).epsilon(kTight));
}

TEST_CASE("three-space inversion at tau = 2") {
    const VecJet x = wh_map_r21(jet_of("poly:0,0,0,1", 2.0, 5), 2.0);
    const InversionResult inv = invert_r21(x, 0.0);
    CHECK(inv.tau_hat == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(inv.f_hat == doctest::Approx(8.0).epsilon(1e-12));
    CHECK_FALSE(inv.g_hat.has_value());
    REQUIRE(inv.denominators.size() == 1);
    CHECK(inv.denominators[0] > 1.0);
}

TEST_CASE("reparametrized inversion lands on sigma(tau)") {
    FlatInputR21 input;
    input.f = CurveSpec::parse("poly:0,0,0,1");
    input.sigma = CurveSpec::parse("poly:0,1,0,1");  // tau + tau^3
    const VecJet x = r2n_map(input, 1.0, 3);
    const InversionResult inv = invert_r21(x, germ_delta(x));
    CHECK(inv.tau_hat == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(inv.f_hat == doctest::Approx(8.0).epsilon(1e-12));
}

TEST_CASE("inversion refuses flat germs") {
    const VecJet x = wh_map_r21(jet_of("poly:0,0,1", 1.0, 5), 1.0);
    try {
        invert_r21(x, 0.0);
        FAIL("expected DegeneracyError");
    } catch (const DegeneracyError& e) {
        CHECK(e.kind() == Degeneracy::DegenerateGerm);
    }
}

TEST_CASE("two-line inversion at tau = 0.7") {
    FlatInputR22 input;
    input.f = CurveSpec::parse("poly:0,0,1");
    input.g = CurveSpec::parse("poly:0");
    const VecJet x = r22_map(input, 0.7, 2);
    const InversionResult inv = invert_r22(x);
    CHECK(inv.tau_hat == doctest::Approx(0.7).epsilon(1e-12));
    CHECK(inv.f_hat == doctest::Approx(0.49).epsilon(1e-12));
    REQUIRE(inv.g_hat.has_value());
    CHECK(*inv.g_hat == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(inv.denominators.size() == 2);
}

TEST_CASE("non-monotone reparametrization is rejected at the critical point") {
    FlatInputR21 input;
    input.f = CurveSpec::parse("poly:0,0,0,1");
    input.sigma = CurveSpec::parse("poly:0,0,1");  // sigma' (0) = 0
    try {
        r2n_map(input, 0.0, 2);
        FAIL("expected DegeneracyError");
    } catch (const DegeneracyError& e) {
        CHECK(e.kind() == Degeneracy::SigmaNotMonotone);
    }
}

TEST_CASE("decreasing reparametrizations are legitimate") {
    FlatInputR21 input;
    input.f = CurveSpec::parse("poly:0,0,0,1");
    input.sigma = CurveSpec::parse("poly:0,-1");
    const SampledCurve curve = generate(input, GridSpec{-1, 1, 41});
    for (const auto& s : curve.samples)
        CHECK(std::abs(s.residual) < 1e-10);
}

TEST_CASE("sub-cubic flat outputs sample to a single point") {
    FlatInputR21 r21;
    r21.f = CurveSpec::parse("poly:1,2,1");
    const SampledCurve c1 = generate(r21, GridSpec{-1, 1, 21});
    for (const auto& s : c1.samples)
        CHECK(dist(s.x, c1.samples[0].x) < 1e-12);

    FlatInputR22 r22;
    r22.f = CurveSpec::parse("poly:1,2");
    r22.g = CurveSpec::parse("poly:-3,4");
    const SampledCurve c2 = generate(r22, GridSpec{-1, 1, 21});
    for (const auto& s : c2.samples)
        CHECK(dist(s.x, c2.samples[0].x) < 1e-12);
}

TEST_CASE("generation stamps the offending tau on map errors") {
    FlatInputR21 input;
    input.f = CurveSpec::parse("poly:0,0,0,1");
    input.extras = {CurveSpec::parse("poly:0,0,1")};
    try {
        generate(input, GridSpec{-1, 1, 21});
        FAIL("expected DegeneracyError");
    } catch (const DegeneracyError& e) {
        CHECK(e.kind() == Degeneracy::DegenerateDelta);
        CHECK(e.tau().has_value());
    }
}

TEST_CASE("speed radical of a germ reads the extra velocities") {
    FlatInputR21 input;
    input.f = CurveSpec::parse("poly:0,0,0,1");
    input.extras = {CurveSpec::parse("poly:0,3"), CurveSpec::parse("poly:0,4")};
    const VecJet x = r2n_map(input, 0.2, 2);
    CHECK(germ_delta(x) == doctest::Approx(5.0).epsilon(1e-12));
    const VecJet plain = wh_map_r21(jet_of("poly:0,0,0,1", 0.2, 5), 0.2);
    CHECK(germ_delta(plain) == 0.0);
}
