#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "nullflat/curve_spec.hpp"
#include "nullflat/flat_maps.hpp"
#include "nullflat/verification.hpp"

using namespace nullflat;

TEST_CASE("position jacobian determinant is constant") {
    for (double tau : {-10.0, -1.0, 0.0, 0.5, 7.25})
        CHECK(jacobian_det_r21(tau) == doctest::Approx(8.0).epsilon(1e-12));
}

TEST_CASE("canonical jacobian ranks at depth 2") {
    for (int n = 1; n <= 4; ++n) {
        const SpaceTag tag = n == 1 ? SpaceTag::R21 : SpaceTag::R2N;
        const RankReport report = rank_check(tag, n, 0.3, 2);
        CHECK(report.rank == n + 2);
    }
}

TEST_CASE("depth-1 probes separate the map families") {
    // Constant-extras three-space maps lose the light cone direction.
    for (int n = 1; n <= 3; ++n) {
        const SpaceTag tag = n == 1 ? SpaceTag::R21 : SpaceTag::R2N;
        CHECK(rank_check(tag, n, 0.4, 1).rank == n + 1);
    }
    // The two-line map is already onto with first derivatives.
    CHECK(rank_check(SpaceTag::R22, 2, 0.4, 1).rank == 4);
}

TEST_CASE("rank check validates its arguments") {
    CHECK_THROWS_AS(rank_check(SpaceTag::R21, 2, 0.0, 2), std::invalid_argument);
    CHECK_THROWS_AS(rank_check(SpaceTag::R22, 3, 0.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(rank_check(SpaceTag::R21, 1, 0.0, -1), std::invalid_argument);
    CHECK_THROWS_AS(rank_check(SpaceTag::R21, 1, 0.0, 9), std::invalid_argument);
}

TEST_CASE("singular values come out descending with a relative threshold") {
    const RankReport report = rank_check(SpaceTag::R22, 2, 0.15, 1);
    REQUIRE(report.singular_values.size() >= 2);
    for (std::size_t i = 1; i < report.singular_values.size(); ++i)
        CHECK(report.singular_values[i - 1] >= report.singular_values[i]);
    CHECK(report.threshold == doctest::Approx(1e-8 * report.singular_values.front()));
}

TEST_CASE("derivative cross-check stays tight across the grammar") {
    CHECK(fd_crosscheck(CurveSpec::parse("poly:1,-2,0,3"), 0.7) < 1e-6);
    CHECK(fd_crosscheck(CurveSpec::parse("sin:1.2,2+cos:0.5,3"), -0.4) < 1e-6);
    CHECK(fd_crosscheck(CurveSpec::parse("exp:0.8,-1.1"), 1.3) < 1e-6);
    CHECK(fd_crosscheck(CurveSpec::parse("poly:0,1,1+sin:0.3,1.5+exp:0.2,0.4"), 0.9) < 1e-6);
}

TEST_CASE("derivative cross-check bounds its order") {
    CHECK_THROWS_AS(fd_crosscheck(CurveSpec::parse("poly:0,1"), 0.0, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(fd_crosscheck(CurveSpec::parse("poly:0,1"), 0.0, 4),
                    std::invalid_argument);
}

TEST_CASE("gauge orbit check passes a well-behaved pair") {
    FlatInputR21 input;
    input.f = CurveSpec::parse("poly:0,0,0,1,1");
    const CurveSpec sigma = CurveSpec::parse("poly:0.2,1.1,0,0.1");
    const GaugeReport report = gauge_orbit_check(input, sigma, GridSpec{-1, 1, 101});
    CHECK(report.passed);
    CHECK(report.inversion_checked);
    CHECK(report.max_residual_rel < 1e-10);
    CHECK(report.max_tau_error < 1e-9);
    CHECK(report.max_flat_error < 1e-9);
}

TEST_CASE("gauge orbit check declines orientation-ambiguous inversions") {
    // Non-constant extras with a decreasing sigma: the recovered speed
    // radical has the wrong sign convention, so inversion is not judged.
    FlatInputR21 input;
    input.f = CurveSpec::parse("poly:0,0,0,1,1");
    input.extras = {CurveSpec::parse("poly:0,1.5")};
    const CurveSpec decreasing = CurveSpec::parse("poly:0,-1");
    const GaugeReport report = gauge_orbit_check(input, decreasing, GridSpec{-1, 1, 51});
    CHECK_FALSE(report.inversion_checked);
    CHECK(report.passed);  // residual check still holds
    CHECK(report.max_residual_rel < 1e-10);
}

TEST_CASE("gauge orbit check wants the bare input") {
    FlatInputR21 input;
    input.f = CurveSpec::parse("poly:0,0,0,1");
    input.sigma = CurveSpec::parse("poly:0,2");
    CHECK_THROWS_AS(
        gauge_orbit_check(input, CurveSpec::parse("poly:0,1"), GridSpec{0, 1, 11}),
        std::invalid_argument);
}
