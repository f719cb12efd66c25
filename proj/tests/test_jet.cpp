#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "nullflat/curve_spec.hpp"
#include "nullflat/errors.hpp"
#include "nullflat/jet.hpp"

using namespace nullflat;

TEST_CASE("constant and variable jets") {
    const Jet c = Jet::constant(3.5, 4);
    CHECK(c.order() == 4);
    CHECK(c.value() == 3.5);
    for (int k = 1; k <= 4; ++k) CHECK(c[k] == 0.0);

    const Jet t = Jet::variable(-2.0, 3);
    CHECK(t.value() == -2.0);
    CHECK(t[1] == 1.0);
    CHECK(t[2] == 0.0);
    CHECK(t[3] == 0.0);
}

TEST_CASE("Leibniz product matches the closed-form monomial") {
    // t^2 * t^3 = t^5; derivatives at tau are 5!/(5-k)! tau^(5-k).
    const double tau = 2.0;
    const Jet t2 = CurveSpec::polynomial({0, 0, 1}).eval_jet(tau, 5);
    const Jet t3 = CurveSpec::polynomial({0, 0, 0, 1}).eval_jet(tau, 5);
    const Jet p = t2 * t3;
    double fall = 1.0;
    for (int k = 0; k <= 5; ++k) {
        const double expected = fall * std::pow(tau, 5 - k);
        CHECK(p[k] == doctest::Approx(expected).epsilon(1e-13));
        fall *= 5 - k;
    }
}

TEST_CASE("sum requires equal orders") {
    CHECK_THROWS_AS(Jet::constant(1, 2) + Jet::constant(1, 3), std::invalid_argument);
}

TEST_CASE("composition of polynomial jets") {
    // f(x) = x^2, g(t) = 2t + 1: (f o g)(t) = 4t^2 + 4t + 1.
    const double tau = 0.7;
    const Jet g = CurveSpec::polynomial({1, 2}).eval_jet(tau, 4);
    const Jet f_at_g = CurveSpec::polynomial({0, 0, 1}).eval_jet(g.value(), 4);
    const Jet composed = compose(f_at_g, g);
    const Jet direct = CurveSpec::polynomial({1, 4, 4}).eval_jet(tau, 4);
    for (int k = 0; k <= 4; ++k)
        CHECK(composed[k] == doctest::Approx(direct[k]).epsilon(1e-13));
}

TEST_CASE("composition with the identity jet is the identity") {
    const Jet outer = CurveSpec::parse("sin:1,2").eval_jet(0.3, 5);
    const Jet id = Jet::variable(0.3, 5);
    const Jet composed = compose(outer, id);
    for (int k = 0; k <= 5; ++k) CHECK(composed[k] == outer[k]);
}

TEST_CASE("jet square root inverts squaring") {
    // sqrt of the jet of (2 + t)^2 is the jet of 2 + t.
    const double tau = 0.4;
    const Jet lin = CurveSpec::polynomial({2, 1}).eval_jet(tau, 5);
    const Jet root = sqrt(lin * lin);
    for (int k = 0; k <= 5; ++k)
        CHECK(root[k] == doctest::Approx(lin[k]).epsilon(1e-13));
}

TEST_CASE("square root needs a positive value") {
    CHECK_THROWS_AS(sqrt(Jet::constant(-1.0, 3)), DegeneracyError);
    CHECK_THROWS_AS(sqrt(Jet::constant(0.0, 3)), DegeneracyError);
    try {
        sqrt(Jet::constant(-1.0, 3));
    } catch (const DegeneracyError& e) {
        CHECK(e.kind() == Degeneracy::NonPositiveRadicand);
    }
}

TEST_CASE("shift_derivative drops the leading entry") {
    const Jet j(std::vector<double>{1, 2, 3, 4});
    const Jet d = shift_derivative(j);
    CHECK(d.order() == 2);
    CHECK(d[0] == 2.0);
    CHECK(d[1] == 3.0);
    CHECK(d[2] == 4.0);
    CHECK_THROWS_AS(shift_derivative(Jet::constant(1, 0)), std::invalid_argument);
}

TEST_CASE("truncation keeps the low-order entries") {
    const Jet j(std::vector<double>{1, 2, 3, 4});
    const Jet t = j.truncated(1);
    CHECK(t.order() == 1);
    CHECK(t[0] == 1.0);
    CHECK(t[1] == 2.0);
}

TEST_CASE("curve spec grammar round-trips through to_string") {
    const CurveSpec spec = CurveSpec::parse("poly:1/2,0,-3+sin:1,2+exp:0.5,-1");
    const CurveSpec reparsed = CurveSpec::parse(spec.to_string());
    for (double tau : {-1.3, 0.0, 0.8})
        CHECK(spec.eval(tau) == reparsed.eval(tau));
}

TEST_CASE("curve spec rejects malformed text") {
    CHECK_THROWS_AS(CurveSpec::parse("poly:"), std::invalid_argument);
    CHECK_THROWS_AS(CurveSpec::parse("spline:1,2"), std::invalid_argument);
    CHECK_THROWS_AS(CurveSpec::parse("sin:1"), std::invalid_argument);
    CHECK_THROWS_AS(CurveSpec::parse("poly:1,,2"), std::invalid_argument);
}

TEST_CASE("exponent-notation coefficients survive the term splitter") {
    const CurveSpec spec = CurveSpec::parse("poly:1e+06,1");
    CHECK(spec.eval(1.0) == doctest::Approx(1000001.0));
}
