#include "nullflat/oracle.hpp"

#include <stdexcept>

#include "nullflat/errors.hpp"

namespace nullflat::exact {

namespace {

// u(t) = (1 - t^2, 2t, 1 + t^2), the null generator in R^{2,1}.
std::vector<RatPoly> basis_u() {
    return {RatPoly({Rational(1), Rational(0), Rational(-1)}),
            RatPoly({Rational(0), Rational(2)}),
            RatPoly({Rational(1), Rational(0), Rational(1)})};
}

// u = (1, t, 1, -t), v = (-t, 1, t, 1), the spanning pair in R^{2,2}.
std::vector<RatPoly> basis_u22() {
    return {RatPoly::constant(Rational(1)), RatPoly::variable(),
            RatPoly::constant(Rational(1)), -RatPoly::variable()};
}

std::vector<RatPoly> basis_v22() {
    return {-RatPoly::variable(), RatPoly::constant(Rational(1)),
            RatPoly::variable(), RatPoly::constant(Rational(1))};
}

std::vector<RatPoly> derivative_all(const std::vector<RatPoly>& ps) {
    std::vector<RatPoly> out;
    out.reserve(ps.size());
    for (const RatPoly& p : ps) out.push_back(p.derivative());
    return out;
}

}  // namespace

PolyCurve poly_expand_r21(const RatPoly& f) {
    const std::vector<RatPoly> u = basis_u();
    const std::vector<RatPoly> du = derivative_all(u);
    const std::vector<RatPoly> ddu = derivative_all(du);
    const RatPoly df = f.derivative();
    const RatPoly ddf = df.derivative();
    PolyCurve curve;
    curve.negative_axes = 2;
    for (int i = 0; i < 3; ++i) {
        curve.components.push_back(u[i] * ddf - du[i] * df + ddu[i] * f);
    }
    return curve;
}

PolyCurve poly_expand_delta_const(const RatPoly& f, const Rational& delta) {
    PolyCurve curve = poly_expand_r21(f);
    const std::vector<RatPoly> u = basis_u();
    const Rational half_delta = delta / 2;
    for (int i = 0; i < 3; ++i) {
        curve.components[i] = curve.components[i] + u[i] * half_delta;
    }
    return curve;
}

PolyCurve poly_expand_r2n_linear_extras(const RatPoly& f,
                                        const std::vector<RatPoly>& extras) {
    Rational radicand(0);
    for (const RatPoly& w : extras) {
        if (w.degree() > 1) {
            throw std::invalid_argument(
                "poly_expand_r2n_linear_extras: extra component of degree > 1 "
                "has a non-constant speed contribution");
        }
        const Rational slope = w.coeff(1);
        radicand += slope * slope;
    }
    const Rational delta = sqrt_exact(radicand);
    PolyCurve curve = poly_expand_delta_const(f, delta);
    for (const RatPoly& w : extras) curve.components.push_back(w);
    return curve;
}

PolyCurve poly_expand_r22(const RatPoly& f, const RatPoly& g) {
    const std::vector<RatPoly> u = basis_u22();
    const std::vector<RatPoly> v = basis_v22();
    const std::vector<RatPoly> du = derivative_all(u);
    const std::vector<RatPoly> dv = derivative_all(v);
    const RatPoly df = f.derivative();
    const RatPoly dg = g.derivative();
    PolyCurve curve;
    curve.negative_axes = 2;
    for (int i = 0; i < 4; ++i) {
        curve.components.push_back(u[i] * df - du[i] * f + v[i] * dg - dv[i] * g);
    }
    return curve;
}

PolyCurve poly_expand_r22_literal(const RatPoly& f, const RatPoly& g) {
    const std::vector<RatPoly> u = basis_u22();
    const std::vector<RatPoly> v = basis_v22();
    const RatPoly df = f.derivative();
    const RatPoly dg = g.derivative();
    PolyCurve curve;
    curve.negative_axes = 2;
    for (int i = 0; i < 4; ++i) {
        curve.components.push_back(u[i] * (df - f) + v[i] * (dg - g));
    }
    return curve;
}

RatPoly poly_null_residual(const PolyCurve& curve) {
    RatPoly acc;
    for (int i = 0; i < curve.dim(); ++i) {
        const RatPoly d = curve.components[i].derivative();
        const RatPoly sq = d * d;
        acc = i < curve.negative_axes ? acc - sq : acc + sq;
    }
    return acc;
}

RatPoly typo_witness() {
    const RatPoly f = RatPoly::monomial(Rational(1), 2);
    const RatPoly g = RatPoly::monomial(Rational(1), 3);
    return poly_null_residual(poly_expand_r22_literal(f, g));
}

PolyInversion poly_invert_roundtrip_r21(const RatPoly& f) {
    const PolyCurve curve = poly_expand_r21(f);
    const RatPoly& x1 = curve.components[0];
    const RatPoly& x2 = curve.components[1];
    const RatPoly& x3 = curve.components[2];
    const RatPoly dx1 = x1.derivative();
    const RatPoly dx2 = x2.derivative();
    const RatPoly dx3 = x3.derivative();

    // No extra components, so the speed radical vanishes and the parameter
    // quotient is x2' / (x1' + x3').
    const RatPoly num = dx2;
    const RatPoly den = dx1 + dx3;
    if (den.is_zero()) {
        throw DegeneracyError(Degeneracy::IdenticallyDegenerate,
                              "inversion divisor 2 f''' is the zero polynomial");
    }

    // Position-form flat output with tau substituted as num/den, cleared of
    // denominators: [N^2 (x3+x1) - 2 N D x2 + D^2 (x3-x1)] / (2 D^2).
    const RatPoly two_d2 = (den * den) * Rational(2);
    const RatPoly numerator =
        (num * num) * (x3 + x1) - (num * den * x2) * Rational(2) + (den * den) * (x3 - x1);
    PolyInversion inv;
    inv.tau_num = num;
    inv.tau_den = den;
    inv.flat_raw = divide_exact(numerator, two_d2);
    inv.flat_normalized = inv.flat_raw * Rational(1, 2);
    return inv;
}

PolyInversion poly_invert_roundtrip_r22(const RatPoly& f, const RatPoly& g) {
    const PolyCurve curve = poly_expand_r22(f, g);
    const RatPoly& x1 = curve.components[0];
    const RatPoly& x2 = curve.components[1];
    const RatPoly& x3 = curve.components[2];
    const RatPoly& x4 = curve.components[3];
    const RatPoly dx1 = x1.derivative();
    const RatPoly dx2 = x2.derivative();
    const RatPoly dx3 = x3.derivative();
    const RatPoly dx4 = x4.derivative();

    // Two quotient forms: (x2'-x4')/(x1'+x3') = t over divisor 2 f'' and
    // (x3'-x1')/(x2'+x4') = t over divisor 2 g''. Report the one whose
    // divisor is not identically zero.
    const RatPoly den_f = dx1 + dx3;
    const RatPoly den_g = dx2 + dx4;
    PolyInversion inv;
    if (!den_f.is_zero()) {
        inv.tau_num = dx2 - dx4;
        inv.tau_den = den_f;
    } else if (!den_g.is_zero()) {
        inv.tau_num = dx3 - dx1;
        inv.tau_den = den_g;
    } else {
        throw DegeneracyError(Degeneracy::IdenticallyDegenerate,
                              "both inversion divisors 2 f'' and 2 g'' are zero polynomials");
    }

    // f = [N (x3+x1) - D (x2-x4)] / (2 D), g = [N (x2+x4) - D (x3-x1)] / (2 D).
    const RatPoly two_d = inv.tau_den * Rational(2);
    inv.flat_raw = divide_exact(inv.tau_num * (x3 + x1) - inv.tau_den * (x2 - x4), two_d);
    inv.flat_normalized = inv.flat_raw;
    inv.g = divide_exact(inv.tau_num * (x2 + x4) - inv.tau_den * (x3 - x1), two_d);
    return inv;
}

}  // namespace nullflat::exact
