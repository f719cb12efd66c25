#pragma once

#include <optional>
#include <vector>

#include "nullflat/rat_poly.hpp"

namespace nullflat::exact {

/// Exact polynomial curve: one RatPoly per component, in a pseudo-Euclidean
/// space whose first `negative_axes` axes carry weight -1.
struct PolyCurve {
    std::vector<RatPoly> components;
    int negative_axes = 2;

    int dim() const { return static_cast<int>(components.size()); }
};

/// The exact engine mirrors the floating-point maps on polynomial inputs,
/// with rational arithmetic throughout: identities asserted against it hold
/// with zero tolerance. It shares no code with the numeric path.

/// x = u f'' - u' f' + u'' f over u = (1 - t^2, 2t, 1 + t^2). Null for
/// every f.
PolyCurve poly_expand_r21(const RatPoly& f);

/// x = (u f'' - u' f' + u'' f) + (delta/2) u with constant delta: a curve of
/// prescribed constant speed, (x', x') = -delta^2.
PolyCurve poly_expand_delta_const(const RatPoly& f, const Rational& delta);

/// R^{2,n} curve with affine extra components: the first three components
/// are the delta-form above with delta = sqrt(sum of squared slopes), the
/// rest are the extras themselves. The radicand must be a perfect square of
/// a rational (otherwise delta is not polynomial: std::invalid_argument).
/// Extras of degree >= 2 are rejected for the same reason.
PolyCurve poly_expand_r2n_linear_extras(const RatPoly& f,
                                        const std::vector<RatPoly>& extras);

/// x = u f' - u' f + v g' - v' g over u = (1, t, 1, -t), v = (-t, 1, t, 1)
/// in R^{2,2}. Null for every f, g.
PolyCurve poly_expand_r22(const RatPoly& f, const RatPoly& g);

/// The same construction with the primes dropped from the last two terms:
/// x = u f' + v g' - u f - v g. NOT null in general; kept as a negative
/// control. Its residual is 4 (F'G - F G') with F = f' - f, G = g' - g.
PolyCurve poly_expand_r22_literal(const RatPoly& f, const RatPoly& g);

/// Exact (x', x') as a polynomial.
RatPoly poly_null_residual(const PolyCurve& curve);

/// Residual polynomial of the literal (uncorrected) R^{2,2} map at f = t^2,
/// g = t^3: the witness that the corrected map is the right one. Equals
/// -4 t^4 + 16 t^3 - 24 t^2, nonzero.
RatPoly typo_witness();

/// Exact inversion of a generated curve, as rational functions in t.
struct PolyInversion {
    RatPoly tau_num, tau_den;   // recovered parameter = tau_num / tau_den
    RatPoly flat_raw;           // the position-form flat output, before normalization
    RatPoly flat_normalized;    // flat_raw with the factor-2 normalization applied
    std::optional<RatPoly> g;   // second flat output (r22 only), exact
};

/// Inverts poly_expand_r21(f): tau_num/tau_den = t identically, flat_raw is
/// exactly 2 f (the position form doubles the flat output), flat_normalized
/// is exactly f. Throws DegeneracyError (IdenticallyDegenerate) when the
/// inversion divisor 2 f''' is the zero polynomial (deg f <= 2).
PolyInversion poly_invert_roundtrip_r21(const RatPoly& f);

/// Inverts poly_expand_r22(f, g): the two quotient forms of the parameter
/// agree and equal t wherever defined, and the flat outputs return exactly
/// f and g (no factor correction here, so flat_raw == flat_normalized).
/// The reported tau_num/tau_den is the quotient whose divisor (2 f'' or
/// 2 g'') is not the zero polynomial; when both vanish identically (f and g
/// both affine) throws DegeneracyError (IdenticallyDegenerate).
PolyInversion poly_invert_roundtrip_r22(const RatPoly& f, const RatPoly& g);

}  // namespace nullflat::exact
