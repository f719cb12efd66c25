#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "nullflat/curve_spec.hpp"
#include "nullflat/jet.hpp"
#include "nullflat/pseudo.hpp"

namespace nullflat {

/// Divisor magnitude below which inversion reports DegenerateGerm instead of
/// returning amplified noise. Overridable per call; the CLI also honors the
/// NULLFLAT_EPS_DEN environment variable.
inline constexpr double kDefaultEpsDen = 1e-8;

/// Floor on |sigma'(tau)|: below it the reparametrization is treated as
/// non-monotone at tau.
inline constexpr double kSigmaMonotoneFloor = 1e-8;

/// Flat data for curves in R^{2,n}, n >= 1: one scalar function f, n - 1
/// extra coordinate functions (n >= 2 only), and an optional
/// reparametrization sigma applied to the whole curve.
struct FlatInputR21 {
    CurveSpec f;
    std::optional<CurveSpec> sigma;
    std::vector<CurveSpec> extras;  // size n - 1

    int n() const { return static_cast<int>(extras.size()) + 1; }
};

/// Flat data for curves in R^{2,2} under the two-line map: two scalar
/// functions and an optional reparametrization.
struct FlatInputR22 {
    CurveSpec f;
    CurveSpec g;
    std::optional<CurveSpec> sigma;
};

using FlatInput = std::variant<FlatInputR21, FlatInputR22>;

/// Germ of x = u f'' - u' f' + u'' f at s, from the jet of f at s.
/// Output order = fjet.order() - 2 (requires order >= 2; >= 3 to carry
/// velocities). Null for every f: x' = u f'''.
VecJet wh_map_r21(const Jet& fjet, double s);

/// Germ of x = (u f'' - u' f' + u'' f) + (delta/2) u at s: a space-like
/// curve of prescribed speed, (x', x') = -delta(s)^2. Requires
/// fjet.order() >= 3 and deltajet.order() >= 1; output order is
/// min(fjet.order() - 2, deltajet.order()). A zero delta jet reduces to
/// wh_map_r21 exactly.
VecJet delta_map(const Jet& fjet, const Jet& deltajet, double s);

/// Germ of the R^{2,n} null curve built from `input` at tau, of the given
/// order (>= 1): first three components are the delta form with
/// delta = sqrt(sum of squared extra velocities), remaining components are
/// the extras. When all extras are identically constant the radical
/// branch is delta == 0 and the first block is the plain map. Errors:
/// DegenerateDelta when the radicand vanishes at tau with non-constant
/// extras; SigmaNotMonotone when |sigma'(tau)| < 1e-8.
VecJet r2n_map(const FlatInputR21& input, double tau, int order);

/// Germ of the R^{2,2} null curve x = u f' - u' f + v g' - v' g at tau,
/// of the given order (>= 1). Errors: SigmaNotMonotone as above.
VecJet r22_map(const FlatInputR22& input, double tau, int order);

/// Inversion output. denominators lists the divisor magnitudes that were
/// examined, in formula order (one for the R^{2,1} form, two for R^{2,2}).
struct InversionResult {
    double tau_hat = 0.0;
    double f_hat = 0.0;
    std::optional<double> g_hat;
    std::vector<double> denominators;
};

/// Speed radical of a germ in R^{2,n}, n >= 2, from its extra components'
/// velocities (the nonnegative root). Returns 0 for 3-dimensional germs.
double germ_delta(const VecJet& germ);

/// Recovers (tau_hat, f_hat) from a position/velocity germ in R^{2,1} or
/// R^{2,n}: tau_hat = (x2' - delta) / (x1' + x3'), and the position form
/// of the flat output halved (the raw formula returns twice the flat
/// output). `delta` is the germ's speed radical: 0 for plain null curves in
/// R^{2,1}, germ_delta(germ) for higher n. Requires germ order >= 1.
/// Throws DegeneracyError (DegenerateGerm) when |x1' + x3'| < eps_den.
InversionResult invert_r21(const VecJet& germ, double delta,
                           double eps_den = kDefaultEpsDen);

/// Recovers (tau_hat, f_hat, g_hat) from a germ in R^{2,2}. The parameter
/// has two quotient forms, (x2' - x4')/(x1' + x3') and
/// (x3' - x1')/(x2' + x4'); they agree on germs of generated curves, and
/// the one with the larger divisor magnitude is used. Throws
/// DegeneracyError (DegenerateGerm) when both divisors are below eps_den.
InversionResult invert_r22(const VecJet& germ,
                           double eps_den = kDefaultEpsDen);

}  // namespace nullflat
