#include "nullflat/flat_maps.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "nullflat/errors.hpp"

namespace nullflat {

namespace {

// Jet of sigma at tau, or the identity jet when no reparametrization is
// attached. Enforces the monotonicity floor on |sigma'|.
Jet sigma_jet_at(const std::optional<CurveSpec>& sigma, double tau, int order) {
    if (!sigma) return Jet::variable(tau, order);
    Jet sj = sigma->eval_jet(tau, order);
    if (std::abs(sj[1]) < kSigmaMonotoneFloor) {
        throw DegeneracyError(Degeneracy::SigmaNotMonotone,
                              "|sigma'| = " + std::to_string(std::abs(sj[1])) +
                                  " is below the monotonicity floor",
                              tau);
    }
    return sj;
}

VecJet compose_all(const VecJet& germ, const Jet& inner) {
    VecJet out;
    out.signature = germ.signature;
    out.components.reserve(germ.components.size());
    for (const Jet& c : germ.components) out.components.push_back(compose(c, inner));
    return out;
}

void require_dim_at_least(const VecJet& germ, int dim, const char* who) {
    if (germ.dim() < dim) {
        throw std::invalid_argument(std::string(who) + ": germ dimension " +
                                    std::to_string(germ.dim()) + " is below " +
                                    std::to_string(dim));
    }
}

}  // namespace

VecJet wh_map_r21(const Jet& fjet, double s) {
    if (fjet.order() < 2) throw std::invalid_argument("wh_map_r21: f jet order must be >= 2");
    const int out_order = fjet.order() - 2;
    const VecJet ub = basis_u_r21(s, out_order + 2);
    const Jet f0 = fjet.truncated(out_order);
    const Jet f1 = shift_derivative(fjet).truncated(out_order);
    const Jet f2 = shift_derivative(shift_derivative(fjet));
    VecJet out;
    out.signature = sig_r2n(1);
    for (int i = 0; i < 3; ++i) {
        const Jet u0 = ub.components[i].truncated(out_order);
        const Jet u1 = shift_derivative(ub.components[i]).truncated(out_order);
        const Jet u2 = shift_derivative(shift_derivative(ub.components[i]));
        out.components.push_back(u0 * f2 - u1 * f1 + u2 * f0);
    }
    return out;
}

VecJet delta_map(const Jet& fjet, const Jet& deltajet, double s) {
    if (fjet.order() < 3) throw std::invalid_argument("delta_map: f jet order must be >= 3");
    if (deltajet.order() < 1) {
        throw std::invalid_argument("delta_map: delta jet order must be >= 1");
    }
    const int out_order = std::min(fjet.order() - 2, deltajet.order());
    VecJet out = wh_map_r21(fjet, s);
    for (Jet& c : out.components) c = c.truncated(out_order);
    const VecJet ub = basis_u_r21(s, out_order);
    const Jet dj = deltajet.truncated(out_order);
    for (int i = 0; i < 3; ++i) {
        out.components[i] = out.components[i] + (ub.components[i] * dj) * 0.5;
    }
    return out;
}

VecJet r2n_map(const FlatInputR21& input, double tau, int order) {
    if (order < 1) throw std::invalid_argument("r2n_map: order must be >= 1");
    const Jet sj = sigma_jet_at(input.sigma, tau, order);
    const double s0 = sj.value();

    bool extras_constant = true;
    for (const CurveSpec& w : input.extras) extras_constant &= w.is_constant();

    VecJet germ;
    germ.signature = sig_r2n(input.n());
    const Jet fjet = input.f.eval_jet(s0, order + 2);
    if (extras_constant) {
        germ.components = wh_map_r21(fjet, s0).components;
    } else {
        Jet radicand = Jet::constant(0.0, order);
        for (const CurveSpec& w : input.extras) {
            const Jet wd = shift_derivative(w.eval_jet(s0, order + 1));
            radicand = radicand + wd * wd;
        }
        if (radicand.value() <= 0.0) {
            throw DegeneracyError(Degeneracy::DegenerateDelta,
                                  "speed radical vanishes: its radicand is " +
                                      std::to_string(radicand.value()),
                                  tau);
        }
        germ.components = delta_map(fjet, sqrt(radicand), s0).components;
    }
    for (const CurveSpec& w : input.extras) {
        germ.components.push_back(w.eval_jet(s0, order));
    }
    if (input.sigma) return compose_all(germ, sj);
    return germ;
}

VecJet r22_map(const FlatInputR22& input, double tau, int order) {
    if (order < 1) throw std::invalid_argument("r22_map: order must be >= 1");
    const Jet sj = sigma_jet_at(input.sigma, tau, order);
    const double s0 = sj.value();

    const auto [ub, vb] = basis_uv_r22(s0, order + 1);
    const Jet fj = input.f.eval_jet(s0, order + 1);
    const Jet gj = input.g.eval_jet(s0, order + 1);
    const Jet f0 = fj.truncated(order);
    const Jet f1 = shift_derivative(fj);
    const Jet g0 = gj.truncated(order);
    const Jet g1 = shift_derivative(gj);
    VecJet germ;
    germ.signature = sig_r2n(2);
    for (int i = 0; i < 4; ++i) {
        const Jet u0 = ub.components[i].truncated(order);
        const Jet u1 = shift_derivative(ub.components[i]);
        const Jet v0 = vb.components[i].truncated(order);
        const Jet v1 = shift_derivative(vb.components[i]);
        germ.components.push_back(u0 * f1 - u1 * f0 + v0 * g1 - v1 * g0);
    }
    if (input.sigma) return compose_all(germ, sj);
    return germ;
}

double germ_delta(const VecJet& germ) {
    require_dim_at_least(germ, 3, "germ_delta");
    if (germ.dim() == 3) return 0.0;
    if (germ.order() < 1) throw std::invalid_argument("germ_delta: germ order must be >= 1");
    double radicand = 0.0;
    for (int i = 3; i < germ.dim(); ++i) {
        const double wd = germ.components[i][1];
        radicand += wd * wd;
    }
    return std::sqrt(radicand);
}

InversionResult invert_r21(const VecJet& germ, double delta, double eps_den) {
    require_dim_at_least(germ, 3, "invert_r21");
    if (germ.order() < 1) throw std::invalid_argument("invert_r21: germ order must be >= 1");
    const double x1 = germ.components[0][0], dx1 = germ.components[0][1];
    const double x2 = germ.components[1][0], dx2 = germ.components[1][1];
    const double x3 = germ.components[2][0], dx3 = germ.components[2][1];
    const double den = dx1 + dx3;
    InversionResult result;
    result.denominators = {std::abs(den)};
    if (std::abs(den) < eps_den) {
        throw DegeneracyError(Degeneracy::DegenerateGerm,
                              "inversion divisor |x1' + x3'| = " + std::to_string(std::abs(den)) +
                                  " is below eps_den");
    }
    result.tau_hat = (dx2 - delta) / den;
    const double t = result.tau_hat;
    // Position form returns twice the flat output; halve it.
    result.f_hat = 0.5 * (0.5 * t * t * (x3 + x1) - t * x2 + 0.5 * (x3 - x1));
    return result;
}

InversionResult invert_r22(const VecJet& germ, double eps_den) {
    if (germ.dim() != 4) throw std::invalid_argument("invert_r22: germ dimension must be 4");
    if (germ.order() < 1) throw std::invalid_argument("invert_r22: germ order must be >= 1");
    const double x1 = germ.components[0][0], dx1 = germ.components[0][1];
    const double x2 = germ.components[1][0], dx2 = germ.components[1][1];
    const double x3 = germ.components[2][0], dx3 = germ.components[2][1];
    const double x4 = germ.components[3][0], dx4 = germ.components[3][1];
    const double den_f = dx1 + dx3;
    const double den_g = dx2 + dx4;
    InversionResult result;
    result.denominators = {std::abs(den_f), std::abs(den_g)};
    if (std::abs(den_f) < eps_den && std::abs(den_g) < eps_den) {
        throw DegeneracyError(Degeneracy::DegenerateGerm,
                              "both inversion divisors are below eps_den: |x1' + x3'| = " +
                                  std::to_string(std::abs(den_f)) + ", |x2' + x4'| = " +
                                  std::to_string(std::abs(den_g)));
    }
    // The two quotient forms agree on generated curves; take the better
    // conditioned one.
    const double t = std::abs(den_f) >= std::abs(den_g) ? (dx2 - dx4) / den_f
                                                        : (dx3 - dx1) / den_g;
    result.tau_hat = t;
    result.f_hat = 0.5 * t * (x3 + x1) - 0.5 * (x2 - x4);
    result.g_hat = 0.5 * t * (x2 + x4) - 0.5 * (x3 - x1);
    return result;
}

}  // namespace nullflat
