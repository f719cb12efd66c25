#pragma once

#include <utility>
#include <vector>

#include "nullflat/jet.hpp"

namespace nullflat {

/// Pseudo-Euclidean signature with the negative axes first: axis i carries
/// inner-product weight -1 for i < p and +1 for i >= p. The spaces used
/// here all have p = 2, q = n, dimension n + 2.
struct Signature {
    int p = 2;
    int q = 1;

    int dim() const { return p + q; }
    double weight(int axis) const { return axis < p ? -1.0 : 1.0; }
    bool operator==(const Signature&) const = default;
};

inline Signature sig_r2n(int n) { return Signature{2, n}; }

/// Point (or tangent vector) with an attached signature.
struct PseudoVec {
    std::vector<double> components;
    Signature signature;

    int dim() const { return static_cast<int>(components.size()); }
};

/// Curve germ: one jet per component, all of the same order, with the
/// signature of the ambient space.
struct VecJet {
    std::vector<Jet> components;
    Signature signature;

    int dim() const { return static_cast<int>(components.size()); }
    int order() const;

    PseudoVec value() const;
    PseudoVec derivative(int k) const;
};

/// Indefinite inner product sum_i weight(i) a_i b_i. Dimensions and
/// signatures must agree (std::invalid_argument otherwise).
double inner(const PseudoVec& a, const PseudoVec& b);

/// Jet of tau -> (a(tau), b(tau)). Equal orders, dims, signatures required.
Jet inner(const VecJet& a, const VecJet& b);

/// Jet of (x', x') for the germ x; order drops by one (differentiation) and
/// requires germ order >= 1. The value entry is the pointwise null residual.
Jet null_residual(const VecJet& germ);

/// Germ of the reference null curve u(tau) = (1 - tau^2, 2 tau, 1 + tau^2)
/// in R^{2,1}: (u,u) = 0, (u,u') = 0, (u',u') = -4, u''' = 0.
VecJet basis_u_r21(double tau, int order);

/// Germs of the spanning pair in R^{2,2}: u = (1, tau, 1, -tau) and
/// v = (-tau, 1, tau, 1). All products among u, v, u', v' vanish except
/// (u', v) = -2 and (u, v') = +2.
std::pair<VecJet, VecJet> basis_uv_r22(double tau, int order);

}  // namespace nullflat
