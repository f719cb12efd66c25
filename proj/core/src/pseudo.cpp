#include "nullflat/pseudo.hpp"

#include <stdexcept>

namespace nullflat {

namespace {

void require_compatible(const VecJet& a, const VecJet& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("inner: dimension mismatch");
    if (!(a.signature == b.signature)) throw std::invalid_argument("inner: signature mismatch");
    if (a.order() != b.order()) throw std::invalid_argument("inner: jet order mismatch");
}

}  // namespace

int VecJet::order() const {
    if (components.empty()) throw std::invalid_argument("VecJet: no components");
    const int k = components[0].order();
    for (const Jet& c : components) {
        if (c.order() != k) throw std::invalid_argument("VecJet: mixed component orders");
    }
    return k;
}

PseudoVec VecJet::value() const { return derivative(0); }

PseudoVec VecJet::derivative(int k) const {
    if (k < 0 || k > order()) throw std::invalid_argument("VecJet::derivative: order out of range");
    PseudoVec v;
    v.signature = signature;
    v.components.reserve(components.size());
    for (const Jet& c : components) v.components.push_back(c[k]);
    return v;
}

double inner(const PseudoVec& a, const PseudoVec& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("inner: dimension mismatch");
    if (!(a.signature == b.signature)) throw std::invalid_argument("inner: signature mismatch");
    if (a.dim() != a.signature.dim()) throw std::invalid_argument("inner: signature/dim mismatch");
    double acc = 0.0;
    for (int i = 0; i < a.dim(); ++i) {
        acc += a.signature.weight(i) * a.components[i] * b.components[i];
    }
    return acc;
}

Jet inner(const VecJet& a, const VecJet& b) {
    require_compatible(a, b);
    if (a.dim() != a.signature.dim()) throw std::invalid_argument("inner: signature/dim mismatch");
    Jet acc = Jet::constant(0.0, a.order());
    for (int i = 0; i < a.dim(); ++i) {
        acc = acc + (a.components[i] * b.components[i]) * a.signature.weight(i);
    }
    return acc;
}

Jet null_residual(const VecJet& germ) {
    if (germ.order() < 1) throw std::invalid_argument("null_residual: germ order must be >= 1");
    VecJet velocity;
    velocity.signature = germ.signature;
    velocity.components.reserve(germ.components.size());
    for (const Jet& c : germ.components) velocity.components.push_back(shift_derivative(c));
    return inner(velocity, velocity);
}

VecJet basis_u_r21(double tau, int order) {
    if (order < 0) throw std::invalid_argument("basis_u_r21: negative order");
    Jet c0 = Jet::constant(0.0, order);  // 1 - tau^2
    Jet c1 = Jet::constant(0.0, order);  // 2 tau
    Jet c2 = Jet::constant(0.0, order);  // 1 + tau^2
    c0[0] = 1.0 - tau * tau;
    c1[0] = 2.0 * tau;
    c2[0] = 1.0 + tau * tau;
    if (order >= 1) {
        c0[1] = -2.0 * tau;
        c1[1] = 2.0;
        c2[1] = 2.0 * tau;
    }
    if (order >= 2) {
        c0[2] = -2.0;
        c2[2] = 2.0;
    }
    return VecJet{{c0, c1, c2}, sig_r2n(1)};
}

std::pair<VecJet, VecJet> basis_uv_r22(double tau, int order) {
    if (order < 0) throw std::invalid_argument("basis_uv_r22: negative order");
    const Jet one = Jet::constant(1.0, order);
    const Jet t = Jet::variable(tau, order);
    VecJet u{{one, t, one, -t}, sig_r2n(2)};
    VecJet v{{-t, one, t, one}, sig_r2n(2)};
    return {u, v};
}

}  // namespace nullflat
