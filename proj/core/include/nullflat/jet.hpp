#pragma once

#include <vector>

namespace nullflat {

/// Jet order used by curve generation when the caller does not override it.
inline constexpr int kDefaultJetOrder = 5;

/// Truncated jet of a scalar function at a point: derivs()[i] holds the raw
/// value of the i-th derivative there, not the Taylor coefficient. A jet of
/// order K stores K+1 entries. Value semantics throughout; all operations
/// return new jets.
class Jet {
public:
    /// Order-0 jet of the zero function.
    Jet() : derivs_(1, 0.0) {}

    /// Takes ownership of the derivative values; must be nonempty.
    explicit Jet(std::vector<double> derivs);

    /// Jet of the constant function c.
    static Jet constant(double c, int order);

    /// Jet of the identity function tau -> tau at the point `value`.
    static Jet variable(double value, int order);

    int order() const { return static_cast<int>(derivs_.size()) - 1; }
    double value() const { return derivs_[0]; }
    double operator[](int i) const { return derivs_[i]; }
    double& operator[](int i) { return derivs_[i]; }
    const std::vector<double>& derivs() const { return derivs_; }

    /// Copy truncated to a lower (or equal) order.
    Jet truncated(int order) const;

    bool operator==(const Jet&) const = default;

private:
    std::vector<double> derivs_;
};

/// Pointwise sums; both operands must have equal orders.
Jet operator+(const Jet& a, const Jet& b);
Jet operator-(const Jet& a, const Jet& b);
Jet operator-(const Jet& a);
Jet operator*(const Jet& a, double s);
Jet operator*(double s, const Jet& a);

/// Leibniz product: c^(k) = sum_i C(k,i) a^(i) b^(k-i). Equal orders required.
Jet operator*(const Jet& a, const Jet& b);

/// Jet of the composite f(g(.)): `outer` is the jet of f at the point
/// g(tau0), `inner` the jet of g at tau0; the result is the jet of f o g at
/// tau0. That alignment of expansion points is the caller's contract; it
/// cannot be checked here. Equal orders required. Composing with the
/// identity jet reproduces `outer` exactly.
Jet compose(const Jet& outer, const Jet& inner);

/// Jet of sqrt(f). Requires f.value() > 0; throws DegeneracyError
/// (NonPositiveRadicand) otherwise: the square root has no jet there.
Jet sqrt(const Jet& radicand);

/// Jet of f' at the same point: drops the leading entry, order shrinks by
/// one. Requires order >= 1.
Jet shift_derivative(const Jet& a);

}  // namespace nullflat
