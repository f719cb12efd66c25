#include "nullflat/jet.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "nullflat/errors.hpp"

namespace nullflat {

namespace {

void require_same_order(const Jet& a, const Jet& b, const char* op) {
    if (a.order() != b.order()) {
        throw std::invalid_argument(std::string(op) + ": jet order mismatch (" +
                                    std::to_string(a.order()) + " vs " +
                                    std::to_string(b.order()) + ")");
    }
}

// Pascal's triangle row cache; exact in double well past any usable order.
double binomial(int n, int k) {
    static std::vector<std::vector<double>> rows = {{1.0}};
    while (static_cast<int>(rows.size()) <= n) {
        const auto& prev = rows.back();
        std::vector<double> row(prev.size() + 1, 1.0);
        for (size_t i = 1; i + 1 < row.size(); ++i) row[i] = prev[i - 1] + prev[i];
        rows.push_back(std::move(row));
    }
    return rows[n][k];
}

}  // namespace

Jet::Jet(std::vector<double> derivs) : derivs_(std::move(derivs)) {
    if (derivs_.empty()) throw std::invalid_argument("Jet: empty derivative list");
}

Jet Jet::constant(double c, int order) {
    if (order < 0) throw std::invalid_argument("Jet: negative order");
    std::vector<double> d(order + 1, 0.0);
    d[0] = c;
    return Jet(std::move(d));
}

Jet Jet::variable(double value, int order) {
    if (order < 0) throw std::invalid_argument("Jet: negative order");
    std::vector<double> d(order + 1, 0.0);
    d[0] = value;
    if (order >= 1) d[1] = 1.0;
    return Jet(std::move(d));
}

Jet Jet::truncated(int order) const {
    if (order < 0 || order > this->order()) {
        throw std::invalid_argument("Jet::truncated: bad order " + std::to_string(order));
    }
    return Jet(std::vector<double>(derivs_.begin(), derivs_.begin() + order + 1));
}

Jet operator+(const Jet& a, const Jet& b) {
    require_same_order(a, b, "jet add");
    std::vector<double> d(a.derivs());
    for (int i = 0; i <= b.order(); ++i) d[i] += b[i];
    return Jet(std::move(d));
}

Jet operator-(const Jet& a, const Jet& b) {
    require_same_order(a, b, "jet subtract");
    std::vector<double> d(a.derivs());
    for (int i = 0; i <= b.order(); ++i) d[i] -= b[i];
    return Jet(std::move(d));
}

Jet operator-(const Jet& a) { return a * -1.0; }

Jet operator*(const Jet& a, double s) {
    std::vector<double> d(a.derivs());
    for (double& v : d) v *= s;
    return Jet(std::move(d));
}

Jet operator*(double s, const Jet& a) { return a * s; }

Jet operator*(const Jet& a, const Jet& b) {
    require_same_order(a, b, "jet multiply");
    const int order = a.order();
    std::vector<double> d(order + 1, 0.0);
    for (int k = 0; k <= order; ++k) {
        double acc = 0.0;
        for (int i = 0; i <= k; ++i) acc += binomial(k, i) * a[i] * b[k - i];
        d[k] = acc;
    }
    return Jet(std::move(d));
}

Jet compose(const Jet& outer, const Jet& inner) {
    require_same_order(outer, inner, "jet compose");
    const int order = outer.order();
    if (order == 0) return outer;
    // (f o g)' = (f' o g) * g', applied recursively one order down. The
    // multiplicative identity jet passes through exactly, so composing with
    // the identity is lossless.
    const Jet derivative =
        compose(shift_derivative(outer), inner.truncated(order - 1)) * shift_derivative(inner);
    std::vector<double> d(order + 1);
    d[0] = outer.value();
    for (int i = 0; i < order; ++i) d[i + 1] = derivative[i];
    return Jet(std::move(d));
}

Jet sqrt(const Jet& radicand) {
    if (!(radicand.value() > 0.0)) {
        throw DegeneracyError(Degeneracy::NonPositiveRadicand,
                              "jet square root needs a positive value, got " +
                                  std::to_string(radicand.value()));
    }
    const int order = radicand.order();
    std::vector<double> r(order + 1, 0.0);
    r[0] = std::sqrt(radicand.value());
    // From a = r * r: a^(k) = 2 r r^(k) + sum_{0<i<k} C(k,i) r^(i) r^(k-i).
    for (int k = 1; k <= order; ++k) {
        double acc = radicand[k];
        for (int i = 1; i < k; ++i) acc -= binomial(k, i) * r[i] * r[k - i];
        r[k] = acc / (2.0 * r[0]);
    }
    return Jet(std::move(r));
}

Jet shift_derivative(const Jet& a) {
    if (a.order() < 1) {
        throw std::invalid_argument("shift_derivative: order-0 jet has no derivative entry");
    }
    return Jet(std::vector<double>(a.derivs().begin() + 1, a.derivs().end()));
}

}  // namespace nullflat
