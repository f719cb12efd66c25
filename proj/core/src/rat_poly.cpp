#include "nullflat/rat_poly.hpp"

#include <stdexcept>
#include <utility>

namespace nullflat::exact {

namespace {

void trim_trailing_zeros(std::vector<Rational>& coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

}  // namespace

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim_trailing_zeros(coeffs_);
}

RatPoly RatPoly::constant(const Rational& c) { return RatPoly({c}); }

RatPoly RatPoly::monomial(const Rational& c, int degree) {
    if (degree < 0) throw std::invalid_argument("RatPoly::monomial: negative degree");
    std::vector<Rational> coeffs(static_cast<size_t>(degree) + 1, Rational(0));
    coeffs.back() = c;
    return RatPoly(std::move(coeffs));
}

RatPoly RatPoly::variable() { return monomial(Rational(1), 1); }

Rational RatPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[i];
}

Rational RatPoly::leading_coeff() const {
    if (is_zero()) return Rational(0);
    return coeffs_.back();
}

RatPoly RatPoly::derivative() const {
    if (coeffs_.size() <= 1) return RatPoly();
    std::vector<Rational> out(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = Rational(i) * coeffs_[i];
    return RatPoly(std::move(out));
}

Rational RatPoly::evaluate(const Rational& tau) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * tau + *it;
    return acc;
}

std::string RatPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        const bool leading = out.empty();
        const Rational mag = c < 0 ? Rational(-c) : c;
        if (leading) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        const bool unit = mag == 1 && i > 0;
        if (!unit) out += mag.get_str();
        if (i > 0) {
            if (!unit) out += "*";
            out += "t";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rational> out(std::max(a.coeffs().size(), b.coeffs().size()), Rational(0));
    for (size_t i = 0; i < out.size(); ++i) {
        out[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    }
    return RatPoly(std::move(out));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }

RatPoly operator-(const RatPoly& a) {
    std::vector<Rational> out(a.coeffs());
    for (Rational& c : out) c = -c;
    return RatPoly(std::move(out));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    std::vector<Rational> out(a.coeffs().size() + b.coeffs().size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        for (size_t j = 0; j < b.coeffs().size(); ++j) {
            out[i + j] += a.coeffs()[i] * b.coeffs()[j];
        }
    }
    return RatPoly(std::move(out));
}

RatPoly operator*(const Rational& s, const RatPoly& a) {
    std::vector<Rational> out(a.coeffs());
    for (Rational& c : out) c *= s;
    return RatPoly(std::move(out));
}

RatPoly operator*(const RatPoly& a, const Rational& s) { return s * a; }

RatPoly divide_exact(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("divide_exact: division by zero polynomial");
    if (a.is_zero()) return RatPoly();
    if (a.degree() < b.degree()) {
        throw std::invalid_argument("divide_exact: quotient is not a polynomial");
    }
    std::vector<Rational> rem(a.coeffs());
    std::vector<Rational> quot(static_cast<size_t>(a.degree() - b.degree()) + 1, Rational(0));
    const Rational& lead = b.leading_coeff();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        const Rational q = rem[static_cast<size_t>(k + b.degree())] / lead;
        quot[static_cast<size_t>(k)] = q;
        for (int j = 0; j <= b.degree(); ++j) {
            rem[static_cast<size_t>(k + j)] -= q * b.coeff(j);
        }
    }
    for (const Rational& r : rem) {
        if (r != 0) throw std::invalid_argument("divide_exact: nonzero remainder");
    }
    return RatPoly(std::move(quot));
}

Rational sqrt_exact(const Rational& value) {
    if (value < 0) throw std::invalid_argument("sqrt_exact: negative value");
    const mpz_class num = value.get_num();
    const mpz_class den = value.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
        throw std::invalid_argument("sqrt_exact: not a perfect square: " + value.get_str());
    }
    mpz_class rnum, rden;
    mpz_sqrt(rnum.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rden.get_mpz_t(), den.get_mpz_t());
    Rational root(rnum, rden);
    root.canonicalize();
    return root;
}

}  // namespace nullflat::exact
