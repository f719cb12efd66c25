#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace nullflat::exact {

/// Arbitrary-precision rational scalar. Degree-10 inputs push intermediate
/// numerators far past 64 bits, and the zero-polynomial assertions would be
/// meaningless under silent overflow.
using Rational = mpq_class;

/// Dense univariate polynomial over Rational, trailing zero coefficients
/// trimmed. The zero polynomial stores no coefficients and reports
/// degree() == -1.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs);

    static RatPoly constant(const Rational& c);
    static RatPoly monomial(const Rational& c, int degree);
    /// The polynomial tau.
    static RatPoly variable();

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of tau^i; zero outside the stored range.
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational leading_coeff() const;

    RatPoly derivative() const;
    Rational evaluate(const Rational& tau) const;

    /// Human-readable form for diagnostics, e.g. "-4*t^4 + 16*t^3 - 24*t^2".
    std::string to_string() const;

    bool operator==(const RatPoly&) const = default;

private:
    std::vector<Rational> coeffs_;
};

RatPoly operator+(const RatPoly& a, const RatPoly& b);
RatPoly operator-(const RatPoly& a, const RatPoly& b);
RatPoly operator-(const RatPoly& a);
RatPoly operator*(const RatPoly& a, const RatPoly& b);
RatPoly operator*(const Rational& s, const RatPoly& a);
RatPoly operator*(const RatPoly& a, const Rational& s);

/// Exact quotient a / b; throws std::invalid_argument when b is zero or the
/// long division leaves a remainder.
RatPoly divide_exact(const RatPoly& a, const RatPoly& b);

/// Exact square root of a rational known to be needed exactly: succeeds only
/// when numerator and denominator are perfect squares (returns the
/// nonnegative root); throws std::invalid_argument otherwise.
Rational sqrt_exact(const Rational& value);

}  // namespace nullflat::exact
