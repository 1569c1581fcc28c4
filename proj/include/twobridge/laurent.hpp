#pragma once

#include <string>
#include <vector>

#include "twobridge/poly.hpp"

namespace twobridge {

/// Laurent polynomial over Q: sum of coeffs[i] * t^(offset + i).
/// Stored trimmed on both ends; the zero polynomial has no coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long offset, std::vector<Rational> coeffs);
    LaurentPoly(const Rational& c) : LaurentPoly(0, {c}) {}  // NOLINT: scalars embed
    LaurentPoly(long c) : LaurentPoly(Rational(c)) {}        // NOLINT
    explicit LaurentPoly(const Poly& p) : LaurentPoly(0, p.coeffs()) {}

    static LaurentPoly monomial(const Rational& c, long exponent) { return {exponent, {c}}; }
    static LaurentPoly t() { return monomial(1, 1); }
    static LaurentPoly t_inv() { return monomial(1, -1); }
    /// Build from (exponent, coefficient) pairs.
    static LaurentPoly from_terms(std::initializer_list<std::pair<long, Rational>> terms);

    bool is_zero() const noexcept { return c_.empty(); }
    long low() const noexcept { return offset_; }  // lowest exponent (0 for zero)
    long high() const noexcept { return offset_ + static_cast<long>(c_.size()) - 1; }
    Rational coeff(long exponent) const;
    const std::vector<Rational>& coeffs() const noexcept { return c_; }

    /// t -> 1/t
    LaurentPoly reflect() const;
    LaurentPoly shift(long k) const { return is_zero() ? *this : LaurentPoly(offset_ + k, c_); }
    /// Requires low() >= 0.
    Poly to_poly() const;
    /// Every exponent even.
    bool is_even() const;
    /// Substitute t^2 -> t; requires is_even().
    LaurentPoly halve_exponents() const;
    bool is_monomial() const { return c_.size() == 1; }

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    bool operator==(const LaurentPoly& o) const { return offset_ == o.offset_ && c_ == o.c_; }

    std::string str(const char* var = "t") const;

private:
    void trim();
    long offset_ = 0;
    std::vector<Rational> c_;
};

/// Exact division by a monomial unit c t^k.
LaurentPoly divide_by_monomial(const LaurentPoly& a, const LaurentPoly& monomial);

inline LaurentPoly zero_like(const LaurentPoly&) { return {}; }
inline LaurentPoly one_like(const LaurentPoly&) { return LaurentPoly(1); }

}  // namespace twobridge
