#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace twobridge {

using Rational = mpq_class;
using Integer = mpz_class;

/// "num/den", or "num" when the denominator is 1.
std::string rational_str(const Rational& r);
Rational parse_rational(const std::string& s);

/// Dense univariate polynomial over Q, coefficient index = degree.
/// The zero polynomial has no coefficients; otherwise the leading one is nonzero.
class Poly {
public:
    Poly() = default;
    Poly(std::vector<Rational> coeffs);
    Poly(std::initializer_list<long> coeffs);
    explicit Poly(const Rational& c);

    static Poly monomial(const Rational& c, std::size_t degree);
    static Poly x() { return monomial(1, 1); }

    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const noexcept { return c_; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const Rational& leading() const;

    Rational eval(const Rational& x) const;
    double eval(double x) const;
    Poly derivative() const;
    Poly monic() const;
    Poly operator-() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

    bool operator==(const Poly& o) const { return c_ == o.c_; }

    /// Coefficients lowest degree first, as "num/den" strings.
    std::vector<std::string> to_strings() const;
    static Poly from_strings(const std::vector<std::string>& s);
    std::string str(const char* var = "t") const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// (quotient, remainder); throws on division by zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
/// Exact division; throws std::domain_error if b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);

/// Monic gcd over Q; rejects gcd(0, 0).
Poly poly_gcd(const Poly& a, const Poly& b);

struct ExtendedGcd {
    Poly gcd;  // monic
    Poly s;    // s a + t b = gcd
    Poly t;
};
ExtendedGcd poly_xgcd(const Poly& a, const Poly& b);

struct SquarefreeFactor {
    Poly factor;  // monic, square-free
    int multiplicity;
    bool operator==(const SquarefreeFactor&) const = default;
};
/// Yun's algorithm; the product of factor^multiplicity is a / lc(a).
std::vector<SquarefreeFactor> squarefree_decomposition(const Poly& a);
Poly squarefree_part(const Poly& a);

/// a(t^2).
Poly substitute_tsquared(const Poly& a);
/// a(-t).
Poly substitute_neg(const Poly& a);

/// Integer coefficients with content 1 and positive leading coefficient.
Poly primitive_part(const Poly& a);
/// Coefficients as integers; throws if some coefficient is not integral.
std::vector<Integer> integer_coeffs(const Poly& a);

/// Deterministic ordering used to sort branch results.
bool poly_less(const Poly& a, const Poly& b);

}  // namespace twobridge
