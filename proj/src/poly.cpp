#include "twobridge/poly.hpp"

#include <algorithm>
#include <sstream>

namespace twobridge {

std::string rational_str(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: '" + s + "'");
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

Poly::Poly(const Rational& c) {
    if (c != 0) c_.push_back(c);
}

Poly Poly::monomial(const Rational& c, std::size_t degree) {
    if (c == 0) return {};
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& Poly::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
}

Rational Poly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double Poly::eval(double x) const {
    double acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return Poly(std::move(d));
}

Poly Poly::monic() const {
    if (is_zero()) return {};
    Poly out = *this;
    const Rational lc = leading();
    for (auto& c : out.c_) c /= lc;
    return out;
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        c_.clear();
        return *this;
    }
    for (auto& v : c_) v *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
}

std::vector<std::string> Poly::to_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(rational_str(c));
    return out;
}

Poly Poly::from_strings(const std::vector<std::string>& s) {
    std::vector<Rational> c;
    c.reserve(s.size());
    for (const auto& v : s) c.push_back(parse_rational(v));
    return Poly(std::move(c));
}

std::string Poly::str(const char* var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        const Rational& c = c_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (mag != 1 || i == 0) os << rational_str(mag);
        if (i >= 1) os << var;
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly{}, a};
    std::vector<Rational> r = a.coeffs();
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    std::vector<Rational> q(r.size() - db);
    const Rational lc = b.leading();
    for (std::size_t k = q.size(); k-- > 0;) {
        const Rational f = r[k + db] / lc;
        q[k] = f;
        if (f == 0) continue;
        for (std::size_t i = 0; i <= db; ++i) r[k + i] -= f * bc[i];
    }
    r.resize(db);
    return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
    Poly x = a;
    Poly y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = r.monic();  // keeps coefficient growth in check
    }
    return x.monic();
}

ExtendedGcd poly_xgcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
    Poly r0 = a, r1 = b;
    Poly s0{Rational(1)}, s1;
    Poly t0, t1{Rational(1)};
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        Poly s2 = s0 - q * s1;
        Poly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    const Rational lc = r0.leading();
    const Rational inv = 1 / lc;
    return {r0 * inv, s0 * inv, t0 * inv};
}

std::vector<SquarefreeFactor> squarefree_decomposition(const Poly& a) {
    if (a.is_zero()) throw std::domain_error("square-free decomposition of the zero polynomial");
    std::vector<SquarefreeFactor> out;
    if (a.degree() == 0) return out;
    const Poly f = a.monic();
    const Poly fp = f.derivative();
    Poly g = poly_gcd(f, fp);
    Poly b = exact_div(f, g);
    Poly c = exact_div(fp, g);
    Poly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        Poly h = d.is_zero() ? b : poly_gcd(b, d);
        if (h.degree() > 0) out.push_back({h, i});
        b = exact_div(b, h);
        c = exact_div(d, h);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

Poly squarefree_part(const Poly& a) {
    if (a.is_zero()) throw std::domain_error("square-free part of the zero polynomial");
    if (a.degree() == 0) return Poly{Rational(1)};
    return exact_div(a.monic(), poly_gcd(a, a.derivative()));
}

Poly substitute_tsquared(const Poly& a) {
    if (a.is_zero()) return {};
    std::vector<Rational> out(2 * a.coeffs().size() - 1);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) out[2 * i] = a.coeffs()[i];
    return Poly(std::move(out));
}

Poly substitute_neg(const Poly& a) {
    std::vector<Rational> out = a.coeffs();
    for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
    return Poly(std::move(out));
}

Poly primitive_part(const Poly& a) {
    if (a.is_zero()) return {};
    Integer den_lcm = 1;
    for (const auto& c : a.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> ints;
    Integer content = 0;
    for (const auto& c : a.coeffs()) {
        Integer v = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        ints.push_back(v);
    }
    if (a.leading() < 0) content = -content;
    std::vector<Rational> out;
    out.reserve(ints.size());
    for (auto& v : ints) out.emplace_back(Integer(v / content));
    return Poly(std::move(out));
}

std::vector<Integer> integer_coeffs(const Poly& a) {
    std::vector<Integer> out;
    for (const auto& c : a.coeffs()) {
        if (c.get_den() != 1) throw std::domain_error("non-integral coefficient " + rational_str(c));
        out.push_back(c.get_num());
    }
    return out;
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (long i = a.degree(); i >= 0; --i) {
        const auto k = static_cast<std::size_t>(i);
        if (a.coeffs()[k] != b.coeffs()[k]) return a.coeffs()[k] < b.coeffs()[k];
    }
    return false;
}

}  // namespace twobridge
