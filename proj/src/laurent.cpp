#include "twobridge/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace twobridge {

LaurentPoly::LaurentPoly(long offset, std::vector<Rational> coeffs) : offset_(offset), c_(std::move(coeffs)) {
    trim();
}

LaurentPoly LaurentPoly::from_terms(std::initializer_list<std::pair<long, Rational>> terms) {
    LaurentPoly out;
    for (const auto& [e, c] : terms) out += monomial(c, e);
    return out;
}

void LaurentPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
        offset_ += static_cast<long>(lead);
    }
    if (c_.empty()) offset_ = 0;
}

Rational LaurentPoly::coeff(long e) const {
    if (e < offset_ || e > high()) return 0;
    return c_[static_cast<std::size_t>(e - offset_)];
}

LaurentPoly LaurentPoly::reflect() const {
    if (is_zero()) return {};
    return {-high(), std::vector<Rational>(c_.rbegin(), c_.rend())};
}

Poly LaurentPoly::to_poly() const {
    if (is_zero()) return {};
    if (offset_ < 0) throw std::domain_error("Laurent polynomial has negative exponents");
    std::vector<Rational> out(static_cast<std::size_t>(offset_), Rational(0));
    out.insert(out.end(), c_.begin(), c_.end());
    return Poly(std::move(out));
}

bool LaurentPoly::is_even() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0 && (offset_ + static_cast<long>(i)) % 2 != 0) return false;
    return true;
}

LaurentPoly LaurentPoly::halve_exponents() const {
    if (!is_even()) throw std::domain_error("odd exponent present");
    if (is_zero()) return {};
    std::vector<Rational> out;
    for (std::size_t i = 0; i < c_.size(); i += 2) out.push_back(c_[i]);
    return {offset_ / 2, std::move(out)};
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    const long lo = std::min(offset_, o.offset_);
    const long hi = std::max(high(), o.high());
    std::vector<Rational> out(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < c_.size(); ++i) out[static_cast<std::size_t>(offset_ - lo) + i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[static_cast<std::size_t>(o.offset_ - lo) + i] += o.c_[i];
    offset_ = lo;
    c_ = std::move(out);
    trim();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return {a.offset_ + b.offset_, std::move(out)};
}

std::string LaurentPoly::str(const char* var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long e = high(); e >= low(); --e) {
        const Rational c = coeff(e);
        if (c == 0) continue;
        const Rational mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (mag != 1 || e == 0) os << rational_str(mag);
        if (e != 0) os << var;
        if (e != 0 && e != 1) os << '^' << e;
    }
    return os.str();
}

LaurentPoly divide_by_monomial(const LaurentPoly& a, const LaurentPoly& m) {
    if (!m.is_monomial()) throw std::domain_error("divisor is not a monomial");
    const Rational inv = 1 / m.coeffs()[0];
    return a.shift(-m.low()) * LaurentPoly(inv);
}

}  // namespace twobridge
