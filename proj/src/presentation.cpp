#include "twobridge/presentation.hpp"

#include <charconv>
#include <numeric>
#include <sstream>

#include <gmpxx.h>

namespace twobridge {

namespace {

// Riley words have p-1 letters; anything past this is not a sensible input.
constexpr std::int64_t kMaxDenominator = 100'000'000;

std::int64_t parse_int(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw InvalidKnotInput("not an integer: '" + std::string(s) + "'");
    return v;
}

}  // namespace

ContinuedFraction::ContinuedFraction(std::vector<std::int64_t> t) : terms(std::move(t)) {
    if (terms.empty()) throw InvalidKnotInput("continued fraction must have at least one term");
    for (auto a : terms)
        if (a == 0) throw InvalidKnotInput("continued fraction terms must be nonzero");
}

ContinuedFraction ContinuedFraction::parse(std::string_view text) {
    std::vector<std::int64_t> terms;
    while (true) {
        const auto comma = text.find(',');
        terms.push_back(parse_int(text.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return ContinuedFraction(std::move(terms));
}

std::string ContinuedFraction::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < terms.size(); ++i) os << (i ? "," : "") << terms[i];
    os << ']';
    return os.str();
}

TwoBridgeFraction::TwoBridgeFraction(std::int64_t p_, std::int64_t q_) : p(p_), q(q_) {
    if (p <= 0) throw InvalidKnotInput("p must be positive");
    if (p % 2 == 0) throw InvalidKnotInput("p must be odd (p/q = " + str() + " is a two-bridge link, not a knot)");
    if (q <= 0 || q >= p) throw InvalidKnotInput("q must satisfy 0 < q < p (got " + str() + ")");
    if (std::gcd(p, q) != 1) throw InvalidKnotInput("p and q must be coprime (got " + str() + ")");
    if (p > kMaxDenominator) throw InvalidKnotInput("p is too large");
}

TwoBridgeFraction TwoBridgeFraction::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) throw InvalidKnotInput("fraction must have the form p/q");
    return {parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1))};
}

TwoBridgeFraction TwoBridgeFraction::family(std::int64_t j) {
    if (j < 1) throw InvalidKnotInput("family index j must be >= 1");
    return {24 * j + 5, 14 * j + 3};
}

std::string TwoBridgeFraction::str() const { return std::to_string(p) + "/" + std::to_string(q); }

TwoBridgeFraction cf_to_fraction(const ContinuedFraction& cf) {
    mpq_class value(cf.terms.back());
    for (auto it = cf.terms.rbegin() + 1; it != cf.terms.rend(); ++it) {
        if (value == 0) throw InvalidKnotInput("continued fraction " + cf.str() + " divides by zero");
        value = mpq_class(*it) + 1 / value;
        value.canonicalize();
    }
    mpz_class p = value.get_num();
    mpz_class q = value.get_den();
    if (p < 0) {
        p = -p;
        q = -q;
    }
    if (p == 0) throw InvalidKnotInput("continued fraction " + cf.str() + " evaluates to 0");
    if (!p.fits_slong_p() || !q.fits_slong_p() || p > kMaxDenominator)
        throw InvalidKnotInput("continued fraction " + cf.str() + " is too large");
    return {p.get_si(), q.get_si()};
}

std::vector<int> riley_exponents(const TwoBridgeFraction& f) {
    std::vector<int> e;
    e.reserve(static_cast<std::size_t>(f.p - 1));
    // The formula needs an odd numerator; q - p represents the same knot.
    const std::int64_t q = f.q % 2 != 0 ? f.q : f.q - f.p;
    for (std::int64_t i = 1; i < f.p; ++i) {
        const __int128 num = static_cast<__int128>(i) * q;
        __int128 fl = num / f.p;
        if (num % f.p != 0 && num < 0) --fl;  // floor, not truncation
        e.push_back(fl % 2 == 0 ? 1 : -1);
    }
    return e;
}

KnotPresentation build_presentation(const TwoBridgeFraction& f) {
    const auto e = riley_exponents(f);
    std::vector<Letter> letters;
    letters.reserve(e.size());
    for (std::size_t i = 0; i < e.size(); ++i)
        letters.emplace_back(i % 2 == 0 ? Generator::Y : Generator::X, e[i]);

    KnotPresentation pres;
    pres.w = Word(letters);
    pres.v = pres.w.reversed();
    const Word x{x_letter()};
    const Word y{y_letter()};
    pres.meridian = x;
    pres.relator = x * pres.w * y.inverse() * pres.w.inverse();
    const Word wv = pres.w * pres.v;
    const int total = exponent_sum(wv, Generator::X) + exponent_sum(wv, Generator::Y);
    pres.longitude_correction = -total;
    pres.longitude = x.pow(-total) * wv;
    return pres;
}

const Word& family_period_word() {
    static const Word u = parse_word("(yXyx)(YXyX)(YxyX)(YxYX)(yxYx)(yXYx)");
    return u;
}

const Word& family_prefix_word() {
    static const Word w = parse_word("yXYx");
    return w;
}

const Word& family_suffix_word() {
    static const Word w = parse_word("xYXy");
    return w;
}

FamilyWords family_words(std::int64_t j) {
    if (j < 1) throw InvalidKnotInput("family index j must be >= 1");
    FamilyWords out;
    out.u = family_period_word();
    out.s = out.u.reversed();
    const int n = static_cast<int>(j);
    out.w = family_prefix_word() * out.u.pow(n);
    out.v = out.s.pow(n) * family_suffix_word();
    return out;
}

bool family_parity_period_holds(std::int64_t j) {
    const std::int64_t p = 24 * j + 5;
    const std::int64_t q = 14 * j + 3;
    auto fl = [&](std::int64_t i) { return i * q / p; };
    // Period-24 parity for 5 <= i <= 28 and 5 <= i + 24n <= 24j + 4.
    for (std::int64_t i = 5; i <= 28; ++i) {
        for (std::int64_t k = i; k <= 24 * j + 4; k += 24) {
            if ((fl(k) - fl(i)) % 2 != 0) return false;
        }
        for (std::int64_t k = i - 24; k >= 5; k -= 24) {
            if ((fl(k) - fl(i)) % 2 != 0) return false;
        }
    }
    // floor(k_{i,j}) = floor(k_{i,m}) = floor(7i/12) for j >= m and
    // max(1, 24(m-1)+5) <= i <= 24m+4.
    for (std::int64_t m = 1; m <= j; ++m) {
        const std::int64_t lo = std::max<std::int64_t>(1, 24 * (m - 1) + 5);
        for (std::int64_t i = lo; i <= 24 * m + 4; ++i) {
            const std::int64_t a = fl(i);
            const std::int64_t b = i * (14 * m + 3) / (24 * m + 5);
            if (a != b || a != 7 * i / 12) return false;
        }
    }
    return true;
}

}  // namespace twobridge
