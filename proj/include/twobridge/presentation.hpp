#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "twobridge/word.hpp"

namespace twobridge {

/// Raised for inputs that do not describe a two-bridge knot.
class InvalidKnotInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// [a1, ..., an] read as a1 + 1/(a2 + 1/(... + 1/an)).
struct ContinuedFraction {
    std::vector<std::int64_t> terms;

    explicit ContinuedFraction(std::vector<std::int64_t> t);
    static ContinuedFraction parse(std::string_view text);  // "1,1,2,2,2"
    std::string str() const;
};

/// p/q with p odd, 0 < q < p, gcd(p, q) = 1.
struct TwoBridgeFraction {
    std::int64_t p;
    std::int64_t q;

    TwoBridgeFraction(std::int64_t p, std::int64_t q);
    static TwoBridgeFraction parse(std::string_view text);  // "29/17"
    /// The fraction of [1,1,2,2,2j], i.e. (24j+5)/(14j+3).
    static TwoBridgeFraction family(std::int64_t j);

    std::string str() const;
    bool operator==(const TwoBridgeFraction&) const = default;
};

TwoBridgeFraction cf_to_fraction(const ContinuedFraction& cf);

/// e_i = (-1)^floor(i q / p) for i = 1..p-1. An even q is replaced by the
/// odd representative q - p first; the formula presents the knot group only for odd q.
std::vector<int> riley_exponents(const TwoBridgeFraction& f);

struct KnotPresentation {
    Word w;
    Word v;          // w spelled backwards
    Word relator;    // x w y^-1 w^-1
    Word longitude;  // x^(-2e) w v
    Word meridian;   // x
    int longitude_correction = 0;  // the exponent -2e of the meridian correction
};

KnotPresentation build_presentation(const TwoBridgeFraction& f);

/// Closed form of w for [1,1,2,2,2j]: (y x^-1 y^-1 x) u^j, with v = s^j (x y^-1 x^-1 y).
struct FamilyWords {
    Word u;
    Word s;  // u spelled backwards
    Word w;
    Word v;
};

/// The 24-letter period word u.
const Word& family_period_word();
/// y x^-1 y^-1 x
const Word& family_prefix_word();
/// x y^-1 x^-1 y
const Word& family_suffix_word();

FamilyWords family_words(std::int64_t j);
inline Word family_word(std::int64_t j) { return family_words(j).w; }

/// Exhaustive check that floor(i(14j+3)/(24j+5)) has period-24 parity for i >= 5
/// and agrees with floor(7i/12) on the range where the closed form stabilises.
bool family_parity_period_holds(std::int64_t j);

}  // namespace twobridge
