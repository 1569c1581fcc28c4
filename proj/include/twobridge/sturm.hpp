#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "twobridge/poly.hpp"

namespace twobridge {

/// An endpoint of a real interval; nullopt stands for -inf (lower) or +inf (upper).
using Bound = std::optional<Rational>;

class EndpointIsRoot : public std::domain_error {
public:
    explicit EndpointIsRoot(Rational at);
    const Rational& at() const noexcept { return at_; }

private:
    Rational at_;
};

std::vector<Poly> sturm_sequence(const Poly& a);

/// Number of distinct real roots of a square-free `a` in the open interval (lo, hi).
/// Throws EndpointIsRoot when a finite endpoint is a root.
int sturm_count(const Poly& a, const Bound& lo, const Bound& hi);

/// Open interval (lo, hi) holding exactly one root; lo and hi are never roots.
struct RootInterval {
    Rational lo;
    Rational hi;

    bool contains(const Rational& x) const { return lo < x && x < hi; }
    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
    bool operator==(const RootInterval&) const = default;
};

/// Cauchy bound: every real root lies in (-B, B).
Rational root_bound(const Poly& a);

/// Isolating intervals for every real root of a square-free, nonzero `a`, sorted ascending.
std::vector<RootInterval> isolate_real_roots(const Poly& a);

/// Shrinks an isolating interval of `a` until its width is below `width`.
RootInterval refine_root(const Poly& a, RootInterval iv, const Rational& width);

/// Decimal rendering of x rounded to `digits` places.
std::string decimal_str(const Rational& x, int digits);

}  // namespace twobridge
