#pragma once

#include <cstdint>
#include <stdexcept>

#include "twobridge/laurent.hpp"
#include "twobridge/presentation.hpp"
#include "twobridge/quotient_ring.hpp"
#include "twobridge/sl2.hpp"

namespace twobridge {

/// Internal consistency failure (e.g. the two Alexander routes disagree).
class CrossCheckFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Multiply by +-tau^k and clear content: nonzero constant term, positive
/// leading coefficient, coprime integer coefficients.
Poly normalize_alexander(const LaurentPoly& a);
inline Poly normalize_alexander(const Poly& a) { return normalize_alexander(LaurentPoly(a)); }

/// The (1,2) entry of the image of (y x^-1 y^-1 x) u^j under the reducible
/// representation: -j t^3 + (5j+1) t - (5j+1) t^-1 + j t^-3.
LaurentPoly f_upper_entry(std::int64_t j);

/// (P(xw) - P(wy))_{12} as a Laurent polynomial in tau, before normalization.
LaurentPoly riley_condition(const KnotPresentation& pres);

/// Delta from the condition that the reducible representation factors
/// through the knot group.
Poly alexander_via_rep(const TwoBridgeFraction& f);
Poly alexander_via_rep(const KnotPresentation& pres);

/// Abelianized Fox derivative d r / d x of a word, in Q[tau^+-1] with x, y -> tau.
LaurentPoly fox_derivative_abelianized(const Word& r, Generator g);

/// Delta from the Fox derivative of the single relator.
Poly alexander_via_fox(const TwoBridgeFraction& f);
Poly alexander_via_fox(const KnotPresentation& pres);

/// tau^deg * a(1/tau) == a.
bool is_reciprocal(const Poly& a);

/// x -> [[t, 0], [0, 1/t]], y -> [[t, 1], [0, 1/t]] with t the residue class of
/// Q[t]/(h). Rejects branches meeting t = 0 or t = +-1 and verifies that the
/// relator maps to the identity.
RepAssignment<QElem> burde_derham_assignment(const BranchPtr& branch, const Word& relator);

}  // namespace twobridge
