#pragma once

// Closed forms for the [1,1,2,2,2j] family and their symbolic checks against
// cocycle evaluation over Q[t^+-1].

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twobridge/cohomology.hpp"
#include "twobridge/laurent.hpp"

namespace twobridge {

/// Coefficients of z(w), z(v) (and the period words) for the normalized
/// cocycle z(x) = (0, a, b), z(y) = (0, a, 0), split by a and b.
struct FamilyCocycleForms {
    LaurentPoly omega1_alpha;
    std::optional<LaurentPoly> omega1_beta;  // unspecified in closed form
    LaurentPoly omega2_alpha, omega2_beta;
    LaurentPoly omega3_alpha, omega3_beta;
    std::optional<LaurentPoly> nu1_alpha, nu1_beta;  // unspecified in closed form
    LaurentPoly nu2_alpha, nu2_beta;
    LaurentPoly nu3_alpha, nu3_beta;
    Mat3<LaurentPoly> sum_u;  // sum_{i<j} Ad(rho(u^i))
    Mat3<LaurentPoly> sum_s;  // sum_{i<j} Ad(rho(s^i))
    // z(u), z(s): first coordinate's a-part, second and third coordinates' b-parts.
    LaurentPoly zu1_alpha, zu2_beta, zu3_beta;
    LaurentPoly zs1_alpha, zs2_beta, zs3_beta;
};

/// g = t^3 - 5t + 5t^-1 - t^-3.
LaurentPoly family_g();

/// The closed forms as printed for the family.
FamilyCocycleForms family_cocycle_closed_forms(std::int64_t j);

/// The same quantities from eval_cocycle over Q[t^+-1] (linearity in a, b).
FamilyCocycleForms family_cocycle_computed(std::int64_t j);

/// Names of the components where computed and closed forms differ; the
/// unspecified constants are skipped.
std::vector<std::string> family_cocycle_mismatches(std::int64_t j);

struct RigidityIdentity {
    LaurentPoly beta_identity;      // omega2 + nu2 + f nu3, b-part
    LaurentPoly beta_expected;      // (t^4-1)(t^4 + j(t^4-4t^2+1)^2) / t^5
    LaurentPoly alpha_identity;     // (t^2-1) omega1 + 2 f a, a-part
    LaurentPoly alpha_expected;     // (t^4-1)(2j t^4 - (6j+1) t^2 + 2j)
    LaurentPoly alpha_unit;         // alpha_identity = alpha_unit * alpha_expected
};

/// Computes both identities from cocycle evaluation; throws CrossCheckFailure
/// when either fails to match.
RigidityIdentity rigidity_identity(std::int64_t j);

/// 2j tau^2 - (6j+1) tau + 2j
Poly family_alpha_quadratic(std::int64_t j);

}  // namespace twobridge
