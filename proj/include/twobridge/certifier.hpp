#pragma once

#include <map>
#include <string>
#include <vector>

#include "twobridge/cohomology.hpp"
#include "twobridge/presentation.hpp"
#include "twobridge/sturm.hpp"

namespace twobridge {

struct RootAnalysis {
    std::vector<SquarefreeFactor> factors;
    int simple_positive_real_roots = 0;  // multiplicity 1, real, > 0, != 1
    bool one_is_root = false;
    /// Positive real roots of each factor (same order as `factors`).
    std::vector<std::vector<RootInterval>> positive_roots;
};

RootAnalysis analyze_roots(const Poly& alexander);

/// Positive real roots of a square-free polynomial, excluding 1.
int positive_real_roots_excluding_one(const Poly& squarefree);

struct MeridianTrace {
    RootInterval t_root;
    RootInterval xi;       // enclosure of t^2
    Rational trace_sq_lower;  // lower bound for xi + 2 + 1/xi
    bool exceeds_four = false;
    bool operator==(const MeridianTrace&) const = default;
};

/// For each real root t of the branch modulus, certifies xi + 2 + 1/xi > 4
/// with xi = t^2 by rational interval arithmetic.
std::vector<MeridianTrace> meridian_trace_check(const Branch& branch);

struct RootBranchReport {
    Poly modulus_in_t;
    Poly xi_factor;  // square-free polynomial whose roots are t^2
    int multiplicity_in_alexander = 0;
    std::vector<RootInterval> real_root_intervals;  // real t-roots
    bool contains_pm1 = false;
    int qualifying_roots = 0;  // positive real xi != 1, counted when multiplicity is 1
    CohomologyDims dims_knot;
    CohomologyDims dims_filled;
    bool rigid = false;
    std::vector<MeridianTrace> meridian;
    std::vector<SplitRecord> lineage;
    bool operator==(const RootBranchReport&) const = default;
};

/// Branch for one square-free factor F of Delta: F(t^2) with the t = 0, +-1
/// factors removed. Returns nullptr when nothing is left.
BranchPtr alexander_branch(const Poly& factor);

/// Cohomology of the knot group and of its 0-filling on every leaf of `branch`.
std::vector<RootBranchReport> check_rigidity(const KnotPresentation& pres, const BranchPtr& branch,
                                             int multiplicity_in_alexander = 1);
std::vector<RootBranchReport> check_rigidity(const TwoBridgeFraction& f, const BranchPtr& branch);

enum class Verdict { Applies, InapplicableNoRoot, InapplicableNotRigid };
std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

struct Certificate {
    TwoBridgeFraction fraction{3, 1};
    Poly alexander;
    RootAnalysis roots;
    std::vector<RootBranchReport> branches;
    int qualifying_roots = 0;
    bool any_qualifying_rigid = false;
    bool all_qualifying_rigid = false;
    bool meridian_trace_ok = true;
    Verdict verdict = Verdict::InapplicableNoRoot;
    std::vector<std::string> assumptions;
    std::map<std::string, double> timings_ms;
};

struct CertifyOptions {
    unsigned threads = 1;
};

/// Throws InvalidKnotInput for bad fractions and CrossCheckFailure when the
/// two Alexander routes disagree.
Certificate certify(const TwoBridgeFraction& f, const CertifyOptions& opts = {});

}  // namespace twobridge
