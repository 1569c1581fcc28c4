#include "twobridge/certifier.hpp"

#include <chrono>
#include <future>

namespace twobridge {

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

// Strips the roots 0 and 1 from a square-free polynomial.
Poly strip_zero_and_one(Poly p) {
    if (p.eval(Rational(0)) == 0) p = exact_div(p, Poly::x());
    if (p.eval(Rational(1)) == 0) p = exact_div(p, Poly{-1, 1});
    return p;
}

// m(t) m(-t) = M(t^2); the square-free part of M has the squares of m's roots.
Poly xi_factor_of(const Poly& m) {
    const LaurentPoly prod(m * substitute_neg(m));
    return squarefree_part(prod.halve_exponents().to_poly());
}

}  // namespace

int positive_real_roots_excluding_one(const Poly& squarefree) {
    const Poly p = strip_zero_and_one(squarefree);
    if (p.degree() < 1) return 0;
    return sturm_count(p, Rational(0), std::nullopt);
}

RootAnalysis analyze_roots(const Poly& alexander) {
    RootAnalysis out;
    out.factors = squarefree_decomposition(alexander);
    out.one_is_root = alexander.eval(Rational(1)) == 0;
    for (const auto& [factor, mult] : out.factors) {
        std::vector<RootInterval> pos;
        for (const auto& iv : isolate_real_roots(factor))
            if (iv.lo >= 0) pos.push_back(iv);
            else if (iv.hi > 0 && sturm_count(factor, Rational(0), iv.hi) == 1) pos.push_back({0, iv.hi});
        out.positive_roots.push_back(std::move(pos));
        if (mult == 1) out.simple_positive_real_roots += positive_real_roots_excluding_one(factor);
    }
    return out;
}

std::vector<MeridianTrace> meridian_trace_check(const Branch& branch) {
    const Poly& m = branch.modulus();
    std::vector<MeridianTrace> out;
    for (RootInterval iv : isolate_real_roots(m)) {
        // Shrink until the interval avoids 0 and its square avoids 1.
        auto bad = [](const RootInterval& r) {
            const bool straddles_zero = r.lo <= 0 && r.hi >= 0;
            const bool straddles_one = (r.lo <= 1 && r.hi >= 1) || (r.lo <= -1 && r.hi >= -1);
            return straddles_zero || straddles_one;
        };
        for (int guard = 0; bad(iv) && guard < 4096; ++guard) iv = refine_root(m, iv, iv.width() / 2);
        if (bad(iv)) throw std::logic_error("meridian check: root at t = 0 or t = +-1 reached");
        MeridianTrace mt;
        mt.t_root = iv;
        const Rational a = abs(iv.lo);
        const Rational b = abs(iv.hi);
        mt.xi = {std::min(a * a, b * b), std::max(a * a, b * b)};
        // x + 1/x is monotone on each side of 1; the minimum sits at the end nearer 1.
        const Rational& x = mt.xi.hi < 1 ? mt.xi.hi : mt.xi.lo;
        mt.trace_sq_lower = x + 2 + 1 / x;
        mt.exceeds_four = mt.trace_sq_lower > 4;
        out.push_back(mt);
    }
    return out;
}

BranchPtr alexander_branch(const Poly& factor) {
    Poly h = substitute_tsquared(factor.monic());
    const Poly bad = Poly{0, -1, 0, 1};  // t^3 - t
    const Poly g = poly_gcd(h, bad);
    if (g.degree() > 0) h = exact_div(h, g);
    if (h.degree() < 1) return nullptr;
    return make_branch(h);
}

std::vector<RootBranchReport> check_rigidity(const KnotPresentation& pres, const BranchPtr& branch,
                                             int multiplicity) {
    struct Dims {
        CohomologyDims knot, filled;
    };
    const std::vector<Word> knot_rel{pres.relator};
    const std::vector<Word> filled_rel{pres.relator, pres.longitude};
    auto leaves = on_leaves(branch, [&](const BranchPtr& b) {
        const AdjointRep<QElem> ad(burde_derham_assignment(b, pres.relator));
        return Dims{cohomology_data(knot_rel, ad).dims, cohomology_data(filled_rel, ad).dims};
    });

    std::vector<RootBranchReport> out;
    for (const auto& leaf : leaves) {
        const Branch& b = *leaf.branch;
        RootBranchReport r;
        r.modulus_in_t = b.modulus();
        r.xi_factor = xi_factor_of(b.modulus());
        r.multiplicity_in_alexander = multiplicity;
        r.real_root_intervals = isolate_real_roots(b.modulus());
        r.contains_pm1 = b.modulus().eval(Rational(1)) == 0 || b.modulus().eval(Rational(-1)) == 0;
        r.qualifying_roots = multiplicity == 1 ? positive_real_roots_excluding_one(r.xi_factor) : 0;
        r.dims_knot = leaf.value.knot;
        r.dims_filled = leaf.value.filled;
        r.rigid = r.dims_filled.h1 == 0;
        r.meridian = meridian_trace_check(b);
        r.lineage = b.lineage();
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<RootBranchReport> check_rigidity(const TwoBridgeFraction& f, const BranchPtr& branch) {
    return check_rigidity(build_presentation(f), branch, 1);
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Applies: return "APPLIES";
        case Verdict::InapplicableNoRoot: return "INAPPLICABLE_NO_ROOT";
        case Verdict::InapplicableNotRigid: return "INAPPLICABLE_NOT_RIGID";
    }
    return "?";
}

Verdict verdict_from_string(const std::string& s) {
    if (s == "APPLIES") return Verdict::Applies;
    if (s == "INAPPLICABLE_NO_ROOT") return Verdict::InapplicableNoRoot;
    if (s == "INAPPLICABLE_NOT_RIGID") return Verdict::InapplicableNotRigid;
    throw std::invalid_argument("unknown verdict '" + s + "'");
}

Certificate certify(const TwoBridgeFraction& f, const CertifyOptions& opts) {
    Certificate cert;
    cert.fraction = f;
    cert.assumptions = {"exterior is irreducible (true for two-bridge knots)",
                        "meridian index k = 1 (knot in S^3)"};

    auto t0 = std::chrono::steady_clock::now();
    const KnotPresentation pres = build_presentation(f);
    cert.alexander = alexander_via_rep(pres);
    const Poly fox = alexander_via_fox(pres);
    if (!(fox == cert.alexander))
        throw CrossCheckFailure("Alexander routes disagree: " + cert.alexander.str("tau") + " vs " + fox.str("tau"));
    if (!is_reciprocal(cert.alexander)) throw CrossCheckFailure("Alexander polynomial is not reciprocal");
    cert.timings_ms["alexander"] = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    cert.roots = analyze_roots(cert.alexander);
    cert.qualifying_roots = cert.roots.simple_positive_real_roots;
    cert.timings_ms["roots"] = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    std::vector<std::pair<BranchPtr, int>> tasks;
    for (const auto& [factor, mult] : cert.roots.factors)
        if (auto b = alexander_branch(factor)) tasks.emplace_back(std::move(b), mult);

    std::vector<std::vector<RootBranchReport>> results(tasks.size());
    if (opts.threads > 1 && tasks.size() > 1) {
        std::vector<std::future<std::vector<RootBranchReport>>> futs;
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            if (futs.size() >= opts.threads) {
                const std::size_t done = i - futs.size();
                results[done] = futs.front().get();
                futs.erase(futs.begin());
            }
            futs.push_back(std::async(std::launch::async, [&, i] {
                return check_rigidity(pres, tasks[i].first, tasks[i].second);
            }));
        }
        for (std::size_t k = 0; k < futs.size(); ++k) results[tasks.size() - futs.size() + k] = futs[k].get();
    } else {
        for (std::size_t i = 0; i < tasks.size(); ++i) results[i] = check_rigidity(pres, tasks[i].first, tasks[i].second);
    }
    for (auto& r : results)
        for (auto& rep : r) cert.branches.push_back(std::move(rep));
    cert.timings_ms["cohomology"] = ms_since(t0);

    bool any_qualifying_leaf = false;
    cert.all_qualifying_rigid = true;
    for (const auto& b : cert.branches) {
        for (const auto& m : b.meridian) cert.meridian_trace_ok = cert.meridian_trace_ok && m.exceeds_four;
        if (b.qualifying_roots == 0) continue;
        any_qualifying_leaf = true;
        cert.any_qualifying_rigid = cert.any_qualifying_rigid || b.rigid;
        cert.all_qualifying_rigid = cert.all_qualifying_rigid && b.rigid;
    }
    if (!any_qualifying_leaf) cert.all_qualifying_rigid = false;

    if (cert.qualifying_roots == 0) {
        cert.verdict = Verdict::InapplicableNoRoot;
    } else if (cert.any_qualifying_rigid) {
        cert.verdict = Verdict::Applies;
    } else {
        cert.verdict = Verdict::InapplicableNotRigid;
    }
    return cert;
}

}  // namespace twobridge
