// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include <json.hpp>

#include "support/float_rank.hpp"
#include "support/random.hpp"
#include "twobridge/certifier.hpp"
#include "twobridge/cli.hpp"
#include "twobridge/family_identities.hpp"

using namespace twobridge;
using Clock = std::chrono::steady_clock;

namespace {

struct Failure {
    std::string why;
};

void require(bool ok, const std::string& why) {
    if (!ok) throw Failure{why};
}

Poly family_delta(std::int64_t j) {
    const Rational J(j);
    return Poly(std::vector<Rational>{J, -(6 * J + 1), 10 * J + 3, -(6 * J + 1), J});
}

std::string js(std::int64_t j) { return "j=" + std::to_string(j); }

// 1. Both Alexander routes reproduce the family formula.
void alexander_family() {
    for (std::int64_t j = 1; j <= 50; ++j) {
        const KnotPresentation pres = build_presentation(TwoBridgeFraction::family(j));
        require(alexander_via_rep(pres) == family_delta(j), "representation route " + js(j));
        require(alexander_via_fox(pres) == family_delta(j), "Fox route " + js(j));
    }
}

// 2. Root counts, square-freeness and the value at 1.
void alexander_roots() {
    for (std::int64_t j = 1; j <= 50; ++j) {
        const Poly d = alexander_via_rep(TwoBridgeFraction::family(j));
        require(sturm_count(d, Rational(0), Rational(5)) == 4, "count on (0,5) " + js(j));
        require(sturm_count(d, Rational(5), std::nullopt) == 0, "count on (5,inf) " + js(j));
        const auto sf = squarefree_decomposition(d);
        require(sf.size() == 1 && sf[0].multiplicity == 1, "square-free " + js(j));
        require(d.eval(Rational(1)) == 1, "Delta(1) " + js(j));
    }
}

// 3. Closed-form Riley words and the parity period.
void riley_words() {
    for (std::int64_t j = 1; j <= 200; ++j) {
        const KnotPresentation pres = build_presentation(TwoBridgeFraction::family(j));
        require(family_word(j) == pres.w, "word " + js(j));
        require(family_words(j).v == pres.v, "reversed word " + js(j));
        require(family_parity_period_holds(j), "parity period " + js(j));
    }
}

// 4. Cocycle closed forms against symbolic evaluation.
void cocycle_closed_forms() {
    for (std::int64_t j = 1; j <= 20; ++j) {
        const auto bad = family_cocycle_mismatches(j);
        require(bad.empty(), js(j) + ": " + (bad.empty() ? "" : bad.front()));
    }
}

// 5. Longitude identities.
void longitude_identities() {
    const Poly q{1, 0, -4, 0, 1};
    for (std::int64_t j = 1; j <= 20; ++j) {
        const RigidityIdentity r = rigidity_identity(j);
        const LaurentPoly beta =
            LaurentPoly(Poly{-1, 0, 0, 0, 1} * (Poly::monomial(1, 4) + Poly(Rational(j)) * q * q)).shift(-5);
        require(r.beta_identity == beta, "beta identity " + js(j));
        const LaurentPoly alpha(Poly{-1, 0, 0, 0, 1} *
                                Poly{2 * j, 0, -(6 * j + 1), 0, 2 * j});
        require(r.alpha_unit.is_monomial() && r.alpha_identity == r.alpha_unit * alpha, "alpha identity " + js(j));
    }
}

// 6. H^1 of the knot group is a line and vanishes after the 0-filling.
void main_vanishing() {
    for (std::int64_t j = 1; j <= 20; ++j) {
        const TwoBridgeFraction f = TwoBridgeFraction::family(j);
        const BranchPtr root = alexander_branch(family_delta(j));
        const auto reports = check_rigidity(f, root);
        Poly prod{1};
        for (const auto& r : reports) {
            prod = prod * r.modulus_in_t;
            require(r.dims_knot == CohomologyDims{4, 3, 0, 1}, "knot dims " + js(j));
            require(r.dims_filled.h1 == 0 && r.dims_filled.h0 == 0 && r.dims_filled.b1 == 3, "filled dims " + js(j));
        }
        require(!reports.empty() && prod == root->modulus(), "branches cover the modulus " + js(j));
    }
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string("\"") + TWOBRIDGE_CLI_PATH + "\" " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// 7. The command-line certificate end to end.
void certificate_end_to_end() {
    for (std::int64_t j = 1; j <= 20; ++j) {
        const std::string path = "/tmp/twobridge_acceptance_" + std::to_string(j) + ".json";
        require(run_cli("certify --family-j " + std::to_string(j) + " --json " + path) == 0, "exit code " + js(j));
        std::ifstream in(path);
        const auto doc = nlohmann::json::parse(in);
        require(doc["certificate"]["verdict"] == "APPLIES", "verdict " + js(j));
        std::remove(path.c_str());
    }
    const std::string path = "/tmp/twobridge_acceptance_trefoil.json";
    require(run_cli("certify --pq 3/1 --json " + path) == 1, "trefoil exit code");
    std::ifstream in(path);
    require(nlohmann::json::parse(in)["certificate"]["verdict"] == "INAPPLICABLE_NO_ROOT", "trefoil verdict");
    std::remove(path.c_str());
    require(run_cli("certify --pq 4/1") == 2, "4/1 exit code");
}

// 8. Property suites.
void property_suites() {
    using LP = LaurentPoly;
    std::mt19937 rng(20240607);
    for (int i = 0; i < 100; ++i) {
        const auto a = testing::random_unimodular(rng);
        const auto b = testing::random_unimodular(rng);
        require(adjoint(a * b) == adjoint(a) * adjoint(b), "adjoint multiplicativity");
    }
    const AdjointRep<LP> ad(laurent_reducible_rep());
    for (int i = 0; i < 100; ++i) {
        const Word a = testing::random_word(rng, 8);
        const Word b = testing::random_word(rng, 8);
        CocycleValues<LP> z;
        for (auto& c : z.zx) c = testing::random_laurent(rng, 1);
        for (auto& c : z.zy) c = testing::random_laurent(rng, 1);
        require(eval_cocycle(a * b, z, ad) == eval_cocycle(a, z, ad) + eval_word_adjoint(a, ad) * eval_cocycle(b, z, ad),
                "cocycle law");
    }

    // every computed Delta is reciprocal; every system contains B^1; nullspace certificates; branch conservation
    std::vector<TwoBridgeFraction> knots;
    for (std::int64_t p = 3; p < 40; p += 2)
        for (std::int64_t q = 1; q < p; ++q)
            if (std::gcd(p, q) == 1) knots.emplace_back(p, q);
    for (std::int64_t j = 1; j <= 3; ++j) knots.push_back(TwoBridgeFraction::family(j));
    for (const auto& f : knots) {
        const KnotPresentation pres = build_presentation(f);
        const Poly d = alexander_via_rep(pres);
        require(is_reciprocal(d), "reciprocal " + f.str());
        for (const auto& factor : squarefree_decomposition(d)) {
            const BranchPtr root = alexander_branch(factor.factor);
            if (!root) continue;
            Poly prod{1};
            const auto leaves = on_leaves(root, [&](const BranchPtr& b) {
                const AdjointRep<QElem> qad(burde_derham_assignment(b, pres.relator));
                for (const auto& rels : {std::vector<Word>{pres.relator}, std::vector<Word>{pres.relator, pres.longitude}}) {
                    const auto data = cohomology_data<QElem>(rels, qad);  // throws if B^1 escapes Z^1
                    const Matrix<QElem> sys = relator_system(rels, qad);
                    for (const auto& v : data.cocycles.basis)
                        for (const auto& e : sys.apply(v)) require(e.is_zero(), "nullspace certificate " + f.str());
                }
                return 0;
            });
            for (const auto& l : leaves) prod = prod * l.branch->modulus();
            require(prod == root->modulus(), "branch conservation " + f.str());
        }
    }
    // forced splitting
    const Poly m = Poly{-1, 0, 1} * Poly{-2, 0, 1} * Poly{-3, 1};
    const BranchPtr b = make_branch(m);
    const QElem zero(b, Rational(0));
    Matrix<QElem> mat(2, 2, zero);
    mat(0, 0) = QElem::generator(b) - QElem(b, Rational(1));
    mat(1, 1) = QElem(b, Poly{-2, 0, 1});
    Poly prod{1};
    for (const auto& leaf : nullspace_dim(mat, b)) {
        prod = prod * leaf.branch->modulus();
        for (const auto& v : leaf.basis)
            for (const auto& e : lift_matrix(mat, leaf.branch).apply(v)) require(e.is_zero(), "split nullspace certificate");
    }
    require(prod == m, "split branch conservation");

    // exact ranks against 100-digit elimination at isolated real roots
    const testing::Float tol("1e-60");
    for (std::int64_t j : {1, 2}) {
        const KnotPresentation pres = build_presentation(TwoBridgeFraction::family(j));
        const BranchPtr root = alexander_branch(family_delta(j));
        const auto reports = check_rigidity(pres, root);
        for (const auto& t : testing::float_real_roots(root->modulus())) {
            require(testing::float_rank(testing::float_relator_rows({pres.relator}, t), tol) == 6 - reports[0].dims_knot.z1,
                    "float rank knot " + js(j));
            require(testing::float_rank(testing::float_relator_rows({pres.relator, pres.longitude}, t), tol) ==
                        6 - reports[0].dims_filled.z1,
                    "float rank filled " + js(j));
        }
    }
}

// 9. Small knots against independent computations.
void cross_knot_oracle() {
    require(alexander_via_rep(TwoBridgeFraction(5, 2)) == Poly{1, -3, 1}, "figure-eight rep route");
    require(alexander_via_fox(TwoBridgeFraction(5, 2)) == Poly{1, -3, 1}, "figure-eight Fox route");
    require(alexander_via_rep(TwoBridgeFraction(3, 1)) == Poly{1, -1, 1}, "trefoil rep route");
    require(alexander_via_fox(TwoBridgeFraction(3, 1)) == Poly{1, -1, 1}, "trefoil Fox route");
    std::ifstream in(TWOBRIDGE_FIXTURE_DIR "/cohomology_dims_oracle.json");
    require(in.good(), "fixture missing");
    const auto fixture = nlohmann::json::parse(in);
    require(fixture.contains("5/2"), "fixture lacks the figure-eight");
    for (const auto& [key, roots] : fixture.items()) {
        const TwoBridgeFraction f = TwoBridgeFraction::parse(key);
        const auto reports = check_rigidity(f, alexander_branch(alexander_via_fox(f)));
        require(reports.size() == 1, "single leaf for " + key);
        for (const auto& r : roots) {
            const auto& k = r.at("knot");
            const auto& g = r.at("filled");
            require(reports[0].dims_knot == CohomologyDims{k.at("z1"), k.at("b1"), k.at("h0"), k.at("h1")},
                    "knot dims " + key);
            require(reports[0].dims_filled == CohomologyDims{g.at("z1"), g.at("b1"), g.at("h0"), g.at("h1")},
                    "filled dims " + key);
        }
    }
}

struct Criterion {
    int id;
    std::string name;
    double limit_s;  // 0: no time limit
    std::function<void()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "Alexander polynomial of the family, both routes, j=1..50", 30, alexander_family},
        {2, "Alexander roots: 4 in (0,5), none beyond, square-free, Delta(1)=1, j=1..50", 10, alexander_roots},
        {3, "Riley word closed form and parity period, j=1..200", 10, riley_words},
        {4, "cocycle closed forms vs symbolic evaluation, j=1..20", 60, cocycle_closed_forms},
        {5, "longitude identities for beta and alpha, j=1..20", 0, longitude_identities},
        {6, "H1(knot)=1, H1(0-filling)=0, H0=0, B1=3 on every branch, j=1..20", 300, main_vanishing},
        {7, "certify end to end: family APPLIES, 3/1 no root, 4/1 invalid", 0, certificate_end_to_end},
        {8, "property suites", 0, property_suites},
        {9, "figure-eight and trefoil against independent oracles", 0, cross_knot_oracle},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = Clock::now();
        std::string why;
        try {
            c.run();
        } catch (const Failure& f) {
            why = f.why;
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        if (why.empty() && c.limit_s > 0 && secs >= c.limit_s) why = "over the time limit";
        std::ostringstream line;
        line << (why.empty() ? "PASS" : "FAIL") << "  criterion " << c.id << "  " << c.name << "  [" << std::fixed;
        line.precision(2);
        line << secs << " s";
        if (c.limit_s > 0) line << " / limit " << c.limit_s << " s";
        line << "]";
        if (!why.empty()) line << "  " << why;
        std::cout << line.str() << std::endl;
        failed += !why.empty();
    }
    std::cout << (failed ? "FAILED " : "passed ") << (criteria.size() - failed) << "/" << criteria.size() << std::endl;
    return failed ? 1 : 0;
}
