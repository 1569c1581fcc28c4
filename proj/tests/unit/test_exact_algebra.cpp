#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "support/random.hpp"
#include "twobridge/laurent.hpp"
#include "twobridge/matrix.hpp"
#include "twobridge/poly.hpp"
#include "twobridge/quotient_ring.hpp"
#include "twobridge/sturm.hpp"

using namespace twobridge;
using twobridge::testing::random_poly;
using twobridge::testing::random_rational;

namespace {
const Poly delta1{1, -7, 13, -7, 1};
}

TEST_CASE("rationals print and parse") {
    CHECK(rational_str(parse_rational("-3/6")) == "-1/2");
    CHECK(rational_str(Rational(4)) == "4");
    CHECK(parse_rational("-1/2") == Rational(-1, 2));
    CHECK(parse_rational("10/4") == Rational(5, 2));
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("polynomial arithmetic") {
    const Poly a{1, 2, 3};
    CHECK(a.degree() == 2);
    CHECK(Poly{}.degree() == -1);
    CHECK(Poly{0, 0}.is_zero());
    CHECK(a.eval(Rational(2)) == 17);
    CHECK(a.derivative() == Poly{2, 6});
    CHECK(a * Poly{-1, 1} == Poly{-1, -1, -1, 3});
    CHECK(a - a == Poly{});
    const auto [q, r] = divmod(Poly{-1, 0, 0, 1}, Poly{-1, 1});
    CHECK(q == Poly{1, 1, 1});
    CHECK(r.is_zero());
    CHECK_THROWS(divmod(a, Poly{}));
    CHECK_THROWS_AS(exact_div(a, Poly{0, 1}), std::domain_error);
    CHECK(a.str("tau") == "3tau^2 + 2tau + 1");
    CHECK(Poly::from_strings(a.to_strings()) == a);
    CHECK(primitive_part(Poly(std::vector<Rational>{Rational(-1, 2), Rational(3, 4)})) == Poly{-2, 3});
}

TEST_CASE("poly_gcd examples") {
    CHECK(poly_gcd(Poly{-1, 0, 1}, Poly{-1, 1}) == Poly{-1, 1});
    CHECK(poly_gcd(delta1, delta1.derivative()) == Poly{1});
    CHECK(poly_gcd(Poly{2, 4}, Poly{}) == Poly(std::vector<Rational>{Rational(1, 2), 1}));
    CHECK_THROWS(poly_gcd(Poly{}, Poly{}));
}

TEST_CASE("square-free decomposition examples") {
    CHECK(squarefree_decomposition(Poly{1, -2, 1}) == std::vector<SquarefreeFactor>{{Poly{-1, 1}, 2}});
    CHECK(squarefree_decomposition(delta1) == std::vector<SquarefreeFactor>{{delta1, 1}});
    const auto d = squarefree_decomposition(Poly{0, 0, -1, 1});
    REQUIRE(d.size() == 2);
    const std::vector<SquarefreeFactor> expected{{Poly{0, 1}, 2}, {Poly{-1, 1}, 1}};
    CHECK(std::is_permutation(d.begin(), d.end(), expected.begin()));
    CHECK(squarefree_part(Poly{0, 0, -1, 1}) == Poly{0, -1, 1});
}

TEST_CASE("substitute t^2") {
    CHECK(substitute_tsquared(Poly{-1, 1}) == Poly{-1, 0, 1});
    CHECK(substitute_tsquared(delta1) == Poly{1, 0, -7, 0, 13, 0, -7, 0, 1});
    CHECK(substitute_tsquared(Poly(Rational(5, 3))) == Poly(Rational(5, 3)));
    CHECK(substitute_neg(Poly{1, 2, 3}) == Poly{1, -2, 3});
}

TEST_CASE("Sturm counts") {
    CHECK(sturm_count(delta1, Rational(0), Rational(5)) == 4);
    CHECK(sturm_count(delta1, Rational(5), std::nullopt) == 0);
    CHECK(sturm_count(Poly{1, -3, 1}, Rational(0), Rational(1)) == 1);
    CHECK(sturm_count(Poly{1, 0, 1}, std::nullopt, std::nullopt) == 0);
    CHECK_THROWS_AS(sturm_count(Poly{-1, 1}, Rational(1), Rational(2)), EndpointIsRoot);
    // sign table at 0, 1/2, 1, 2, 5 puts one root in each gap
    const std::vector<Rational> cuts{0, Rational(1, 2), 1, 2, 5};
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) CHECK(sturm_count(delta1, cuts[i], cuts[i + 1]) == 1);
}

TEST_CASE("real root isolation") {
    const auto roots = isolate_real_roots(delta1);
    REQUIRE(roots.size() == 4);
    const std::vector<std::pair<Rational, Rational>> gaps{{0, Rational(1, 2)}, {Rational(1, 2), 1}, {1, 2}, {2, 5}};
    for (std::size_t i = 0; i < 4; ++i) {
        const RootInterval fine = refine_root(delta1, roots[i], Rational(1, 1000));
        CHECK(fine.width() < Rational(1, 1000));
        CHECK(fine.lo >= gaps[i].first);
        CHECK(fine.hi <= gaps[i].second);
        CHECK(sturm_count(delta1, fine.lo, fine.hi) == 1);
    }
    const auto golden = isolate_real_roots(Poly{1, -3, 1});
    REQUIRE(golden.size() == 2);
    CHECK(decimal_str(refine_root(Poly{1, -3, 1}, golden[0], Rational(1, 100000000)).midpoint(), 6) == "0.381966");
    CHECK(decimal_str(refine_root(Poly{1, -3, 1}, golden[1], Rational(1, 100000000)).midpoint(), 6) == "2.618034");
    const auto one = isolate_real_roots(Poly{-1, 1});
    REQUIRE(one.size() == 1);
    CHECK(one[0].contains(1));
    CHECK(isolate_real_roots(Poly{1, 0, 1}).empty());
}

TEST_CASE("decimal rendering") {
    CHECK(decimal_str(Rational(-1, 3), 3) == "-0.333");
    CHECK(decimal_str(Rational(2, 3), 2) == "0.67");
    CHECK(decimal_str(Rational(5), 0) == "5");
}

TEST_CASE("exact-algebra properties") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Poly a = random_poly(rng, 6);
        Poly b = random_poly(rng, 5);
        if (a.is_zero() && b.is_zero()) continue;
        const Poly g = poly_gcd(a, b);
        CHECK((a % g).is_zero());
        CHECK((b % g).is_zero());
        if (!a.is_zero() && !b.is_zero())
            CHECK(poly_gcd(exact_div(a, g), exact_div(b, g)).degree() == 0);
        const ExtendedGcd e = poly_xgcd(a, b);
        CHECK(e.s * a + e.t * b == e.gcd);

        // square-free reconstruction from a product with repeated factors
        const Poly c = random_poly(rng, 2);
        const Poly m = a.is_zero() ? c * c : a * c * c;
        if (m.is_zero()) continue;
        Poly prod{1};
        for (const auto& f : squarefree_decomposition(m)) {
            CHECK(poly_gcd(f.factor, f.factor.derivative()).degree() == 0);
            for (int i = 0; i < f.multiplicity; ++i) prod = prod * f.factor;
        }
        CHECK(prod == m.monic());

        // isolation agrees with the total Sturm count
        const Poly sf = squarefree_part(m);
        if (sf.degree() >= 1) CHECK(static_cast<int>(isolate_real_roots(sf).size()) == sturm_count(sf, std::nullopt, std::nullopt));
    }
}

TEST_CASE("Laurent polynomials") {
    const LaurentPoly t = LaurentPoly::t();
    const LaurentPoly ti = LaurentPoly::t_inv();
    CHECK(t * ti == LaurentPoly(1));
    const LaurentPoly f = LaurentPoly::from_terms({{3, -1}, {1, 6}, {-1, -6}, {-3, 1}});
    CHECK(f.low() == -3);
    CHECK(f.high() == 3);
    CHECK(f.coeff(1) == 6);
    CHECK(f.reflect() == -f);
    CHECK(f.shift(3).to_poly() == Poly{1, 0, -6, 0, 6, 0, -1});
    CHECK((t * t - LaurentPoly(1)).is_even());
    CHECK((t * t - LaurentPoly(1)).halve_exponents() == t - LaurentPoly(1));
    CHECK(divide_by_monomial(f, LaurentPoly::monomial(-1, 2)) == -f.shift(-2));
    CHECK((f - f).is_zero());
}

TEST_CASE("branch inversion") {
    const BranchPtr b1 = make_branch(Poly{-1, 0, 1});
    const QElem t1 = QElem::generator(b1);
    const auto r = branch_invert(t1 - QElem(b1, Rational(1)));
    REQUIRE(std::holds_alternative<Split>(r));
    CHECK(std::get<Split>(r).factor == Poly{-1, 1});
    CHECK(std::get<Split>(r).cofactor == Poly{1, 1});
    CHECK_THROWS_AS(inverse_or_throw(t1 + QElem(b1, Rational(1))), BranchSplit);

    const BranchPtr b2 = make_branch(Poly{-2, 0, 1});
    const QElem t2 = QElem::generator(b2);
    const auto inv = std::get<QElem>(branch_invert(t2));
    CHECK(inv.value() == Poly(std::vector<Rational>{0, Rational(1, 2)}));
    CHECK(inv * t2 == QElem(b2, Rational(1)));
    CHECK(inverse_or_throw(QElem(b2, Rational(-3, 7))).value() == Poly(Rational(-7, 3)));
    CHECK_THROWS(make_branch(Poly{1, -2, 1}));  // not square-free
    CHECK_THROWS(make_branch(Poly{3}));
    CHECK(t2 * t2 == QElem(b2, Rational(2)));
}

TEST_CASE("on_leaves splits and conserves the modulus") {
    const Poly root = Poly{-1, 0, 1} * Poly{-2, 0, 1} * Poly{-3, 1};
    const BranchPtr b = make_branch(root);
    // zero-test, then invert (t - 1) and (t^2 - 2): forces two splits
    auto leaves = on_leaves(b, [](const BranchPtr& br) {
        const QElem t = QElem::generator(br);
        const QElem one(br, Rational(1));
        if ((t - one).is_zero()) return 0;
        inverse_or_throw(t - one);
        if ((t * t - one - one).is_zero()) return 1;
        inverse_or_throw(t * t - one - one);
        return 2;
    });
    Poly prod{1};
    for (const auto& l : leaves) prod = prod * l.branch->modulus();
    CHECK(prod == root);
    CHECK(leaves.size() == 3);
    for (std::size_t i = 1; i < leaves.size(); ++i)
        CHECK(poly_less(leaves[i - 1].branch->modulus(), leaves[i].branch->modulus()));
    for (const auto& l : leaves) {
        if (l.branch->modulus() == Poly{-1, 1}) CHECK(l.value == 0);
        if (l.branch->modulus() == Poly{-2, 0, 1}) CHECK(l.value == 1);
        if (l.branch->modulus() == Poly{-3, -2, 1}) CHECK(l.value == 2);
        for (const auto& rec : l.branch->lineage()) CHECK(rec.factor * rec.cofactor == rec.parent);
    }
}

TEST_CASE("nullspace over Q") {
    Matrix<Rational> id(3, 3, Rational(0));
    for (std::size_t i = 0; i < 3; ++i) id(i, i) = 1;
    CHECK(nullspace(id).dim() == 0);
    CHECK(nullspace(Matrix<Rational>(3, 3, Rational(0))).dim() == 3);
    CHECK(nullspace(Matrix<Rational>(0, 4, Rational(0)), Rational(0)).dim() == 4);
    CHECK_THROWS(nullspace(Matrix<Rational>(0, 4, Rational(0))));

    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        // random matrix of controlled rank: product of 5xk and kx6 factors
        const std::size_t k = std::uniform_int_distribution<std::size_t>(0, 5)(rng);
        Matrix<Rational> a(5, k, Rational(0)), c(k, 6, Rational(0));
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < k; ++j) a(i, j) = random_rational(rng, 3);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < 6; ++j) c(i, j) = random_rational(rng, 3);
        Matrix<Rational> m(5, 6, Rational(0));
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 6; ++j)
                for (std::size_t l = 0; l < k; ++l) m(i, j) += a(i, l) * c(l, j);
        const auto ns = nullspace(m);
        CHECK(ns.rank + ns.dim() == 6);
        CHECK(ns.rank <= k);
        for (const auto& v : ns.basis)
            for (const auto& e : m.apply(v)) CHECK(e == 0);
        std::vector<std::size_t> perm(5);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(nullspace(m.permuted_rows(perm)).dim() == ns.dim());
    }
}

TEST_CASE("nullspace over a splitting quotient ring") {
    const Poly root = Poly{-1, 0, 1} * Poly{-2, 0, 1};
    const BranchPtr b = make_branch(root);
    const QElem t = QElem::generator(b);
    const QElem one(b, Rational(1));
    const QElem zero(b, Rational(0));
    // [[t - 1, 1], [0, t^2 - 2]]: rank 2 generically, rank 1 where t = 1 or t^2 = 2
    Matrix<QElem> m(2, 2, zero);
    m(0, 0) = t - one;
    m(0, 1) = one;
    m(1, 1) = t * t - one - one;
    const auto leaves = nullspace_dim(m, b);
    Poly prod{1};
    int total_dim = 0;
    for (const auto& l : leaves) {
        prod = prod * l.branch->modulus();
        total_dim += static_cast<int>(l.dim) * static_cast<int>(l.branch->degree());
        const Matrix<QElem> lifted = lift_matrix(m, l.branch);
        for (const auto& v : l.basis)
            for (const auto& e : lifted.apply(v)) CHECK(e.is_zero());
        if (l.branch->modulus() == Poly{-2, 0, 1} || l.branch->modulus() == Poly{-1, 1}) CHECK(l.dim == 1);
        if (l.branch->modulus() == Poly{1, 1}) CHECK(l.dim == 0);
    }
    CHECK(prod == root);
    CHECK(leaves.size() == 3);
    CHECK(total_dim == 3);

    Matrix<QElem> id(3, 3, zero);
    for (std::size_t i = 0; i < 3; ++i) id(i, i) = one;
    const auto idl = nullspace_dim(id, b);
    REQUIRE(idl.size() == 1);
    CHECK(idl[0].dim == 0);
    const auto zl = nullspace_dim(Matrix<QElem>(3, 3, zero), b);
    REQUIRE(zl.size() == 1);
    CHECK(zl[0].dim == 3);
}
