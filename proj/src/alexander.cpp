#include "twobridge/alexander.hpp"

namespace twobridge {

Poly normalize_alexander(const LaurentPoly& a) {
    if (a.is_zero()) throw std::domain_error("Alexander polynomial cannot be zero");
    return primitive_part(a.shift(-a.low()).to_poly());
}

LaurentPoly f_upper_entry(std::int64_t j) {
    if (j < 1) throw std::invalid_argument("j must be >= 1");
    const Rational jj(j);
    const Rational k(5 * j + 1);
    return LaurentPoly::from_terms({{3, -jj}, {1, k}, {-1, -k}, {-3, jj}});
}

LaurentPoly riley_condition(const KnotPresentation& pres) {
    const auto rep = laurent_reducible_rep();
    const Word x{x_letter()};
    const Word y{y_letter()};
    const auto lhs = eval_word_matrix(x * pres.w, rep);
    const auto rhs = eval_word_matrix(pres.w * y, rep);
    if (!(lhs.a == rhs.a) || !(lhs.d == rhs.d) || !lhs.c.is_zero() || !rhs.c.is_zero())
        throw CrossCheckFailure("reducible representation lost its triangular shape");
    return lhs.b - rhs.b;
}

Poly alexander_via_rep(const KnotPresentation& pres) {
    const LaurentPoly cond = riley_condition(pres);
    if (cond.is_zero()) throw CrossCheckFailure("Riley condition vanishes identically");
    if (!cond.is_even()) throw CrossCheckFailure("Riley condition has odd exponents: " + cond.str("tau"));
    return normalize_alexander(cond.halve_exponents());
}

Poly alexander_via_rep(const TwoBridgeFraction& f) { return alexander_via_rep(build_presentation(f)); }

LaurentPoly fox_derivative_abelianized(const Word& r, Generator g) {
    // d(uv)/dg = du/dg + u dv/dg; each letter contributes tau^(prefix exponent).
    LaurentPoly out;
    long k = 0;
    for (const Letter& l : r.letters()) {
        if (l.sign > 0) {
            if (l.gen == g) out += LaurentPoly::monomial(1, k);
            ++k;
        } else {
            --k;
            if (l.gen == g) out -= LaurentPoly::monomial(1, k);
        }
    }
    return out;
}

Poly alexander_via_fox(const KnotPresentation& pres) {
    const LaurentPoly d = fox_derivative_abelianized(pres.relator, Generator::X);
    return normalize_alexander(d);
}

Poly alexander_via_fox(const TwoBridgeFraction& f) { return alexander_via_fox(build_presentation(f)); }

bool is_reciprocal(const Poly& a) {
    const auto& c = a.coeffs();
    return std::equal(c.begin(), c.end(), c.rbegin());
}

RepAssignment<QElem> burde_derham_assignment(const BranchPtr& branch, const Word& relator) {
    const Poly& h = branch->modulus();
    if (poly_gcd(h, Poly::x()).degree() > 0) throw std::invalid_argument("branch contains t = 0");
    if (poly_gcd(h, Poly{-1, 0, 1}).degree() > 0) throw std::invalid_argument("branch contains t = +-1");
    const QElem t = QElem::generator(branch);
    const QElem ti = inverse_or_throw(t);
    const QElem zero(branch, Rational(0));
    const QElem one(branch, Rational(1));
    RepAssignment<QElem> rep{{t, zero, zero, ti}, {t, one, zero, ti}};
    const auto img = eval_word_matrix(relator, rep);
    if (!(img == Mat2<QElem>::identity(one)))
        throw CrossCheckFailure("relator is not satisfied on branch " + h.str() + " (modulus does not divide Delta(t^2))");
    return rep;
}

}  // namespace twobridge
