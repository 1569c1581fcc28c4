#include "twobridge/family_identities.hpp"

namespace twobridge {

namespace {

using LP = LaurentPoly;

LP terms(std::initializer_list<std::pair<long, Rational>> t) { return LP::from_terms(t); }

Mat3<LP> geometric_sum(const Mat3<LP>& a, std::int64_t n) {
    Mat3<LP> acc = Mat3<LP>::zero(LP());
    Mat3<LP> p = Mat3<LP>::identity(LP());
    for (std::int64_t i = 0; i < n; ++i) {
        acc = acc + p;
        p = p * a;
    }
    return acc;
}

struct Evaluations {
    Vec3<LP> w_alpha, w_beta, v_alpha, v_beta;
    Vec3<LP> u_alpha, u_beta, s_alpha, s_beta;
    Mat3<LP> ad_w;
    Vec3<LP> l_alpha, l_beta;
    FamilyWords words;
};

Evaluations evaluate(std::int64_t j) {
    const AdjointRep<LP> ad(laurent_reducible_rep());
    const CocycleValues<LP> za{{0, 1, 0}, {0, 1, 0}};
    const CocycleValues<LP> zb{{0, 0, 1}, {0, 0, 0}};
    Evaluations e;
    e.words = family_words(j);
    e.w_alpha = eval_cocycle(e.words.w, za, ad);
    e.w_beta = eval_cocycle(e.words.w, zb, ad);
    e.v_alpha = eval_cocycle(e.words.v, za, ad);
    e.v_beta = eval_cocycle(e.words.v, zb, ad);
    e.u_alpha = eval_cocycle(e.words.u, za, ad);
    e.u_beta = eval_cocycle(e.words.u, zb, ad);
    e.s_alpha = eval_cocycle(e.words.s, za, ad);
    e.s_beta = eval_cocycle(e.words.s, zb, ad);
    e.ad_w = eval_word_adjoint(e.words.w, ad);
    const Word l = e.words.w * e.words.v;
    e.l_alpha = eval_cocycle(l, za, ad);
    e.l_beta = eval_cocycle(l, zb, ad);
    return e;
}

}  // namespace

LaurentPoly family_g() { return terms({{3, 1}, {1, -5}, {-1, 5}, {-3, -1}}); }

Poly family_alpha_quadratic(std::int64_t j) {
    return Poly(std::vector<Rational>{Rational(2 * j), Rational(-(6 * j + 1)), Rational(2 * j)});
}

FamilyCocycleForms family_cocycle_closed_forms(std::int64_t j) {
    if (j < 1) throw std::invalid_argument("j must be >= 1");
    const Rational J(j);
    const Rational half(1, 2);
    const LP t = LP::t();
    const LP f = f_upper_entry(j);
    const LP g = family_g();

    FamilyCocycleForms c;
    c.omega1_alpha = terms({{3, -4 * J}, {1, 10 * J + 2}, {-3, -2 * J}});
    c.omega2_beta = terms({{7, half * J * (J + 1)},
                           {5, -5 * J * (J + 1)},
                           {3, half * (35 * J * J + 31 * J + 2)},
                           {1, -half * (52 * J * J + 28 * J + 4)},
                           {-1, half * J * (35 * J - 3)},
                           {-3, -half * J * (10 * J - 6)},
                           {-5, half * J * (J - 1)}});
    c.nu2_beta = terms({{7, half * J * (J + 1)},
                        {5, -5 * J * (J + 1)},
                        {3, half * (35 * J * J + 27 * J + 2)},
                        {1, -half * (52 * J * J + 12 * J)},
                        {-1, half * J * (35 * J - 7)},
                        {-3, -half * J * (10 * J - 6)},
                        {-5, half * J * (J - 1)}});
    c.omega3_beta = t * f;
    c.nu3_beta = -(t * f);

    const LP jj = LP(J);
    const LP tri = LP(Rational(J * J - J));
    const LP tet = LP(Rational((2 * J * J * J - 3 * J * J + J) / 6));
    c.sum_u.m = {jj, tri * g, -(tet * g * g), 0, jj, -(LP(half) * tri * g), 0, 0, jj};
    c.sum_s.m = {jj, -(tri * g), -(tet * g * g), 0, jj, LP(half) * tri * g, 0, 0, jj};

    c.zu1_alpha = terms({{3, -4}, {1, 10}, {-3, -2}});
    c.zu2_beta = terms({{7, 1}, {5, -9}, {3, 27}, {1, -30}, {-1, 10}, {-3, -1}});
    c.zu3_beta = terms({{4, -1}, {2, 5}, {0, -5}, {-2, 1}});
    c.zs1_alpha = terms({{3, 4}, {1, -10}, {-3, 2}});
    c.zs2_beta = terms({{7, 1}, {5, -9}, {3, 25}, {1, -22}, {-1, 8}, {-3, -1}});
    c.zs3_beta = terms({{4, 1}, {2, -5}, {0, 5}, {-2, -1}});
    return c;
}

FamilyCocycleForms family_cocycle_computed(std::int64_t j) {
    if (j < 1) throw std::invalid_argument("j must be >= 1");
    const Evaluations e = evaluate(j);
    const AdjointRep<LP> ad(laurent_reducible_rep());

    FamilyCocycleForms c;
    c.omega1_alpha = e.w_alpha[0];
    c.omega1_beta = e.w_beta[0];
    c.omega2_alpha = e.w_alpha[1];
    c.omega2_beta = e.w_beta[1];
    c.omega3_alpha = e.w_alpha[2];
    c.omega3_beta = e.w_beta[2];
    c.nu1_alpha = e.v_alpha[0];
    c.nu1_beta = e.v_beta[0];
    c.nu2_alpha = e.v_alpha[1];
    c.nu2_beta = e.v_beta[1];
    c.nu3_alpha = e.v_alpha[2];
    c.nu3_beta = e.v_beta[2];
    c.sum_u = geometric_sum(eval_word_adjoint(e.words.u, ad), j);
    c.sum_s = geometric_sum(eval_word_adjoint(e.words.s, ad), j);
    c.zu1_alpha = e.u_alpha[0];
    c.zu2_beta = e.u_beta[1];
    c.zu3_beta = e.u_beta[2];
    c.zs1_alpha = e.s_alpha[0];
    c.zs2_beta = e.s_beta[1];
    c.zs3_beta = e.s_beta[2];
    return c;
}

std::vector<std::string> family_cocycle_mismatches(std::int64_t j) {
    const auto want = family_cocycle_closed_forms(j);
    const auto got = family_cocycle_computed(j);
    const Evaluations e = evaluate(j);
    std::vector<std::string> bad;
    auto check = [&](const char* name, const LP& a, const LP& b) {
        if (!(a == b)) bad.push_back(std::string(name) + ": computed " + a.str() + ", expected " + b.str());
    };
    check("omega1.alpha", got.omega1_alpha, want.omega1_alpha);
    check("omega2.alpha", got.omega2_alpha, LP());
    check("omega2.beta", got.omega2_beta, want.omega2_beta);
    check("omega3.alpha", got.omega3_alpha, LP());
    check("omega3.beta", got.omega3_beta, want.omega3_beta);
    check("nu2.alpha", got.nu2_alpha, LP());
    check("nu2.beta", got.nu2_beta, want.nu2_beta);
    check("nu3.alpha", got.nu3_alpha, LP());
    check("nu3.beta", got.nu3_beta, want.nu3_beta);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            const std::string idx = "[" + std::to_string(r) + "][" + std::to_string(c) + "]";
            check(("sum_u" + idx).c_str(), got.sum_u(r, c), want.sum_u(r, c));
            check(("sum_s" + idx).c_str(), got.sum_s(r, c), want.sum_s(r, c));
        }
    check("z(u)1.alpha", got.zu1_alpha, want.zu1_alpha);
    check("z(u)2.alpha", e.u_alpha[1], LP());
    check("z(u)2.beta", got.zu2_beta, want.zu2_beta);
    check("z(u)3.alpha", e.u_alpha[2], LP());
    check("z(u)3.beta", got.zu3_beta, want.zu3_beta);
    check("z(s)1.alpha", got.zs1_alpha, want.zs1_alpha);
    check("z(s)2.alpha", e.s_alpha[1], LP());
    check("z(s)2.beta", got.zs2_beta, want.zs2_beta);
    check("z(s)3.alpha", e.s_alpha[2], LP());
    check("z(s)3.beta", got.zs3_beta, want.zs3_beta);
    return bad;
}

RigidityIdentity rigidity_identity(std::int64_t j) {
    if (j < 1) throw std::invalid_argument("j must be >= 1");
    const Evaluations e = evaluate(j);
    const LP f = f_upper_entry(j);
    const LP t = LP::t();
    const LP J{Rational(j)};

    // Ad(rho(w)) is unipotent upper triangular with f in the (2,3) slot.
    const Mat3<LP> expected_ad_w{{1, -(LP(2) * f), -(f * f), 0, 1, f, 0, 0, 1}};
    if (!(e.ad_w == expected_ad_w)) throw CrossCheckFailure("Ad(rho(w)) is not the expected unipotent matrix");

    RigidityIdentity out;
    const LP second_alpha = e.w_alpha[1] + e.v_alpha[1] + f * e.v_alpha[2];
    out.beta_identity = e.w_beta[1] + e.v_beta[1] + f * e.v_beta[2];
    if (!second_alpha.is_zero()) throw CrossCheckFailure("z(l)_2 has an alpha part: " + second_alpha.str());
    // Same quantity straight from the cocycle on l = wv.
    if (!(e.l_beta[1] == out.beta_identity) || !(e.l_alpha[1] == second_alpha))
        throw CrossCheckFailure("z(wv)_2 disagrees with omega2 + nu2 + f nu3");

    const LP q = terms({{4, 1}, {2, -4}, {0, 1}});
    const LP t4m1 = terms({{4, 1}, {0, -1}});
    out.beta_expected = (t4m1 * (terms({{4, 1}}) + J * q * q)).shift(-5);
    if (!(out.beta_identity == out.beta_expected))
        throw CrossCheckFailure("beta identity mismatch: " + out.beta_identity.str() + " vs " + out.beta_expected.str());

    out.alpha_identity = (t * t - LP(1)) * e.w_alpha[0] + LP(2) * f;
    out.alpha_expected = t4m1 * terms({{4, Rational(2 * j)}, {2, Rational(-(6 * j + 1))}, {0, Rational(2 * j)}});
    if (out.alpha_identity.is_zero()) throw CrossCheckFailure("alpha identity vanishes");
    out.alpha_unit = LP::monomial(out.alpha_identity.coeffs().back() / out.alpha_expected.coeffs().back(),
                                  out.alpha_identity.high() - out.alpha_expected.high());
    if (!(out.alpha_unit * out.alpha_expected == out.alpha_identity))
        throw CrossCheckFailure("alpha identity mismatch: " + out.alpha_identity.str());
    return out;
}

}  // namespace twobridge
