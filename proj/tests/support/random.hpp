#pragma once

#include <random>
#include <vector>

#include "twobridge/laurent.hpp"
#include "twobridge/sl2.hpp"
#include "twobridge/word.hpp"

namespace twobridge::testing {

inline std::vector<Letter> random_letters(std::mt19937& rng, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> bit(0, 1);
    std::vector<Letter> out;
    const int n = len(rng);
    for (int i = 0; i < n; ++i)
        out.emplace_back(bit(rng) ? Generator::X : Generator::Y, bit(rng) ? 1 : -1);
    return out;
}

inline Word random_word(std::mt19937& rng, int max_len) {
    const auto letters = random_letters(rng, max_len);
    return Word(letters);
}

inline Rational random_rational(std::mt19937& rng, int range = 9) {
    std::uniform_int_distribution<int> num(-range, range);
    std::uniform_int_distribution<int> den(1, 4);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

inline Poly random_poly(std::mt19937& rng, int max_degree, int range = 9) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::vector<Rational> c;
    const int d = deg(rng);
    for (int i = 0; i <= d; ++i) c.push_back(random_rational(rng, range));
    return Poly(c);
}

inline LaurentPoly random_laurent(std::mt19937& rng, int spread = 2) {
    std::uniform_int_distribution<int> off(-spread, spread);
    std::uniform_int_distribution<int> num(-3, 3);
    std::vector<Rational> c;
    for (int i = 0; i < 3; ++i) c.push_back(Rational(num(rng)));
    return LaurentPoly(off(rng), c);
}

/// Random element of SL2(Q[t^+-1]) as a product of elementary and diagonal factors.
inline Mat2<LaurentPoly> random_unimodular(std::mt19937& rng) {
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<int> exp(-2, 2);
    Mat2<LaurentPoly> g = Mat2<LaurentPoly>::identity(LaurentPoly(1));
    for (int i = 0; i < 4; ++i) {
        Mat2<LaurentPoly> e = Mat2<LaurentPoly>::identity(LaurentPoly(1));
        switch (kind(rng)) {
            case 0: e.b = random_laurent(rng); break;
            case 1: e.c = random_laurent(rng); break;
            default: {
                const long k = exp(rng);
                e.a = LaurentPoly::monomial(1, k);
                e.d = LaurentPoly::monomial(1, -k);
            }
        }
        g = g * e;
    }
    return g;
}

}  // namespace twobridge::testing
