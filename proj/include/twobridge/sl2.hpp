#pragma once

#include <array>
#include <stdexcept>

#include "twobridge/laurent.hpp"
#include "twobridge/matrix.hpp"
#include "twobridge/word.hpp"

namespace twobridge {

/// 2x2 matrix [[a, b], [c, d]] over a commutative ring.
template <class R>
struct Mat2 {
    R a, b, c, d;

    R det() const { return a * d - b * c; }
    /// Inverse of a determinant-one matrix.
    Mat2 sl2_inverse() const { return {d, -b, -c, a}; }
    static Mat2 identity(const R& sample) { return {one_like(sample), zero_like(sample), zero_like(sample), one_like(sample)}; }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    bool operator==(const Mat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
};

template <class R>
using Vec3 = std::array<R, 3>;

/// 3x3 matrix, row-major.
template <class R>
struct Mat3 {
    std::array<R, 9> m;

    R& operator()(int r, int c) { return m[static_cast<std::size_t>(3 * r + c)]; }
    const R& operator()(int r, int c) const { return m[static_cast<std::size_t>(3 * r + c)]; }

    static Mat3 identity(const R& sample) {
        Mat3 out = zero(sample);
        for (int i = 0; i < 3; ++i) out(i, i) = one_like(sample);
        return out;
    }
    static Mat3 zero(const R& sample) {
        Mat3 out;
        out.m.fill(zero_like(sample));
        return out;
    }

    R det() const {
        const auto& s = *this;
        return s(0, 0) * (s(1, 1) * s(2, 2) - s(1, 2) * s(2, 1)) - s(0, 1) * (s(1, 0) * s(2, 2) - s(1, 2) * s(2, 0)) +
               s(0, 2) * (s(1, 0) * s(2, 1) - s(1, 1) * s(2, 0));
    }

    friend Mat3 operator*(const Mat3& x, const Mat3& y) {
        Mat3 out = zero(x.m[0]);
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k)
                for (int j = 0; j < 3; ++j) out(i, j) += x(i, k) * y(k, j);
        return out;
    }
    friend Mat3 operator+(Mat3 x, const Mat3& y) {
        for (std::size_t i = 0; i < 9; ++i) x.m[i] += y.m[i];
        return x;
    }
    friend Mat3 operator-(Mat3 x, const Mat3& y) {
        for (std::size_t i = 0; i < 9; ++i) x.m[i] -= y.m[i];
        return x;
    }
    friend Vec3<R> operator*(const Mat3& x, const Vec3<R>& v) {
        Vec3<R> out{zero_like(v[0]), zero_like(v[0]), zero_like(v[0])};
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k) out[static_cast<std::size_t>(i)] += x(i, k) * v[static_cast<std::size_t>(k)];
        return out;
    }
    bool operator==(const Mat3& o) const { return m == o.m; }
};

template <class R>
Vec3<R> operator+(Vec3<R> a, const Vec3<R>& b) {
    for (std::size_t i = 0; i < 3; ++i) a[i] += b[i];
    return a;
}
template <class R>
Vec3<R> operator-(Vec3<R> a, const Vec3<R>& b) {
    for (std::size_t i = 0; i < 3; ++i) a[i] -= b[i];
    return a;
}

class NotUnimodular : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Conjugation action X -> g X g^-1 on sl2 in the basis
/// v+ = [[0,1],[0,0]], v0 = [[1,0],[0,-1]], v- = [[0,0],[1,0]].
template <class R>
Mat3<R> adjoint(const Mat2<R>& g) {
    if (!(g.det() == one_like(g.a))) throw NotUnimodular("adjoint: determinant is not 1");
    const R two = one_like(g.a) + one_like(g.a);
    const auto& [a, b, c, d] = g;
    Mat3<R> out;
    out.m = {a * a, -(two * a * b), -(b * b),  //
             -(a * c), a * d + b * c, b * d,   //
             -(c * c), two * c * d, d * d};
    return out;
}

/// Images of the generators x and y.
template <class R>
struct RepAssignment {
    Mat2<R> x;
    Mat2<R> y;

    const Mat2<R>& image(Generator g) const { return g == Generator::X ? x : y; }
};

template <class R>
Mat2<R> eval_word_matrix(const Word& w, const RepAssignment<R>& rep) {
    Mat2<R> out = Mat2<R>::identity(rep.x.a);
    for (const Letter& l : w.letters()) {
        const Mat2<R>& g = rep.image(l.gen);
        out = out * (l.sign > 0 ? g : g.sl2_inverse());
    }
    return out;
}

/// X -> [[tau, 0], [0, 1/tau]], Y -> [[tau, 1], [0, 1/tau]] over Q[tau^+-1].
RepAssignment<LaurentPoly> laurent_reducible_rep();

}  // namespace twobridge
