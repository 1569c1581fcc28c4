#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twobridge/alexander.hpp"
#include "twobridge/matrix.hpp"
#include "twobridge/sl2.hpp"

namespace twobridge {

/// Values of a 1-cocycle on the generators, in coordinates (v+, v0, v-).
template <class R>
struct CocycleValues {
    Vec3<R> zx;
    Vec3<R> zy;

    bool operator==(const CocycleValues&) const = default;
};

/// Adjoint images of the generators and their inverses.
template <class R>
struct AdjointRep {
    Mat3<R> x, x_inv, y, y_inv;

    explicit AdjointRep(const RepAssignment<R>& rep)
        : x(adjoint(rep.x)), x_inv(adjoint(rep.x.sl2_inverse())), y(adjoint(rep.y)), y_inv(adjoint(rep.y.sl2_inverse())) {}

    const Mat3<R>& image(const Letter& l) const {
        if (l.gen == Generator::X) return l.sign > 0 ? x : x_inv;
        return l.sign > 0 ? y : y_inv;
    }
};

template <class R>
Mat3<R> eval_word_adjoint(const Word& w, const AdjointRep<R>& ad) {
    Mat3<R> out = Mat3<R>::identity(ad.x.m[0]);
    for (const Letter& l : w.letters()) out = out * ad.image(l);
    return out;
}

/// z(w) from z(x), z(y) via z(ab) = z(a) + a.z(b) and z(g^-1) = -g^-1.z(g).
template <class R>
Vec3<R> eval_cocycle(const Word& w, const CocycleValues<R>& z, const AdjointRep<R>& ad) {
    const R zero = zero_like(ad.x.m[0]);
    Vec3<R> acc{zero, zero, zero};
    Mat3<R> prefix = Mat3<R>::identity(zero);
    for (const Letter& l : w.letters()) {
        const Vec3<R>& zg = l.gen == Generator::X ? z.zx : z.zy;
        if (l.sign > 0) {
            acc = acc + prefix * zg;
            prefix = prefix * ad.image(l);
        } else {
            prefix = prefix * ad.image(l);
            acc = acc - prefix * zg;
        }
    }
    return acc;
}

template <class R>
Vec3<R> eval_cocycle(const Word& w, const CocycleValues<R>& z, const RepAssignment<R>& rep) {
    return eval_cocycle(w, z, AdjointRep<R>(rep));
}

/// Linear form of z(w) = dx z(x) + dy z(y); `action` is Ad(rho(w)).
template <class R>
struct WordJacobian {
    Mat3<R> dx;
    Mat3<R> dy;
    Mat3<R> action;
};

template <class R>
WordJacobian<R> cocycle_jacobian(const Word& w, const AdjointRep<R>& ad) {
    const R zero = zero_like(ad.x.m[0]);
    WordJacobian<R> out{Mat3<R>::zero(zero), Mat3<R>::zero(zero), Mat3<R>::identity(zero)};
    for (const Letter& l : w.letters()) {
        Mat3<R>& d = l.gen == Generator::X ? out.dx : out.dy;
        if (l.sign > 0) {
            d = d + out.action;
            out.action = out.action * ad.image(l);
        } else {
            out.action = out.action * ad.image(l);
            d = d - out.action;
        }
    }
    return out;
}

/// Stacked 3x6 blocks, one per relator; columns are (z(x) coords, z(y) coords).
template <class R>
Matrix<R> relator_system(const std::vector<Word>& relators, const AdjointRep<R>& ad) {
    const R zero = zero_like(ad.x.m[0]);
    Matrix<R> m(3 * relators.size(), 6, zero);
    for (std::size_t k = 0; k < relators.size(); ++k) {
        const auto jac = cocycle_jacobian(relators[k], ad);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                m(3 * k + static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = jac.dx(r, c);
                m(3 * k + static_cast<std::size_t>(r), static_cast<std::size_t>(c) + 3) = jac.dy(r, c);
            }
    }
    return m;
}

/// The coboundary of v: gamma -> (Ad rho(gamma) - 1) v.
template <class R>
CocycleValues<R> coboundary(const Vec3<R>& v, const AdjointRep<R>& ad) {
    const Mat3<R> id = Mat3<R>::identity(v[0]);
    return {(ad.x - id) * v, (ad.y - id) * v};
}

template <class R>
std::vector<R> flatten(const CocycleValues<R>& z) {
    return {z.zx[0], z.zx[1], z.zx[2], z.zy[0], z.zy[1], z.zy[2]};
}

template <class R>
CocycleValues<R> unflatten(const std::vector<R>& v) {
    return {{v[0], v[1], v[2]}, {v[3], v[4], v[5]}};
}

struct CohomologyDims {
    int z1 = 0;
    int b1 = 0;
    int h0 = 0;
    int h1 = 0;
    bool operator==(const CohomologyDims&) const = default;
};

class CoboundaryNotCocycle : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

template <class R>
struct CohomologyData {
    CohomologyDims dims;
    Nullspace<R> cocycles;  // basis of Z^1 as flattened (z(x), z(y))
};

/// Dimensions over a field-like ring. Over Q[t]/(h) this may throw
/// BranchSplit; see cohomology_dims for the branching wrapper.
template <class R>
CohomologyData<R> cohomology_data(const std::vector<Word>& relators, const AdjointRep<R>& ad) {
    const R sample = ad.x.m[0];
    const R zero = zero_like(sample);
    const Matrix<R> sys = relator_system(relators, ad);
    CohomologyData<R> out;
    out.cocycles = nullspace(sys, sample);

    // H^0: common fixed vectors of Ad(x), Ad(y).
    const Mat3<R> id = Mat3<R>::identity(sample);
    Matrix<R> fix(6, 3, zero);
    const Mat3<R> ax = ad.x - id;
    const Mat3<R> ay = ad.y - id;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            fix(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = ax(r, c);
            fix(static_cast<std::size_t>(r) + 3, static_cast<std::size_t>(c)) = ay(r, c);
        }
    const auto h0 = nullspace(fix, sample);

    // B^1 must sit inside Z^1.
    for (int k = 0; k < 3; ++k) {
        Vec3<R> e{zero, zero, zero};
        e[static_cast<std::size_t>(k)] = one_like(sample);
        if (sys.rows() == 0) break;
        for (const R& entry : sys.apply(flatten(coboundary(e, ad))))
            if (!is_zero(entry)) throw CoboundaryNotCocycle("coboundary fails a relator");
    }

    out.dims.z1 = static_cast<int>(out.cocycles.dim());
    out.dims.h0 = static_cast<int>(h0.dim());
    out.dims.b1 = 3 - out.dims.h0;
    out.dims.h1 = out.dims.z1 - out.dims.b1;
    return out;
}

/// Cohomology dimensions of <x, y | relators> twisted by Ad o rep, one entry
/// per leaf of the dynamic-evaluation tree over rep's branch.
std::vector<LeafResult<CohomologyDims>> cohomology_dims(const std::vector<Word>& relators,
                                                        const RepAssignment<QElem>& rep);

RepAssignment<QElem> lift_rep(const RepAssignment<QElem>& rep, const BranchPtr& child);

/// Result of moving a cocycle to the form z(x) = (0, a, b), z(y) = (0, d, 0).
template <class R>
struct NormalizedCocycle {
    CocycleValues<R> z;
    Vec3<R> v;  // z_normalized = z + coboundary(v)
    R alpha, beta, delta;
};

/// Adds the coboundary of v = (a, b, c) chosen so that the first coordinates
/// and z(y)'s last coordinate vanish. Needs t^2 - 1 invertible.
template <class R>
NormalizedCocycle<R> normalized_representative(const CocycleValues<R>& z, const RepAssignment<R>& rep) {
    const AdjointRep<R> ad(rep);
    const R one = one_like(rep.x.a);
    const R t = rep.x.a;
    const R ti = rep.x.d;
    const R t2m1 = t * t - one;
    const R tm2m1 = ti * ti - one;
    if (is_zero(t2m1)) throw std::domain_error("normal form needs t^2 != 1");
    // d(x) = ((t^2-1)a, 0, (t^-2-1)c), d(y) = ((t^2-1)a - 2tb - c, c/t, (t^-2-1)c)
    const R a = -(z.zx[0] * field_inverse(t2m1));
    const R c = -(z.zy[2] * field_inverse(tm2m1));
    const R b = (z.zy[0] + t2m1 * a - c) * field_inverse((one + one) * t);
    NormalizedCocycle<R> out{z, {a, b, c}, one, one, one};
    const auto d = coboundary(out.v, ad);
    out.z = {z.zx + d.zx, z.zy + d.zy};
    out.alpha = out.z.zx[1];
    out.beta = out.z.zx[2];
    out.delta = out.z.zy[1];
    return out;
}

}  // namespace twobridge
