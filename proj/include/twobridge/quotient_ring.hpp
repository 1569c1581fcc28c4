#pragma once

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "twobridge/poly.hpp"

namespace twobridge {

/// One zero-divisor split: parent = factor * cofactor.
struct SplitRecord {
    Poly parent;
    Poly factor;
    Poly cofactor;
    bool operator==(const SplitRecord&) const = default;
};

/// Q[t]/(modulus) with modulus monic and square-free. Computations run on a
/// branch until some inversion hits a zero divisor, at which point the branch
/// splits in two and the computation restarts on each part.
class Branch {
public:
    /// Validates monic (after scaling), square-free, degree >= 1.
    explicit Branch(Poly modulus, std::vector<SplitRecord> lineage = {});

    const Poly& modulus() const noexcept { return modulus_; }
    const std::vector<SplitRecord>& lineage() const noexcept { return lineage_; }
    long degree() const noexcept { return modulus_.degree(); }

private:
    Poly modulus_;
    std::vector<SplitRecord> lineage_;
};

using BranchPtr = std::shared_ptr<const Branch>;

BranchPtr make_branch(const Poly& modulus);

/// Children (factor part, cofactor part); `factor` must be a proper monic divisor.
std::pair<BranchPtr, BranchPtr> split_branch(const BranchPtr& b, const Poly& factor);

/// Thrown by inverse_or_throw when the element is a zero divisor of its branch.
class BranchSplit : public std::runtime_error {
public:
    BranchSplit(Poly modulus, Poly factor, Poly cofactor);
    Poly modulus;
    Poly factor;
    Poly cofactor;
};

/// Element of Q[t]/(m), stored as its reduced representative.
class QElem {
public:
    QElem() = default;
    QElem(BranchPtr b, const Poly& value);
    QElem(BranchPtr b, const Rational& c) : QElem(std::move(b), Poly(c)) {}

    static QElem generator(BranchPtr b) { return QElem(std::move(b), Poly::x()); }

    const BranchPtr& branch() const noexcept { return b_; }
    const Poly& value() const noexcept { return v_; }
    bool is_zero() const noexcept { return v_.is_zero(); }

    QElem operator-() const { return QElem(b_, -v_, raw_tag{}); }
    QElem& operator+=(const QElem& o);
    QElem& operator-=(const QElem& o);
    QElem& operator*=(const QElem& o);
    friend QElem operator+(QElem a, const QElem& b) { return a += b; }
    friend QElem operator-(QElem a, const QElem& b) { return a -= b; }
    friend QElem operator*(QElem a, const QElem& b) { return a *= b; }
    friend QElem operator*(QElem a, const Rational& c) {
        a.v_ *= c;
        return a;
    }

    bool operator==(const QElem& o) const { return v_ == o.v_; }

    /// Representative reduced modulo a child branch.
    QElem lift(const BranchPtr& child) const { return QElem(child, v_); }

private:
    struct raw_tag {};
    QElem(BranchPtr b, Poly v, raw_tag) : b_(std::move(b)), v_(std::move(v)) {}
    void check_same(const QElem& o) const;

    BranchPtr b_;
    Poly v_;
};

struct Split {
    Poly factor;    // gcd(value, modulus)
    Poly cofactor;  // modulus / factor
};

/// Inverse when gcd(value, modulus) = 1; otherwise the two branch moduli.
std::variant<QElem, Split> branch_invert(const QElem& e);
/// Inverse, or throws BranchSplit.
QElem inverse_or_throw(const QElem& e);

inline QElem zero_like(const QElem& e) { return QElem(e.branch(), Poly{}); }
inline QElem one_like(const QElem& e) { return QElem(e.branch(), Rational(1)); }
inline bool is_zero(const QElem& e) { return e.is_zero(); }
inline QElem field_inverse(const QElem& e) { return inverse_or_throw(e); }

template <class Result>
struct LeafResult {
    BranchPtr branch;
    Result value;
};

/// Runs `compute(branch)`; on BranchSplit of that branch, reruns on both
/// children. Leaves are returned sorted by modulus coefficients.
template <class F>
auto on_leaves(const BranchPtr& root, F&& compute) -> std::vector<LeafResult<decltype(compute(root))>> {
    using R = decltype(compute(root));
    std::vector<LeafResult<R>> out;
    std::vector<BranchPtr> work{root};
    while (!work.empty()) {
        BranchPtr b = std::move(work.back());
        work.pop_back();
        try {
            out.push_back({b, compute(b)});
        } catch (const BranchSplit& s) {
            if (!(s.modulus == b->modulus())) throw;
            auto [left, right] = split_branch(b, s.factor);
            work.push_back(std::move(right));
            work.push_back(std::move(left));
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return poly_less(a.branch->modulus(), b.branch->modulus());
    });
    return out;
}

}  // namespace twobridge
