#include "twobridge/matrix.hpp"

namespace twobridge {

Matrix<QElem> lift_matrix(const Matrix<QElem>& m, const BranchPtr& child) {
    return m.map([&](const QElem& e) { return e.lift(child); });
}

std::vector<BranchNullspace> nullspace_dim(const Matrix<QElem>& m, const BranchPtr& branch) {
    auto leaves = on_leaves(branch, [&](const BranchPtr& b) { return nullspace(lift_matrix(m, b), QElem(b, Rational(1))); });
    std::vector<BranchNullspace> out;
    out.reserve(leaves.size());
    for (auto& leaf : leaves)
        out.push_back({leaf.branch, leaf.value.dim(), leaf.value.rank, std::move(leaf.value.basis)});
    return out;
}

}  // namespace twobridge
