#include "twobridge/cohomology.hpp"

namespace twobridge {

RepAssignment<QElem> lift_rep(const RepAssignment<QElem>& rep, const BranchPtr& child) {
    auto lift = [&](const Mat2<QElem>& m) {
        return Mat2<QElem>{m.a.lift(child), m.b.lift(child), m.c.lift(child), m.d.lift(child)};
    };
    return {lift(rep.x), lift(rep.y)};
}

std::vector<LeafResult<CohomologyDims>> cohomology_dims(const std::vector<Word>& relators,
                                                        const RepAssignment<QElem>& rep) {
    return on_leaves(rep.x.a.branch(), [&](const BranchPtr& b) {
        const AdjointRep<QElem> ad(lift_rep(rep, b));
        return cohomology_data(relators, ad).dims;
    });
}

}  // namespace twobridge
