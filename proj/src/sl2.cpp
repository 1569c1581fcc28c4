#include "twobridge/sl2.hpp"

namespace twobridge {

RepAssignment<LaurentPoly> laurent_reducible_rep() {
    const LaurentPoly t = LaurentPoly::t();
    const LaurentPoly ti = LaurentPoly::t_inv();
    return {{t, 0, 0, ti}, {t, 1, 0, ti}};
}

}  // namespace twobridge
