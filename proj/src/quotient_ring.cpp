#include "twobridge/quotient_ring.hpp"

namespace twobridge {

Branch::Branch(Poly modulus, std::vector<SplitRecord> lineage)
    : modulus_(modulus.monic()), lineage_(std::move(lineage)) {
    if (modulus_.degree() < 1) throw std::invalid_argument("branch modulus must have degree >= 1");
    if (poly_gcd(modulus_, modulus_.derivative()).degree() != 0)
        throw std::invalid_argument("branch modulus must be square-free: " + modulus_.str());
}

BranchPtr make_branch(const Poly& modulus) { return std::make_shared<const Branch>(modulus); }

std::pair<BranchPtr, BranchPtr> split_branch(const BranchPtr& b, const Poly& factor) {
    const Poly f = factor.monic();
    const Poly cof = exact_div(b->modulus(), f);
    if (f.degree() < 1 || cof.degree() < 1) throw std::invalid_argument("split factor must be a proper divisor");
    auto lineage = b->lineage();
    lineage.push_back({b->modulus(), f, cof});
    auto left = std::make_shared<const Branch>(f, lineage);
    auto right = std::make_shared<const Branch>(cof, std::move(lineage));
    return {std::move(left), std::move(right)};
}

BranchSplit::BranchSplit(Poly m, Poly f, Poly c)
    : std::runtime_error("zero divisor splits " + m.str() + " as (" + f.str() + ")(" + c.str() + ")"),
      modulus(std::move(m)),
      factor(std::move(f)),
      cofactor(std::move(c)) {}

QElem::QElem(BranchPtr b, const Poly& value) : b_(std::move(b)) {
    if (!b_) throw std::invalid_argument("QElem needs a branch");
    v_ = value.degree() >= b_->degree() ? value % b_->modulus() : value;
}

void QElem::check_same(const QElem& o) const {
    if (b_ != o.b_ && !(b_->modulus() == o.b_->modulus()))
        throw std::invalid_argument("mixing elements of different branches");
}

QElem& QElem::operator+=(const QElem& o) {
    check_same(o);
    v_ += o.v_;
    return *this;
}

QElem& QElem::operator-=(const QElem& o) {
    check_same(o);
    v_ -= o.v_;
    return *this;
}

QElem& QElem::operator*=(const QElem& o) {
    check_same(o);
    v_ = (v_ * o.v_) % b_->modulus();
    return *this;
}

std::variant<QElem, Split> branch_invert(const QElem& e) {
    if (e.is_zero()) throw std::domain_error("inverting zero");
    const auto& m = e.branch()->modulus();
    auto eg = poly_xgcd(e.value(), m);
    if (eg.gcd.degree() == 0) return QElem(e.branch(), eg.s);
    return Split{eg.gcd, exact_div(m, eg.gcd)};
}

QElem inverse_or_throw(const QElem& e) {
    auto r = branch_invert(e);
    if (auto* inv = std::get_if<QElem>(&r)) return *inv;
    auto& s = std::get<Split>(r);
    throw BranchSplit(e.branch()->modulus(), s.factor, s.cofactor);
}

}  // namespace twobridge
