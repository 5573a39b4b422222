#include "k3maps/lattice.hpp"

namespace k3maps {

DivisorClass::DivisorClass(BlowupContext context, Int coeff_L, std::vector<Int> coeff_E)
    : context_(context), coeff_L_(coeff_L), coeff_E_(std::move(coeff_E)) {
    if (static_cast<Int>(coeff_E_.size()) != context_.p)
        throw std::invalid_argument("coefficient vector length must equal blow-up count");
}

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
    if (!(context_ == o.context_))
        throw std::invalid_argument("divisor classes live in different lattices");
    std::vector<Int> e(coeff_E_.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = checked_add(coeff_E_[i], o.coeff_E_[i]);
    return DivisorClass(context_, checked_add(coeff_L_, o.coeff_L_), std::move(e));
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const {
    if (!(context_ == o.context_))
        throw std::invalid_argument("divisor classes live in different lattices");
    std::vector<Int> e(coeff_E_.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = checked_sub(coeff_E_[i], o.coeff_E_[i]);
    return DivisorClass(context_, checked_sub(coeff_L_, o.coeff_L_), std::move(e));
}

DivisorClass DivisorClass::scaled(Int c) const {
    std::vector<Int> e(coeff_E_.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = checked_mul(coeff_E_[i], c);
    return DivisorClass(context_, checked_mul(coeff_L_, c), std::move(e));
}

Int intersect(const DivisorClass& a, const DivisorClass& b) {
    if (!(a.context() == b.context()))
        throw std::invalid_argument("divisor classes live in different lattices");
    Int acc = checked_mul(a.context().genus.selfint(),
                          checked_mul(a.coeff_L(), b.coeff_L()));
    for (size_t i = 0; i < a.coeff_E().size(); ++i)
        acc = checked_sub(acc, checked_mul(a.coeff_E()[i], b.coeff_E()[i]));
    return acc;
}

DivisorClass canonical_class(const BlowupContext& context) {
    return DivisorClass(context, 0, std::vector<Int>(context.p, 1));
}

DivisorClass pullback_polarization(const BlowupContext& context, Int l,
                                   const std::vector<Int>& betas) {
    if (l < 1) throw std::invalid_argument("algebraic degree l must be >= 1");
    if (static_cast<Int>(betas.size()) != context.p)
        throw std::invalid_argument("beta vector length must equal blow-up count");
    std::vector<Int> e(betas.size());
    for (size_t i = 0; i < betas.size(); ++i) {
        if (betas[i] < 1) throw std::invalid_argument("beta entries must be positive");
        e[i] = checked_mul(-context.genus.selfint(), betas[i]);
    }
    return DivisorClass(context, l, std::move(e));
}

Rational degree_from_pullback(const BlowupContext& context, Int l,
                              const std::vector<Int>& betas) {
    DivisorClass cls = pullback_polarization(context, l, betas);
    return Rational(self_intersection(cls), context.genus.selfint());
}

} // namespace k3maps
