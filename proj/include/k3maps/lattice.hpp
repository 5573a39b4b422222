#ifndef K3MAPS_LATTICE_HPP
#define K3MAPS_LATTICE_HPP

#include <vector>

#include "k3maps/checked.hpp"
#include "k3maps/rational.hpp"

namespace k3maps {

/// Genus g >= 2 of the polarization; the ample class has self-intersection 2g-2.
struct PolarizedGenus {
    Int g;

    explicit PolarizedGenus(Int genus) : g(genus) {
        if (g < 2) throw std::invalid_argument("genus must be >= 2");
    }

    Int selfint() const { return 2 * g - 2; }

    bool operator==(const PolarizedGenus&) const = default;
};

/// Picard lattice of a surface obtained from a genus-g K3 by p blow-ups.
/// Basis (tau*L, E_1, ..., E_p), Gram matrix diag(2g-2, -1, ..., -1).
struct BlowupContext {
    PolarizedGenus genus;
    Int p;

    BlowupContext(PolarizedGenus genus_, Int blowups) : genus(genus_), p(blowups) {
        if (p < 0) throw std::invalid_argument("blow-up count must be >= 0");
    }

    Int rank() const { return p + 1; }

    bool operator==(const BlowupContext&) const = default;
};

/// Integer divisor class in the orthogonal basis. Immutable value type.
class DivisorClass {
public:
    DivisorClass(BlowupContext context, Int coeff_L, std::vector<Int> coeff_E);

    const BlowupContext& context() const { return context_; }
    Int coeff_L() const { return coeff_L_; }
    const std::vector<Int>& coeff_E() const { return coeff_E_; }

    DivisorClass operator+(const DivisorClass& o) const;
    DivisorClass operator-(const DivisorClass& o) const;
    DivisorClass scaled(Int c) const;

    bool operator==(const DivisorClass&) const = default;

private:
    BlowupContext context_;
    Int coeff_L_;
    std::vector<Int> coeff_E_;
};

/// Intersection product (2g-2) a_L b_L - sum_i a_i b_i.
Int intersect(const DivisorClass& a, const DivisorClass& b);

inline Int self_intersection(const DivisorClass& a) { return intersect(a, a); }

/// K of the blown-up surface: sum of the total transforms E_i.
DivisorClass canonical_class(const BlowupContext& context);

/// phi~* L = l tau*L - sum_i (2g-2) beta_i E_i.
DivisorClass pullback_polarization(const BlowupContext& context, Int l,
                                   const std::vector<Int>& betas);

/// (phi~* L)^2 / (2g-2); equals the topological degree when the decomposition
/// identity holds. Diagnostic: non-integral or non-positive values are
/// returned as-is.
Rational degree_from_pullback(const BlowupContext& context, Int l,
                              const std::vector<Int>& betas);

} // namespace k3maps

#endif
