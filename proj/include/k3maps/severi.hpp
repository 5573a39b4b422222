#ifndef K3MAPS_SEVERI_HPP
#define K3MAPS_SEVERI_HPP

#include "k3maps/rational.hpp"

namespace k3maps {

/// p_a(k) = 1 + k^2 (g-1), the arithmetic genus of curves in |kL|.
Int arithmetic_genus(Int g, Int k);

/// delta = p_a(kl) - p_a(k) = (g-1) k^2 (l^2 - 1), nodes of a generic image curve.
Int node_count(Int g, Int k, Int l);

/// delta + 1: node count of the image of a one-nodal source curve (l >= 2).
Int nodes_after_one_node_source(Int g, Int k, Int l);

struct SeveriDimension {
    Int dimension; // = h, the expected dimension
    Int delta;     // = p_a(k) - h, imposed node count
};

SeveriDimension expected_severi_dimension(Int g, Int k, Int h);

/// p_a(k) / p_a(lk), exact; tends to 1/l^2 as k grows.
Rational genus_ratio(Int g, Int k, Int l);

/// Whether eps * p_a(kl) <= p_a(k) <= p_a(kl), exact rational comparison.
bool epsilon_window_holds(Int g, Int k, Int l, const Rational& epsilon);

/// Smallest k for which the genericity argument applies: 6 for g=2, else 4.
Int genericity_threshold(Int g);

} // namespace k3maps

#endif
