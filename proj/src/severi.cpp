#include "k3maps/severi.hpp"

#include <stdexcept>

namespace k3maps {

Int arithmetic_genus(Int g, Int k) {
    if (g < 2) throw std::invalid_argument("genus must be >= 2");
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    return checked_add(1, checked_mul(checked_mul(k, k), g - 1));
}

Int node_count(Int g, Int k, Int l) {
    if (l < 1) throw std::invalid_argument("l must be >= 1");
    return checked_sub(arithmetic_genus(g, checked_mul(k, l)), arithmetic_genus(g, k));
}

Int nodes_after_one_node_source(Int g, Int k, Int l) {
    if (l < 2) throw std::invalid_argument("l must be >= 2");
    return checked_add(node_count(g, k, l), 1);
}

SeveriDimension expected_severi_dimension(Int g, Int k, Int h) {
    if (h < 0) throw std::invalid_argument("geometric genus must be >= 0");
    Int pa = arithmetic_genus(g, k);
    if (h > pa) throw std::invalid_argument("geometric genus exceeds arithmetic genus");
    return {h, pa - h};
}

Rational genus_ratio(Int g, Int k, Int l) {
    if (l < 1) throw std::invalid_argument("l must be >= 1");
    return Rational(arithmetic_genus(g, k), arithmetic_genus(g, checked_mul(k, l)));
}

bool epsilon_window_holds(Int g, Int k, Int l, const Rational& epsilon) {
    if (epsilon <= Rational(0) || epsilon > Rational(1))
        throw std::invalid_argument("epsilon must lie in (0, 1]");
    Rational pak(arithmetic_genus(g, k));
    Rational pakl(arithmetic_genus(g, checked_mul(k, l)));
    return epsilon * pakl <= pak && pak <= pakl;
}

Int genericity_threshold(Int g) {
    if (g < 2) throw std::invalid_argument("genus must be >= 2");
    return g == 2 ? 6 : 4;
}

} // namespace k3maps
