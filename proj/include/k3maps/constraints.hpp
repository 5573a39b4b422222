#ifndef K3MAPS_CONSTRAINTS_HPP
#define K3MAPS_CONSTRAINTS_HPP

#include <functional>
#include <optional>
#include <vector>

#include "k3maps/rational.hpp"

namespace k3maps {

/// Multiset of positive integers beta_1 >= ... >= beta_p.
struct BetaPartition {
    std::vector<Int> parts; // descending

    Int count() const { return static_cast<Int>(parts.size()); }
    Int sum() const;
    Int sum_sq() const;

    bool operator==(const BetaPartition&) const = default;
};

/// sqrt(deg) when deg is a perfect square, otherwise absent.
std::optional<Int> square_root_degree(Int deg);

/// Eigenvalue candidates: lambda in {+sqrt(deg), -sqrt(deg)} with
/// (2g-2) | (l - lambda). Empty list means the triple is inadmissible.
std::vector<Int> lambda_candidates(Int g, Int deg, Int l);

/// N = (l^2 - deg) / (2g-2) when it is a nonnegative integer, else absent.
std::optional<Int> required_sum_sq(Int g, Int deg, Int l);

/// Visit partitions with sum of squares N and even sum, largest part first,
/// in descending lexicographic order. Visitor returns false to stop.
void for_each_beta_partition(Int n, std::optional<Int> p_cap,
                             const std::function<bool(const BetaPartition&)>& visit);

std::vector<BetaPartition> enumerate_beta_partitions(Int n, std::optional<Int> p_cap = {});

/// Whether some even-sum square partition of n exists. (All even n >= 2 do,
/// via the all-ones partition; odd n never do, by the parity x^2 = x mod 2.)
bool beta_partition_exists(Int n);

/// 1 + (p + 4(g-1) sum beta) / 24, exact.
Rational amerik_bound(Int g, const BetaPartition& partition);

/// First partition of n (descending lexicographic order) whose bound admits
/// deg; with shape_constraints, parts count is capped at 8(deg-1), the
/// depth-1 width cap.
std::optional<BetaPartition> amerik_admits(Int g, Int deg, Int n, bool shape_constraints);

} // namespace k3maps

#endif
