#include "k3maps/constraints.hpp"

#include <stdexcept>

namespace k3maps {

Int BetaPartition::sum() const {
    Int s = 0;
    for (Int b : parts) s = checked_add(s, b);
    return s;
}

Int BetaPartition::sum_sq() const {
    Int s = 0;
    for (Int b : parts) s = checked_add(s, checked_mul(b, b));
    return s;
}

std::optional<Int> square_root_degree(Int deg) {
    if (deg < 1) throw std::invalid_argument("degree must be >= 1");
    Int r = isqrt(deg);
    if (r * r == deg) return r;
    return std::nullopt;
}

std::vector<Int> lambda_candidates(Int g, Int deg, Int l) {
    if (g < 2) throw std::invalid_argument("genus must be >= 2");
    if (l < 1) throw std::invalid_argument("algebraic degree l must be >= 1");
    auto root = square_root_degree(deg);
    if (!root) throw std::invalid_argument("degree is not a perfect square");
    Int m = 2 * g - 2;
    std::vector<Int> out;
    for (Int lam : {*root, -*root}) {
        if ((l - lam) % m == 0) out.push_back(lam);
        if (lam == 0) break;
    }
    return out;
}

std::optional<Int> required_sum_sq(Int g, Int deg, Int l) {
    if (g < 2) throw std::invalid_argument("genus must be >= 2");
    if (l < 1 || deg < 1) throw std::invalid_argument("degrees must be >= 1");
    Int num = checked_sub(checked_mul(l, l), deg);
    Int m = 2 * g - 2;
    if (num < 0 || num % m != 0) return std::nullopt;
    return num / m;
}

void for_each_beta_partition(Int n, std::optional<Int> p_cap,
                             const std::function<bool(const BetaPartition&)>& visit) {
    if (n < 1) throw std::invalid_argument("partition target must be >= 1");
    BetaPartition cur;
    bool stopped = false;
    std::function<void(Int, Int, Int)> rec = [&](Int remaining, Int max_part, Int parity) {
        if (stopped) return;
        if (remaining == 0) {
            if (parity % 2 == 0)
                if (!visit(cur)) stopped = true;
            return;
        }
        if (p_cap && cur.count() >= *p_cap) return;
        Int top = std::min(max_part, isqrt(remaining));
        for (Int b = top; b >= 1; --b) {
            cur.parts.push_back(b);
            rec(remaining - b * b, b, parity + b);
            cur.parts.pop_back();
            if (stopped) return;
        }
    };
    rec(n, isqrt(n), 0);
}

std::vector<BetaPartition> enumerate_beta_partitions(Int n, std::optional<Int> p_cap) {
    std::vector<BetaPartition> out;
    for_each_beta_partition(n, p_cap, [&](const BetaPartition& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

bool beta_partition_exists(Int n) {
    if (n < 1) throw std::invalid_argument("partition target must be >= 1");
    return n % 2 == 0; // all-ones works for even n; odd n fail the parity lemma
}

Rational amerik_bound(Int g, const BetaPartition& partition) {
    if (g < 2) throw std::invalid_argument("genus must be >= 2");
    Int score = checked_add(partition.count(),
                            checked_mul(4 * (g - 1), partition.sum()));
    return Rational(1) + Rational(score, 24);
}

std::optional<BetaPartition> amerik_admits(Int g, Int deg, Int n, bool shape_constraints) {
    if (g < 2) throw std::invalid_argument("genus must be >= 2");
    if (deg < 2) throw std::invalid_argument("topological degree must be >= 2");
    if (n < 1) throw std::invalid_argument("partition target must be >= 1");
    Int threshold = 24 * (deg - 1); // deg <= bound  <=>  p + 4(g-1) sum >= 24(deg-1)
    std::optional<Int> cap;
    if (shape_constraints) cap = 8 * (deg - 1);
    std::optional<BetaPartition> found;
    for_each_beta_partition(n, cap, [&](const BetaPartition& p) {
        Int score = p.count() + 4 * (g - 1) * p.sum();
        if (score >= threshold) {
            found = p;
            return false;
        }
        return true;
    });
    return found;
}

} // namespace k3maps
