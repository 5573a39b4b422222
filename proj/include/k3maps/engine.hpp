#ifndef K3MAPS_ENGINE_HPP
#define K3MAPS_ENGINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "k3maps/constraints.hpp"
#include "k3maps/tree.hpp"

namespace k3maps {

enum class Reason {
    TrivialIdentity,
    NotSquare,
    NoLambda,
    MorphismExcluded,
    NoPartition,
    AmerikExcluded,
    NoTreeShape,
};

const char* reason_name(Reason r);

struct ConstraintProfile {
    std::string name;
    bool use_square = true;
    bool use_divisibility = true;
    bool use_partition = true;
    bool use_amerik = false;
    bool use_tree_shapes = false;

    static ConstraintProfile basic();
    static ConstraintProfile amerik();
    static ConstraintProfile full();
    static std::optional<ConstraintProfile> by_name(const std::string& name);
};

struct FeasibilityVerdict {
    Int g = 0;
    Int deg = 0;
    Int l = 0;
    std::string profile;
    bool admissible = false;
    std::optional<Reason> reason;
    std::vector<Int> lambdas;
    std::optional<Int> n_value;
    std::optional<BetaPartition> witness_partition;
    std::optional<std::string> witness_shape;
};

FeasibilityVerdict check(Int g, Int deg, Int l, const ConstraintProfile& profile);

struct AdmissibilityTable {
    Int g = 0;
    Int deg = 0;
    Int l_max = 0;
    std::string profile;
    std::vector<FeasibilityVerdict> verdicts; // l = 2..l_max

    std::vector<Int> admissible_l() const;
};

AdmissibilityTable admissible_table(Int g, Int deg, Int l_max, const ConstraintProfile& profile);

/// Gamma-labeled forest realizing the beta multiset with minimality and the
/// depth / leaf-pair / width predicates. Depth-1 realizations are taken
/// directly; deeper shapes are searched only up to deep_budget nodes.
std::optional<ExceptionalTree> witness_tree(Int g, Int deg, const BetaPartition& partition,
                                            Int deep_budget = 12);

struct PaperProfileResult {
    std::string profile;
    std::vector<Int> computed;
    bool match = false;
};

struct PaperRowResult {
    Int deg = 0;
    Int g = 0;
    std::vector<Int> paper_values;
    std::string designated_profile; // profile the row is matched under
    std::vector<PaperProfileResult> profiles;
    bool designated_match = false;
};

struct PaperTableReport {
    Int terms = 0;
    std::vector<PaperRowResult> rows;
    Int match_count = 0;
    Int mismatch_count = 0;
};

/// Recompute the paper's two admissibility tables (deg 4 and deg 9,
/// g = 2..5) under every built-in profile and flag MATCH/MISMATCH per row.
PaperTableReport paper_table_report(Int terms);

} // namespace k3maps

#endif
