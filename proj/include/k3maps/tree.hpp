#ifndef K3MAPS_TREE_HPP
#define K3MAPS_TREE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "k3maps/lattice.hpp"

namespace k3maps {

struct TreeNode {
    Int id;
    std::optional<Int> parent;
    std::optional<Int> gamma; // pushforward multiplier, phi~_* Fhat_i = gamma_i L
};

/// Intersection forest of the proper transforms Fhat_i of an elimination of
/// indeterminacies. Parent ids precede child ids (blow-up order); gamma
/// labels are optional, and operations that need them reject unlabeled trees.
class ExceptionalTree {
public:
    ExceptionalTree() = default;
    explicit ExceptionalTree(std::vector<TreeNode> nodes);

    /// Parse a canonical shape code like "(())()" into an unlabeled forest,
    /// nodes numbered 1..p in preorder.
    static ExceptionalTree from_shape_code(const std::string& code);

    Int size() const { return static_cast<Int>(nodes_.size()); }
    bool empty() const { return nodes_.empty(); }
    const std::vector<TreeNode>& nodes() const { return nodes_; }
    bool fully_labeled() const;

    /// Depth m_i: the node itself plus its strict ancestors (roots have depth 1).
    Int node_depth(Int id) const;
    Int tree_depth() const;

    std::vector<Int> children(Int id) const;
    std::vector<Int> descendants(Int id) const; // includes the node itself
    std::vector<Int> leaves() const;
    std::vector<Int> roots() const;
    /// Depth of each connected component, in root-id order.
    std::vector<Int> component_depths() const;

    /// Total transform E_i as a unit vector of the lattice (p = size()).
    DivisorClass total_transform(const BlowupContext& context, Int id) const;
    /// Proper transform Fhat_i = E_i - sum over children E_j.
    DivisorClass proper_transform(const BlowupContext& context, Int id) const;

    /// beta_i = sum of gamma over the descendant set of node i, in id order.
    std::vector<Int> beta_from_gamma() const;

    /// Minimality of the elimination: no leaf is contracted (every leaf has
    /// gamma >= 1).
    bool is_minimal() const;

    bool check_depth(Int deg) const;
    bool check_leaf_pairs(Int deg) const;
    bool check_width(Int deg) const;

    /// Canonical shape code (gamma-independent, sorted recursively).
    std::string shape_code() const;

    ExceptionalTree with_gammas(const std::vector<Int>& gammas) const;

private:
    Int index_of(Int id) const;
    std::string subtree_code(Int idx) const;

    std::vector<TreeNode> nodes_;            // sorted by id
    std::vector<std::vector<Int>> child_idx_; // indices into nodes_
    std::vector<Int> depth_;                  // per index
};

struct ShapeDescriptor {
    std::string code;
    Int nodes;
    Int depth;

    bool operator==(const ShapeDescriptor&) const = default;
};

/// All forests with 1..p_max nodes, up to isomorphism, passing check_depth,
/// check_leaf_pairs and check_width for the given topological degree.
/// Deterministic order: by node count, then by code.
std::vector<ShapeDescriptor> classify_shapes(Int deg, Int p_max);

/// Enumeration backing classify_shapes, exposed for witness searches. The
/// visitor returns false to stop early.
void enumerate_feasible_forests(Int deg, Int p_max,
                                const std::function<bool(const ExceptionalTree&)>& visit);

struct TreeReport {
    std::vector<Int> depths;
    Int tree_depth = 0;
    std::optional<std::vector<Int>> betas;
    std::optional<bool> minimal;
    bool depth_ok = false;
    bool width_ok = false;
    bool leaf_pair_ok = false;
};

TreeReport report_tree(const ExceptionalTree& tree, Int deg);

} // namespace k3maps

#endif
