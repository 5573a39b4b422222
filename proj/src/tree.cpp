#include "k3maps/tree.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace k3maps {

ExceptionalTree::ExceptionalTree(std::vector<TreeNode> nodes) : nodes_(std::move(nodes)) {
    std::sort(nodes_.begin(), nodes_.end(),
              [](const TreeNode& a, const TreeNode& b) { return a.id < b.id; });
    std::map<Int, Int> idx;
    for (Int i = 0; i < size(); ++i) {
        const TreeNode& n = nodes_[i];
        if (n.id < 1) throw std::invalid_argument("node ids must be positive");
        if (idx.count(n.id)) throw std::invalid_argument("duplicate node id");
        if (n.gamma && *n.gamma < 0) throw std::invalid_argument("gamma must be >= 0");
        idx[n.id] = i;
    }
    child_idx_.assign(nodes_.size(), {});
    depth_.assign(nodes_.size(), 1);
    for (Int i = 0; i < size(); ++i) {
        const TreeNode& n = nodes_[i];
        if (!n.parent) continue;
        if (*n.parent >= n.id)
            throw std::invalid_argument("parent id must precede child id");
        auto it = idx.find(*n.parent);
        if (it == idx.end()) throw std::invalid_argument("unknown parent id");
        child_idx_[it->second].push_back(i);
        depth_[i] = depth_[it->second] + 1; // parents sort before children
    }
}

ExceptionalTree ExceptionalTree::from_shape_code(const std::string& code) {
    std::vector<TreeNode> nodes;
    std::vector<Int> stack; // ids of open ancestors
    Int next_id = 1;
    for (char c : code) {
        if (c == '(') {
            TreeNode n;
            n.id = next_id++;
            if (!stack.empty()) n.parent = stack.back();
            stack.push_back(n.id);
            nodes.push_back(n);
        } else if (c == ')') {
            if (stack.empty()) throw std::invalid_argument("unbalanced shape code");
            stack.pop_back();
        } else {
            throw std::invalid_argument("invalid character in shape code");
        }
    }
    if (!stack.empty()) throw std::invalid_argument("unbalanced shape code");
    return ExceptionalTree(std::move(nodes));
}

bool ExceptionalTree::fully_labeled() const {
    return std::all_of(nodes_.begin(), nodes_.end(),
                       [](const TreeNode& n) { return n.gamma.has_value(); });
}

Int ExceptionalTree::index_of(Int id) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id,
                               [](const TreeNode& n, Int v) { return n.id < v; });
    if (it == nodes_.end() || it->id != id)
        throw std::invalid_argument("unknown node id");
    return static_cast<Int>(it - nodes_.begin());
}

Int ExceptionalTree::node_depth(Int id) const { return depth_[index_of(id)]; }

Int ExceptionalTree::tree_depth() const {
    Int m = 0;
    for (Int d : depth_) m = std::max(m, d);
    return m;
}

std::vector<Int> ExceptionalTree::children(Int id) const {
    std::vector<Int> out;
    for (Int i : child_idx_[index_of(id)]) out.push_back(nodes_[i].id);
    return out;
}

std::vector<Int> ExceptionalTree::descendants(Int id) const {
    std::vector<Int> out;
    std::vector<Int> stack{index_of(id)};
    while (!stack.empty()) {
        Int i = stack.back();
        stack.pop_back();
        out.push_back(nodes_[i].id);
        for (Int c : child_idx_[i]) stack.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Int> ExceptionalTree::leaves() const {
    std::vector<Int> out;
    for (Int i = 0; i < size(); ++i)
        if (child_idx_[i].empty()) out.push_back(nodes_[i].id);
    return out;
}

std::vector<Int> ExceptionalTree::roots() const {
    std::vector<Int> out;
    for (const TreeNode& n : nodes_)
        if (!n.parent) out.push_back(n.id);
    return out;
}

std::vector<Int> ExceptionalTree::component_depths() const {
    std::vector<Int> out;
    for (Int r : roots()) {
        Int m = 0;
        for (Int id : descendants(r)) m = std::max(m, depth_[index_of(id)]);
        out.push_back(m);
    }
    return out;
}

DivisorClass ExceptionalTree::total_transform(const BlowupContext& context, Int id) const {
    if (context.p != size())
        throw std::invalid_argument("context blow-up count must equal node count");
    std::vector<Int> e(nodes_.size(), 0);
    e[index_of(id)] = 1;
    return DivisorClass(context, 0, std::move(e));
}

DivisorClass ExceptionalTree::proper_transform(const BlowupContext& context, Int id) const {
    if (context.p != size())
        throw std::invalid_argument("context blow-up count must equal node count");
    std::vector<Int> e(nodes_.size(), 0);
    Int i = index_of(id);
    e[i] = 1;
    for (Int c : child_idx_[i]) e[c] = -1;
    return DivisorClass(context, 0, std::move(e));
}

std::vector<Int> ExceptionalTree::beta_from_gamma() const {
    if (!fully_labeled())
        throw std::invalid_argument("beta requires gamma labels on every node");
    std::vector<Int> betas(nodes_.size(), 0);
    for (Int i = 0; i < size(); ++i) {
        for (Int id : descendants(nodes_[i].id))
            betas[i] = checked_add(betas[i], *nodes_[index_of(id)].gamma);
    }
    return betas;
}

bool ExceptionalTree::is_minimal() const {
    if (!fully_labeled())
        throw std::invalid_argument("minimality requires gamma labels on every node");
    for (Int id : leaves())
        if (*nodes_[index_of(id)].gamma < 1) return false;
    return true;
}

bool ExceptionalTree::check_depth(Int deg) const {
    if (deg < 2) throw std::invalid_argument("topological degree must be >= 2");
    if (tree_depth() > deg - 2) return false;
    std::vector<Int> cd = component_depths();
    std::sort(cd.begin(), cd.end(), std::greater<>());
    if (cd.size() >= 2 && cd[0] + cd[1] > deg - 2) return false;
    return true;
}

bool ExceptionalTree::check_leaf_pairs(Int deg) const {
    if (deg < 2) throw std::invalid_argument("topological degree must be >= 2");
    std::vector<Int> ld;
    for (Int id : leaves()) ld.push_back(node_depth(id));
    std::sort(ld.begin(), ld.end(), std::greater<>());
    if (ld.size() >= 2 && ld[0] + ld[1] + 2 > deg) return false;
    return true;
}

bool ExceptionalTree::check_width(Int deg) const {
    if (deg < 2) throw std::invalid_argument("topological degree must be >= 2");
    if (tree_depth() != 1) return true;
    return size() <= 8 * (deg - 1);
}

std::string ExceptionalTree::subtree_code(Int idx) const {
    std::vector<std::string> cs;
    for (Int c : child_idx_[idx]) cs.push_back(subtree_code(c));
    std::sort(cs.begin(), cs.end());
    std::string out = "(";
    for (const std::string& s : cs) out += s;
    out += ")";
    return out;
}

std::string ExceptionalTree::shape_code() const {
    std::vector<std::string> cs;
    for (Int i = 0; i < size(); ++i)
        if (!nodes_[i].parent) cs.push_back(subtree_code(i));
    std::sort(cs.begin(), cs.end());
    std::string out;
    for (const std::string& s : cs) out += s;
    return out;
}

ExceptionalTree ExceptionalTree::with_gammas(const std::vector<Int>& gammas) const {
    if (static_cast<Int>(gammas.size()) != size())
        throw std::invalid_argument("gamma vector length must equal node count");
    std::vector<TreeNode> ns = nodes_;
    for (size_t i = 0; i < ns.size(); ++i) ns[i].gamma = gammas[i];
    return ExceptionalTree(std::move(ns));
}

namespace {

// Candidate component tree for the shape search, in preorder parent form.
struct CandTree {
    std::vector<Int> parent; // preorder, -1 for root
    std::string code;
    Int depth = 1;
    std::vector<Int> leaf_depths; // descending
    Int nodes() const { return static_cast<Int>(parent.size()); }
};

bool leaf_pair_ok(const std::vector<Int>& leaf_depths_desc, Int deg) {
    return leaf_depths_desc.size() < 2 ||
           leaf_depths_desc[0] + leaf_depths_desc[1] + 2 <= deg;
}

// All canonical rooted trees with 1..n_max nodes, depth <= dcap, whose own
// leaf multiset already satisfies the pair bound (embedding deeper only
// worsens it, so pruning here is safe).
std::vector<std::vector<CandTree>> gen_trees(Int n_max, Int dcap, Int deg) {
    std::vector<std::vector<CandTree>> by_size(n_max + 1);
    if (dcap < 1) return by_size;
    CandTree leaf;
    leaf.parent = {-1};
    leaf.code = "()";
    leaf.leaf_depths = {1};
    by_size[1].push_back(leaf);

    for (Int n = 2; n <= n_max; ++n) {
        // root plus a child forest of n-1 nodes, children chosen with
        // non-decreasing (size, index) so each shape appears once
        std::vector<const CandTree*> picked;
        std::function<void(Int, Int, Int)> rec = [&](Int remaining, Int min_size, Int min_idx) {
            if (remaining == 0) {
                CandTree t;
                t.parent = {-1};
                Int d = 1;
                std::vector<std::string> codes;
                for (const CandTree* c : picked) {
                    Int off = t.nodes();
                    for (size_t j = 0; j < c->parent.size(); ++j)
                        t.parent.push_back(c->parent[j] < 0 ? 0 : c->parent[j] + off);
                    d = std::max(d, c->depth + 1);
                    codes.push_back(c->code);
                    for (Int ld : c->leaf_depths) t.leaf_depths.push_back(ld + 1);
                }
                t.depth = d;
                if (t.depth > dcap) return;
                std::sort(t.leaf_depths.begin(), t.leaf_depths.end(), std::greater<>());
                if (!leaf_pair_ok(t.leaf_depths, deg)) return;
                std::sort(codes.begin(), codes.end());
                t.code = "(";
                for (const std::string& s : codes) t.code += s;
                t.code += ")";
                by_size[n].push_back(t);
                return;
            }
            for (Int s = min_size; s <= remaining; ++s) {
                Int start = (s == min_size) ? min_idx : 0;
                for (Int i = start; i < static_cast<Int>(by_size[s].size()); ++i) {
                    const CandTree& c = by_size[s][i];
                    if (c.depth + 1 > dcap) continue;
                    picked.push_back(&c);
                    rec(remaining - s, s, i);
                    picked.pop_back();
                }
            }
        };
        rec(n - 1, 1, 0);
        std::sort(by_size[n].begin(), by_size[n].end(),
                  [](const CandTree& a, const CandTree& b) { return a.code < b.code; });
    }
    return by_size;
}

ExceptionalTree build_forest(const std::vector<const CandTree*>& comps) {
    std::vector<TreeNode> nodes;
    Int off = 0;
    for (const CandTree* c : comps) {
        for (Int j = 0; j < c->nodes(); ++j) {
            TreeNode n;
            n.id = off + j + 1;
            if (c->parent[j] >= 0) n.parent = off + c->parent[j] + 1;
            nodes.push_back(n);
        }
        off += c->nodes();
    }
    return ExceptionalTree(std::move(nodes));
}

} // namespace

void enumerate_feasible_forests(Int deg, Int p_max,
                                const std::function<bool(const ExceptionalTree&)>& visit) {
    if (deg < 2) throw std::invalid_argument("topological degree must be >= 2");
    if (p_max < 1) throw std::invalid_argument("p_max must be >= 1");
    Int dcap = deg - 2;
    if (dcap < 1) return;
    auto by_size = gen_trees(p_max, dcap, deg);

    std::vector<const CandTree*> comps;
    bool stopped = false;
    // cross-component state: two largest leaf depths, two largest component depths
    std::function<void(Int, Int, Int, std::vector<Int>, std::vector<Int>)> rec =
        [&](Int remaining, Int min_size, Int min_idx,
            std::vector<Int> top_leaves, std::vector<Int> top_depths) {
            if (stopped) return;
            if (!comps.empty()) {
                ExceptionalTree f = build_forest(comps);
                if (f.check_width(deg)) {
                    if (!visit(f)) {
                        stopped = true;
                        return;
                    }
                }
            }
            for (Int s = min_size; s <= remaining; ++s) {
                Int start = (s == min_size) ? min_idx : 0;
                for (Int i = start; i < static_cast<Int>(by_size[s].size()); ++i) {
                    const CandTree& c = by_size[s][i];
                    std::vector<Int> tl = top_leaves;
                    for (Int ld : c.leaf_depths) tl.push_back(ld);
                    std::sort(tl.begin(), tl.end(), std::greater<>());
                    if (tl.size() > 2) tl.resize(2);
                    if (!leaf_pair_ok(tl, deg)) continue;
                    std::vector<Int> td = top_depths;
                    td.push_back(c.depth);
                    std::sort(td.begin(), td.end(), std::greater<>());
                    if (td.size() > 2) td.resize(2);
                    if (td.size() == 2 && td[0] + td[1] > deg - 2) continue;
                    comps.push_back(&c);
                    rec(remaining - s, s, i, tl, td);
                    comps.pop_back();
                    if (stopped) return;
                }
            }
        };
    rec(p_max, 1, 0, {}, {});
}

std::vector<ShapeDescriptor> classify_shapes(Int deg, Int p_max) {
    std::vector<ShapeDescriptor> out;
    enumerate_feasible_forests(deg, p_max, [&](const ExceptionalTree& f) {
        out.push_back({f.shape_code(), f.size(), f.tree_depth()});
        return true;
    });
    std::sort(out.begin(), out.end(), [](const ShapeDescriptor& a, const ShapeDescriptor& b) {
        if (a.nodes != b.nodes) return a.nodes < b.nodes;
        return a.code < b.code;
    });
    return out;
}

TreeReport report_tree(const ExceptionalTree& tree, Int deg) {
    TreeReport r;
    for (const TreeNode& n : tree.nodes()) r.depths.push_back(tree.node_depth(n.id));
    r.tree_depth = tree.tree_depth();
    if (tree.fully_labeled() && !tree.empty()) {
        r.betas = tree.beta_from_gamma();
        r.minimal = tree.is_minimal();
    }
    r.depth_ok = tree.check_depth(deg);
    r.width_ok = tree.check_width(deg);
    r.leaf_pair_ok = tree.check_leaf_pairs(deg);
    return r;
}

} // namespace k3maps
