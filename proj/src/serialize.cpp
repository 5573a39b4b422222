#include "k3maps/serialize.hpp"

#include <json.hpp>

namespace k3maps {

using nlohmann::json;

namespace {

json verdict_to_json(const FeasibilityVerdict& v) {
    json j;
    j["g"] = v.g;
    j["deg"] = v.deg;
    j["l"] = v.l;
    j["profile"] = v.profile;
    j["admissible"] = v.admissible;
    j["reason"] = v.reason ? json(reason_name(*v.reason)) : json(nullptr);
    j["lambda"] = v.lambdas;
    j["N"] = v.n_value ? json(*v.n_value) : json(nullptr);
    j["witness_partition"] =
        v.witness_partition ? json(v.witness_partition->parts) : json(nullptr);
    j["witness_shape"] = v.witness_shape ? json(*v.witness_shape) : json(nullptr);
    return j;
}

} // namespace

std::string verdict_json(const FeasibilityVerdict& v) {
    return verdict_to_json(v).dump();
}

std::string table_json(const AdmissibilityTable& t) {
    json j;
    j["g"] = t.g;
    j["deg"] = t.deg;
    j["l_max"] = t.l_max;
    j["profile"] = t.profile;
    j["admissible_l"] = t.admissible_l();
    json vs = json::array();
    for (const FeasibilityVerdict& v : t.verdicts) vs.push_back(verdict_to_json(v));
    j["verdicts"] = vs;
    return j.dump();
}

std::string report_json(const PaperTableReport& r) {
    json j;
    j["terms"] = r.terms;
    j["match_count"] = r.match_count;
    j["mismatch_count"] = r.mismatch_count;
    json rows = json::array();
    for (const PaperRowResult& row : r.rows) {
        json rj;
        rj["deg"] = row.deg;
        rj["g"] = row.g;
        rj["paper_l"] = row.paper_values;
        rj["designated_profile"] = row.designated_profile;
        rj["designated_match"] = row.designated_match;
        rj["status"] = row.designated_match ? "MATCH" : "MISMATCH";
        json ps = json::array();
        for (const PaperProfileResult& pr : row.profiles) {
            json pj;
            pj["profile"] = pr.profile;
            pj["computed"] = pr.computed;
            pj["match"] = pr.match;
            ps.push_back(pj);
        }
        rj["profiles"] = ps;
        rows.push_back(rj);
    }
    j["rows"] = rows;
    return j.dump();
}

std::string partitions_json(Int n, std::optional<Int> p_cap,
                            const std::vector<BetaPartition>& parts) {
    json j;
    j["n"] = n;
    j["p_cap"] = p_cap ? json(*p_cap) : json(nullptr);
    j["count"] = parts.size();
    json ps = json::array();
    for (const BetaPartition& p : parts) ps.push_back(p.parts);
    j["partitions"] = ps;
    return j.dump();
}

std::string tree_report_json(const ExceptionalTree& tree, Int deg) {
    TreeReport r = report_tree(tree, deg);
    json j;
    j["deg"] = deg;
    j["nodes"] = tree.size();
    j["depths"] = r.depths;
    j["tree_depth"] = r.tree_depth;
    j["betas"] = r.betas ? json(*r.betas) : json(nullptr);
    j["minimal"] = r.minimal ? json(*r.minimal) : json(nullptr);
    j["depth_ok"] = r.depth_ok;
    j["width_ok"] = r.width_ok;
    j["leaf_pair_ok"] = r.leaf_pair_ok;
    bool pass = r.depth_ok && r.width_ok && r.leaf_pair_ok &&
                (!r.minimal || *r.minimal);
    j["pass"] = pass;
    return j.dump();
}

ExceptionalTree parse_tree_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("tree file parse error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("nodes") || !j["nodes"].is_array())
        throw std::invalid_argument("tree file must be an object with a \"nodes\" array");
    std::vector<TreeNode> nodes;
    for (const json& nj : j["nodes"]) {
        if (!nj.is_object() || !nj.contains("id") || !nj["id"].is_number_integer())
            throw std::invalid_argument("each node needs an integer \"id\"");
        TreeNode n;
        n.id = nj["id"].get<Int>();
        if (nj.contains("parent") && !nj["parent"].is_null()) {
            if (!nj["parent"].is_number_integer())
                throw std::invalid_argument("node \"parent\" must be an integer");
            n.parent = nj["parent"].get<Int>();
        }
        if (nj.contains("gamma") && !nj["gamma"].is_null()) {
            if (!nj["gamma"].is_number_integer())
                throw std::invalid_argument("node \"gamma\" must be an integer");
            n.gamma = nj["gamma"].get<Int>();
        }
        nodes.push_back(n);
    }
    return ExceptionalTree(std::move(nodes)); // validates ids and parent order
}

} // namespace k3maps
