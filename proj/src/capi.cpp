#include "k3maps/k3maps.h"

#include <string>

#include "k3maps/engine.hpp"
#include "k3maps/serialize.hpp"
#include "k3maps/severi.hpp"

struct k3m_result {
    std::string json;
    bool ok = true;
};

namespace {

thread_local std::string g_last_error;

k3m_status fail(k3m_status s, const char* what) {
    g_last_error = what;
    return s;
}

template <typename Fn>
k3m_status guarded(Fn&& fn, k3m_status parse_as = K3M_EINVAL) {
    try {
        fn();
        return K3M_OK;
    } catch (const k3maps::OverflowError& e) {
        return fail(K3M_EOVERFLOW, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(parse_as, e.what());
    } catch (const std::exception& e) {
        return fail(K3M_EINTERNAL, e.what());
    }
}

k3m_status make_result(std::string json, bool ok, k3m_result** out) {
    *out = new k3m_result{std::move(json), ok};
    return K3M_OK;
}

} // namespace

extern "C" {

const char* k3m_status_name(k3m_status s) {
    switch (s) {
        case K3M_OK: return "ok";
        case K3M_EINVAL: return "invalid argument";
        case K3M_EOVERFLOW: return "integer overflow";
        case K3M_EPARSE: return "parse error";
        case K3M_EINTERNAL: return "internal error";
    }
    return "?";
}

const char* k3m_last_error(void) { return g_last_error.c_str(); }

k3m_status k3m_check(long long g, long long deg, long long l,
                     const char* profile, k3m_result** out) {
    if (!profile || !out) return fail(K3M_EINVAL, "null argument");
    k3m_status rc = K3M_OK;
    k3m_status guard = guarded([&] {
        auto prof = k3maps::ConstraintProfile::by_name(profile);
        if (!prof) throw std::invalid_argument("unknown profile name");
        k3maps::FeasibilityVerdict v = k3maps::check(g, deg, l, *prof);
        rc = make_result(k3maps::verdict_json(v), v.admissible, out);
    });
    return guard == K3M_OK ? rc : guard;
}

k3m_status k3m_table(long long g, long long deg, long long l_max,
                     const char* profile, k3m_result** out) {
    if (!profile || !out) return fail(K3M_EINVAL, "null argument");
    return guarded([&] {
        auto prof = k3maps::ConstraintProfile::by_name(profile);
        if (!prof) throw std::invalid_argument("unknown profile name");
        k3maps::AdmissibilityTable t = k3maps::admissible_table(g, deg, l_max, *prof);
        make_result(k3maps::table_json(t), true, out);
    });
}

k3m_status k3m_paper_report(long long terms, k3m_result** out) {
    if (!out) return fail(K3M_EINVAL, "null argument");
    return guarded([&] {
        k3maps::PaperTableReport r = k3maps::paper_table_report(terms);
        make_result(k3maps::report_json(r), r.mismatch_count == 0, out);
    });
}

k3m_status k3m_partitions(long long n, long long p_cap, k3m_result** out) {
    if (!out) return fail(K3M_EINVAL, "null argument");
    return guarded([&] {
        std::optional<k3maps::Int> cap;
        if (p_cap >= 0) cap = p_cap;
        auto parts = k3maps::enumerate_beta_partitions(n, cap);
        make_result(k3maps::partitions_json(n, cap, parts), true, out);
    });
}

k3m_status k3m_tree_verify(const char* tree_json, long long deg, k3m_result** out) {
    if (!tree_json || !out) return fail(K3M_EINVAL, "null argument");
    k3maps::ExceptionalTree tree;
    k3m_status s = guarded([&] { tree = k3maps::parse_tree_json(tree_json); }, K3M_EPARSE);
    if (s != K3M_OK) return s;
    return guarded([&] {
        std::string json = k3maps::tree_report_json(tree, deg);
        // re-derive the pass flag from the report
        k3maps::TreeReport r = k3maps::report_tree(tree, deg);
        bool pass = r.depth_ok && r.width_ok && r.leaf_pair_ok && (!r.minimal || *r.minimal);
        make_result(std::move(json), pass, out);
    });
}

const char* k3m_result_json(const k3m_result* r) { return r ? r->json.c_str() : ""; }

int k3m_result_ok(const k3m_result* r) { return r && r->ok ? 1 : 0; }

void k3m_result_free(k3m_result* r) { delete r; }

k3m_status k3m_arithmetic_genus(long long g, long long k, long long* out) {
    if (!out) return fail(K3M_EINVAL, "null argument");
    return guarded([&] { *out = k3maps::arithmetic_genus(g, k); });
}

k3m_status k3m_node_count(long long g, long long k, long long l, long long* out) {
    if (!out) return fail(K3M_EINVAL, "null argument");
    return guarded([&] { *out = k3maps::node_count(g, k, l); });
}

k3m_status k3m_genericity_threshold(long long g, long long* out) {
    if (!out) return fail(K3M_EINVAL, "null argument");
    return guarded([&] { *out = k3maps::genericity_threshold(g); });
}

} // extern "C"
