/* C interface to the K3 self-rational-map admissibility library.
 *
 * All composite results are returned through an opaque k3m_result handle
 * carrying a JSON document; free it with k3m_result_free. Functions return
 * K3M_OK on success and set *out, or an error code with *out untouched.
 * k3m_last_error() describes the most recent failure on this thread.
 */
#ifndef K3MAPS_CAPI_H
#define K3MAPS_CAPI_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    K3M_OK = 0,
    K3M_EINVAL = 1,   /* invalid argument / contract violation */
    K3M_EOVERFLOW = 2,/* 64-bit overflow in exact arithmetic */
    K3M_EPARSE = 3,   /* malformed tree document */
    K3M_EINTERNAL = 4
} k3m_status;

typedef struct k3m_result k3m_result;

const char* k3m_status_name(k3m_status s);
const char* k3m_last_error(void);

/* Feasibility verdict for the triple (g, deg, l) under a named profile
 * ("basic", "amerik" or "full"). */
k3m_status k3m_check(long long g, long long deg, long long l,
                     const char* profile, k3m_result** out);

/* Admissibility table for l = 2..l_max. */
k3m_status k3m_table(long long g, long long deg, long long l_max,
                     const char* profile, k3m_result** out);

/* Recomputation of the published deg-4 / deg-9 admissibility tables. */
k3m_status k3m_paper_report(long long terms, k3m_result** out);

/* Even-sum partitions into squares summing to n; p_cap < 0 means no cap. */
k3m_status k3m_partitions(long long n, long long p_cap, k3m_result** out);

/* Verify an exceptional-tree document (JSON text) against the shape
 * predicates for the given topological degree. */
k3m_status k3m_tree_verify(const char* tree_json, long long deg, k3m_result** out);

const char* k3m_result_json(const k3m_result* r);
/* 1 when the verdict is admissible / all checks pass, else 0. */
int k3m_result_ok(const k3m_result* r);
void k3m_result_free(k3m_result* r);

/* Scalar helpers. */
k3m_status k3m_arithmetic_genus(long long g, long long k, long long* out);
k3m_status k3m_node_count(long long g, long long k, long long l, long long* out);
k3m_status k3m_genericity_threshold(long long g, long long* out);

#ifdef __cplusplus
}
#endif

#endif
