/*
 * netid — excitation-signal placement for generic identifiability of linear
 * dynamic network model sets with parametrized and known (fixed) modules.
 *
 * The library works on a directed graph description of the model set:
 * internal nodes 1..L, noise sources L+1..L+p, and directed edges that are
 * either parametrized (to be identified) or fixed (known a priori). It can
 *   - verify the vertex-disjoint-path condition that is sufficient for
 *     generic identifiability,
 *   - cover the graph with single-source identifiable multi-rooted subgraphs
 *     (SIMUGs) or with pseudotrees,
 *   - allocate a set of fresh excitation signals and prune redundant ones.
 *
 * All functions returning netid_status set a thread-local message readable
 * via netid_last_error() on failure. Handles are opaque; destroy what you
 * create. Nodes are 1-based everywhere; noise source k is node L+k.
 */

#ifndef NETID_H
#define NETID_H

#include <stdint.h>

#if defined(_WIN32)
#define NETID_API __declspec(dllexport)
#else
#define NETID_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum netid_status {
    NETID_OK = 0,
    NETID_ERR_INVALID_ARGUMENT = 1, /* bad handle, index, or parameter */
    NETID_ERR_VALIDATION = 2,       /* network description violates a rule */
    NETID_ERR_NUMERIC = 3,          /* randomized routine failed to converge */
    NETID_ERR_INTERNAL = 4          /* internal invariant breach */
} netid_status;

typedef enum netid_edge_kind {
    NETID_EDGE_PARAMETRIZED = 0,
    NETID_EDGE_FIXED = 1
} netid_edge_kind;

typedef enum netid_method {
    NETID_METHOD_SIMUG = 0,
    NETID_METHOD_PSEUDOTREE_PARAMETRIZED = 1,
    NETID_METHOD_PSEUDOTREE_ALL = 2
} netid_method;

typedef struct netid_spec netid_spec;
typedef struct netid_certificate netid_certificate;
typedef struct netid_covering netid_covering;
typedef struct netid_plan netid_plan;

NETID_API const char* netid_version(void);

/* Message describing the most recent failure on this thread. */
NETID_API const char* netid_last_error(void);

/* ---- network description ---------------------------------------------- */

NETID_API netid_status netid_spec_create(int node_count, int noise_count,
                                         netid_spec** out);
NETID_API void netid_spec_destroy(netid_spec* spec);

NETID_API netid_status netid_spec_add_edge(netid_spec* spec, int from, int to,
                                           netid_edge_kind kind);
/* `source` is the noise source number 1..p (node L+source). */
NETID_API netid_status netid_spec_add_noise_edge(netid_spec* spec, int source, int to,
                                                 netid_edge_kind kind);
NETID_API netid_status netid_spec_add_excited(netid_spec* spec, int node);

/* Full structural check; add_* only validate locally. */
NETID_API netid_status netid_spec_validate(const netid_spec* spec);

NETID_API int netid_spec_node_count(const netid_spec* spec);
NETID_API int netid_spec_noise_count(const netid_spec* spec);

/* ---- identifiability check -------------------------------------------- */

/*
 * Evaluates the sufficient path condition per internal node. When
 * override_len >= 0 the first override_len entries of excited_override
 * replace the spec's excited set (0 meaning "none"); pass -1 to use the
 * spec's own excited set.
 */
NETID_API netid_status netid_verify(const netid_spec* spec, const int* excited_override,
                                    int override_len, netid_certificate** out);

NETID_API void netid_certificate_destroy(netid_certificate* cert);
NETID_API int netid_certificate_overall(const netid_certificate* cert);
NETID_API int netid_certificate_size(const netid_certificate* cert);
NETID_API netid_status netid_certificate_entry(const netid_certificate* cert, int index,
                                               int* node, int* required, int* achieved,
                                               int* pass);

/* Maximum number of vertex-disjoint paths between two node sets. */
NETID_API netid_status netid_max_disjoint_paths(const netid_spec* spec, const int* from,
                                                int from_len, const int* to, int to_len,
                                                int* out);

/*
 * Randomized numeric rank of the transfer submatrix between the two sets;
 * agrees with netid_max_disjoint_paths for generic edge weights.
 */
NETID_API netid_status netid_generic_rank(const netid_spec* spec, const int* from,
                                          int from_len, const int* to, int to_len,
                                          int trials, uint64_t seed, int* out);

/* ---- graph covering ----------------------------------------------------- */

NETID_API netid_status netid_cover(const netid_spec* spec, netid_method method,
                                   netid_covering** out);
NETID_API void netid_covering_destroy(netid_covering* cov);

NETID_API int netid_covering_size(const netid_covering* cov);
NETID_API int netid_covering_vertex_count(const netid_covering* cov, int unit);
NETID_API netid_status netid_covering_vertex(const netid_covering* cov, int unit,
                                             int index, int* out);
NETID_API int netid_covering_edge_count(const netid_covering* cov, int unit);
NETID_API netid_status netid_covering_edge(const netid_covering* cov, int unit, int index,
                                           int* from, int* to, netid_edge_kind* kind);
NETID_API int netid_covering_root_count(const netid_covering* cov, int unit);
NETID_API netid_status netid_covering_root(const netid_covering* cov, int unit, int index,
                                           int* out);

/* ---- signal allocation -------------------------------------------------- */

/*
 * Covers the graph with the chosen method and assigns excitations: reuses
 * existing r/e signals sitting on roots, skips fixed-only units (SIMUG
 * method only), and places fresh signals on the remaining roots. With
 * prune != 0 (SIMUG method only) redundant fresh signals are removed again.
 */
NETID_API netid_status netid_allocate(const netid_spec* spec, netid_method method,
                                      int prune, netid_plan** out);
NETID_API void netid_plan_destroy(netid_plan* plan);

NETID_API int netid_plan_new_signal_count(const netid_plan* plan);
NETID_API netid_status netid_plan_new_signal(const netid_plan* plan, int index, int* out);
NETID_API int netid_plan_reused_count(const netid_plan* plan);
NETID_API netid_status netid_plan_reused(const netid_plan* plan, int index, int* unit,
                                         int* node);
NETID_API int netid_plan_skipped_count(const netid_plan* plan);
NETID_API netid_status netid_plan_skipped(const netid_plan* plan, int index, int* unit);
NETID_API int netid_plan_fallback_used(const netid_plan* plan);

/* Borrowed views; valid while the plan lives. */
NETID_API const netid_covering* netid_plan_covering(const netid_plan* plan);
NETID_API const netid_certificate* netid_plan_certificate(const netid_plan* plan);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* NETID_H */
