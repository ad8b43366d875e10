/*
 * C interface to the complementarity knapsack library.
 *
 * Objects are opaque handles created by ckp_*_parse / ckp_*_load and released
 * with the matching ckp_*_free. Every fallible call returns a ckp_status; on
 * failure ckp_last_error() describes the problem (thread-local, valid until
 * the next failing call on the same thread). Rationals cross the boundary as
 * canonical text ("p" or "p/q"); strings returned through `char **` are owned
 * by the caller and released with ckp_string_free.
 */
#ifndef CKP_CKP_H_
#define CKP_CKP_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CKP_API __declspec(dllexport)
#else
#define CKP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ckp_status {
  CKP_OK = 0,
  CKP_ERR_PARSE = 1,        /* malformed input text or unreadable file */
  CKP_ERR_PRECONDITION = 2, /* invalid data or unmet hypothesis */
  CKP_ERR_RESOURCE = 3,     /* enumeration limit exceeded */
  CKP_ERR_ARGUMENT = 4,     /* null handle or unknown enum value */
  CKP_ERR_INTERNAL = 5
} ckp_status;

/* Bit flags; CKP_FAMILY_ALL selects every family. */
typedef enum ckp_family {
  CKP_FAMILY_LCOVER1 = 1,
  CKP_FAMILY_LCOVER2 = 2,
  CKP_FAMILY_PACK1 = 4,
  CKP_FAMILY_PACK2 = 8,
  CKP_FAMILY_PACK3 = 16,
  CKP_FAMILY_ALL = 31
} ckp_family;

typedef enum ckp_separation_mode {
  CKP_SEPARATE_EXACT = 0,
  CKP_SEPARATE_GREEDY = 1
} ckp_separation_mode;

typedef struct ckp_instance ckp_instance;
typedef struct ckp_inequality ckp_inequality;
typedef struct ckp_point ckp_point;
typedef struct ckp_cut_list ckp_cut_list;
typedef struct ckp_solve_report ckp_solve_report;

CKP_API const char *ckp_last_error(void);
CKP_API void ckp_string_free(char *s);
/* Default enumeration limit, honoring the CKP_ENUM_LIMIT environment variable. */
CKP_API uint64_t ckp_default_enumeration_limit(void);
/* Parses "lcover1".."pack3" or "all" into a family mask; 0 if unknown. */
CKP_API unsigned ckp_family_from_name(const char *name);

/* ---- instances ---------------------------------------------------------- */
CKP_API ckp_status ckp_instance_parse(const char *text, ckp_instance **out);
CKP_API ckp_status ckp_instance_load(const char *path, ckp_instance **out);
CKP_API void ckp_instance_free(ckp_instance *instance);
CKP_API ckp_status ckp_instance_serialize(const ckp_instance *instance, char **out);
CKP_API size_t ckp_instance_num_groups(const ckp_instance *instance);
CKP_API size_t ckp_instance_dimension(const ckp_instance *instance);
/* Sorts slots by non-increasing weight. *permuted is set to 1 if any group
 * was reordered. */
CKP_API ckp_status ckp_instance_normalize(const ckp_instance *instance, ckp_instance **out,
                                          int *permuted);
/* Input slot of normalized slot `slot` in `group` (1-based); 0 if out of range
 * or the instance was not produced by ckp_instance_normalize. */
CKP_API int ckp_instance_original_slot(const ckp_instance *normalized, int group, int slot);
/* Assumption report as text (`m0:`, `assumption1:`, ... lines). */
CKP_API ckp_status ckp_instance_check(const ckp_instance *instance, char **report);

/* ---- inequalities and points -------------------------------------------- */
CKP_API ckp_status ckp_inequality_parse(const char *text, ckp_inequality **out);
CKP_API ckp_status ckp_inequality_load(const char *path, ckp_inequality **out);
CKP_API void ckp_inequality_free(ckp_inequality *inequality);
CKP_API ckp_status ckp_inequality_serialize(const ckp_inequality *inequality, char **out);

CKP_API ckp_status ckp_point_parse(const char *text, ckp_point **out);
CKP_API ckp_status ckp_point_load(const char *path, ckp_point **out);
CKP_API void ckp_point_free(ckp_point *point);
CKP_API ckp_status ckp_point_serialize(const ckp_point *point, char **out);
/* Value of x_{group,slot} as canonical text. */
CKP_API ckp_status ckp_point_value(const ckp_point *point, int group, int slot, char **out);

/* lhs = a.x, violation = lhs - rhs. Either output may be NULL. */
CKP_API ckp_status ckp_evaluate(const ckp_instance *instance, const ckp_inequality *inequality,
                                const ckp_point *point, char **lhs, char **violation);

/* ---- oracle ------------------------------------------------------------- */
CKP_API ckp_status ckp_oracle_vertex_count(const ckp_instance *instance, uint64_t limit,
                                           size_t *count);
/* Candidate vertices, one `point 1` block per vertex separated by blank lines. */
CKP_API ckp_status ckp_oracle_vertices(const ckp_instance *instance, uint64_t limit,
                                       char **text);
/* Maximizes the coefficients of `objective` (its rhs is ignored) over S; a
 * NULL objective means the instance profits. */
CKP_API ckp_status ckp_oracle_maximize(const ckp_instance *instance,
                                       const ckp_inequality *objective, uint64_t limit,
                                       char **value, ckp_point **argmax);

typedef struct ckp_verify_result {
  int valid;          /* 1 if valid for PS */
  long face_dim;      /* -1 for an empty face; unset when invalid */
  int facet;          /* face_dim == d - 1 */
  ckp_point *witness; /* point of S violating the inequality, or NULL */
} ckp_verify_result;

CKP_API ckp_status ckp_verify(const ckp_instance *instance, const ckp_inequality *inequality,
                              uint64_t limit, ckp_verify_result *out);
/* Releases the witness owned by a verify result. */
CKP_API void ckp_verify_result_clear(ckp_verify_result *result);

/* ---- cuts --------------------------------------------------------------- */
/* Cuts of the families in `families` (mask) on a normalized instance. Pack
 * families range over maximal switching packs unless all_packs is nonzero.
 * With verify nonzero each cut's face dimension is computed. */
CKP_API ckp_status ckp_cuts_generate(const ckp_instance *instance, unsigned families,
                                     int all_packs, int verify, uint64_t limit,
                                     ckp_cut_list **out);
CKP_API void ckp_cut_list_free(ckp_cut_list *list);
CKP_API size_t ckp_cut_list_size(const ckp_cut_list *list);
/* Copy of cut k's inequality. */
CKP_API ckp_status ckp_cut_list_inequality(const ckp_cut_list *list, size_t k,
                                           ckp_inequality **out);
/* 1 if the generating theorem guarantees a facet. */
CKP_API int ckp_cut_list_facet_guaranteed(const ckp_cut_list *list, size_t k);
/* Family flag of cut k. */
CKP_API unsigned ckp_cut_list_family(const ckp_cut_list *list, size_t k);
/* Cut k as inequality text + `# provenance` + `facet: yes|no|unknown`. */
CKP_API ckp_status ckp_cut_list_format(const ckp_cut_list *list, size_t k, char **out);

/* Separates `point` (which must satisfy bounds and the knapsack row). On
 * success *found tells whether a violated cut exists; if so `cut` receives a
 * one-element list and `violation` its canonical violation. */
CKP_API ckp_status ckp_separate(const ckp_instance *instance, const ckp_point *point,
                                unsigned families, ckp_separation_mode mode, uint64_t limit,
                                int *found, char **violation, ckp_cut_list **cut,
                                uint64_t *examined);

/* Builds the partition reduction; writes instance and point handles. */
CKP_API ckp_status ckp_reduce_partition(const int64_t *alphas, size_t count, int64_t beta,
                                        ckp_instance **instance, ckp_point **point);

/* ---- solver ------------------------------------------------------------- */
typedef struct ckp_solve_options {
  unsigned families;       /* mask; 0 disables cuts */
  int exact_separation;    /* fall back to exact separation */
  int max_cuts_per_node;
  uint64_t node_limit;
  uint64_t enumeration_limit;
} ckp_solve_options;

CKP_API void ckp_solve_options_default(ckp_solve_options *options);
/* Solves a normalized instance. */
CKP_API ckp_status ckp_solve(const ckp_instance *instance, const ckp_solve_options *options,
                             ckp_solve_report **out);
CKP_API void ckp_solve_report_free(ckp_solve_report *report);
CKP_API int ckp_solve_report_optimal(const ckp_solve_report *report);
CKP_API ckp_status ckp_solve_report_value(const ckp_solve_report *report, char **out);
CKP_API uint64_t ckp_solve_report_nodes(const ckp_solve_report *report);
/* Optimal (or incumbent) point, in the instance's slot order. */
CKP_API ckp_status ckp_solve_report_point(const ckp_solve_report *report, ckp_point **out);
/* Full report as text. */
CKP_API ckp_status ckp_solve_report_format(const ckp_solve_report *report, char **out);

#ifdef __cplusplus
}
#endif

#endif /* CKP_CKP_H_ */
