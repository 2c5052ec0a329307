/* grail — gauge-invariant ideal lattices of finite directed graphs.
 *
 * C interface to the shared library.  All objects are opaque handles
 * freed with the matching *_free function; all returned strings are
 * heap-allocated and freed with grail_string_free.  On any status other
 * than GRAIL_OK, grail_last_error() describes the failure (thread-local).
 */
#ifndef GRAIL_H
#define GRAIL_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct grail_graph grail_graph;
typedef struct grail_lattice grail_lattice;

typedef enum grail_status {
    GRAIL_OK = 0,
    GRAIL_INTERNAL_ERROR = 1,
    GRAIL_PARSE_ERROR = 2,
    GRAIL_INVALID_SET = 3,
    GRAIL_CAPACITY_EXCEEDED = 4,
    GRAIL_VERIFY_FAILED = 5
} grail_status;

enum {
    GRAIL_FORMAT_LINE = 0,
    GRAIL_FORMAT_JSON = 1,
    GRAIL_FORMAT_DOT = 2 /* output only */
};

const char* grail_last_error(void);
void grail_string_free(char* s);
void grail_graph_free(grail_graph* g);
void grail_lattice_free(grail_lattice* l);

/* ---- graphs ---- */

grail_status grail_graph_parse(const char* text, int format, grail_graph** out);
grail_status grail_graph_serialize(const grail_graph* g, int format, char** out);
size_t grail_graph_vertex_count(const grail_graph* g);
size_t grail_graph_edge_count(const grail_graph* g);
int grail_graph_equal(const grail_graph* a, const grail_graph* b);

/* holds <- 1 iff every cycle has an entry. */
grail_status grail_condition_l(const grail_graph* g, int* holds);
/* JSON {"edges": [...], "vertices": [...]} of an entryless cycle, or
 * NULL when the graph satisfies Condition (L). */
grail_status grail_entryless_cycle(const grail_graph* g, char** cycle_json);

/* ---- vertex sets ----
 * Sets are passed in as comma-separated vertex ids ("" = empty set) and
 * returned as JSON arrays in canonical order.  With exact == 0 the input
 * is saturated first; with exact != 0 a set that is not saturated
 * hereditary yields GRAIL_INVALID_SET. */

grail_status grail_saturate(const grail_graph* g, const char* set_csv, char** out_json);
grail_status grail_set_flags(const grail_graph* g, const char* set_csv, int* hereditary,
                             int* saturated);
grail_status grail_perp(const grail_graph* g, const char* set_csv, int exact, char** out_json);
grail_status grail_perp_perp(const grail_graph* g, const char* set_csv, int exact,
                             char** out_json);
grail_status grail_is_regular(const grail_graph* g, const char* set_csv, int exact, int* regular);
grail_status grail_quotient(const grail_graph* g, const char* set_csv, int exact,
                            grail_graph** out);

/* ---- ideal lattice ---- */

grail_status grail_lattice_compute(const grail_graph* g, size_t max_entries, grail_lattice** out);
size_t grail_lattice_size(const grail_lattice* l);
grail_status grail_lattice_to_json(const grail_lattice* l, char** out);
grail_status grail_lattice_to_table(const grail_lattice* l, char** out);

/* ---- generators ---- */

/* h_json may be NULL; otherwise receives the canonical saturated
 * hereditary set shipped with the family. */
grail_status grail_gen_figure1(unsigned depth, grail_graph** out, char** h_json);
grail_status grail_gen_chain_loops(unsigned n, grail_graph** out);
grail_status grail_gen_random(unsigned vertices, unsigned edges, double loop_prob, uint64_t seed,
                              grail_graph** out);

/* ---- verification ----
 * inject_failure != 0 swaps in a deliberately broken oracle so callers
 * can exercise the failure-reporting path end to end.  Returns
 * GRAIL_VERIFY_FAILED when the report contains a failing check; the
 * report strings are still produced in that case. */

grail_status grail_verify_graph(const grail_graph* g, int inject_failure, char** report_json,
                                char** report_table);
grail_status grail_verify_ensemble(unsigned count, unsigned max_vertices, unsigned max_edges,
                                   double loop_prob, uint64_t seed, int inject_failure,
                                   char** report_json, char** report_table);

/* JSON {"set": [...], "cycle": {...}} witness of a non-regular set whose
 * quotient loses Condition (L), or NULL when none exists.  The graph
 * must satisfy Condition (L). */
grail_status grail_find_l_counterexample(const grail_graph* g, char** witness_json);

#ifdef __cplusplus
}
#endif

#endif
