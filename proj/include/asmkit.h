/* asmkit — exact enumeration and identity verification for alternating sign
 * matrices and their symmetry classes.
 *
 * C surface of the shared library: opaque handles, integer status codes,
 * heap-allocated strings released with asmkit_string_free. All counts travel
 * as decimal strings; nothing here ever goes through floating point.
 */
#ifndef ASMKIT_H
#define ASMKIT_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    ASMKIT_OK = 0,
    ASMKIT_ERR_INVALID = 1,     /* bad arguments (unknown class, wrong order, ...) */
    ASMKIT_ERR_UNSUPPORTED = 2, /* request outside the supported desk scale */
    ASMKIT_ERR_INTERNAL = 3
} asmkit_status;

typedef struct asmkit_table asmkit_table;   /* refined enumeration table */
typedef struct asmkit_report asmkit_report; /* identity verification report */

const char* asmkit_version(void);

/* Message for the most recent failure on this thread; never NULL. */
const char* asmkit_last_error(void);

void asmkit_string_free(char* s);

/* Total count of a symmetry class at the given order ("plain", "vs", "vhs",
 * "hts", "qts", "qqts", "os", "oos", "vos", "vhp"). */
asmkit_status asmkit_count(const char* cls, int order, int jobs, char** out_decimal);

/* Refined table; statistic is one of "first-row", "last-row", "first-col",
 * "second-row", "second-col"; provenance "brute-force" or "closed-form". */
asmkit_status asmkit_refined_table(const char* cls, int order, const char* stat,
                                   const char* provenance, int jobs, asmkit_table** out);
int asmkit_table_size(const asmkit_table* t);
asmkit_status asmkit_table_entry(const asmkit_table* t, int index, int* out_position,
                                 char** out_count);
asmkit_status asmkit_table_json(const asmkit_table* t, char** out_json);
asmkit_status asmkit_table_csv(const asmkit_table* t, char** out_csv);
void asmkit_table_free(asmkit_table* t);

/* Closed-form scalar evaluators: "asm-total" (i ignored), "a-plain", "a-o",
 * "a-v", "a-ht-even", "a-vhp-row", "a-vhp-col", "q" (Q_{n,i}). */
asmkit_status asmkit_formula_eval(const char* name, int n, int i, char** out_decimal);

/* Run an identity family ("all", "vsasm", "vh", "vhp", "oo", "vos", "qt",
 * "qqt", "first-col", "schur", "ht-reconcile", "partition"). */
asmkit_status asmkit_verify(const char* identity, int max_order, unsigned long long seed,
                            int jobs, asmkit_report** out);
int asmkit_report_size(const asmkit_report* r);
int asmkit_report_all_passed(const asmkit_report* r); /* skipped entries do not fail */
asmkit_status asmkit_report_line(const asmkit_report* r, int index, char** out_line);
asmkit_status asmkit_report_json(const asmkit_report* r, char** out_json);
void asmkit_report_free(asmkit_report* r);

/* Quartered-hexagon data: Q table (four evaluation routes) and the
 * generating function, as JSON. */
asmkit_status asmkit_tilings_json(int n, char** out_json);

/* Partition-function spot check: model "dwbc" | "uturn" | "uuturn". With
 * symbolic_x the refined-link identity is checked instead of random points. */
asmkit_status asmkit_partition_json(const char* model, int n, unsigned long long seed,
                                    int symbolic_x, char** out_json);

/* Validate the text format (rows of -1/0/1, or * for the perverse center)
 * and test class membership; out_is_member gets 0 or 1. */
asmkit_status asmkit_matrix_is_member(const char* text, const char* cls, int* out_is_member);

#ifdef __cplusplus
}
#endif

#endif
