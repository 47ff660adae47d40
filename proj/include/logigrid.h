/* C interface to the logigrid solver library.
 *
 * Handles are opaque; every object returned by a lg_*_ create/parse/solve
 * call must be released with its matching lg_*_free. Functions that can fail
 * return NULL (pointer results) or a nonzero LG_ERR_* code (int results);
 * lg_last_error() then describes the problem. The error slot is thread-local.
 *
 * const char* returns point into the owning handle and stay valid until that
 * handle is freed. char* returns are heap copies owned by the caller; release
 * them with lg_string_free.
 */

#ifndef LOGIGRID_H
#define LOGIGRID_H

#ifdef __cplusplus
extern "C" {
#endif

/* error codes (mirror the library's internal Code enum) */
#define LG_OK 0
#define LG_ERR_SYNTAX 1
#define LG_ERR_UNKNOWN_LABEL 2
#define LG_ERR_ARITY 3
#define LG_ERR_UNORDERED_CATEGORY 4
#define LG_ERR_DUPLICATE_LABEL 5
#define LG_ERR_SAME_CATEGORY 6
#define LG_ERR_SAME_CATEGORY_PAIR 7
#define LG_ERR_BAD_CATEGORY_SIZE 8
#define LG_ERR_BAD_N_PARAM 9
#define LG_ERR_CONTRADICTION 10
#define LG_ERR_EMPTY_DOMAIN 11
#define LG_ERR_TARGET_NEVER_FILLED 12
#define LG_ERR_INVALID_ARGUMENT 13
#define LG_ERR_IO 14

/* solver statuses */
#define LG_STATUS_SOLVED 0
#define LG_STATUS_STUCK 1
#define LG_STATUS_CONTRADICTION 2

/* explanation rendering flags */
#define LG_OPT_NO_GROUP 1u /* one line per fill instead of grouped consistency runs */
#define LG_OPT_DISCARDS 2u /* announce when a clue can be discarded */

typedef struct lg_puzzle lg_puzzle;
typedef struct lg_result lg_result;
typedef struct lg_cnf lg_cnf;
typedef struct lg_solutions lg_solutions;

const char* lg_version(void);

/* Message and code of the most recent failure on this thread. */
const char* lg_last_error(void);
int lg_last_error_code(void);
/* 1-based document line of the most recent parse failure, 0 if none. */
int lg_last_error_line(void);
const char* lg_error_name(int code);
const char* lg_status_name(int status);

void lg_string_free(char* s);

/* ---- puzzles ---------------------------------------------------------- */

lg_puzzle* lg_parse(const char* text);
lg_puzzle* lg_parse_file(const char* path);
void lg_puzzle_free(lg_puzzle* p);

/* Canonical document text; parsing it back reproduces the puzzle. */
char* lg_serialize(const lg_puzzle* p);

const char* lg_puzzle_name(const lg_puzzle* p);
int lg_category_count(const lg_puzzle* p);
int lg_element_count(const lg_puzzle* p); /* per category */
const char* lg_category_label(const lg_puzzle* p, int cat);
int lg_category_ordered(const lg_puzzle* p, int cat);
const char* lg_element_label(const lg_puzzle* p, int cat, int index);
int lg_constraint_count(const lg_puzzle* p);
int lg_constraint_clue(const lg_puzzle* p, int index);
const char* lg_constraint_kind(const lg_puzzle* p, int index);

/* LG_OK when structurally sound; otherwise the first issue's code, with the
 * message in lg_last_error(). */
int lg_validate(const lg_puzzle* p);

/* Interactive acquisition. `ask` is called once per question; the returned
 * string is copied immediately and only needs to survive until the next
 * call (return NULL to abort). When `transcript` is non-NULL it receives the
 * question/answer log; free it with lg_string_free. */
typedef const char* (*lg_ask_fn)(const char* question, void* user);
lg_puzzle* lg_acquire(lg_ask_fn ask, void* user, char** transcript);

/* ---- solving and explanations ----------------------------------------- */

/* Runs the deduction engine. Returns NULL only on invalid input; a stuck or
 * contradictory run still produces a result (see lg_result_status). */
lg_result* lg_solve(const lg_puzzle* p);
void lg_result_free(lg_result* r);

int lg_result_status(const lg_result* r); /* LG_STATUS_* */

/* Final value of one cell: 1 yes, -1 no, 0 undetermined. */
int lg_result_cell(const lg_result* r, const char* e, const char* f, int* value);

int lg_result_event_count(const lg_result* r);

/* Explanation lines under the given flags. Lines are indexed 0..count-1;
 * out-of-range indices return NULL without setting an error. */
int lg_result_line_count(const lg_result* r, unsigned flags);
const char* lg_result_line(const lg_result* r, unsigned flags, int index);

/* The whole explanation as one newline-terminated block. */
char* lg_result_render(const lg_result* r, unsigned flags);

/* ASCII grid snapshot of the final state. */
char* lg_result_grid(const lg_result* r);

/* Structured event log, one JSON record per line. */
char* lg_result_log(const lg_result* r);

/* Explanation restricted to the deductions behind one cell. */
char* lg_result_slice(const lg_result* r, const char* e, const char* f, unsigned flags);

/* ---- CNF export -------------------------------------------------------- */

lg_cnf* lg_cnf_encode(const lg_puzzle* p);
void lg_cnf_free(lg_cnf* c);

int lg_cnf_num_vars(const lg_cnf* c);
int lg_cnf_num_clauses(const lg_cnf* c);
char* lg_cnf_dimacs(const lg_cnf* c);

/* DIMACS variable of a cell, 0 on error. */
int lg_var_index(const lg_puzzle* p, const char* e, const char* f);

/* Exhaustive model count, capped at limit. -1 on error. */
long long lg_cnf_count_models(const lg_cnf* c, long long limit);

/* ---- reference enumeration --------------------------------------------- */

/* All solutions found by the independent backtracking oracle, up to limit. */
lg_solutions* lg_enumerate(const lg_puzzle* p, int limit);
void lg_solutions_free(lg_solutions* s);

int lg_solutions_count(const lg_solutions* s);
/* Element label of category `cat` in tuple `tuple` of solution `index`. */
const char* lg_solution_element(const lg_solutions* s, int index, int tuple, int cat);

#ifdef __cplusplus
}
#endif

#endif /* LOGIGRID_H */
