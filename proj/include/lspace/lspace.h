#ifndef LSPACE_LSPACE_H
#define LSPACE_LSPACE_H

/*
 * C interface to the lspace library.
 *
 * Objects are opaque handles released with their *_free function. Reports
 * come back as JSON strings owned by the caller and released with
 * lspace_string_free. Every fallible call returns an lspace_status; on
 * failure lspace_last_error() describes the error for the calling thread.
 */

#include <stddef.h>

#if defined(_WIN32)
#  if defined(LSPACE_BUILDING_LIBRARY)
#    define LSPACE_API __declspec(dllexport)
#  else
#    define LSPACE_API __declspec(dllimport)
#  endif
#else
#  define LSPACE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lspace_status {
    LSPACE_OK = 0,
    LSPACE_INVALID_ARGUMENT = 1,
    LSPACE_SYNTAX_ERROR = 2,
    LSPACE_DUPLICATE_RULE = 3,
    LSPACE_MISSING_AXIOM = 4,
    LSPACE_FOREIGN_SYMBOL = 5,
    LSPACE_LENGTH_CAP_EXCEEDED = 6,
    LSPACE_PARTIAL_INVOLUTION = 7,
    LSPACE_NOT_BINARY_MINIMAL = 8,
    LSPACE_TOO_SHORT = 9,
    LSPACE_NOT_BINARY = 10,
    LSPACE_INDEX_OUT_OF_RANGE = 11,
    LSPACE_NOT_A_STUMP = 12,
    LSPACE_INVALID_SPAN = 13,
    LSPACE_NOT_CONSTITUENT = 14,
    LSPACE_NOT_PRESENT = 15,
    LSPACE_EMPTY_SISTER = 16,
    LSPACE_INVALID_SELECTOR = 17,
    LSPACE_NOT_APPLICABLE = 18,
    LSPACE_OVERFLOW = 19,
    LSPACE_INTERNAL = 100
} lspace_status;

typedef struct lspace_grammar lspace_grammar;
typedef struct lspace_tree lspace_tree;

/* classify flags */
#define LSPACE_COUNT_STUMPS 1u
#define LSPACE_CONTAINMENT_EXCLUDES_STUMPS 2u

/* derive_sequential strategies */
#define LSPACE_SEQ_LEFTMOST 0
#define LSPACE_SEQ_RULE_CYCLE 1

/* Passing 0 as a length cap selects the default (10^7 symbols). */
#define LSPACE_DEFAULT_LENGTH_CAP 0u

LSPACE_API const char* lspace_version(void);
LSPACE_API const char* lspace_last_error(void);
LSPACE_API const char* lspace_status_name(lspace_status status);
LSPACE_API void lspace_string_free(char* s);

/* grammars */
LSPACE_API lspace_status lspace_grammar_parse(const char* text, lspace_grammar** out);
/* Built-in reference grammar by name ("fib", "xor", "efib1", ...). */
LSPACE_API lspace_status lspace_grammar_reference(const char* name, lspace_grammar** out);
LSPACE_API lspace_status lspace_reference_names(char** json);
LSPACE_API void lspace_grammar_free(lspace_grammar* g);
LSPACE_API lspace_status lspace_grammar_to_text(const lspace_grammar* g, char** out);
LSPACE_API lspace_status lspace_grammar_to_json(const lspace_grammar* g, char** json);
LSPACE_API lspace_status lspace_validate(const lspace_grammar* g, char** json);

/* derivations */
LSPACE_API lspace_status lspace_derive(const lspace_grammar* g, size_t gens, size_t length_cap, char** json);
LSPACE_API lspace_status lspace_derive_sequential(const lspace_grammar* g, size_t step_limit, int strategy,
                                                  char** json);

/* derivation trees */
LSPACE_API lspace_status lspace_tree_derive(const lspace_grammar* g, size_t gens, size_t length_cap,
                                            lspace_tree** out);
/* `erasing` is a comma-separated list of labels marking empty nodes; may be NULL. */
LSPACE_API lspace_status lspace_tree_parse(const char* text, const char* erasing, lspace_tree** out);
/* op: collapse | percolate | u_prune | atomize; path is dotted ("0.1"); span used by atomize. */
LSPACE_API lspace_status lspace_tree_apply(const lspace_tree* t, const char* op, const char* path, size_t span,
                                           lspace_tree** out);
LSPACE_API lspace_status lspace_tree_render(const lspace_tree* t, char** out);
LSPACE_API lspace_status lspace_tree_to_json(const lspace_tree* t, char** json);
LSPACE_API void lspace_tree_free(lspace_tree* t);

/* mappings: expr is ID, M, N, MN or a word over {M, N}. With a NULL
 * involution the input must be binary; otherwise involution is "a=b,c=d" and
 * the input is tokenized like a grammar word. */
LSPACE_API lspace_status lspace_map_apply(const char* expr, const char* involution, const char* input, char** out);

/* classification */
LSPACE_API lspace_status lspace_classify(const lspace_grammar* g, unsigned flags, char** json);
LSPACE_API lspace_status lspace_rule_format(const lspace_grammar* g, char** json);
LSPACE_API lspace_status lspace_frustration(const char* rules, const char* sample, size_t bound, char** json);

/* analysis. report: growth | legality | decompose | repetition.
 * param: decomposition target (default: last generation) or maximal period
 * (default: half the last generation); 0 selects the default. */
LSPACE_API lspace_status lspace_analyze(const lspace_grammar* g, const char* report, size_t gens, size_t param,
                                        size_t length_cap, char** json);
LSPACE_API lspace_status lspace_constituent(const char* s, int allow_mappings, char** json);
LSPACE_API lspace_status lspace_fib_legal(const char* s, char** json);
/* a, b: comma-separated string sets; op: union | concat | star. */
LSPACE_API lspace_status lspace_closure(const char* a, const char* b, const char* op, size_t bound, char** json);
LSPACE_API lspace_status lspace_ratio_equal(const lspace_grammar* g1, const lspace_grammar* g2, const char* numerator,
                                            const char* denominator, size_t gens, char** json);

/* transforms */
LSPACE_API lspace_status lspace_expand(const char* spec, char** json);
LSPACE_API lspace_status lspace_grammar_edit(const lspace_grammar* g, const char* edit, lspace_grammar** out);
LSPACE_API lspace_status lspace_prune(const lspace_grammar* g, const char* rule, const char* chunk, size_t position,
                                      int allow_mappings, lspace_grammar** out);
/* target: fib | xor */
LSPACE_API lspace_status lspace_reduce(const lspace_grammar* g, const char* target, size_t bound, int allow_mappings,
                                       char** json);

/* cellular automaton; table is 8 bits ordered by neighborhood 000..111 */
LSPACE_API lspace_status lspace_ca_run(const char* table, const char* state, size_t steps, int fixed_zero,
                                       char** json);

/* golden checks; *passed is set to 1 when no check failed */
LSPACE_API lspace_status lspace_reproduce(char** json, int* passed);

#ifdef __cplusplus
}
#endif

#endif
