/*
 * tennisball C API.
 *
 * Counts lattice paths weakly below periodic staircase boundaries
 * (N^k1 E^l1 ... N^kr E^lr)^n, the generalized tennis ball problem.
 *
 * Every object is an opaque handle owned by the caller and released with
 * its matching *_destroy function. Functions return a tb_status; on failure
 * tb_last_error() describes the problem. Big integers cross the boundary as
 * decimal strings owned by the handle that produced them. All functions are
 * safe to call concurrently on distinct handles.
 */
#ifndef TENNISBALL_H
#define TENNISBALL_H

#include <stddef.h>

#if defined(TB_BUILDING_LIBRARY)
#define TB_API __attribute__((visibility("default")))
#else
#define TB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values double as CLI exit codes. */
typedef enum tb_status {
  TB_OK = 0,
  TB_ERR_USAGE = 1,        /* bad argument, pattern, or engine/pattern mismatch */
  TB_ERR_VERIFICATION = 2, /* an internal consistency check failed */
  TB_ERR_CAP = 3           /* desk-scale resource cap exceeded */
} tb_status;

typedef enum tb_engine {
  TB_ENGINE_RECURSION = 0,
  TB_ENGINE_ALGEBRAIC = 1,
  TB_ENGINE_BRUTEFORCE = 2,
  TB_ENGINE_GAME = 3
} tb_engine;

typedef struct tb_caps {
  unsigned max_bruteforce_steps;
  unsigned max_game_balls;
} tb_caps;

typedef struct tb_pattern tb_pattern;
typedef struct tb_intseq tb_intseq;
typedef struct tb_poly tb_poly;
typedef struct tb_game tb_game;
typedef struct tb_report tb_report;

TB_API const char* tb_version(void);
/* Message for the last failure on the calling thread; never NULL. */
TB_API const char* tb_last_error(void);
TB_API const char* tb_status_string(tb_status status);

TB_API tb_caps tb_caps_default(void);
TB_API tb_caps tb_caps_unlimited(void);

/* "recursion", "algebraic", "bruteforce" or "game". */
TB_API tb_status tb_engine_parse(const char* name, tb_engine* out);

/* ---- patterns ---------------------------------------------------------- */

/* Flat list "k1,l1,k2,l2,..." of positive integers. */
TB_API tb_status tb_pattern_parse(const char* text, tb_pattern** out);
TB_API tb_status tb_pattern_create(const unsigned* values, size_t count, tb_pattern** out);
TB_API void tb_pattern_destroy(tb_pattern* pattern);
TB_API size_t tb_pattern_block_count(const tb_pattern* pattern);
TB_API tb_status tb_pattern_block(const tb_pattern* pattern, size_t index, unsigned* k,
                                  unsigned* l);

/* ---- counting series --------------------------------------------------- */

/* q_0 .. q_order. caps may be NULL for the defaults. */
TB_API tb_status tb_series(const tb_pattern* pattern, size_t order, tb_engine engine,
                           const tb_caps* caps, tb_intseq** out);
TB_API size_t tb_intseq_size(const tb_intseq* seq);
TB_API const char* tb_intseq_get(const tb_intseq* seq, size_t index);
TB_API void tb_intseq_destroy(tb_intseq* seq);

/* ---- Tutte polynomials -------------------------------------------------- */

/* A_n(x, y) for the pattern. */
TB_API tb_status tb_tutte(const tb_pattern* pattern, size_t n, tb_poly** out);
/* Tutte polynomial of the path given as a string over {N, E}. */
TB_API tb_status tb_tutte_path(const char* steps, tb_poly** out);
/* Same, by enumerating every path below; honours max_bruteforce_steps. */
TB_API tb_status tb_tutte_bruteforce(const char* steps, const tb_caps* caps, tb_poly** out);

/* Coefficient table dimensions: rows index x-degree, columns y-degree. Both
 * are zero for the zero polynomial. */
TB_API size_t tb_poly_rows(const tb_poly* poly);
TB_API size_t tb_poly_cols(const tb_poly* poly);
/* Coefficient of x^i y^j; "0" outside the table. NULL only on bad handle. */
TB_API const char* tb_poly_coeff(const tb_poly* poly, size_t i, size_t j);
TB_API const char* tb_poly_to_string(const tb_poly* poly);
/* Value at x = y = 1, i.e. the number of paths. */
TB_API const char* tb_poly_value_at_one(const tb_poly* poly);
TB_API void tb_poly_destroy(tb_poly* poly);

/* ---- ball game ---------------------------------------------------------- */

/* rounds holds count/2 pairs (s_i, t_i), 1 <= t_i < s_i. When keep_sets is
 * nonzero the reachable outside-sets are retained for tb_game_set. */
TB_API tb_status tb_game_run(const unsigned* rounds, size_t count, unsigned turns,
                             const tb_caps* caps, int keep_sets, tb_game** out);
TB_API const char* tb_game_count(const tb_game* game);
TB_API size_t tb_game_set_count(const tb_game* game);
/* Sorted ball labels of set `index`; *size receives the length. */
TB_API const unsigned* tb_game_set(const tb_game* game, size_t index, size_t* size);
TB_API void tb_game_destroy(tb_game* game);

/* ---- verification ------------------------------------------------------- */

/* These return TB_OK whenever a report was produced, even if checks in it
 * failed; inspect tb_report_passed. */
TB_API tb_status tb_verify_engines(unsigned kmax, unsigned lmax, size_t nmax,
                                   const tb_caps* caps, tb_report** out);
TB_API tb_status tb_verify_bivariate(unsigned k, unsigned l, size_t order, tb_report** out);
TB_API tb_status tb_verify_game(const unsigned* rounds, size_t count, unsigned turns,
                                const tb_caps* caps, tb_report** out);
TB_API tb_status tb_verify_oracle(size_t max_steps, tb_report** out);

TB_API size_t tb_report_size(const tb_report* report);
TB_API int tb_report_passed(const tb_report* report);
TB_API tb_status tb_report_check(const tb_report* report, size_t index, const char** name,
                                 int* passed, const char** detail);
TB_API void tb_report_destroy(tb_report* report);

#ifdef __cplusplus
}
#endif

#endif /* TENNISBALL_H */
