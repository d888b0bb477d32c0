/*
 * Copyright 2026 The iqaoa Authors
 * SPDX-License-Identifier: Apache-2.0
 */

/*
 * C interface to libiqaoa: indirect (rank-encoded) QAOA for the traveling
 * salesman problem.
 *
 * Objects are opaque handles created by *_create / *_load / *_run / solve
 * calls and released by the matching *_destroy. Every call returns an
 * iqaoa_status_t; on failure iqaoa_last_error() holds a message for the
 * calling thread until its next failing call.
 *
 * Text results are copied into caller buffers. Pass buf == NULL to query
 * the required size (including the terminating NUL) in *needed; a
 * too-small buffer yields IQAOA_ERR_BUFFER_TOO_SMALL with *needed set.
 *
 * Customers are 0-indexed everywhere in this interface.
 */

#ifndef IQAOA_H
#define IQAOA_H

#include <stddef.h>
#include <stdint.h>

#if defined(IQAOA_BUILDING_LIBRARY)
#define IQAOA_API __attribute__((visibility("default")))
#else
#define IQAOA_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum iqaoa_status {
  IQAOA_OK = 0,
  IQAOA_ERR_INVALID_ARGUMENT = 1,
  IQAOA_ERR_OUT_OF_RANGE = 2,
  IQAOA_ERR_PARSE = 3,
  IQAOA_ERR_IO = 4,
  IQAOA_ERR_INVALID_INSTANCE = 5,
  IQAOA_ERR_BUDGET = 6,
  IQAOA_ERR_EMPTY_DISTRIBUTION = 7,
  IQAOA_ERR_BUFFER_TOO_SMALL = 8,
  IQAOA_ERR_NULL_POINTER = 9,
  IQAOA_ERR_INTERNAL = 10
} iqaoa_status_t;

typedef struct iqaoa_instance* iqaoa_instance_t;
typedef struct iqaoa_config* iqaoa_config_t;
typedef struct iqaoa_bruteforce* iqaoa_bruteforce_t;
typedef struct iqaoa_result* iqaoa_result_t;

IQAOA_API const char* iqaoa_version(void);
IQAOA_API const char* iqaoa_status_string(iqaoa_status_t status);
IQAOA_API const char* iqaoa_last_error(void);

/* ---- instances -------------------------------------------------------- */

/* format: "csv", "json", "auto" or NULL (auto: by file extension). */
IQAOA_API iqaoa_status_t iqaoa_instance_load(const char* path, const char* format,
                                             iqaoa_instance_t* out);
/* n*n row-major distances. */
IQAOA_API iqaoa_status_t iqaoa_instance_from_matrix(size_t n, const double* distances,
                                                    iqaoa_instance_t* out);
IQAOA_API iqaoa_status_t iqaoa_instance_destroy(iqaoa_instance_t inst);
IQAOA_API iqaoa_status_t iqaoa_instance_size(iqaoa_instance_t inst, size_t* n);
IQAOA_API iqaoa_status_t iqaoa_instance_distance(iqaoa_instance_t inst, size_t from, size_t to,
                                                 double* out);
/* FNV-1a 64 of the source file bytes; 0 for in-memory instances. */
IQAOA_API iqaoa_status_t iqaoa_instance_digest(iqaoa_instance_t inst, uint64_t* out);
IQAOA_API iqaoa_status_t iqaoa_tour_cost(iqaoa_instance_t inst, const uint32_t* perm,
                                         size_t len, double* cost);
IQAOA_API iqaoa_status_t iqaoa_rank_cost(iqaoa_instance_t inst, uint64_t rank, double* cost);

/* ---- permutation codec ------------------------------------------------ */

IQAOA_API iqaoa_status_t iqaoa_factorial(size_t k, uint64_t* out);
/* perm_out receives n entries. */
IQAOA_API iqaoa_status_t iqaoa_rank_to_perm(size_t n, uint64_t rank, uint32_t* perm_out);
IQAOA_API iqaoa_status_t iqaoa_perm_to_rank(const uint32_t* perm, size_t n, uint64_t* rank);
/* digits most significant first: f(n-1), ..., f(0). */
IQAOA_API iqaoa_status_t iqaoa_rank_to_factoradic(size_t n, uint64_t rank, uint32_t* digits_out);
IQAOA_API iqaoa_status_t iqaoa_factoradic_to_rank(const uint32_t* digits, size_t n,
                                                  uint64_t* rank);
/* One line: n, rank, digits, 0- and 1-indexed permutation. */
IQAOA_API iqaoa_status_t iqaoa_codec_describe(size_t n, uint64_t rank, char* buf, size_t cap,
                                              size_t* needed);

/* ---- circuit ---------------------------------------------------------- */

IQAOA_API iqaoa_status_t iqaoa_qubit_count(size_t customers, size_t* qubits);
IQAOA_API iqaoa_status_t iqaoa_gate_count(size_t qubits, size_t layers, size_t* gates);
/* angles: [beta_1..beta_p, gamma_1..gamma_p]; probs_out receives 2^qubits values. */
IQAOA_API iqaoa_status_t iqaoa_state_probabilities(size_t qubits, const double* angles,
                                                   size_t angle_count, double* probs_out);

/* ---- exhaustive reference --------------------------------------------- */

IQAOA_API iqaoa_status_t iqaoa_bruteforce_run(iqaoa_instance_t inst, iqaoa_bruteforce_t* out);
IQAOA_API iqaoa_status_t iqaoa_bruteforce_destroy(iqaoa_bruteforce_t bf);
IQAOA_API iqaoa_status_t iqaoa_bruteforce_optimal_cost(iqaoa_bruteforce_t bf, double* cost);
/* ranks: buffer of cap entries (may be NULL to query); *count = number of optima. */
IQAOA_API iqaoa_status_t iqaoa_bruteforce_optimal_ranks(iqaoa_bruteforce_t bf, uint64_t* ranks,
                                                        size_t cap, size_t* count);
IQAOA_API iqaoa_status_t iqaoa_bruteforce_distinct_costs(iqaoa_bruteforce_t bf, size_t* count);
IQAOA_API iqaoa_status_t iqaoa_bruteforce_summary_json(iqaoa_bruteforce_t bf, char* buf,
                                                       size_t cap, size_t* needed);
IQAOA_API iqaoa_status_t iqaoa_bruteforce_histogram_csv(iqaoa_bruteforce_t bf, char* buf,
                                                        size_t cap, size_t* needed);

/* ---- solver configuration --------------------------------------------- */

IQAOA_API iqaoa_status_t iqaoa_config_create(iqaoa_config_t* out);
IQAOA_API iqaoa_status_t iqaoa_config_destroy(iqaoa_config_t cfg);
/*
 * Keys: np, ne, nd1, nd2, layers, shots-search, shots-final, delta-init,
 * delta-floor, delta-shrink, budget, criterion, policy, seed, exact,
 * reeval, threads. Values are text, e.g. ("criterion", "mbp0.10+mean"),
 * ("policy", "penalty=1000"), ("exact", "true").
 */
IQAOA_API iqaoa_status_t iqaoa_config_set(iqaoa_config_t cfg, const char* key, const char* value);

/* ---- sampling --------------------------------------------------------- */

/*
 * Builds the ansatz state for the given angles, samples `shots` outcomes
 * with `seed` (exact probabilities if cfg has exact=true) and writes the
 * CSV outcome,rank,permutation,cost,count,probability. cfg may be NULL.
 */
IQAOA_API iqaoa_status_t iqaoa_sample_csv(iqaoa_instance_t inst, iqaoa_config_t cfg,
                                          const double* angles, size_t angle_count,
                                          uint64_t shots, uint64_t seed, char* buf, size_t cap,
                                          size_t* needed);

/* ---- solve ------------------------------------------------------------ */

/* with_reference != 0 adds brute-force optimum statistics to the report. */
IQAOA_API iqaoa_status_t iqaoa_solve(iqaoa_instance_t inst, iqaoa_config_t cfg,
                                     int with_reference, iqaoa_result_t* out);
IQAOA_API iqaoa_status_t iqaoa_result_destroy(iqaoa_result_t res);
IQAOA_API iqaoa_status_t iqaoa_result_best_score(iqaoa_result_t res, double* score);
/* angles: [beta..., gamma...]; *count = 2 * layers. */
IQAOA_API iqaoa_status_t iqaoa_result_best_angles(iqaoa_result_t res, double* angles,
                                                  size_t cap, size_t* count);
IQAOA_API iqaoa_status_t iqaoa_result_evaluations(iqaoa_result_t res, uint64_t* count);
/* Final-distribution probability of exactly `cost` (0 if absent). */
IQAOA_API iqaoa_status_t iqaoa_result_cost_probability(iqaoa_result_t res, double cost,
                                                       double* probability);
IQAOA_API iqaoa_status_t iqaoa_result_mean_cost(iqaoa_result_t res, double* mean);
IQAOA_API iqaoa_status_t iqaoa_result_median_cost(iqaoa_result_t res, double* median);
IQAOA_API iqaoa_status_t iqaoa_result_report_json(iqaoa_result_t res, char* buf, size_t cap,
                                                  size_t* needed);
IQAOA_API iqaoa_status_t iqaoa_result_cost_table_csv(iqaoa_result_t res, char* buf, size_t cap,
                                                     size_t* needed);

#ifdef __cplusplus
}
#endif

#endif /* IQAOA_H */
