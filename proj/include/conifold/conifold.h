/* SPDX-License-Identifier: Apache-2.0 */

/*
 * C interface to the conifold library.  All arithmetic is exact; every
 * numeric value crossing this boundary is rendered as a decimal rational
 * string "p/q" (or "p" for integers).
 *
 * Conventions:
 *   - Functions return CONIFOLD_OK on success; any other status leaves a
 *     description in conifold_last_error() (thread-local storage).
 *   - Output strings (char **out) are heap-allocated, NUL-terminated, and
 *     owned by the caller; release them with conifold_string_free().
 *   - Opaque handles are released with their matching *_free function.
 */

#ifndef CONIFOLD_H
#define CONIFOLD_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define CONIFOLD_API __declspec(dllexport)
#else
#define CONIFOLD_API __attribute__((visibility("default")))
#endif

typedef enum conifold_status {
  CONIFOLD_OK = 0,
  CONIFOLD_ERROR_INVALID_ARGUMENT = 1,
  CONIFOLD_ERROR_PARSE = 2,
  CONIFOLD_ERROR_INTERNAL = 3
} conifold_status;

typedef enum conifold_format {
  CONIFOLD_FORMAT_TEXT = 0,
  CONIFOLD_FORMAT_JSON = 1
} conifold_format;

CONIFOLD_API const char *conifold_version(void);

/* Message for the most recent failure on this thread; never NULL. */
CONIFOLD_API const char *conifold_last_error(void);

CONIFOLD_API void conifold_string_free(char *s);

/* ---- scalar values ---- */

/* Bernoulli number B_n (first-kind convention: B_1 = -1/2). */
CONIFOLD_API conifold_status conifold_bernoulli(unsigned n, char **out);

/* Genus-g coefficient of the all-genus potential, g >= 1. */
CONIFOLD_API conifold_status conifold_genus_coefficient(unsigned g,
                                                        char **out);

/* Degree-zero constant-map contribution at genus g >= 2 for a target with
 * the given Euler characteristic. */
CONIFOLD_API conifold_status conifold_constant_map_coefficient(
    unsigned g, long euler_characteristic, char **out);

/* ---- series ---- */

/* Polylogarithm Li_order(q) truncated at q^q_cut. */
CONIFOLD_API conifold_status conifold_polylog(long order, int q_cut,
                                              conifold_format format,
                                              char **out);

/* All-genus potential collected by q-degree (genera 0..genus_cut). */
CONIFOLD_API conifold_status conifold_potential(int genus_cut, int q_cut,
                                                conifold_format format,
                                                char **out);

/* Laurent expansion of 1/(2 sin(lambda/2))^2 through lambda^max_exponent. */
CONIFOLD_API conifold_status conifold_sin_expansion(int max_exponent,
                                                    conifold_format format,
                                                    char **out);

/* Genus 1..genus_cut free energies reconstructed from genus zero by the
 * recursion, as q-series through q^q_cut. */
CONIFOLD_API conifold_status conifold_solve_recursion(int genus_cut, int q_cut,
                                                      conifold_format format,
                                                      char **out);

/* ---- checks ---- */

typedef struct conifold_report conifold_report;

/* Bernoulli generating identity through w^truncation. */
CONIFOLD_API conifold_status conifold_check_identity(int truncation,
                                                     conifold_report **out);

/* Difference equation for the potential with genera 0..genus_cut over
 * q-degrees 1..q_cut. */
CONIFOLD_API conifold_status conifold_check_theorem(int genus_cut, int q_cut,
                                                    conifold_report **out);

/* Genus recursion at the given genus (>= 1) over q-degrees 1..q_cut. */
CONIFOLD_API conifold_status conifold_check_recursion(int genus, int q_cut,
                                                      conifold_report **out);

/* 1 if the check passed, 0 otherwise. */
CONIFOLD_API int conifold_report_passed(const conifold_report *report);

CONIFOLD_API conifold_status conifold_report_render(
    const conifold_report *report, conifold_format format, char **out);

CONIFOLD_API void conifold_report_free(conifold_report *report);

/* ---- user-supplied genus-zero invariants ---- */

typedef struct conifold_gv_dataset conifold_gv_dataset;

/* Parses {"classes":[{"label":...,"n0":...},...]}; rejects duplicate labels
 * and non-integer invariants with CONIFOLD_ERROR_PARSE. */
CONIFOLD_API conifold_status conifold_gv_dataset_parse(
    const char *json_text, conifold_gv_dataset **out);

CONIFOLD_API void conifold_gv_dataset_free(conifold_gv_dataset *dataset);

/* Genus-zero resummation of the dataset, one independent formal variable
 * per class. */
CONIFOLD_API conifold_status conifold_gv_resum(
    const conifold_gv_dataset *dataset, int genus_cut, int k_cut,
    conifold_format format, char **out);

/* Difference-equation check in the direction of class alpha, or of every
 * class in turn when alpha is NULL. */
CONIFOLD_API conifold_status conifold_gv_check(
    const conifold_gv_dataset *dataset, const char *alpha, int genus_cut,
    int k_cut, conifold_report **out);

#ifdef __cplusplus
}
#endif

#endif /* CONIFOLD_H */
