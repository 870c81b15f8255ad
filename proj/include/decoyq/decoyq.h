/* decoyq: decoy-qubit fidelity under noisy channels, C interface.
 *
 * Objects are opaque handles created by dq_*_parse / dq_* constructors and
 * released with the matching dq_*_free. Every fallible call returns a
 * dq_status; on failure dq_last_error() holds a message for the calling
 * thread. Text results use the same buffer convention: pass buf/cap, receive
 * the required size (including the terminating NUL) in *needed, and get
 * DQ_ERR_BUFFER_TOO_SMALL when cap is short. buf may be NULL when cap is 0.
 */
#ifndef DECOYQ_DECOYQ_H_
#define DECOYQ_DECOYQ_H_

#include <stddef.h>
#include <stdint.h>

#if defined(DQ_BUILDING_LIBRARY)
#define DQ_API __attribute__((visibility("default")))
#else
#define DQ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dq_status {
  DQ_OK = 0,
  DQ_ERR_INVALID_ARGUMENT = 1,
  DQ_ERR_DIMENSION = 2,
  DQ_ERR_NO_CLOSED_FORM = 3,
  DQ_ERR_NO_CROSSOVER = 4,
  DQ_ERR_NUMERICAL = 5,
  DQ_ERR_NULL_POINTER = 6,
  DQ_ERR_BUFFER_TOO_SMALL = 7,
  DQ_ERR_INTERNAL = 8
} dq_status;

typedef enum dq_noise_family {
  DQ_NOISE_AD = 0, /* amplitude damping, eta in [0,1] */
  DQ_NOISE_PD = 1, /* phase damping, eta in [0,1] */
  DQ_NOISE_CD = 2, /* collective dephasing, phi in radians */
  DQ_NOISE_CR = 3  /* collective rotation, theta in radians */
} dq_noise_family;

typedef enum dq_attack_method {
  DQ_METHOD_EXACT = 0,
  DQ_METHOD_MONTE_CARLO = 1
} dq_attack_method;

typedef struct dq_scheme dq_scheme;
typedef struct dq_reports dq_reports;
typedef struct dq_ranking dq_ranking;
typedef struct dq_attack dq_attack;

DQ_API const char* dq_version(void);
DQ_API const char* dq_status_message(dq_status status);
DQ_API const char* dq_last_error(void);

/* Schemes: "bb84" (256-block average), "bb84:01+-" (one product block),
 * "psi+", "psi-", "phi+", "phi-" (two Bell copies), "cluster", "w". */
DQ_API dq_status dq_scheme_parse(const char* text, dq_scheme** out);
DQ_API dq_status dq_scheme_name(const dq_scheme* scheme, char* buf, size_t cap, size_t* needed);
DQ_API void dq_scheme_free(dq_scheme* scheme);

/* "ad", "pd", "cd", "cr" */
DQ_API dq_status dq_noise_parse(const char* text, dq_noise_family* out);
DQ_API dq_status dq_noise_default_range(dq_noise_family family, double* lo, double* hi);

/* Simulated fidelity <psi|rho|psi> after the channel. */
DQ_API dq_status dq_fidelity(const dq_scheme* scheme, dq_noise_family family, double parameter,
                             double* out);
DQ_API dq_status dq_closed_form(const dq_scheme* scheme, dq_noise_family family, double parameter,
                                double* out);

/* Every table cell against brute-force simulation on a grid_size-point grid.
 * closed_form_offset is added to every closed-form value (0 in normal use). */
DQ_API dq_status dq_verify_table(int grid_size, double closed_form_offset, dq_reports** out);
DQ_API dq_status dq_sweep(const dq_scheme* const* schemes, size_t count, dq_noise_family family,
                          double start, double end, int points, dq_reports** out);
DQ_API size_t dq_reports_count(const dq_reports* reports);
/* DQ_ERR_NO_CLOSED_FORM for a report whose scheme has no closed form. */
DQ_API dq_status dq_reports_max_deviation(const dq_reports* reports, size_t index, double* out);
/* scheme,noise,parameter,fidelity_sim,fidelity_closed,abs_err */
DQ_API dq_status dq_reports_csv(const dq_reports* reports, char* buf, size_t cap, size_t* needed);
/* scheme,noise,points,max_abs_deviation */
DQ_API dq_status dq_reports_summary_csv(const dq_reports* reports, char* buf, size_t cap,
                                        size_t* needed);
DQ_API void dq_reports_free(dq_reports* reports);

DQ_API dq_status dq_find_crossover(const dq_scheme* a, const dq_scheme* b, dq_noise_family family,
                                   double lo, double hi, double* out);
DQ_API dq_status dq_is_decoherence_free(const dq_scheme* scheme, dq_noise_family family,
                                        int samples, double tol, int* out);

/* candidates may be NULL (count 0) for the default six schemes. */
DQ_API dq_status dq_recommend(dq_noise_family family, double parameter,
                              const dq_scheme* const* candidates, size_t count, dq_ranking** out);
DQ_API size_t dq_ranking_count(const dq_ranking* ranking);
/* Entry `index` of the descending order: its fidelity and 1-based tie group. */
DQ_API dq_status dq_ranking_entry(const dq_ranking* ranking, size_t index, double* fidelity,
                                  size_t* tie_group);
/* rank,scheme,noise,parameter,fidelity,tie_group */
DQ_API dq_status dq_ranking_csv(const dq_ranking* ranking, char* buf, size_t cap, size_t* needed);
DQ_API void dq_ranking_free(dq_ranking* ranking);

/* trials and seed are ignored for DQ_METHOD_EXACT. */
DQ_API dq_status dq_intercept_resend(dq_attack_method method, uint64_t trials, uint64_t seed,
                                     int eve_present, dq_attack** out);
/* bell: "psi+", "psi-", "phi+", "phi-"; first/second: 1-based qubits. */
DQ_API dq_status dq_wrong_pair_attack(const char* bell, int first, int second,
                                      dq_attack_method method, uint64_t trials, uint64_t seed,
                                      dq_attack** out);
DQ_API dq_status dq_attack_detection(const dq_attack* attack, double* out);
/* quantity,label,value */
DQ_API dq_status dq_attack_csv(const dq_attack* attack, char* buf, size_t cap, size_t* needed);
DQ_API void dq_attack_free(dq_attack* attack);

#ifdef __cplusplus
}
#endif

#endif /* DECOYQ_DECOYQ_H_ */
