/* spinpair: steady states, concurrence, and relaxation spectra of two
 * qubits sharing a correlated emission/absorption environment.
 *
 * Usage pattern: build a parameter bag, then ask for a report.
 *
 *   spinpair_params *p = spinpair_params_new();
 *   spinpair_params_set(p, "f_e", "0.99");
 *   spinpair_params_set(p, "kT0", "1.0");
 *   spinpair_params_set(p, "kTr", "0.2");
 *   spinpair_steady_report rep;
 *   if (spinpair_compute_steady(p, &rep) != SPINPAIR_OK)
 *       fprintf(stderr, "%s\n", spinpair_last_error());
 *   spinpair_params_free(p);
 *
 * All functions returning spinpair_status leave a human-readable message in
 * spinpair_last_error() on failure (thread-local storage).
 */

#ifndef SPINPAIR_H
#define SPINPAIR_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum spinpair_status {
    SPINPAIR_OK = 0,
    SPINPAIR_ERR_VALIDATION = 1, /* bad keys, values, ranges, files */
    SPINPAIR_ERR_NUMERICAL = 2,  /* a solver failed its own residual checks */
    SPINPAIR_ERR_VERIFY = 3,     /* a verification suite ran and failed */
} spinpair_status;

/* Opaque key=value parameter bag; see the registry table in README.md. */
typedef struct spinpair_params spinpair_params;

spinpair_params *spinpair_params_new(void);
void spinpair_params_free(spinpair_params *p);

spinpair_status spinpair_params_set(spinpair_params *p, const char *key, const char *value);

/* Merges a key=value file ('#' comments allowed) into the bag. */
spinpair_status spinpair_params_load_file(spinpair_params *p, const char *path);

/* Emission/absorption rates and the effective temperatures they encode.
 * kT values are in units of the qubit splitting; they use IEEE infinity for
 * equal rates, signed zero for one-sided rates, and NaN when both rates of
 * a pair vanish. */
typedef struct spinpair_rates_report {
    double gamma_e_local;
    double gamma_e_nonlocal; /* signed */
    double gamma_a_local;
    double gamma_a_nonlocal; /* signed */
    double kT0;
    double kTr;
    double ratio0; /* |gamma_a/gamma_e| at r = 0 */
    double ratior;
    double margin_e; /* gamma_e_local - |gamma_e_nonlocal| */
    double margin_a;
    int physical; /* 1 iff both margins are nonnegative (within 1e-12) */
} spinpair_rates_report;

spinpair_status spinpair_compute_rates(const spinpair_params *p, spinpair_rates_report *out);

/* Steady state of the 16x16 generator plus derived quantities.  rho is
 * row-major 4x4 over the basis (uu, ud, du, dd).  When physical == 0 only
 * the rates member is meaningful.  cross_check is the largest entrywise
 * difference between the kernel solver and the reduced-sector solver (NaN
 * when the steady state is degenerate).  For a degenerate kernel the rho
 * reported is the state reached from the maximally mixed state and
 * multiplicity > 1. */
typedef struct spinpair_steady_report {
    spinpair_rates_report rates;
    int physical;
    double rho_re[16];
    double rho_im[16];
    double concurrence;
    double lambdas[4]; /* spin-flip spectrum behind the concurrence, descending */
    double gap;
    int multiplicity;
    double purity;
    double residual; /* max |L vec(rho)| */
    double cross_check;
} spinpair_steady_report;

spinpair_status spinpair_compute_steady(const spinpair_params *p, spinpair_steady_report *out);

/* Full relaxation spectrum.  Eigenvalues are sorted by (Re, Im).  gap is
 * the smallest nonzero decay rate; no_decay flags a generator whose
 * spectrum is entirely zero.  physical == 0 means the rate set cannot come
 * from any environment and nothing was diagonalized. */
typedef struct spinpair_gap_report {
    spinpair_rates_report rates;
    int physical;
    double gap;
    int zero_count;
    int no_decay;
    double spectrum_re[16];
    double spectrum_im[16];
} spinpair_gap_report;

spinpair_status spinpair_compute_gap(const spinpair_params *p, spinpair_gap_report *out);

/* Grid sweep to CSV ('#' metadata, header, one row per point in row-major
 * axis1-outer order; byte-identical output for any worker count).  workers
 * <= 0 means use the available hardware parallelism.  *csv receives a
 * malloc'd NUL-terminated buffer; release it with spinpair_string_free. */
spinpair_status spinpair_sweep_csv(const spinpair_params *p, int workers, char **csv);

/* Runs a self-check suite: "kms", "psd", "detailed-balance", "oracles", or
 * "all".  seed feeds the randomized suite.  *report receives the printable
 * result table (free with spinpair_string_free); *passed gets 0/1.  Returns
 * SPINPAIR_ERR_VERIFY when the suite ran and failed. */
spinpair_status spinpair_verify(const char *suite, uint64_t seed, char **report, int *passed);

void spinpair_string_free(char *s);

/* Message for the most recent failure on this thread; never NULL. */
const char *spinpair_last_error(void);

const char *spinpair_version(void);

#ifdef __cplusplus
}
#endif

#endif
