/* Public C interface of libspinevo.
 *
 * A context holds one run configuration.  Seed it from a preset and/or a
 * key=value config file, override keys individually, then evaluate.  Every
 * function returning int yields a status code; on failure the context keeps
 * a human-readable message retrievable with spinevo_last_error().
 */
#ifndef SPINEVO_H
#define SPINEVO_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#define SPINEVO_OK 0
#define SPINEVO_EINVAL 1   /* bad argument, unknown key, violated invariant */
#define SPINEVO_ENUMERIC 2 /* quadrature non-convergence or numeric failure */

typedef struct spinevo_ctx spinevo_ctx;

spinevo_ctx* spinevo_ctx_new(void);
void spinevo_ctx_free(spinevo_ctx* ctx);

/* Message for the most recent failing call on this context; empty string if
 * none.  Owned by the context, valid until the next call. */
const char* spinevo_last_error(const spinevo_ctx* ctx);

const char* spinevo_version(void);

/* Replace the configuration with the named figure preset
 * (fig1a, fig1b, fig2, fig3a, fig3b, fig4). */
int spinevo_ctx_preset(spinevo_ctx* ctx, const char* id);

/* Assign one configuration key, e.g. ("h_1", "37"). */
int spinevo_ctx_set(spinevo_ctx* ctx, const char* key, const char* value);

/* Merge a flat key=value config file into the current configuration. */
int spinevo_ctx_load_file(spinevo_ctx* ctx, const char* path);

/* Survival element <-1|rho(t)|-1> and the bare exponential at one time. */
int spinevo_rho(spinevo_ctx* ctx, double t, double* rho_complete, double* rho_markov);

/* Same over a caller-supplied strictly increasing grid of n times. */
int spinevo_series(spinevo_ctx* ctx, const double* times, size_t n,
                   double* rho_complete, double* rho_markov);

/* Run the configured series and write the CSV document to out_path; pass
 * NULL to use the configuration's 'out' key.  reproducible != 0 suppresses
 * the timestamp comment line. */
int spinevo_run_csv(spinevo_ctx* ctx, const char* out_path, int reproducible);

/* Columnar spectrum report (energies, splittings, rates) into buf.
 * Returns SPINEVO_EINVAL if buf_len is too small; *needed (optional) gets
 * the required size including the terminator. */
int spinevo_spectrum_text(spinevo_ctx* ctx, char* buf, size_t buf_len, size_t* needed);

#ifdef __cplusplus
}
#endif

#endif /* SPINEVO_H */
