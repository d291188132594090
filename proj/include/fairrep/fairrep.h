/* fairrep — fair latent representations for tabular data.
 *
 * C interface to the fairrep core. All functions return a status code;
 * objects are opaque handles released with the matching *_free call.
 * On failure, frp_last_error() returns a thread-local description of
 * the most recent error raised on the calling thread.
 */
#ifndef FAIRREP_H
#define FAIRREP_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum frp_status {
  FRP_OK = 0,
  FRP_ERR_IO = 1,         /* file missing / unreadable / unwritable */
  FRP_ERR_PARSE = 2,      /* malformed CSV, schema, config or checkpoint */
  FRP_ERR_INVALID = 3,    /* argument outside its contract */
  FRP_ERR_DIMENSION = 4,  /* matrix/vector dimension mismatch */
  FRP_ERR_STATE = 5,      /* operation not applicable to this object state */
  FRP_ERR_NUMERIC = 6,    /* numerical failure (degenerate input, overflow) */
  FRP_ERR_INTERNAL = 7
} frp_status;

const char* frp_status_name(frp_status code);

/* Thread-local message for the last failing call on this thread.
 * Returns an empty string if no error has been recorded. */
const char* frp_last_error(void);

typedef struct frp_dataset frp_dataset;
typedef struct frp_model frp_model;
typedef struct frp_report frp_report;

/* ---- datasets ------------------------------------------------------- */

/* Load a raw CSV (first row = header) with a schema file mapping every
 * column name to one of: continuous, categorical, label, protected.
 * Rows with missing values are dropped; categorical columns are one-hot
 * expanded; continuous columns are standardized. */
frp_status frp_dataset_prepare(const char* csv_path, const char* schema_path,
                               frp_dataset** out);

/* Reload a dataset written by frp_dataset_save. */
frp_status frp_dataset_load_prepared(const char* csv_path, const char* meta_path,
                                     frp_dataset** out);

frp_status frp_dataset_save(const frp_dataset* ds, const char* csv_path,
                            const char* meta_path);

/* Copy of the dataset with the protected attribute's feature column(s)
 * removed from the feature matrix (the protected vector is kept for
 * evaluation). Fails with FRP_ERR_STATE if already removed. */
frp_status frp_dataset_drop_protected(const frp_dataset* ds, frp_dataset** out);

/* n = samples, m = feature columns, n_classes = protected classes. Any
 * output pointer may be NULL. */
frp_status frp_dataset_dims(const frp_dataset* ds, int64_t* n, int64_t* m,
                            int64_t* n_classes);

/* Key-value summary text (n, m, dropped rows, class frequencies, positive
 * rate). Writes at most cap bytes including the terminator. */
frp_status frp_dataset_summary(const frp_dataset* ds, char* buf, size_t cap);

void frp_dataset_free(frp_dataset* ds);

/* ---- models ---------------------------------------------------------- */

/* Train a representation model. config is "key = value" text; recognized
 * keys match the run-config format of the CLI (method, latent_dim, alpha,
 * mu, batch, epochs, critic_tol, critic_max_iter, c_clip, nonlinear,
 * bias, seed). method is one of: ae, nrl, nrl_multiclass. */
frp_status frp_train(const frp_dataset* ds, const char* config,
                     frp_model** out);

frp_status frp_model_save(const frp_model* model, const char* path);
frp_status frp_model_load(const char* path, frp_model** out);
frp_status frp_model_latent_dim(const frp_model* model, int64_t* d);

/* Encode rows (row-major x, shape rows x cols) into the latent space.
 * z must hold rows*latent_dim doubles. */
frp_status frp_model_encode(const frp_model* model, const double* x,
                            int64_t rows, int64_t cols, double* z);

void frp_model_free(frp_model* model);

/* ---- evaluation ------------------------------------------------------ */

/* Run the evaluation protocol (seeded train/test splits, ridge logistic
 * classifier, fairness metrics) for a dataset and an optional model
 * (NULL evaluates the raw features). */
frp_status frp_evaluate(const frp_dataset* ds, const frp_model* model,
                        const char* config, frp_report** out);

/* Fetch one metric by key: mse, emd, parity, consistency, f1, ks,
 * lipschitz_k, bound_margin. */
frp_status frp_report_get(const frp_report* report, const char* key,
                          double* value);

/* Full report as key-value text. */
frp_status frp_report_text(const frp_report* report, char* buf, size_t cap);

void frp_report_free(frp_report* report);

/* ---- pipeline commands ----------------------------------------------- */

/* Batch commands mirroring the CLI subcommands. config is the full run
 * configuration as "key = value" text; outputs are written under the
 * configured `out` directory. */
frp_status frp_cmd_prepare(const char* config);
frp_status frp_cmd_train(const char* config);
frp_status frp_cmd_evaluate(const char* config);
frp_status frp_cmd_compare(const char* config);
frp_status frp_cmd_audit(const char* config);
frp_status frp_cmd_sweep(const char* config);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* FAIRREP_H */
