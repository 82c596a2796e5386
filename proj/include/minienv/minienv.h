/* Copyright 2026 The minienv Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to libminienv. Every fallible call returns a minienv_status;
 * on failure minienv_last_error() describes the cause for the calling
 * thread. Handles are opaque and released with the matching _free call.
 * Strings returned by the library stay valid until the owning handle is
 * freed (or, for minienv_last_error, until the next failing call). */

#ifndef MINIENV_MINIENV_H
#define MINIENV_MINIENV_H

#include <stddef.h>

#if defined(MINIENV_BUILDING_LIBRARY)
#define MINIENV_API __attribute__((visibility("default")))
#else
#define MINIENV_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum minienv_status {
  MINIENV_OK = 0,
  MINIENV_ERR_INVALID_ARGUMENT = 1,
  MINIENV_ERR_CUTOFF_TOO_SMALL = 2,
  MINIENV_ERR_NUMERICAL_CONTRACT = 3,
  MINIENV_ERR_INTEGRATION_FAILURE = 4,
  MINIENV_ERR_NOT_REACHED = 5,
  MINIENV_ERR_NO_DECOHERENCE = 6,
  MINIENV_ERR_USAGE = 7,
  MINIENV_ERR_IO = 8,
  MINIENV_ERR_INTERNAL = 9
} minienv_status;

typedef enum minienv_model {
  MINIENV_MODEL_MASTER = 0,
  MINIENV_MODEL_AMPLITUDE = 1,
  MINIENV_MODEL_KERR = 2
} minienv_model;

typedef struct minienv_params {
  minienv_model model;
  double alpha0_re;
  double alpha0_im;
  double nbar;
  double rate; /* gamma, kappa or lambda */
  double omega;
} minienv_params;

typedef struct minienv_runspec minienv_runspec;
typedef struct minienv_table minienv_table;
typedef struct minienv_report minienv_report;

MINIENV_API const char *minienv_version(void);
MINIENV_API const char *minienv_status_name(minienv_status status);
MINIENV_API const char *minienv_last_error(void);
MINIENV_API int minienv_max_joint_dim(void);

/* Closed forms. */
MINIENV_API minienv_status minienv_zeta(const minienv_params *p, double t, double *out);
MINIENV_API minienv_status minienv_plateau(const minienv_params *p, double *out);
MINIENV_API minienv_status minienv_decoherence_estimate(const minienv_params *p,
                                                        double *out);
/* *has_recurrence is 0 for the master equation, which never recurs. */
MINIENV_API minienv_status minienv_recurrence_time(const minienv_params *p, double *out,
                                                   int *has_recurrence);

/* Linear entropy on caller-provided times, written to zeta_out[0..count).
 * bruteforce selects the numerical engine with automatic cutoffs. */
MINIENV_API minienv_status minienv_series(const minienv_params *p, const double *times,
                                          size_t count, int bruteforce, double *zeta_out);
/* First (1 - 1/e) plateau crossing of a series. */
MINIENV_API minienv_status minienv_measured_decoherence_time(const minienv_params *p,
                                                             const double *times,
                                                             const double *zeta,
                                                             size_t count, double *out);

/* Run descriptions: flat key=value text, '#' comments. */
MINIENV_API minienv_status minienv_runspec_create(minienv_runspec **out);
MINIENV_API minienv_status minienv_runspec_parse(const char *text, const char *source,
                                                 minienv_runspec **out);
MINIENV_API minienv_status minienv_runspec_load(const char *path, minienv_runspec **out);
MINIENV_API minienv_status minienv_runspec_set(minienv_runspec *spec, const char *key,
                                               const char *value);
MINIENV_API minienv_status minienv_runspec_validate(const minienv_runspec *spec);
/* Canonical text of one key; NULL with the error set for unknown keys. */
MINIENV_API const char *minienv_runspec_get(minienv_runspec *spec, const char *key);
MINIENV_API void minienv_runspec_free(minienv_runspec *spec);

/* Commands producing tables. points = 0 and tmax <= 0 pick the defaults. */
MINIENV_API minienv_status minienv_figure(int id, size_t points, double tmax,
                                          minienv_table **out);
MINIENV_API minienv_status minienv_simulate(const minienv_runspec *spec, minienv_table **out);
MINIENV_API minienv_status minienv_sweep(const minienv_runspec *spec, minienv_table **out);

MINIENV_API size_t minienv_table_rows(const minienv_table *t);
MINIENV_API size_t minienv_table_columns(const minienv_table *t);
MINIENV_API const char *minienv_table_column_name(const minienv_table *t, size_t column);
MINIENV_API double minienv_table_value(const minienv_table *t, size_t row, size_t column);
MINIENV_API size_t minienv_table_meta_count(const minienv_table *t);
MINIENV_API const char *minienv_table_meta_key(const minienv_table *t, size_t i);
MINIENV_API const char *minienv_table_meta_value(const minienv_table *t, size_t i);
/* path "-" writes to standard output. */
MINIENV_API minienv_status minienv_table_write_csv(const minienv_table *t, const char *path);
MINIENV_API minienv_status minienv_table_write_dat(const minienv_table *t, const char *path);
MINIENV_API void minienv_table_free(minienv_table *t);

/* Cross-engine validation suite. cutoff_override > 0 forces every
 * brute-force check onto that cutoff (a hook for the failure path). */
MINIENV_API minienv_status minienv_validate(int cutoff_override, minienv_report **out);
MINIENV_API int minienv_report_all_passed(const minienv_report *r);
MINIENV_API size_t minienv_report_count(const minienv_report *r);
MINIENV_API const char *minienv_report_name(const minienv_report *r, size_t i);
/* 1 pass, 0 fail, -1 informational. */
MINIENV_API int minienv_report_status(const minienv_report *r, size_t i);
MINIENV_API const char *minienv_report_detail(const minienv_report *r, size_t i);
MINIENV_API const char *minienv_report_text(const minienv_report *r);
MINIENV_API void minienv_report_free(minienv_report *r);

#ifdef __cplusplus
}
#endif

#endif /* MINIENV_MINIENV_H */
