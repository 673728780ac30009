/*
 * C interface to the fractional Burgers solver.
 *
 * Every object is an opaque handle created and destroyed through this API.
 * Functions that can fail return fb_error; on failure fb_last_error() holds
 * a message for the calling thread (and fb_last_error_key() the offending
 * configuration key, for FB_ERR_USAGE).
 */
#ifndef FBURGERS_H
#define FBURGERS_H

#include <stddef.h>

#if defined(_WIN32)
#if defined(FBURGERS_BUILDING)
#define FB_API __declspec(dllexport)
#else
#define FB_API __declspec(dllimport)
#endif
#else
#define FB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fb_error {
    FB_OK = 0,
    FB_ERR_INVALID_ARGUMENT = 1,
    FB_ERR_USAGE = 2,
    FB_ERR_SYMMETRY = 3,
    FB_ERR_NUMERIC = 4,
    FB_ERR_DOMAIN = 5,
    FB_ERR_IO = 6,
    FB_ERR_HELP_REQUESTED = 7, /* not a failure: fb_usage() has the text */
    FB_ERR_INTERNAL = 8
} fb_error;

typedef enum fb_run_status {
    FB_RUN_COMPLETED = 0,
    FB_RUN_BLOWUP_DETECTED = 1,
    FB_RUN_RESOLUTION_LOST = 2,
    FB_RUN_NUMERIC_FAILURE = 3
} fb_run_status;

typedef enum fb_detection_cause {
    FB_CAUSE_NONE = 0,
    FB_CAUSE_SLOPE_THRESHOLD = 1,
    FB_CAUSE_NON_FINITE = 2,
    FB_CAUSE_RESOLUTION_LOSS = 3
} fb_detection_cause;

/* Process exit codes used by the command-line tool. */
enum {
    FB_EXIT_COMPLETED = 0,
    FB_EXIT_BLOWUP = 2,
    FB_EXIT_RESOLUTION_LOST = 3,
    FB_EXIT_NUMERIC_FAILURE = 4,
    FB_EXIT_USAGE = 64,
    FB_EXIT_IO = 74
};

typedef struct fb_config fb_config;
typedef struct fb_result fb_result;

typedef struct fb_record {
    double t;
    double mass;
    double l2;
    double max_u;
    double min_u;
    double min_slope;
    double bkm_integral;
    double h3;
    double tail_fraction;
} fb_record;

typedef struct fb_blowup_report {
    int has_predicted_t_star;
    double predicted_t_star;
    int detected;
    double detected_t; /* meaningful only when detected != 0 */
    fb_detection_cause cause;
} fb_blowup_report;

FB_API const char* fb_version(void);
FB_API const char* fb_last_error(void);
FB_API const char* fb_last_error_key(void);
FB_API const char* fb_usage(void);

/* Configuration. Keys use the long flag spelling without dashes
 * ("n", "gamma", "t-final", "ic", ...). fb_config_set only checks that the
 * value parses; ranges are checked by fb_config_validate and fb_run. */
FB_API fb_error fb_config_create(fb_config** out);
FB_API fb_error fb_config_from_args(int argc, const char* const* argv, fb_config** out);
FB_API fb_error fb_config_set(fb_config* cfg, const char* key, const char* value);
FB_API fb_error fb_config_validate(const fb_config* cfg);
FB_API void fb_config_destroy(fb_config* cfg);

/* Runs a simulation. The result keeps a copy of the configuration. */
FB_API fb_error fb_run(const fb_config* cfg, fb_result** out);
FB_API fb_run_status fb_result_status(const fb_result* result);
FB_API int fb_result_exit_code(const fb_result* result);
FB_API size_t fb_result_record_count(const fb_result* result);
FB_API fb_error fb_result_record(const fb_result* result, size_t index, fb_record* out);
FB_API fb_error fb_result_report(const fb_result* result, fb_blowup_report* out);
FB_API size_t fb_result_snapshot_count(const fb_result* result);
/* *values points into the result and stays valid until fb_result_destroy. */
FB_API fb_error fb_result_snapshot(const fb_result* result, size_t index, double* t, const double** values,
                                   size_t* n);
/* Writes diagnostics.csv, snapshots, final.csv and report.txt to the
 * configured output directory. */
FB_API fb_error fb_result_write(const fb_result* result);
FB_API void fb_result_destroy(fb_result* result);

/* Stateless operators on nodal samples over the uniform grid of size n on
 * [-pi, pi). n must be even and >= 4. */
FB_API fb_error fb_grid_nodes(size_t n, double* nodes);
FB_API fb_error fb_derivative(size_t n, const double* u, double* du);
FB_API fb_error fb_fractional_laplacian(size_t n, double alpha, const double* u, double* out);
FB_API fb_error fb_predicted_blowup_time(size_t n, const double* f, double* t_star, int* has_t_star);

#ifdef __cplusplus
}
#endif

#endif /* FBURGERS_H */
