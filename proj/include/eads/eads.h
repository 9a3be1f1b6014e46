/*
 * eads - entropy-based early anomaly detection for sensor time series.
 *
 * C interface to the analysis core. All entry points return an eads_status;
 * results travel through opaque handles and plain structs filled by
 * accessors. On any non-EADS_OK return, eads_last_error() gives a
 * human-readable detail string (thread-local, valid until the next failing
 * call on the same thread).
 *
 * Handle lifetimes: every function that yields a handle (new, load, run)
 * pairs with a matching free. Handles are independent; a dataset may outlive
 * the config used to load it. Individual handles are not synchronized - do
 * not share one handle between threads without external locking.
 */

#ifndef EADS_H
#define EADS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define EADS_API __declspec(dllexport)
#elif defined(__GNUC__) || defined(__clang__)
#  define EADS_API __attribute__((visibility("default")))
#else
#  define EADS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum eads_status {
    EADS_OK = 0,
    EADS_EINVAL = 1,      /* invalid argument or configuration */
    EADS_EIO = 2,         /* file or stream failure */
    EADS_EDEGENERATE = 3, /* degenerate data (singular covariance) */
    EADS_EEMPTY = 4,      /* nothing to analyze */
    EADS_EINTERNAL = 5
} eads_status;

typedef enum eads_combinator {
    EADS_COMBINE_BOTH = 0,  /* anomalous iff both entropies exceed tau */
    EADS_COMBINE_EITHER = 1
} eads_combinator;

typedef enum eads_method {
    EADS_METHOD_ENTROPY = 0,
    EADS_METHOD_ELLIPSE = 1
} eads_method;

/* Stage mask for eads_analysis_run. COMPARE implies both methods. */
#define EADS_STAGE_ENTROPY 1u
#define EADS_STAGE_ELLIPSE 2u
#define EADS_STAGE_COMPARE 7u

typedef struct eads_config eads_config;
typedef struct eads_dataset eads_dataset;
typedef struct eads_analysis eads_analysis;

typedef struct eads_ingest_report {
    uint64_t lines_read;
    uint64_t lines_malformed;
    uint64_t records_out_of_period;
    uint64_t records_excluded_node;
    uint64_t records_kept;
} eads_ingest_report;

typedef struct eads_entropy_point {
    int32_t node_id;
    int64_t window_index;
    double h_temp;
    double h_hum;
    int32_t n_temp;
    int32_t n_hum;
    int32_t violations_temp;
    int32_t violations_hum;
    int32_t anomalous; /* decision under the configured rule */
} eads_entropy_point;

typedef struct eads_node_summary {
    int32_t node_id;
    int32_t windows_flagged;
    int32_t windows_total;
    int32_t flagged;
} eads_node_summary;

typedef struct eads_ellipse_model {
    double mean_t;
    double mean_h;
    double cov_tt;
    double cov_th;
    double cov_hh;
    double confidence;
    double threshold; /* chi-squared quantile, 2 dof */
} eads_ellipse_model;

typedef struct eads_ellipse_point {
    int32_t node_id;
    int64_t timestamp;
    double temperature;
    double humidity;
    double mahalanobis_sq;
    int32_t anomalous;
} eads_ellipse_point;

typedef struct eads_confusion {
    int32_t true_positives;
    int32_t false_positives;
    int32_t true_negatives;
    int32_t false_negatives;
} eads_confusion;

typedef struct eads_comparison_row {
    int32_t node_id;
    int32_t entropy_windows_flagged;
    int32_t entropy_windows_total;
    int32_t entropy_flagged;
    int64_t ellipse_points_flagged;
    int64_t ellipse_points_total;
    int32_t ellipse_flagged;
    int32_t truth_positive;
} eads_comparison_row;

typedef struct eads_comparison {
    uint64_t nodes_analyzed;
    uint64_t entropy_flagged_count;
    uint64_t ellipse_flagged_count;
    eads_confusion entropy_confusion;
    eads_confusion ellipse_confusion;
    /* 1 when every fully-anomalous ground-truth node analyzed by the entropy
     * method has all of its windows flagged. */
    int32_t entropy_full_coverage;
} eads_comparison;

EADS_API const char* eads_version(void);
EADS_API const char* eads_status_name(eads_status status);
EADS_API const char* eads_last_error(void);

/* --- configuration ----------------------------------------------------- */

/* Defaults: period 2004-03-01T00:00:00..04:00:00, 600 s windows,
 * temperature bounds 15.55:18.00, humidity bounds 42.25:45.80, nodes 5 and
 * 15 excluded, max node id 54, tau 0 with the BOTH combinator, confidence
 * 0.90, log base 10. Returns NULL only on allocation failure. */
EADS_API eads_config* eads_config_new(void);
EADS_API void eads_config_free(eads_config* config);

/* Timestamps are naive local times: "YYYY-MM-DD HH:MM:SS" or with 'T'. */
EADS_API eads_status eads_config_set_period(eads_config* config,
                                            const char* start,
                                            const char* end);
EADS_API eads_status eads_config_set_window_seconds(eads_config* config,
                                                    int64_t seconds);
EADS_API eads_status eads_config_set_temperature_bounds(eads_config* config,
                                                        double lower,
                                                        double upper);
EADS_API eads_status eads_config_set_humidity_bounds(eads_config* config,
                                                     double lower,
                                                     double upper);
EADS_API eads_status eads_config_set_excluded_nodes(eads_config* config,
                                                    const int32_t* ids,
                                                    size_t count);
EADS_API eads_status eads_config_set_max_node_id(eads_config* config,
                                                 int32_t max_node_id);
EADS_API eads_status eads_config_set_rule(eads_config* config, double tau,
                                          eads_combinator combinator);
EADS_API eads_status eads_config_set_confidence(eads_config* config,
                                                double confidence);
EADS_API eads_status eads_config_set_log_base(eads_config* config,
                                              double log_base);

/* Writes the effective configuration as "key = value" lines. *needed gets
 * the full length including the terminator; the buffer is filled (and
 * truncated) when cap > 0. buf may be NULL with cap 0 to size a buffer. */
EADS_API eads_status eads_config_describe(const eads_config* config, char* buf,
                                          size_t cap, size_t* needed);

/* --- ingestion ---------------------------------------------------------- */

EADS_API eads_status eads_dataset_load_file(const eads_config* config,
                                            const char* path,
                                            eads_dataset** out);
EADS_API eads_status eads_dataset_load_buffer(const eads_config* config,
                                              const char* bytes, size_t len,
                                              eads_dataset** out);
EADS_API void eads_dataset_free(eads_dataset* dataset);
EADS_API eads_status eads_dataset_report(const eads_dataset* dataset,
                                         eads_ingest_report* out);

/* --- analysis ----------------------------------------------------------- */

EADS_API eads_status eads_analysis_run(const eads_dataset* dataset,
                                       const eads_config* config,
                                       unsigned stages, eads_analysis** out);
EADS_API void eads_analysis_free(eads_analysis* analysis);

EADS_API eads_status eads_analysis_entropy_point_count(
    const eads_analysis* analysis, size_t* out);
EADS_API eads_status eads_analysis_entropy_point(const eads_analysis* analysis,
                                                 size_t index,
                                                 eads_entropy_point* out);
EADS_API eads_status eads_analysis_node_summary_count(
    const eads_analysis* analysis, size_t* out);
EADS_API eads_status eads_analysis_node_summary(const eads_analysis* analysis,
                                                size_t index,
                                                eads_node_summary* out);
EADS_API eads_status eads_analysis_ellipse_model(const eads_analysis* analysis,
                                                 eads_ellipse_model* out);
EADS_API eads_status eads_analysis_ellipse_point_count(
    const eads_analysis* analysis, size_t* out);
EADS_API eads_status eads_analysis_ellipse_point(const eads_analysis* analysis,
                                                 size_t index,
                                                 eads_ellipse_point* out);

/* Fills two arrays of k >= 8 coordinates tracing the confidence ellipse. */
EADS_API eads_status eads_analysis_ellipse_boundary(
    const eads_analysis* analysis, size_t k, double* temperature,
    double* humidity);

EADS_API eads_status eads_analysis_comparison(const eads_analysis* analysis,
                                              eads_comparison* out);
EADS_API eads_status eads_analysis_comparison_row_count(
    const eads_analysis* analysis, size_t* out);
EADS_API eads_status eads_analysis_comparison_row(
    const eads_analysis* analysis, size_t index, eads_comparison_row* out);

/* Node ids flagged by one method, ascending. Writes up to cap ids; *count
 * gets the total regardless of cap. */
EADS_API eads_status eads_analysis_flagged_nodes(const eads_analysis* analysis,
                                                 eads_method method,
                                                 int32_t* buf, size_t cap,
                                                 size_t* count);

/* --- direct computations ------------------------------------------------ */

/* Window entropy of one sample sequence against [lower, upper]. */
EADS_API eads_status eads_window_entropy(const double* samples, size_t count,
                                         double lower, double upper,
                                         double log_base, double* out);

/* Chi-squared quantile with 2 dof: -2 ln(1 - confidence). */
EADS_API eads_status eads_chi2_threshold(double confidence, double* out);

/* --- time helpers -------------------------------------------------------- */

EADS_API eads_status eads_parse_time(const char* text, int64_t* out);
/* Formats as "YYYY-MM-DDTHH:MM:SS"; cap must be at least 20. */
EADS_API eads_status eads_format_time(int64_t seconds, char* buf, size_t cap);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* EADS_H */
