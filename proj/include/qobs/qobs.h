#ifndef QOBS_QOBS_H
#define QOBS_QOBS_H

/* C interface to the qobs library. Every call returns a qobs_status; on
 * failure qobs_last_error() describes the problem for the calling thread.
 * Objects are opaque and owned by the caller once created. Strings returned
 * through out-parameters are allocated by the library and released with
 * qobs_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(QOBS_BUILDING)
#    define QOBS_API __declspec(dllexport)
#  else
#    define QOBS_API __declspec(dllimport)
#  endif
#else
#  define QOBS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qobs_status {
    QOBS_OK = 0,
    QOBS_INVALID_ARGUMENT = 1,
    QOBS_INSUFFICIENT_DATA = 2,
    QOBS_IO_ERROR = 3,
    QOBS_PARSE_ERROR = 4,
    QOBS_INTERNAL_ERROR = 5
} qobs_status;

typedef enum qobs_estimator {
    QOBS_LZ76_PHRASES = 0,
    QOBS_LZ76_NORMALIZED_BITS = 1,
    QOBS_DICTIONARY_CODE_LENGTH = 2
} qobs_estimator;

typedef enum qobs_classification { QOBS_QUANTUM = 0, QOBS_CLASSICAL = 1 } qobs_classification;

typedef enum qobs_growth_class {
    QOBS_BOUNDED = 0,
    QOBS_LOGARITHMIC = 1,
    QOBS_SUPER_LOGARITHMIC = 2
} qobs_growth_class;

typedef struct qobs_bitstring qobs_bitstring;
typedef struct qobs_ensemble qobs_ensemble;
typedef struct qobs_config qobs_config;

/* Message for the last failed call on this thread; empty after success. */
QOBS_API const char* qobs_last_error(void);
QOBS_API void qobs_string_free(char* s);

/* Bit strings ------------------------------------------------------------ */

QOBS_API qobs_status qobs_bitstring_from_text(const char* text, qobs_bitstring** out);
QOBS_API void qobs_bitstring_free(qobs_bitstring* s);
QOBS_API size_t qobs_bitstring_length(const qobs_bitstring* s);
QOBS_API qobs_status qobs_bitstring_to_text(const qobs_bitstring* s, char** out);
QOBS_API qobs_status qobs_bitstring_concat(const qobs_bitstring* const* parts, size_t count,
                                           qobs_bitstring** out);

/* Complexity and entropy ------------------------------------------------- */

QOBS_API qobs_status qobs_lz76_phrase_count(const qobs_bitstring* s, size_t* out);
QOBS_API qobs_status qobs_complexity(const qobs_bitstring* s, qobs_estimator estimator, double* out_bits);
QOBS_API qobs_status qobs_dictionary_encode(const qobs_bitstring* s, qobs_bitstring** out);
QOBS_API qobs_status qobs_dictionary_decode(const qobs_bitstring* code, qobs_bitstring** out);
QOBS_API qobs_status qobs_shannon_entropy(const double* probabilities, size_t count, double* out_bits);

/* Observation ensembles -------------------------------------------------- */

QOBS_API qobs_status qobs_ensemble_load_csv(const char* path, qobs_ensemble** out);
QOBS_API qobs_status qobs_ensemble_parse_csv(const char* text, qobs_ensemble** out);
QOBS_API void qobs_ensemble_free(qobs_ensemble* e);
QOBS_API size_t qobs_ensemble_observers(const qobs_ensemble* e);
QOBS_API size_t qobs_ensemble_systems(const qobs_ensemble* e);
/* Borrowed pointer, valid while the ensemble lives. NULL if out of range. */
QOBS_API const char* qobs_ensemble_system_label(const qobs_ensemble* e, size_t system_index);

typedef struct qobs_zero_rate_result {
    double plugin_rate_bits;
    double lz_rate_bits;
    size_t block_used;
    int zero;
} qobs_zero_rate_result;

QOBS_API qobs_status qobs_zero_rate(const qobs_ensemble* e, size_t system_index, double tol,
                                    size_t max_block, qobs_zero_rate_result* out);

typedef struct qobs_verdict {
    int is_element_of_reality;
    double entropy_rate_bits;
    qobs_growth_class growth_class;
    double brudno_tail;
} qobs_verdict;

QOBS_API qobs_status qobs_reality_verdict(const qobs_ensemble* e, size_t system_index, double tol,
                                          size_t max_block, qobs_estimator estimator, qobs_verdict* out);

/* Observers and thermodynamics ------------------------------------------- */

QOBS_API qobs_status qobs_classify(double complexity_bits, double capacity_bits, qobs_classification* out);
QOBS_API qobs_status qobs_landauer_heat(double bits, double temperature_kelvin, double* out_joules);
QOBS_API qobs_status qobs_photon_entropy(double mixedness, double* out_bits);

/* Scenario runner -------------------------------------------------------- */

typedef void (*qobs_write_fn)(const char* data, size_t size, void* user);

QOBS_API qobs_status qobs_config_create(const char* command, qobs_config** out);
QOBS_API void qobs_config_free(qobs_config* c);
QOBS_API qobs_status qobs_config_set(qobs_config* c, const char* key, const char* value);
QOBS_API qobs_status qobs_config_load_file(qobs_config* c, const char* path);
QOBS_API qobs_status qobs_config_to_text(const qobs_config* c, char** out);
/* Runs the configured command. Console output goes to `write` if non-NULL. */
QOBS_API qobs_status qobs_run(const qobs_config* c, qobs_write_fn write, void* user);

#ifdef __cplusplus
}
#endif

#endif
