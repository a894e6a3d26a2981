#ifndef ZAKSPACE_H
#define ZAKSPACE_H

/* C interface to libzakspace. Every call returns a zs_status; on failure the
 * thread-local last error (zs_last_error_message / zs_last_error_json) holds
 * the details. Strings and buffers returned through out-parameters are owned
 * by the caller and released with zs_free_buffer. */

#include <stddef.h>
#include <stdint.h>

#if defined(ZAKSPACE_BUILDING_LIBRARY)
#define ZS_API __attribute__((visibility("default")))
#else
#define ZS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zs_status {
  ZS_OK = 0,
  ZS_INVALID_ARGUMENT = 1,
  ZS_OUT_OF_RANGE = 2,
  ZS_SIZE_MISMATCH = 3,
  ZS_SHAPE_MISMATCH = 4,
  ZS_NOT_ASSOCIATIVE = 10,
  ZS_NO_IDENTITY = 11,
  ZS_NO_INVERSE = 12,
  ZS_NOT_HOMOMORPHISM = 13,
  ZS_NONPOSITIVE_WEIGHT = 14,
  ZS_EMPTY_SET = 15,
  ZS_NOT_ABELIAN = 20,
  ZS_NOT_SUBGROUP = 21,
  ZS_NOT_IRREDUCIBLE = 22,
  ZS_INCOMPLETE_DUAL = 23,
  ZS_NOT_COSET_FUNCTION = 24,
  ZS_DUAL_GROUP_MISMATCH = 30,
  ZS_EQUIVARIANCE_VIOLATION = 31,
  ZS_INVARIANT_VIOLATION = 32,
  ZS_NOT_REPRESENTATIVE = 33,
  ZS_NOT_INVARIANT = 40,
  ZS_NOT_HERMITIAN = 41,
  ZS_DIMENSION_MISMATCH = 50,
  ZS_TRUNCATION_EXCEEDED = 51,
  ZS_NOT_CLOSABLE = 52,
  ZS_NOT_TRANSVERSE = 60,
  ZS_SAMPLE_SET_NOT_CLOSED = 61,
  ZS_DENSITY_NOT_INVARIANT = 62,
  ZS_PARSE_ERROR = 70,
  ZS_SCHEMA_ERROR = 71,
  ZS_IO_ERROR = 72,
  ZS_INTERNAL = 99
} zs_status;

typedef struct zs_options {
  uint64_t seed;
  int jobs;
  double tol; /* > 0 overrides the default tolerance of verifying commands */
} zs_options;

ZS_API const char* zs_version(void);
ZS_API const char* zs_status_name(zs_status status);
ZS_API void zs_options_default(zs_options* opts);

/* Last error on the calling thread. */
ZS_API const char* zs_last_error_message(void);
/* {"error", "code", "message"[, "line", "column"]} */
ZS_API const char* zs_last_error_json(void);

ZS_API void zs_free_buffer(char* data);

/* ---- handles ---------------------------------------------------------- */

typedef struct zs_action zs_action;
typedef struct zs_dual zs_dual;
typedef struct zs_zak zs_zak;

/* Action document {"order","table","points","perm","weights"} or the JSON
 * string "bundled:<name>". */
ZS_API zs_status zs_action_from_json(const char* json, zs_action** out);
ZS_API void zs_action_free(zs_action* action);
ZS_API int zs_action_points(const zs_action* action);
ZS_API int zs_action_order(const zs_action* action);
ZS_API int zs_action_orbits(const zs_action* action);

/* hint: "" automatic, "cyclic:N", "dihedral:N", "symmetric:N", "AxB",
 * "mackey:a,b,...", "regular". */
ZS_API zs_status zs_dual_compute(const zs_action* action, const char* hint, uint64_t seed, zs_dual** out);
ZS_API void zs_dual_free(zs_dual* dual);
ZS_API int zs_dual_size(const zs_dual* dual);
ZS_API int zs_dual_dim(const zs_dual* dual, int index);

/* f: interleaved re/im, 2 * points doubles. */
ZS_API zs_status zs_zak_forward(const zs_action* action, const zs_dual* dual, const double* f, size_t points,
                                int jobs, zs_zak** out);
ZS_API zs_status zs_zak_inverse(const zs_zak* zak, double* f_out, size_t points);
ZS_API zs_status zs_zak_to_json(const zs_zak* zak, char** out, size_t* len);
ZS_API zs_status zs_zak_from_json(const char* json, zs_zak** out);
ZS_API zs_status zs_zak_to_binary(const zs_zak* zak, char** out, size_t* len);
ZS_API zs_status zs_zak_from_binary(const char* data, size_t len, const zs_action* action, const zs_dual* dual,
                                    zs_zak** out);
/* Unitarity and inversion of one coefficient set against f. */
ZS_API zs_status zs_zak_verify(const zs_zak* zak, const double* f, size_t points, double tol, char** report,
                               size_t* len, int* pass);
ZS_API void zs_zak_free(zs_zak* zak);

/* ---- documents ------------------------------------------------------- */
/* Inputs are JSON texts (ZAK1 binary where noted). Outputs are allocated;
 * `pass` (may be NULL) receives the verdict of verifying commands. */

ZS_API zs_status zs_group_inspect_json(const char* input, const zs_options* opts, char** out, size_t* len,
                                       int* pass);
ZS_API zs_status zs_zak_forward_doc(const char* config, const zs_options* opts, int binary, char** out,
                                    size_t* len);
ZS_API zs_status zs_zak_inverse_doc(const char* data, size_t data_len, const char* context,
                                    const zs_options* opts, char** out, size_t* len);
ZS_API zs_status zs_zak_verify_json(const char* config, const zs_options* opts, char** out, size_t* len,
                                    int* pass);
ZS_API zs_status zs_lattice_zak_forward_json(const char* config, const zs_options* opts, int binary, char** out,
                                             size_t* len);
ZS_API zs_status zs_poisson_check_json(const char* config, const zs_options* opts, char** out, size_t* len,
                                       int* pass);
ZS_API zs_status zs_bands_run_csv(const char* model, const zs_options* opts, char** out, size_t* len);
ZS_API zs_status zs_bands_check_json(const char* model, const zs_options* opts, char** out, size_t* len,
                                     int* pass);
ZS_API zs_status zs_euclid_generate_json(const char* spec, const zs_options* opts, char** out, size_t* len);
ZS_API zs_status zs_euclid_certify_json(const char* spec, const zs_options* opts, char** out, size_t* len,
                                        int* pass);
ZS_API zs_status zs_diffract_run_csv(const char* config, const zs_options* opts, char** out, size_t* len);
ZS_API zs_status zs_diffract_verify_json(const char* config, const zs_options* opts, char** out, size_t* len,
                                         int* pass);
ZS_API zs_status zs_suite_all_json(const zs_options* opts, char** out, size_t* len, int* pass);

#ifdef __cplusplus
}
#endif

#endif /* ZAKSPACE_H */
