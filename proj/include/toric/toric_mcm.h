#ifndef TORIC_MCM_H
#define TORIC_MCM_H

#include <stddef.h>

#if defined(_WIN32)
#define TORIC_API __declspec(dllexport)
#else
#define TORIC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum toric_status {
  TORIC_OK = 0,
  TORIC_ERR_PARSE = 1,
  TORIC_ERR_VALIDATION = 2,
  TORIC_ERR_CAP_EXCEEDED = 3,
  TORIC_ERR_INVALID_ARGUMENT = 4,
  TORIC_ERR_INTERNAL = 5
} toric_status;

typedef struct toric_limits {
  size_t max_rays;
  size_t max_rank;
  size_t max_box;
  unsigned jobs; /* 0: one worker per hardware thread */
} toric_limits;

/* Opaque: a validated cone plus divisor, ideal, field and limits. */
typedef struct toric_problem toric_problem;

/* Defaults: 12 rays, rank 6, box 5, jobs 0. */
TORIC_API void toric_limits_init(toric_limits* limits);

/* Parses a problem document. limits may be NULL for the defaults. */
TORIC_API toric_status toric_problem_parse(const char* text, const toric_limits* limits, toric_problem** out);
TORIC_API void toric_problem_free(toric_problem* problem);

/* Comma-separated integers ("0,-2,0,0") or a JSON list. */
TORIC_API toric_status toric_problem_set_divisor(toric_problem* problem, const char* divisor);
/* "maximal" or a JSON object {"generators": [[...], ...]}. */
TORIC_API toric_status toric_problem_set_ideal(toric_problem* problem, const char* ideal);
TORIC_API toric_status toric_problem_set_characteristic(toric_problem* problem, unsigned long long characteristic);

/* Each command writes a JSON report to *out, to be released with toric_string_free. */
TORIC_API toric_status toric_faces(const toric_problem* problem, char** out);
TORIC_API toric_status toric_support(const toric_problem* problem, char** out);
TORIC_API toric_status toric_cosupport(const toric_problem* problem, char** out);
TORIC_API toric_status toric_chambers(const toric_problem* problem, char** out);
/* degree: comma-separated integers or a JSON list. */
TORIC_API toric_status toric_cohomology(const toric_problem* problem, const char* degree, char** out);
TORIC_API toric_status toric_depth(const toric_problem* problem, char** out);
TORIC_API toric_status toric_mcm_check(const toric_problem* problem, char** out);
TORIC_API toric_status toric_mcm_enumerate(const toric_problem* problem, size_t coeff_bound, char** out);
TORIC_API toric_status toric_singularity(const toric_problem* problem, char** out);
/* *verified is 1 when every check passed. */
TORIC_API toric_status toric_verify(const toric_problem* problem, const char* report, int* verified, char** out);

TORIC_API void toric_string_free(char* s);
/* Message for the calling thread's most recent failure; "" after success. */
TORIC_API const char* toric_last_error(void);
TORIC_API const char* toric_status_name(toric_status status);

#ifdef __cplusplus
}
#endif

#endif
