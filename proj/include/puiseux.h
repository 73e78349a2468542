#ifndef PUISEUX_H
#define PUISEUX_H

#include <stddef.h>

#if defined(_WIN32)
#define PUISEUX_API __declspec(dllexport)
#else
#define PUISEUX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum puiseux_status {
  PUISEUX_OK = 0,
  PUISEUX_ERR_PARSE = 1,
  PUISEUX_ERR_RANK_DEFICIENT = 2,
  PUISEUX_ERR_DIMENSION = 3,
  PUISEUX_ERR_NOT_IN_IMAGE = 4,
  PUISEUX_ERR_BUDGET = 5,
  PUISEUX_ERR_BRANCH_BUDGET = 6,
  PUISEUX_ERR_INVALID_ARGUMENT = 7,
  PUISEUX_ERR_INTERNAL = 8
} puiseux_status;

typedef enum puiseux_format { PUISEUX_FORMAT_JSON = 0, PUISEUX_FORMAT_PLAIN = 1 } puiseux_format;

typedef struct puiseux_problem puiseux_problem;
typedef struct puiseux_result puiseux_result;

/* Problem files use the text format described in the README. */
PUISEUX_API puiseux_status puiseux_problem_parse(const char* text, puiseux_problem** out);
PUISEUX_API void puiseux_problem_free(puiseux_problem* problem);

PUISEUX_API puiseux_status puiseux_problem_set_max_terms(puiseux_problem* problem, size_t k);
PUISEUX_API puiseux_status puiseux_problem_set_max_branches(puiseux_problem* problem, size_t b);
PUISEUX_API puiseux_status puiseux_problem_set_positive_only(puiseux_problem* problem, int on);

PUISEUX_API puiseux_status puiseux_run(const puiseux_problem* problem, puiseux_result** out);
PUISEUX_API void puiseux_result_free(puiseux_result* result);

PUISEUX_API size_t puiseux_result_solution_count(const puiseux_result* result);
PUISEUX_API size_t puiseux_result_dead_count(const puiseux_result* result);

/* The returned string is owned by the caller; release it with puiseux_string_free. */
PUISEUX_API puiseux_status puiseux_result_render(const puiseux_result* result, puiseux_format format,
                                                 char** out);

/* Re-verifies solutions (a run report, an array of solutions or one solution
   object) against the problem. *all_ok is set to 1 when every solution
   claimed exact has an infinite residual order. */
PUISEUX_API puiseux_status puiseux_check(const puiseux_problem* problem, const char* solutions_text,
                                         puiseux_format format, char** report, int* all_ok);

PUISEUX_API void puiseux_string_free(char* s);

/* Message of the last failed call on this thread; never NULL. */
PUISEUX_API const char* puiseux_last_error(void);
PUISEUX_API const char* puiseux_status_string(puiseux_status status);

#ifdef __cplusplus
}
#endif

#endif
