// Copyright 2026 The Tutte Toolkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the toolkit. All strings returned through `char** out` are
 * heap-allocated and must be released with tutte_string_free. On a non-OK
 * status, tutte_last_error() describes the failure for the calling thread. */
#ifndef TUTTE_TUTTE_C_H_
#define TUTTE_TUTTE_C_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TUTTE_API __declspec(dllexport)
#else
#define TUTTE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tutte_status {
  TUTTE_OK = 0,
  TUTTE_INVALID_ARGUMENT = 1,
  TUTTE_PARSE = 2,
  TUTTE_PRECONDITION = 3,
  TUTTE_VERIFICATION = 4,
  TUTTE_SIZE_LIMIT = 5,
  TUTTE_INVALID_BASES = 6,
  TUTTE_NOT_APPLICABLE = 7,
  TUTTE_INTERNAL = 8
} tutte_status;

/* A parsed or constructed graph or matroid. */
typedef struct tutte_instance tutte_instance;
typedef struct tutte_poly tutte_poly;

TUTTE_API const char* tutte_last_error(void);
TUTTE_API void tutte_string_free(char* s);

TUTTE_API int tutte_get_exhaustive_limit(void);
/* limit must lie in [0, 24]. `previous` may be NULL. */
TUTTE_API tutte_status tutte_set_exhaustive_limit(int limit, int* previous);

TUTTE_API tutte_status tutte_parse(const char* text, tutte_instance** out);
/* `endpoints` holds 2*m vertex ids. */
TUTTE_API tutte_status tutte_graph_create(int n, int m, const int* endpoints, tutte_instance** out);
TUTTE_API tutte_status tutte_uniform_create(int rank, int size, tutte_instance** out);
/* Bases as bitmasks over elements 0..size-1. */
TUTTE_API tutte_status tutte_matroid_from_bases(int size, const uint64_t* bases, size_t count,
                                                tutte_instance** out);
TUTTE_API tutte_status tutte_cycle_matroid(const tutte_instance* graph, tutte_instance** out);
TUTTE_API tutte_status tutte_dual(const tutte_instance* inst, tutte_instance** out);
TUTTE_API void tutte_instance_free(tutte_instance* inst);

TUTTE_API int tutte_is_graph(const tutte_instance* inst);
/* Ground set size: edge count for graphs. */
TUTTE_API int tutte_ground_size(const tutte_instance* inst);
TUTTE_API tutte_status tutte_rank_of(const tutte_instance* inst, uint64_t subset, int* rank);
TUTTE_API tutte_status tutte_format_instance(const tutte_instance* inst, char** out);

/* engine: "subset", "activities", "delcon" or "all". */
TUTTE_API tutte_status tutte_polynomial(const tutte_instance* inst, const char* engine,
                                        tutte_poly** out);
TUTTE_API tutte_status tutte_poly_format(const tutte_poly* p, int json, char** out);
/* Decimal string of the coefficient of x^i y^j. */
TUTTE_API tutte_status tutte_poly_coeff(const tutte_poly* p, int i, int j, char** out);
TUTTE_API void tutte_poly_free(tutte_poly* p);

/* axis 'x' or 'y'; see the CLI for method names. */
TUTTE_API tutte_status tutte_coefficient(const tutte_instance* inst, char axis, int index,
                                         const char* method, int json, char** out);
TUTTE_API tutte_status tutte_report(const tutte_instance* inst, int json, char** out);
/* Returns TUTTE_VERIFICATION with the report still written when a check fails. */
TUTTE_API tutte_status tutte_verify(const tutte_instance* inst, const char* checks, int json,
                                    char** out);

typedef struct tutte_fuzz_options {
  const char* family; /* "graphs", "uniform" or "bases" */
  int max_elements;
  uint64_t seed;
  int trials;
  int connected;
  int workers;
  const char* checks; /* NULL means "all" */
} tutte_fuzz_options;

/* Returns TUTTE_VERIFICATION with the summary still written on any failure. */
TUTTE_API tutte_status tutte_fuzz(const tutte_fuzz_options* options, int json, char** out);

#ifdef __cplusplus
}
#endif

#endif /* TUTTE_TUTTE_C_H_ */
