// Copyright 2026 The drra Authors
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

/*
 * C interface to the drra library.
 *
 * Objects are opaque handles created by drra_*_generate/parse/load and
 * released with the matching drra_*_free. Every fallible call returns a
 * drra_status; on failure drra_last_error() describes the problem (the text
 * is thread local and valid until the next failing call on that thread).
 * Strings handed out through char** parameters are heap allocated and must
 * be released with drra_string_free.
 */
#ifndef DRRA_DRRA_H_
#define DRRA_DRRA_H_

#include <stddef.h>

#if defined(DRRA_BUILDING_LIBRARY)
#define DRRA_API __attribute__((visibility("default")))
#else
#define DRRA_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum drra_status {
  DRRA_OK = 0,
  DRRA_ERR_BAD_PARAMETER = 1,
  DRRA_ERR_PARSE = 2,
  DRRA_ERR_DISCONNECTED = 3,
  DRRA_ERR_BAD_VERTEX_LIST = 4,
  DRRA_ERR_NON_INTEGRAL_LAYER = 5,
  DRRA_ERR_NON_INTEGRAL_ENTRY = 6,
  DRRA_ERR_NEGATIVE_ENTRY = 7,
  DRRA_ERR_INCONSISTENT_TENSOR = 8,
  DRRA_ERR_COLOR_COUNT_MISMATCH = 9,
  DRRA_ERR_SIZE_GUARD = 10,
  DRRA_ERR_IO = 11,
  DRRA_ERR_INVALID_ARGUMENT = 12,
  DRRA_ERR_OVERFLOW = 13,
  DRRA_ERR_INTERNAL = 14
} drra_status;

/* Passed as `parameter` to drra_graph_generate for parameterless families. */
#define DRRA_NO_PARAMETER (-1)

/* Default vertex limit for the automorphism search. */
#define DRRA_DEFAULT_MAX_POINTS 200

typedef struct drra_graph drra_graph;
typedef struct drra_coloring drra_coloring;

DRRA_API const char* drra_version(void);
DRRA_API const char* drra_status_name(drra_status status);
DRRA_API const char* drra_last_error(void);
DRRA_API void drra_string_free(char* text);

/* Graphs. */
DRRA_API drra_status drra_graph_generate(const char* family, int parameter,
                                         drra_graph** out);
/* `endpoints` holds 2 * edge_count vertex ids. */
DRRA_API drra_status drra_graph_from_edges(int vertices, const int* endpoints,
                                           size_t edge_count,
                                           drra_graph** out);
DRRA_API drra_status drra_graph_parse(const char* text, drra_graph** out);
DRRA_API drra_status drra_graph_load(const char* path, drra_graph** out);
DRRA_API drra_status drra_graph_format(const drra_graph* graph,
                                       char** out_text);
DRRA_API int drra_graph_order(const drra_graph* graph);
DRRA_API size_t drra_graph_edge_count(const drra_graph* graph);
DRRA_API drra_status drra_graph_diameter(const drra_graph* graph,
                                         int* out_diameter);
DRRA_API void drra_graph_free(drra_graph* graph);

/* Colorings of complete graphs. */
DRRA_API drra_status drra_coloring_from_graph(const drra_graph* graph,
                                              drra_coloring** out);
DRRA_API drra_status drra_coloring_parse(const char* text, drra_coloring** out);
DRRA_API drra_status drra_coloring_load(const char* path, drra_coloring** out);
DRRA_API drra_status drra_coloring_format(const drra_coloring* coloring,
                                          char** out_text);
DRRA_API int drra_coloring_order(const drra_coloring* coloring);
DRRA_API int drra_coloring_color_count(const drra_coloring* coloring);
/* Returns -1 for out-of-range points. */
DRRA_API int drra_coloring_color(const drra_coloring* coloring, int x, int y);
DRRA_API drra_status drra_coloring_recolor(const drra_coloring* coloring,
                                           int u, int v, int color,
                                           drra_coloring** out);
DRRA_API void drra_coloring_free(drra_coloring* coloring);

/* Reports, returned as JSON text. */
DRRA_API drra_status drra_analyze(const drra_graph* graph, char** out_json);
/* `array` is "b0,b1,b2;c1,c2,c3". */
DRRA_API drra_status drra_cycle_table(const char* array, char** out_json);
/* `algebra` is a catalog name such as "30_65" or a list like "aaa,abb". */
DRRA_API drra_status drra_verify_representation(const drra_coloring* coloring,
                                                const char* algebra,
                                                size_t violation_cap,
                                                int* out_passed,
                                                char** out_json);
/* out_generators (optional) receives one "g: ..." line per generator. */
DRRA_API drra_status drra_check_distance_transitive(const drra_graph* graph,
                                                    int max_points, int force,
                                                    int* out_iff_holds,
                                                    char** out_json,
                                                    char** out_generators);

typedef struct drra_reproduce_options {
  /* Optional externally supplied Moscow-Soicher graph. */
  const drra_graph* moscow_soicher;
  /* Optional test hook: family name whose generated graph loses an edge. */
  const char* inject_fault;
  int max_points;
} drra_reproduce_options;

/* `options` may be NULL. out_text and out_json are optional. */
DRRA_API drra_status drra_reproduce_table(const drra_reproduce_options* options,
                                          int* out_all_ok, char** out_text,
                                          char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* DRRA_DRRA_H_ */
