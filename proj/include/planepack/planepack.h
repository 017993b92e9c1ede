// Copyright 2026 The planepack Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// C interface to planepack. Every object is an opaque handle released with
// its *_free function; every fallible call returns a pp_status and leaves a
// message for pp_last_error() on the calling thread.

#ifndef PLANEPACK_PLANEPACK_H_
#define PLANEPACK_PLANEPACK_H_

#include <stddef.h>
#include <stdint.h>

#if defined(PLANEPACK_BUILDING)
#define PP_API __attribute__((visibility("default")))
#else
#define PP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct pp_pointset pp_pointset;
typedef struct pp_packing pp_packing;
typedef struct pp_report pp_report;

typedef enum pp_status {
  PP_OK = 0,
  PP_ERR_INVALID_ARGUMENT,
  PP_ERR_FORMAT,
  PP_ERR_GENERAL_POSITION,
  PP_ERR_DANGLING_INDEX,
  PP_ERR_DIGEST_MISMATCH,
  PP_ERR_IO,
  PP_ERR_TOO_FEW_POINTS,
  PP_ERR_INVALID_K,
  PP_ERR_BUDGET_EXCEEDED,
  PP_ERR_CONSTRUCTION_FAILED,
  PP_ERR_NOT_FOUND,
  PP_ERR_INTERNAL,
} pp_status;

PP_API const char* pp_status_name(pp_status status);
// Message of the last failed call on this thread; "" if none.
PP_API const char* pp_last_error(void);

// Point sets.
PP_API pp_status pp_pointset_random(size_t n, uint64_t seed, pp_pointset** out);
PP_API pp_status pp_pointset_convex(size_t n, pp_pointset** out);
PP_API pp_status pp_pointset_wheel(int half, pp_pointset** out);
// `xy` holds n interleaved coordinate pairs.
PP_API pp_status pp_pointset_from_coords(const int64_t* xy, size_t n,
                                         pp_pointset** out);
PP_API pp_status pp_pointset_read(const char* path, pp_pointset** out);
PP_API pp_status pp_pointset_write(const pp_pointset* ps, const char* path);
// Serialized form; the string lives as long as the handle.
PP_API const char* pp_pointset_json(const pp_pointset* ps);
PP_API size_t pp_pointset_size(const pp_pointset* ps);
PP_API pp_status pp_pointset_point(const pp_pointset* ps, size_t i, int64_t* x,
                                   int64_t* y);
// Half-size n of a wheel set, 0 for ordinary point sets.
PP_API int pp_pointset_wheel_half(const pp_pointset* ps);
PP_API void pp_pointset_free(pp_pointset* ps);

// Packings.
typedef enum pp_method {
  PP_METHOD_DOUBLE_STAR = 0,
  PP_METHOD_TWO_TREES,
  PP_METHOD_THREE_TREES,
  PP_METHOD_TWO_PATHS,
  PP_METHOD_WHEEL_PARTITION,
  PP_METHOD_WHEEL_PATHS,
  PP_METHOD_HIERARCHICAL,
} pp_method;

typedef enum pp_kind {
  PP_KIND_TREE = 0,
  PP_KIND_PATH,
  PP_KIND_GENERIC,
} pp_kind;

// Accepts the command-line spellings: "double-star", "two-trees", ...
PP_API pp_status pp_method_from_name(const char* name, pp_method* out);
PP_API const char* pp_method_name(pp_method method);

// `k` is only read by PP_METHOD_HIERARCHICAL. Wheel methods need a wheel set.
PP_API pp_status pp_pack(const pp_pointset* ps, pp_method method, size_t k,
                         pp_packing** out);
// Records the generator seed as provenance in written files.
PP_API void pp_packing_set_seed(pp_packing* p, uint64_t seed);
PP_API pp_status pp_packing_read(const char* path, pp_packing** out);
// With `points_ref` non-null the point set is referenced by that path (plus
// its digest) instead of embedded.
PP_API pp_status pp_packing_write(const pp_packing* p, const char* path,
                                  const char* points_ref);
PP_API const char* pp_packing_method(const pp_packing* p);
PP_API size_t pp_packing_member_count(const pp_packing* p);
PP_API pp_status pp_packing_member(const pp_packing* p, size_t i,
                                   pp_kind* kind, size_t* edge_count);
// Writes up to `capacity` edges as interleaved endpoint pairs.
PP_API pp_status pp_packing_member_edges(const pp_packing* p, size_t i,
                                         uint32_t* pairs, size_t capacity);
PP_API pp_status pp_packing_pointset(const pp_packing* p, pp_pointset** out);
PP_API pp_status pp_packing_render_svg(const pp_packing* p, const char* path);
PP_API void pp_packing_free(pp_packing* p);

// Verification.
PP_API pp_status pp_verify(const pp_packing* p, int require_partition,
                           pp_report** out);
PP_API int pp_report_ok(const pp_report* r);
PP_API const char* pp_report_text(const pp_report* r);
PP_API void pp_report_free(pp_report* r);

// Exhaustive searches. On PP_ERR_BUDGET_EXCEEDED the result still holds the
// best value found, as a lower bound.
typedef enum pp_oracle_kind {
  PP_ORACLE_MAX_TREES = 0,
  PP_ORACLE_MAX_PATHS,
  PP_ORACLE_MAX_CROSSING_FAMILY,
} pp_oracle_kind;

typedef struct pp_oracle_result {
  size_t maximum;
  int complete;
  uint64_t nodes;
} pp_oracle_result;

PP_API pp_status pp_oracle(const pp_pointset* ps, pp_oracle_kind kind,
                           uint64_t budget, pp_oracle_result* out);

typedef struct pp_wheel_certificate {
  int half;
  size_t plane_trees;
  uint64_t partitions;
  size_t max_path_members;
  int complete;
  uint64_t nodes;
} pp_wheel_certificate;

PP_API pp_status pp_wheel_certify(int half, uint64_t budget,
                                  pp_wheel_certificate* out);

#ifdef __cplusplus
}  // extern "C"
#endif

#endif  // PLANEPACK_PLANEPACK_H_
