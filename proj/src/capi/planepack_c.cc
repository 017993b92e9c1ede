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

#include "planepack/planepack.h"

#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "codec.h"
#include "constructions.h"
#include "crossing_family.h"
#include "generators.h"
#include "hierarchical.h"
#include "packing.h"
#include "search_oracle.h"
#include "svg.h"
#include "wheel.h"

struct pp_pointset {
  std::shared_ptr<const planepack::PointSet> set;
  mutable std::string json;
};

struct pp_packing {
  planepack::PackingRecord record;
};

struct pp_report {
  planepack::VerificationReport report;
  std::string text;
};

namespace {

using planepack::Error;
using planepack::ErrorCode;

thread_local std::string last_error;

pp_status StatusOf(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kNotATree:
      return PP_ERR_INVALID_ARGUMENT;
    case ErrorCode::kFormat:
      return PP_ERR_FORMAT;
    case ErrorCode::kGeneralPosition:
      return PP_ERR_GENERAL_POSITION;
    case ErrorCode::kDanglingIndex:
      return PP_ERR_DANGLING_INDEX;
    case ErrorCode::kDigestMismatch:
      return PP_ERR_DIGEST_MISMATCH;
    case ErrorCode::kIo:
      return PP_ERR_IO;
    case ErrorCode::kTooFewPoints:
      return PP_ERR_TOO_FEW_POINTS;
    case ErrorCode::kInvalidK:
      return PP_ERR_INVALID_K;
    case ErrorCode::kNotFound:
      return PP_ERR_NOT_FOUND;
    case ErrorCode::kNoPartition:
    case ErrorCode::kConstructionFailed:
    case ErrorCode::kInfeasibleStep:
    case ErrorCode::kCrossingFamilyTooSmall:
      return PP_ERR_CONSTRUCTION_FAILED;
  }
  return PP_ERR_INTERNAL;
}

pp_status Fail(pp_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
pp_status Guard(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const Error& e) {
    return Fail(StatusOf(e.code()),
                std::string(planepack::ErrorCodeName(e.code())) + ": " +
                    e.what());
  } catch (const std::bad_alloc&) {
    return Fail(PP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(PP_ERR_INTERNAL, e.what());
  }
}

pp_status NullArgument(const char* name) {
  return Fail(PP_ERR_INVALID_ARGUMENT, std::string(name) + " is null");
}

pp_status Emit(std::shared_ptr<const planepack::PointSet> set,
               pp_pointset** out) {
  *out = new pp_pointset{std::move(set), {}};
  return PP_OK;
}

struct MethodName {
  pp_method method;
  const char* name;
};

constexpr MethodName kMethods[] = {
    {PP_METHOD_DOUBLE_STAR, "double-star"},
    {PP_METHOD_TWO_TREES, "two-trees"},
    {PP_METHOD_THREE_TREES, "three-trees"},
    {PP_METHOD_TWO_PATHS, "two-paths"},
    {PP_METHOD_WHEEL_PARTITION, "wheel-partition"},
    {PP_METHOD_WHEEL_PATHS, "wheel-paths"},
    {PP_METHOD_HIERARCHICAL, "hierarchical"},
};

planepack::Packing RunMethod(const std::shared_ptr<const planepack::PointSet>& s,
                             pp_method method, size_t k) {
  using namespace planepack;
  auto wheel_half = [&]() {
    if (!s->wheel_half()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "wheel methods need a wheel point set");
    }
    return *s->wheel_half();
  };
  switch (method) {
    case PP_METHOD_DOUBLE_STAR:
      return DoubleStarPack(s, CrossingFamilyGreedy(*s, 0));
    case PP_METHOD_TWO_TREES:
      return TwoTrees(s).packing;
    case PP_METHOD_THREE_TREES:
      return ThreeTrees(s).packing;
    case PP_METHOD_TWO_PATHS:
      return TwoPaths(s).packing;
    case PP_METHOD_WHEEL_PARTITION:
      return WheelPartition(wheel_half()).packing;
    case PP_METHOD_WHEEL_PATHS:
      return WheelZigzagPaths(wheel_half()).packing;
    case PP_METHOD_HIERARCHICAL:
      return HierarchicalPack(s, k).packing;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown method");
}

}  // namespace

extern "C" {

const char* pp_status_name(pp_status status) {
  switch (status) {
    case PP_OK:
      return "OK";
    case PP_ERR_INVALID_ARGUMENT:
      return "INVALID_ARGUMENT";
    case PP_ERR_FORMAT:
      return "FORMAT";
    case PP_ERR_GENERAL_POSITION:
      return "GENERAL_POSITION";
    case PP_ERR_DANGLING_INDEX:
      return "DANGLING_INDEX";
    case PP_ERR_DIGEST_MISMATCH:
      return "DIGEST_MISMATCH";
    case PP_ERR_IO:
      return "IO";
    case PP_ERR_TOO_FEW_POINTS:
      return "TOO_FEW_POINTS";
    case PP_ERR_INVALID_K:
      return "INVALID_K";
    case PP_ERR_BUDGET_EXCEEDED:
      return "BUDGET_EXCEEDED";
    case PP_ERR_CONSTRUCTION_FAILED:
      return "CONSTRUCTION_FAILED";
    case PP_ERR_NOT_FOUND:
      return "NOT_FOUND";
    case PP_ERR_INTERNAL:
      return "INTERNAL";
  }
  return "UNKNOWN";
}

const char* pp_last_error(void) { return last_error.c_str(); }

pp_status pp_pointset_random(size_t n, uint64_t seed, pp_pointset** out) {
  if (!out) return NullArgument("out");
  return Guard([&] { return Emit(planepack::GenerateRandom(n, seed), out); });
}

pp_status pp_pointset_convex(size_t n, pp_pointset** out) {
  if (!out) return NullArgument("out");
  return Guard([&] { return Emit(planepack::GenerateConvex(n), out); });
}

pp_status pp_pointset_wheel(int half, pp_pointset** out) {
  if (!out) return NullArgument("out");
  return Guard([&] { return Emit(planepack::MakeWheel(half), out); });
}

pp_status pp_pointset_from_coords(const int64_t* xy, size_t n,
                                  pp_pointset** out) {
  if (!out) return NullArgument("out");
  if (!xy && n > 0) return NullArgument("xy");
  return Guard([&] {
    std::vector<planepack::Point> pts;
    for (size_t i = 0; i < n; ++i) pts.push_back({xy[2 * i], xy[2 * i + 1]});
    return Emit(std::make_shared<const planepack::PointSet>(std::move(pts)),
                out);
  });
}

pp_status pp_pointset_read(const char* path, pp_pointset** out) {
  if (!path) return NullArgument("path");
  if (!out) return NullArgument("out");
  return Guard([&] { return Emit(planepack::ReadPointSetFile(path), out); });
}

pp_status pp_pointset_write(const pp_pointset* ps, const char* path) {
  if (!ps) return NullArgument("ps");
  if (!path) return NullArgument("path");
  return Guard([&] {
    planepack::WriteTextFile(path, planepack::PointSetToJson(*ps->set));
    return PP_OK;
  });
}

const char* pp_pointset_json(const pp_pointset* ps) {
  if (!ps) return "";
  if (ps->json.empty()) ps->json = planepack::PointSetToJson(*ps->set);
  return ps->json.c_str();
}

size_t pp_pointset_size(const pp_pointset* ps) {
  return ps ? ps->set->size() : 0;
}

pp_status pp_pointset_point(const pp_pointset* ps, size_t i, int64_t* x,
                            int64_t* y) {
  if (!ps) return NullArgument("ps");
  if (i >= ps->set->size()) {
    return Fail(PP_ERR_INVALID_ARGUMENT, "point index out of range");
  }
  const planepack::Point& p = (*ps->set)[static_cast<planepack::VertexId>(i)];
  if (x) *x = p.x;
  if (y) *y = p.y;
  return PP_OK;
}

int pp_pointset_wheel_half(const pp_pointset* ps) {
  return ps && ps->set->wheel_half() ? *ps->set->wheel_half() : 0;
}

void pp_pointset_free(pp_pointset* ps) { delete ps; }

pp_status pp_method_from_name(const char* name, pp_method* out) {
  if (!name) return NullArgument("name");
  if (!out) return NullArgument("out");
  for (const MethodName& m : kMethods) {
    if (std::strcmp(m.name, name) == 0) {
      *out = m.method;
      return PP_OK;
    }
  }
  return Fail(PP_ERR_INVALID_ARGUMENT,
              std::string("unknown method '") + name + "'");
}

const char* pp_method_name(pp_method method) {
  for (const MethodName& m : kMethods) {
    if (m.method == method) return m.name;
  }
  return "unknown";
}

pp_status pp_pack(const pp_pointset* ps, pp_method method, size_t k,
                  pp_packing** out) {
  if (!ps) return NullArgument("ps");
  if (!out) return NullArgument("out");
  return Guard([&] {
    planepack::PackingRecord record{RunMethod(ps->set, method, k),
                                    pp_method_name(method), {}, {}};
    if (method == PP_METHOD_HIERARCHICAL) record.k = k;
    *out = new pp_packing{std::move(record)};
    return PP_OK;
  });
}

void pp_packing_set_seed(pp_packing* p, uint64_t seed) {
  if (p) p->record.seed = seed;
}

pp_status pp_packing_read(const char* path, pp_packing** out) {
  if (!path) return NullArgument("path");
  if (!out) return NullArgument("out");
  return Guard([&] {
    *out = new pp_packing{planepack::ReadPackingFile(path)};
    return PP_OK;
  });
}

pp_status pp_packing_write(const pp_packing* p, const char* path,
                           const char* points_ref) {
  if (!p) return NullArgument("p");
  if (!path) return NullArgument("path");
  return Guard([&] {
    std::optional<std::string> ref;
    if (points_ref) ref = points_ref;
    planepack::WriteTextFile(path, planepack::PackingToJson(p->record, ref));
    return PP_OK;
  });
}

const char* pp_packing_method(const pp_packing* p) {
  return p ? p->record.method.c_str() : "";
}

size_t pp_packing_member_count(const pp_packing* p) {
  return p ? p->record.packing.size() : 0;
}

pp_status pp_packing_member(const pp_packing* p, size_t i, pp_kind* kind,
                            size_t* edge_count) {
  if (!p) return NullArgument("p");
  if (i >= p->record.packing.size()) {
    return Fail(PP_ERR_INVALID_ARGUMENT, "member index out of range");
  }
  const planepack::GraphStructure& g = p->record.packing.members()[i];
  if (kind) *kind = static_cast<pp_kind>(g.kind);
  if (edge_count) *edge_count = g.edges.size();
  return PP_OK;
}

pp_status pp_packing_member_edges(const pp_packing* p, size_t i,
                                  uint32_t* pairs, size_t capacity) {
  if (!p) return NullArgument("p");
  if (!pairs && capacity > 0) return NullArgument("pairs");
  if (i >= p->record.packing.size()) {
    return Fail(PP_ERR_INVALID_ARGUMENT, "member index out of range");
  }
  const auto& edges = p->record.packing.members()[i].edges;
  for (size_t j = 0; j < edges.size() && j < capacity; ++j) {
    pairs[2 * j] = edges[j].a;
    pairs[2 * j + 1] = edges[j].b;
  }
  return PP_OK;
}

pp_status pp_packing_pointset(const pp_packing* p, pp_pointset** out) {
  if (!p) return NullArgument("p");
  if (!out) return NullArgument("out");
  return Guard([&] { return Emit(p->record.packing.ground_ptr(), out); });
}

pp_status pp_packing_render_svg(const pp_packing* p, const char* path) {
  if (!p) return NullArgument("p");
  if (!path) return NullArgument("path");
  return Guard([&] {
    planepack::WriteTextFile(
        path, planepack::RenderSvg(p->record.packing, p->record.method));
    return PP_OK;
  });
}

void pp_packing_free(pp_packing* p) { delete p; }

pp_status pp_verify(const pp_packing* p, int require_partition,
                    pp_report** out) {
  if (!p) return NullArgument("p");
  if (!out) return NullArgument("out");
  return Guard([&] {
    planepack::VerificationReport report =
        planepack::VerifyPacking(p->record.packing, require_partition != 0);
    std::string text = report.Format();
    *out = new pp_report{std::move(report), std::move(text)};
    return PP_OK;
  });
}

int pp_report_ok(const pp_report* r) {
  return r && r->report.AllRequiredOk() ? 1 : 0;
}

const char* pp_report_text(const pp_report* r) {
  return r ? r->text.c_str() : "";
}

void pp_report_free(pp_report* r) { delete r; }

pp_status pp_oracle(const pp_pointset* ps, pp_oracle_kind kind,
                    uint64_t budget, pp_oracle_result* out) {
  if (!ps) return NullArgument("ps");
  if (!out) return NullArgument("out");
  return Guard([&] {
    switch (kind) {
      case PP_ORACLE_MAX_TREES:
      case PP_ORACLE_MAX_PATHS: {
        const planepack::OracleOutcome o =
            kind == PP_ORACLE_MAX_TREES
                ? planepack::MaxTreePackingExact(ps->set, budget)
                : planepack::MaxPathPackingExact(ps->set, budget);
        *out = {o.maximum, o.complete ? 1 : 0, o.nodes};
        break;
      }
      case PP_ORACLE_MAX_CROSSING_FAMILY: {
        const planepack::ExactFamilyOutcome o =
            planepack::MaxCrossingFamilyExact(*ps->set, budget);
        *out = {o.family.size(), o.complete ? 1 : 0, o.nodes};
        break;
      }
      default:
        return Fail(PP_ERR_INVALID_ARGUMENT, "unknown oracle kind");
    }
    if (!out->complete) {
      return Fail(PP_ERR_BUDGET_EXCEEDED,
                  "node budget of " + std::to_string(budget) +
                      " exhausted; best value is a lower bound");
    }
    return PP_OK;
  });
}

pp_status pp_wheel_certify(int half, uint64_t budget,
                           pp_wheel_certificate* out) {
  if (!out) return NullArgument("out");
  return Guard([&] {
    const planepack::WheelCertificate c =
        planepack::WheelPartitionPathImpossibility(half, budget);
    *out = {c.half,       c.plane_trees,       c.partitions,
            c.max_path_members, c.complete ? 1 : 0, c.nodes};
    if (!c.complete) {
      return Fail(PP_ERR_BUDGET_EXCEEDED,
                  "node budget of " + std::to_string(budget) +
                      " exhausted; counts are partial");
    }
    return PP_OK;
  });
}

}  // extern "C"
