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

// planepack command-line front end. Links only the C interface.

#include <cstdint>
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "planepack/planepack.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitConstruction = 4;

int ExitCodeFor(pp_status status) {
  switch (status) {
    case PP_OK:
      return kExitOk;
    case PP_ERR_BUDGET_EXCEEDED:
      return kExitBudget;
    case PP_ERR_CONSTRUCTION_FAILED:
    case PP_ERR_INTERNAL:
      return kExitConstruction;
    default:
      return kExitUsage;
  }
}

int Report(pp_status status) {
  std::fprintf(stderr, "error [%s]: %s\n", pp_status_name(status),
               pp_last_error());
  return ExitCodeFor(status);
}

struct Options {
  std::string kind;
  std::string method;
  std::string input;
  std::string output;
  std::string points_ref;
  std::size_t n = 0;
  std::size_t k = 1;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  bool partition = false;
};

int Generate(const Options& o, bool has_seed) {
  pp_pointset* ps = nullptr;
  pp_status st;
  if (o.kind == "random") {
    if (!has_seed) {
      std::fprintf(stderr, "error: --seed is required for random points\n");
      return kExitUsage;
    }
    st = pp_pointset_random(o.n, o.seed, &ps);
  } else if (o.kind == "convex") {
    st = pp_pointset_convex(o.n, &ps);
  } else {
    st = pp_pointset_wheel(static_cast<int>(o.n), &ps);
  }
  if (st != PP_OK) return Report(st);
  st = pp_pointset_write(ps, o.output.c_str());
  pp_pointset_free(ps);
  return st == PP_OK ? kExitOk : Report(st);
}

int Pack(const Options& o, bool has_seed) {
  pp_method method;
  pp_status st = pp_method_from_name(o.method.c_str(), &method);
  if (st != PP_OK) return Report(st);
  pp_pointset* ps = nullptr;
  st = pp_pointset_read(o.input.c_str(), &ps);
  if (st != PP_OK) return Report(st);
  pp_packing* packing = nullptr;
  st = pp_pack(ps, method, o.k, &packing);
  if (st != PP_OK) {
    const int code = Report(st);
    if (code == kExitConstruction) {
      std::fprintf(stderr, "instance (method %s):\n%s", o.method.c_str(),
                   pp_pointset_json(ps));
    }
    pp_pointset_free(ps);
    return code;
  }
  pp_pointset_free(ps);
  if (has_seed) pp_packing_set_seed(packing, o.seed);
  st = pp_packing_write(packing, o.output.c_str(),
                        o.points_ref.empty() ? nullptr : o.points_ref.c_str());
  pp_packing_free(packing);
  return st == PP_OK ? kExitOk : Report(st);
}

int Verify(const Options& o) {
  pp_packing* packing = nullptr;
  pp_status st = pp_packing_read(o.input.c_str(), &packing);
  if (st != PP_OK) return Report(st);
  pp_report* report = nullptr;
  st = pp_verify(packing, o.partition ? 1 : 0, &report);
  pp_packing_free(packing);
  if (st != PP_OK) return Report(st);
  std::fputs(pp_report_text(report), stdout);
  const bool ok = pp_report_ok(report) != 0;
  pp_report_free(report);
  return ok ? kExitOk : kExitVerifyFailed;
}

int Oracle(const Options& o) {
  pp_oracle_kind kind = PP_ORACLE_MAX_TREES;
  if (o.kind == "max-paths") kind = PP_ORACLE_MAX_PATHS;
  if (o.kind == "max-crossing-family") kind = PP_ORACLE_MAX_CROSSING_FAMILY;
  pp_pointset* ps = nullptr;
  pp_status st = pp_pointset_read(o.input.c_str(), &ps);
  if (st != PP_OK) return Report(st);
  pp_oracle_result r{};
  st = pp_oracle(ps, kind, o.budget, &r);
  pp_pointset_free(ps);
  if (st != PP_OK && st != PP_ERR_BUDGET_EXCEEDED) return Report(st);
  std::printf("%s: %zu%s\nnodes: %llu\n", o.kind.c_str(), r.maximum,
              r.complete ? "" : " (lower bound, budget exhausted)",
              static_cast<unsigned long long>(r.nodes));
  return st == PP_OK ? kExitOk : Report(st);
}

int WheelCertify(const Options& o) {
  pp_wheel_certificate c{};
  const pp_status st = pp_wheel_certify(static_cast<int>(o.n), o.budget, &c);
  if (st != PP_OK && st != PP_ERR_BUDGET_EXCEEDED) return Report(st);
  std::printf(
      "wheel n=%d (%d points)\nplane spanning trees: %zu\n"
      "partitions into %d plane spanning trees: %llu%s\n"
      "maximum path members in a partition: %zu\nnodes: %llu\n",
      c.half, 2 * c.half, c.plane_trees, c.half,
      static_cast<unsigned long long>(c.partitions),
      c.complete ? "" : " (partial)", c.max_path_members,
      static_cast<unsigned long long>(c.nodes));
  return st == PP_OK ? kExitOk : Report(st);
}

int Render(const Options& o) {
  pp_packing* packing = nullptr;
  pp_status st = pp_packing_read(o.input.c_str(), &packing);
  if (st != PP_OK) return Report(st);
  st = pp_packing_render_svg(packing, o.output.c_str());
  pp_packing_free(packing);
  return st == PP_OK ? kExitOk : Report(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge-disjoint plane spanning trees and paths on point sets"};
  app.require_subcommand(1);
  Options o;

  CLI::App* generate = app.add_subcommand("generate", "Write a point set");
  generate->add_option("--kind", o.kind)
      ->required()
      ->check(CLI::IsMember({"random", "convex", "wheel"}));
  generate->add_option("--n", o.n, "Points; half-size for wheels")->required();
  CLI::Option* generate_seed = generate->add_option("--seed", o.seed);
  generate->add_option("-o,--output", o.output)->required();

  CLI::App* pack = app.add_subcommand("pack", "Build a packing");
  pack->add_option("--method", o.method)
      ->required()
      ->check(CLI::IsMember({"double-star", "two-trees", "three-trees",
                             "two-paths", "wheel-partition", "wheel-paths",
                             "hierarchical"}));
  pack->add_option("--k", o.k, "Trees for the hierarchical method")
      ->capture_default_str();
  pack->add_option("-i,--input", o.input)->required();
  pack->add_option("-o,--output", o.output)->required();
  CLI::Option* pack_seed =
      pack->add_option("--seed", o.seed, "Seed recorded as provenance");
  pack->add_option("--points-ref", o.points_ref,
                   "Reference this point set path instead of embedding");

  CLI::App* verify = app.add_subcommand("verify", "Check a packing");
  verify->add_flag("--partition", o.partition,
                   "Also require every edge to be covered");
  verify->add_option("-i,--input", o.input)->required();

  CLI::App* oracle = app.add_subcommand("oracle", "Exhaustive maxima");
  oracle->add_option("--kind", o.kind)
      ->required()
      ->check(CLI::IsMember({"max-trees", "max-paths", "max-crossing-family"}));
  o.budget = 10'000'000;
  oracle->add_option("--budget", o.budget, "Search node budget")
      ->capture_default_str();
  oracle->add_option("-i,--input", o.input)->required();

  CLI::App* certify = app.add_subcommand(
      "wheel-certify", "Count path members over all wheel partitions");
  certify->add_option("--n", o.n, "Wheel half-size")->required();
  certify->add_option("--budget", o.budget, "Search node budget")
      ->capture_default_str();

  CLI::App* render = app.add_subcommand("render", "Draw a packing as SVG");
  render->add_option("-i,--input", o.input)->required();
  render->add_option("-o,--output", o.output)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (generate->parsed()) return Generate(o, generate_seed->count() > 0);
  if (pack->parsed()) return Pack(o, pack_seed->count() > 0);
  if (verify->parsed()) return Verify(o);
  if (oracle->parsed()) return Oracle(o);
  if (certify->parsed()) return WheelCertify(o);
  if (render->parsed()) return Render(o);
  return kExitUsage;
}
