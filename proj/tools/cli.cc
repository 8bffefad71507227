// Copyright 2026 The Authors.
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

#include "cli.h"

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rainbow/conjecture_lab.h"
#include "rainbow/errors.h"
#include "rainbow/io.h"
#include "rainbow/network_paths.h"
#include "rainbow/rainbow_matching.h"
#include "rainbow/span_cycles.h"
#include "rainbow/sweep.h"
#include "rainbow/transversal.h"

#ifndef RAINBOW_VERSION
#define RAINBOW_VERSION "0.0.0"
#endif

namespace rainbow::cli {
namespace {

using nlohmann::json;

struct Options {
  std::string command;
  std::string input;
  std::uint64_t seed = 1;
  std::int64_t cap = 1000;
  bool cap_given = false;
  bool pretty = false;
  std::vector<std::string> params;
  std::optional<std::int64_t> bound;
  bool weights = false;
  int p = 0;
  int n = 0;
  std::optional<int> target;
  int a = 0;
  int b = 0;
  int c = 0;
  std::vector<int> sizes;
  std::string graph_class = "bipartite";
  std::string mode = "random";
  std::string conjecture;
  std::string method = "auto";
  int workers = 1;
  double time_cap = 0;
};

struct Outcome {
  int code = kOk;
  json body;
};

template <typename T>
const T& Require(const std::optional<T>& field, const char* name) {
  if (!field) throw InputError(std::string("instance is missing field '") + name + "'");
  return *field;
}

int GroundOf(const Instance& instance) {
  if (instance.ground_size) return *instance.ground_size;
  int size = 0;
  for (const auto& set : Require(instance.colors, "colors")) {
    for (int x : set) size = std::max(size, x + 1);
  }
  return size;
}

json Assignment(const ChoiceFunction& choice) { return ToJson(choice); }

Outcome FromRainbow(const RainbowOutcome& outcome) {
  if (const auto* choice = std::get_if<ChoiceFunction>(&outcome)) {
    return {kOk, {{"status", "rainbow"}, {"assignment", Assignment(*choice)}}};
  }
  const auto& violator = std::get<Violator>(outcome);
  return {kNoWitness, {{"status", "violator"}, {"colors", violator.colors}}};
}

EdgeFamily EdgeFamilyOf(const Instance& instance) {
  return EdgeFamily(Require(instance.graph, "graph"), Require(instance.colors, "colors"));
}

GraphClass ParseClass(const std::string& name) {
  if (name == "bipartite") return GraphClass::kBipartite;
  if (name == "general") return GraphClass::kGeneral;
  throw InputError("unknown graph class '" + name + "'");
}

Outcome Hall(const Options&, const Instance& instance) {
  const ColoredFamily family(GroundOf(instance), Require(instance.colors, "colors"));
  return FromRainbow(HallRainbow(family));
}

Outcome Rado(const Options&, const Instance& instance) {
  const Matroid& matroid = Require(instance.matroid, "matroid");
  const int ground = instance.ground_size.value_or(matroid.ground_size());
  if (ground != matroid.ground_size()) {
    throw InputError("ground_size disagrees with the matroid ground set");
  }
  const ColoredFamily family(ground, Require(instance.colors, "colors"));
  return FromRainbow(RadoRainbow(family, matroid));
}

Outcome RainbowMatchingCommand(const Options& options, const Instance& instance) {
  const EdgeFamily family = EdgeFamilyOf(instance);
  const RainbowMatching best = MaxRainbowMatching(family, options.target);
  json body = ToJson(best);
  body["status"] = "rainbow";
  if (options.target && best.size() < *options.target) {
    body["status"] = "short";
    return {kNoWitness, body};
  }
  return {kOk, body};
}

Outcome ArrowCheck(const Options& options, const Instance& instance) {
  const EdgeFamily family = EdgeFamilyOf(instance);
  json body;
  bool holds = false;
  int wanted = 0;
  if (!options.sizes.empty()) {
    SizeSequence sequence{options.sizes, options.c};
    holds = CheckSequenceInstance(sequence, family);
    wanted = options.c;
    body["sizes"] = options.sizes;
  } else {
    ArrowStatement statement{options.a, options.b, options.c,
                             ParseClass(options.graph_class)};
    holds = CheckArrowInstance(statement, family);
    wanted = options.c;
    body["statement"] = {options.a, options.b, options.c};
    body["class"] = options.graph_class;
  }
  body["target"] = wanted;
  const RainbowMatching best = MaxRainbowMatching(family, wanted);
  body["witness"] = ToJson(best);
  body["status"] = holds ? "holds" : "counterexample";
  return {holds ? kOk : kCounterexample, body};
}

Outcome RainbowPathCommand(const Options& options, const Instance& instance) {
  const Network& network = Require(instance.network, "network");
  const auto& paths = Require(instance.paths, "paths");
  std::vector<std::int64_t> values(network.num_arcs(), 0);
  if (options.weights) values = Require(instance.weights, "weights");
  const std::int64_t bound = options.bound.value_or(options.weights ? -1 : 0);
  if (bound < 0) throw InputError("--weights requires --bound");
  const RainbowPath path =
      RainbowPathWeighted(network, WeightMap(values), paths, bound, {});
  json body = ToJson(path);
  body["status"] = "rainbow";
  body["bound"] = bound;
  return {kOk, body};
}

Outcome DisjointPathsCommand(const Options& options, const Instance& instance) {
  const DisjointPathsResult result = RainbowDisjointPaths(
      Require(instance.network, "network"), Require(instance.colors, "colors"),
      options.p);
  return {kOk,
          {{"status", "rainbow"},
           {"p", options.p},
           {"arcs", result.arcs},
           {"assignment", Assignment(result.choice)},
           {"packing", ToJson(result.packing)}}};
}

Outcome ScrambledPathCommand(const Options& options, const Instance& instance) {
  const ScrambledPathResult result = ScrambledRainbowPath(
      Require(instance.network, "network"), Require(instance.paths, "paths"),
      Require(instance.scrambling, "scrambling"), options.n);
  json body = ToJson(result.path);
  body["status"] = "rainbow";
  body["towers"] = ToJson(result.towers);
  body["enforcer"] = ToJson(result.enforcer);
  body["union_bound"] = result.union_bound;
  if (result.bridge_vertex) body["bridge_vertex"] = *result.bridge_vertex;
  if (result.enforces_path) body["enforces_path"] = *result.enforces_path;
  return {kOk, body};
}

Outcome OddCycleCommand(const Options&, const Instance& instance) {
  const RainbowCycle cycle = RainbowOddCycle(Require(instance.graph, "graph"),
                                             Require(instance.families, "families"));
  json body = ToJson(cycle);
  body["status"] = "rainbow";
  return {kOk, body};
}

Outcome SpanRainbowCommand(const Options&, const Instance& instance) {
  const Matroid& matroid = Require(instance.matroid, "matroid");
  const std::vector<int> target = instance.target.value_or(std::vector<int>{});
  for (int t : target) {
    if (t < 0 || t >= matroid.ground_size()) {
      throw InputError("/target: element " + std::to_string(t) + " out of range");
    }
  }
  const SpanningResult result = RainbowSpanningSet(
      matroid, Subset(std::span<const int>(target)),
      Require(instance.families, "families"));
  json body = {{"status", "rainbow"}, {"assignment", Assignment(result.choice)}};
  if (result.deficient) body["deficient"] = *result.deficient;
  return {kOk, body};
}

Outcome LatinCommand(const Options&, const Instance& instance) {
  const LatinSquare& square = Require(instance.latin, "latin");
  const Transversal best = MaxLatinTransversal(square);
  json body = ToJson(best);
  body["order"] = square.order();
  body["status"] = best.size() == square.order() ? "full" : "partial";
  return {kOk, body};
}

SweepSpec MakeSweepSpec(const Options& options) {
  SweepSpec spec;
  spec.conjecture = options.conjecture;
  spec.mode = ParseSweepMode(options.mode);
  spec.seed = options.seed;
  spec.instance_cap = options.cap;
  spec.time_cap_seconds = options.time_cap;
  spec.workers = options.workers;
  for (const std::string& param : options.params) {
    const auto eq = param.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw InputError("parameter '" + param + "' must look like key=value");
    }
    spec.params[param.substr(0, eq)] = param.substr(eq + 1);
  }
  return spec;
}

json Header(const Options& options) {
  return {{"tool", "rainbow"},
          {"version", RAINBOW_VERSION},
          {"seed", options.seed},
          {"command", options.command}};
}

std::string Dump(const json& value, bool pretty) {
  return pretty ? value.dump(2) : value.dump();
}

int RunSweepCommand(const Options& options, std::ostream& out) {
  const SweepSpec spec = MakeSweepSpec(options);
  json header = Header(options);
  header["conjecture"] = spec.conjecture;
  header["mode"] = SweepModeName(spec.mode);
  header["params"] = spec.params;
  header["cap"] = spec.instance_cap;
  out << header.dump() << '\n';
  const SweepReport report = RunConjectureSweep(
      spec, [&](const SweepRecord& record) { out << ToJson(record).dump() << '\n'; });
  json summary = ToJson(report);
  summary["summary"] = true;
  out << summary.dump() << '\n';
  switch (report.verdict) {
    case Verdict::kVerified:
      return kOk;
    case Verdict::kCounterexample:
      return kCounterexample;
    case Verdict::kCapExhausted:
      return kCapExhausted;
  }
  return kOk;
}

std::string ReadInput(const Options& options, std::istream& in) {
  if (options.input.empty() || options.input == "-") {
    return std::string(std::istreambuf_iterator<char>(in), {});
  }
  std::ifstream file(options.input);
  if (!file) throw InputError("cannot open input file '" + options.input + "'");
  return std::string(std::istreambuf_iterator<char>(file), {});
}

using Handler = std::function<Outcome(const Options&, const Instance&)>;

int Dispatch(const Options& options, const Handler& handler, std::istream& in,
             std::ostream& out) {
  if (options.command == "sweep") return RunSweepCommand(options, out);
  const std::string text = ReadInput(options, in);
  const Instance instance = ParseInstance(std::string_view(text));
  Outcome outcome = handler(options, instance);
  json report = Header(options);
  report.update(outcome.body);
  out << Dump(report, options.pretty) << '\n';
  return outcome.code;
}

void ReportError(const Options& options, std::ostream& out, std::ostream& err,
                 const char* status, const std::string& message,
                 const std::vector<int>* culprit = nullptr) {
  json report = Header(options);
  report["status"] = status;
  report["message"] = message;
  if (culprit && !culprit->empty()) report["colors"] = *culprit;
  out << Dump(report, options.pretty) << '\n';
  err << "rainbow: " << status << ": " << message << '\n';
}

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options options;
  CLI::App app{"Rainbow sets in families, graphs, matroids and networks", "rainbow"};
  app.set_version_flag("--version", std::string(RAINBOW_VERSION));
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub, bool reads_input) {
    if (reads_input) {
      sub->add_option("--input,-i", options.input, "Instance JSON file (default: stdin)");
    }
    sub->add_option("--seed", options.seed, "64-bit seed echoed in the report");
    sub->add_flag("--pretty", options.pretty, "Indented output");
    sub->add_flag("--json", [&](std::int64_t) { options.pretty = false; },
                  "Compact machine output (default)");
  };

  std::map<std::string, Handler> handlers;
  auto add = [&](const std::string& name, const std::string& help, Handler handler) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub, name != "sweep");
    handlers[name] = std::move(handler);
    return sub;
  };

  add("hall", "Rainbow choice function or Hall violator", Hall);
  add("rado", "Independent rainbow set or Rado violator", Rado);
  add("rainbow-matching", "Maximum rainbow matching", RainbowMatchingCommand)
      ->add_option("--target", options.target, "Stop once this size is reached");
  CLI::App* arrow = add("arrow-check", "Check one instance of an arrow statement",
                        ArrowCheck);
  arrow->add_option("--a", options.a, "Number of matchings");
  arrow->add_option("--b", options.b, "Size of each matching");
  arrow->add_option("--c", options.c, "Required rainbow matching size");
  arrow->add_option("--class", options.graph_class, "bipartite or general");
  arrow->add_option("--sizes", options.sizes, "Size sequence instead of (a, b)")
      ->delimiter(',');
  CLI::App* path = add("rainbow-path", "Rainbow s-t path of bounded weight",
                       RainbowPathCommand);
  path->add_flag("--weights", options.weights, "Use the instance weights");
  path->add_option("--bound", options.bound, "Weight bound k");
  add("rainbow-paths-disjoint", "Rainbow set containing p disjoint paths",
      DisjointPathsCommand)
      ->add_option("--p", options.p, "Number of paths")
      ->required();
  add("scrambled-path", "Rainbow path from a scrambling of paths", ScrambledPathCommand)
      ->add_option("--n", options.n, "Scrambling parameter")
      ->required();
  add("odd-cycle", "Rainbow odd cycle", OddCycleCommand);
  add("span-rainbow", "Rainbow set spanning a target", SpanRainbowCommand);
  add("latin", "Maximum partial transversal of a Latin square", LatinCommand);
  CLI::App* sweep = add("sweep", "Seeded verification or counterexample sweep", {});
  sweep->add_option("--conjecture", options.conjecture, "Conjecture tag")->required();
  sweep->add_option("--param,--params", options.params, "key=value parameter");
  sweep->add_option("--mode", options.mode, "random, exhaustive or cycles");
  sweep->add_option("--cap", options.cap, "Instance cap");
  sweep->add_option("--time-cap", options.time_cap, "Seconds before stopping");
  sweep->add_option("--workers", options.workers, "Worker threads");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  for (CLI::App* sub : app.get_subcommands()) options.command = sub->get_name();

  try {
    return Dispatch(options, handlers[options.command], in, out);
  } catch (const InputError& e) {
    ReportError(options, out, err, "input-error", e.what());
    return kInputError;
  } catch (const HypothesisError& e) {
    ReportError(options, out, err, "hypothesis-violation", e.what(), &e.culprit());
    return kNoWitness;
  } catch (const CapExceeded& e) {
    ReportError(options, out, err, "cap-exhausted", e.what());
    return kCapExhausted;
  } catch (const TheoremViolation& e) {
    ReportError(options, out, err, "theorem-violation", e.what());
    return kTheoremViolation;
  }
}

}  // namespace rainbow::cli
