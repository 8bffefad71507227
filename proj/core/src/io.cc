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

#include "rainbow/io.h"

#include <string>

#include "rainbow/errors.h"

namespace rainbow {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& path, const std::string& message) {
  throw InputError(path + ": " + message);
}

const json& Field(const json& node, const char* key, const std::string& path) {
  auto it = node.find(key);
  if (it == node.end()) Fail(path, std::string("missing field '") + key + "'");
  return *it;
}

long long Integer(const json& node, const std::string& path) {
  if (!node.is_number_integer()) Fail(path, "expected an integer");
  return node.get<long long>();
}

int Int(const json& node, const std::string& path) {
  const long long value = Integer(node, path);
  if (value < -(1LL << 31) || value >= (1LL << 31)) Fail(path, "integer out of range");
  return static_cast<int>(value);
}

int NonNegative(const json& node, const std::string& path) {
  const int value = Int(node, path);
  if (value < 0) Fail(path, "expected a nonnegative integer");
  return value;
}

const json& Array(const json& node, const std::string& path) {
  if (!node.is_array()) Fail(path, "expected an array");
  return node;
}

std::vector<int> IntList(const json& node, const std::string& path) {
  std::vector<int> out;
  const json& array = Array(node, path);
  for (std::size_t i = 0; i < array.size(); ++i) {
    out.push_back(Int(array[i], path + "/" + std::to_string(i)));
  }
  return out;
}

std::vector<std::vector<int>> IntLists(const json& node, const std::string& path) {
  std::vector<std::vector<int>> out;
  const json& array = Array(node, path);
  for (std::size_t i = 0; i < array.size(); ++i) {
    out.push_back(IntList(array[i], path + "/" + std::to_string(i)));
  }
  return out;
}

template <typename T>
std::vector<T> Pairs(const json& node, const std::string& path) {
  std::vector<T> out;
  const json& array = Array(node, path);
  for (std::size_t i = 0; i < array.size(); ++i) {
    const std::string at = path + "/" + std::to_string(i);
    const json& pair = Array(array[i], at);
    if (pair.size() != 2) Fail(at, "expected a pair of vertices");
    out.push_back(T{Int(pair[0], at + "/0"), Int(pair[1], at + "/1")});
  }
  return out;
}

template <typename F>
auto Wrap(const std::string& path, F&& build) {
  try {
    return build();
  } catch (const InputError& e) {
    Fail(path, e.what());
  }
}

Graph ParseGraph(const json& node, const std::string& path) {
  if (!node.is_object()) Fail(path, "expected an object");
  const int n = NonNegative(Field(node, "n", path), path + "/n");
  std::vector<Edge> edges = Pairs<Edge>(Field(node, "edges", path), path + "/edges");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string at = path + "/edges/" + std::to_string(i);
    if (edges[i].u < 0 || edges[i].u >= n || edges[i].v < 0 || edges[i].v >= n) {
      Fail(at, "endpoint out of range");
    }
    if (edges[i].u == edges[i].v) Fail(at, "self-loop");
  }
  if (node.contains("sides")) {
    std::vector<int> sides = IntList(node["sides"], path + "/sides");
    return Wrap(path, [&] { return Graph(n, std::move(edges), std::move(sides)); });
  }
  return Wrap(path, [&] { return Graph(n, std::move(edges)); });
}

Network ParseNetwork(const json& node, const std::string& path) {
  if (!node.is_object()) Fail(path, "expected an object");
  const int n = NonNegative(Field(node, "n", path), path + "/n");
  std::vector<Arc> arcs = Pairs<Arc>(Field(node, "edges", path), path + "/edges");
  std::vector<int> sources = IntList(Field(node, "sources", path), path + "/sources");
  std::vector<int> targets = IntList(Field(node, "targets", path), path + "/targets");
  return Wrap(path, [&] {
    return Network(n, std::move(arcs), std::move(sources), std::move(targets));
  });
}

}  // namespace

Matroid ParseMatroid(const json& node, std::optional<int> ground_size,
                     const std::string& path) {
  if (!node.is_object()) Fail(path, "expected an object");
  const json& kind_node = Field(node, "kind", path);
  if (!kind_node.is_string()) Fail(path + "/kind", "expected a string");
  const std::string kind = kind_node.get<std::string>();
  auto ground = [&]() -> int {
    if (node.contains("ground_size")) {
      return NonNegative(node["ground_size"], path + "/ground_size");
    }
    if (!ground_size) Fail(path, "matroid kind '" + kind + "' needs a ground_size");
    return *ground_size;
  };
  if (kind == "partition") {
    auto parts = IntLists(Field(node, "parts", path), path + "/parts");
    auto caps = node.contains("caps") ? IntList(node["caps"], path + "/caps")
                                      : std::vector<int>(parts.size(), 1);
    const int size = ground();
    return Wrap(path, [&] {
      return Matroid::Partition(size, std::move(parts), std::move(caps));
    });
  }
  if (kind == "uniform") {
    const int k = NonNegative(Field(node, "k", path), path + "/k");
    const int size = ground();
    return Wrap(path, [&] { return Matroid::Uniform(size, k); });
  }
  if (kind == "free") {
    const int size = ground();
    return Wrap(path, [&] { return Matroid::Free(size); });
  }
  if (kind == "graphic") {
    Graph graph = ParseGraph(Field(node, "graph", path), path + "/graph");
    return Matroid::Graphic(std::move(graph));
  }
  if (kind == "binary") {
    auto rows = IntLists(Field(node, "matrix", path), path + "/matrix");
    return Wrap(path, [&] { return Matroid::Binary(BinaryMatrix::FromRows(rows)); });
  }
  if (kind == "truncation") {
    const Matroid base = ParseMatroid(Field(node, "base", path), ground_size,
                                      path + "/base");
    const int k = NonNegative(Field(node, "k", path), path + "/k");
    return Matroid::Truncate(base, k);
  }
  if (kind == "direct-sum") {
    const Matroid first = ParseMatroid(Field(node, "first", path), std::nullopt,
                                       path + "/first");
    const Matroid second = ParseMatroid(Field(node, "second", path), std::nullopt,
                                        path + "/second");
    return Wrap(path, [&] { return Matroid::DirectSum(first, second); });
  }
  Fail(path + "/kind", "unknown matroid kind '" + kind + "'");
}

Instance ParseInstance(std::string_view text) {
  json document;
  try {
    document = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  return ParseInstance(document);
}

Instance ParseInstance(const json& document) {
  if (!document.is_object()) Fail("", "expected a JSON object");
  Instance instance;
  if (document.contains("ground_size")) {
    instance.ground_size = NonNegative(document["ground_size"], "/ground_size");
  }
  if (document.contains("colors")) {
    instance.colors = IntLists(document["colors"], "/colors");
  }
  if (document.contains("graph")) {
    instance.graph = ParseGraph(document["graph"], "/graph");
  }
  if (document.contains("network")) {
    instance.network = ParseNetwork(document["network"], "/network");
  }
  if (document.contains("weights")) {
    const json& array = Array(document["weights"], "/weights");
    std::vector<std::int64_t> weights;
    for (std::size_t i = 0; i < array.size(); ++i) {
      const std::string at = "/weights/" + std::to_string(i);
      const long long w = Integer(array[i], at);
      if (w < 0) Fail(at, "weights must be nonnegative");
      weights.push_back(w);
    }
    instance.weights = std::move(weights);
  }
  if (document.contains("latin")) {
    auto rows = IntLists(document["latin"], "/latin");
    instance.latin = Wrap("/latin", [&] { return LatinSquare(std::move(rows)); });
  }
  if (document.contains("matroid")) {
    instance.matroid = ParseMatroid(document["matroid"], instance.ground_size);
  }
  if (document.contains("paths")) instance.paths = IntLists(document["paths"], "/paths");
  if (document.contains("scrambling")) {
    instance.scrambling = IntLists(document["scrambling"], "/scrambling");
  }
  if (document.contains("families")) {
    instance.families = IntLists(document["families"], "/families");
  }
  if (document.contains("target")) instance.target = IntList(document["target"], "/target");

  if (instance.colors && instance.ground_size) {
    const ColoredFamily check = Wrap("/colors", [&] {
      return ColoredFamily(*instance.ground_size, *instance.colors);
    });
    (void)check;
  }
  if (instance.weights) {
    const int expected = instance.network ? instance.network->num_arcs()
                         : instance.graph ? instance.graph->num_edges()
                                          : static_cast<int>(instance.weights->size());
    if (static_cast<int>(instance.weights->size()) != expected) {
      Fail("/weights", "expected " + std::to_string(expected) +
                           " entries, one per edge");
    }
  }
  return instance;
}

json ToJson(const Graph& graph) {
  json edges = json::array();
  for (const Edge& e : graph.edges()) edges.push_back({e.u, e.v});
  json out = {{"n", graph.num_vertices()}, {"edges", edges}};
  if (graph.bipartition()) out["sides"] = *graph.bipartition();
  return out;
}

json ToJson(const Network& network) {
  json edges = json::array();
  for (const Arc& a : network.arcs()) edges.push_back({a.tail, a.head});
  return {{"n", network.num_vertices()},
          {"sources", network.sources()},
          {"targets", network.targets()},
          {"edges", edges}};
}

json ToJson(const LatinSquare& square) { return square.rows(); }

json ToJson(const Transversal& transversal) {
  json cells = json::array();
  for (const Cell& c : transversal.cells) cells.push_back({c.row, c.col});
  return {{"size", transversal.size()}, {"cells", cells}};
}

json ToJson(const Matroid& matroid) {
  json out = {{"kind", std::string(matroid.kind())}};
  std::visit(
      [&](const auto& d) {
        using D = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<D, PartitionDescriptor>) {
          out["ground_size"] = matroid.ground_size();
          out["parts"] = d.parts;
          out["caps"] = d.caps;
        } else if constexpr (std::is_same_v<D, UniformDescriptor>) {
          out["ground_size"] = matroid.ground_size();
          out["k"] = d.k;
        } else if constexpr (std::is_same_v<D, GraphicDescriptor>) {
          out["graph"] = ToJson(d.graph);
        } else if constexpr (std::is_same_v<D, BinaryDescriptor>) {
          out["matrix"] = d.matrix.ToRows();
        } else if constexpr (std::is_same_v<D, TruncationDescriptor>) {
          out["k"] = d.k;
          out["base"] = ToJson(*d.base);
        } else if constexpr (std::is_same_v<D, DirectSumDescriptor>) {
          out["first"] = ToJson(*d.first);
          out["second"] = ToJson(*d.second);
        } else {
          out["base"] = ToJson(*d.base);
          out["element_of"] = d.element_of;
        }
      },
      matroid.descriptor());
  return out;
}

json ToJson(const Subset& subset) { return subset.ToVector(); }

json ToJson(const Cover& cover) {
  json parts = json::array();
  for (const Subset& part : cover.parts) parts.push_back(ToJson(part));
  return {{"size", cover.size}, {"parts", parts}};
}

json ToJson(const ChoiceFunction& choice) {
  json out = json::array();
  for (const auto& [color, element] : choice.assignments()) {
    out.push_back({{"color", color}, {"element", element}});
  }
  return out;
}

json ToJson(const Matching& matching) { return matching.edges; }

json ToJson(const EdgeFamily& family) {
  return {{"graph", ToJson(family.graph())}, {"colors", family.colors()}};
}

json ToJson(const RainbowMatching& matching) {
  return {{"size", matching.size()},
          {"edges", matching.matching.edges},
          {"assignment", ToJson(matching.choice)}};
}

json ToJson(const RepeatsWitness& witness) {
  return {{"edges", witness.matching.edges},
          {"representation", ToJson(witness.representation)},
          {"constructive", witness.constructive}};
}

json ToJson(const RainbowPath& path) {
  return {{"arcs", path.arcs}, {"colors", path.colors}, {"weight", path.weight}};
}

json ToJson(const PathPacking& packing) {
  return {{"size", packing.size}, {"paths", packing.paths}};
}

json ToJson(const RainbowCycle& cycle) {
  return {{"length", cycle.edges.size()}, {"edges", cycle.edges}, {"colors", cycle.colors}};
}

json ToJson(const TowerPair& towers) {
  return {{"source", towers.source.order}, {"target", towers.target.order}};
}

json ToJson(const PathEnforcer& enforcer) {
  json out = json::array();
  for (const auto& member : enforcer) {
    json items = json::array();
    for (const Occurrence& o : member) items.push_back({{"color", o.color}, {"arc", o.arc}});
    out.push_back(items);
  }
  return out;
}

}  // namespace rainbow
