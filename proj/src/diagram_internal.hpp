// Copyright 2026 The strand authors
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

#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "strand/diagram.hpp"

namespace strand {

/** Direct assembly of a diagram's graph. Used by file loaders and the
 * rewrite engine; regular construction goes through the Diagram
 * constructors. `finish()` validates every invariant. */
class DiagramBuilder {
 public:
  explicit DiagramBuilder(SignaturePtr sig) { d_.sig_ = std::move(sig); }

  std::uint32_t add_generator_node(GenId gen);
  std::uint32_t add_spider_node(SpiderColor color, TypeId type,
                                std::uint32_t degree);
  /** Boundary nodes take the next free position of their role. */
  std::uint32_t add_input_node(TypeId type);
  std::uint32_t add_output_node(TypeId type);
  /** Copies a node shell (degree and all); boundary positions renumbered. */
  std::uint32_t add_node_like(const Node& n);

  void add_edge(PortRef a, PortRef b) { d_.edges_.push_back(Edge{a, b}); }
  void add_loop(TypeId t, std::uint32_t count = 1) { d_.loops_[t] += count; }
  void add_loops(const std::map<TypeId, std::uint32_t>& loops);

  Node& node(std::uint32_t id) { return d_.nodes_[id]; }
  std::uint32_t node_count() const {
    return static_cast<std::uint32_t>(d_.nodes_.size());
  }
  std::vector<Edge>& edges() { return d_.edges_; }

  Diagram finish(bool validate = true);

 private:
  Diagram d_;
};

/** A pair of ports to be identified when gluing graphs, plus the wire type
 * flowing through the junction. */
struct Junction {
  PortRef a, b;
  TypeId type = 0;
};

/**
 * Contracts junctions in an edge list. Every edge incident to a junction
 * port is consumed; chains through junctions become single edges and
 * pure-junction cycles become circles, counted per type in `loops`.
 *
 * Precondition: each junction port is the endpoint of exactly one edge.
 */
void splice(std::vector<Edge>& edges, const std::vector<Junction>& junctions,
            std::map<TypeId, std::uint32_t>& loops);

/** (edge index, side) for each endpoint lying on `node`, in edge order. */
std::vector<std::pair<std::uint32_t, int>> incident_endpoints(
    const std::vector<Edge>& edges, std::uint32_t node);

/** Drops the node slots listed in `remove` (sorted unique ids) and
 * compacts ids; all edges must already avoid removed nodes. Boundary
 * positions are preserved. */
Diagram compact_nodes(const Diagram& d, std::vector<Node> nodes,
                      std::vector<Edge> edges,
                      std::map<TypeId, std::uint32_t> loops,
                      const std::vector<std::uint32_t>& remove);

}  // namespace strand
