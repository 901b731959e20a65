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

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "strand/signature.hpp"

namespace strand {

enum class NodeKind : std::uint8_t { Generator, Spider, Input, Output };
enum class SpiderColor : std::uint8_t { Light, Dark };

const char* to_string(SpiderColor color);
SpiderColor spider_color_from_string(const std::string& name);

/**
 * One vertex of the open graph.
 *
 * Ports are the attachment slots for edges. Generator ports are ordered
 * (inputs first, then outputs, following the signature); spider legs are
 * interchangeable; boundary nodes have a single port.
 */
struct Node {
  NodeKind kind = NodeKind::Spider;
  GenId gen = 0;              // Generator only
  SpiderColor color = SpiderColor::Light;  // Spider only
  TypeId type = 0;            // Spider / Input / Output
  std::uint32_t position = 0;  // Input / Output: boundary slot
  std::uint32_t degree = 0;    // number of ports
};

struct PortRef {
  std::uint32_t node = 0;
  std::uint32_t port = 0;
  friend bool operator==(const PortRef&, const PortRef&) = default;
};

/** An undirected connection between two ports. */
struct Edge {
  PortRef a, b;
};

/**
 * A typed string diagram as an immutable open graph.
 *
 * Wires are edges; there is no representation of wire bending, so cups and
 * caps are nothing but edges between boundary nodes and yanking holds by
 * construction. Every port is the endpoint of exactly one edge. Closed
 * wire loops (circles) carry no nodes at all and are kept in a per-type
 * counter. Closed sub-diagrams are permitted and compare as an unordered
 * multiset.
 *
 * All operations are pure: a Diagram never changes after construction and
 * may be shared freely across threads.
 */
class Diagram {
 public:
  /** Straight wires, one per element of `types`; `identity({})` is the
   * empty diagram ("no system"). */
  static Diagram identity(SignaturePtr sig, const std::vector<TypeId>& types);
  static Diagram empty(SignaturePtr sig) { return identity(std::move(sig), {}); }

  /** A single box wired straight to the boundary. */
  static Diagram generator(SignaturePtr sig, GenId gen);
  static Diagram generator(SignaturePtr sig, const std::string& name);

  /** 0 -> 2 bent wire; `cap` is its dagger (2 -> 0). */
  static Diagram cup(SignaturePtr sig, TypeId t);
  static Diagram cap(SignaturePtr sig, TypeId t);

  /** The wire crossing s (x) t -> t (x) s. */
  static Diagram swap_wires(SignaturePtr sig, TypeId s, TypeId t);

  /** A single spider with n_in + n_out legs wired to the boundary. */
  static Diagram spider(SignaturePtr sig, SpiderColor color, TypeId t,
                        std::uint32_t n_in, std::uint32_t n_out);

  /** Sequential composition: `f` then `g`. Output types of `f` must equal
   * input types of `g`; throws TypeMismatchError naming the first
   * mismatching position. */
  friend Diagram compose_seq(const Diagram& f, const Diagram& g);

  /** Parallel composition: disjoint union, `g`'s boundary after `f`'s. */
  friend Diagram compose_par(const Diagram& f, const Diagram& g);

  /** Flip: inputs and outputs exchanged (order preserved), every box
   * replaced by its dagger partner, spiders kept. Involutive. */
  Diagram dagger() const;

  /** 180-degree rotation: inputs become outputs in reversed order and
   * dually, realized by bending every boundary wire across a cup/cap pair
   * (which the splicing representation resolves immediately). Boxes are
   * not replaced. */
  Diagram transpose() const;

  const SignaturePtr& signature() const { return sig_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::map<TypeId, std::uint32_t>& loops() const { return loops_; }
  const std::vector<std::uint32_t>& input_nodes() const { return inputs_; }
  const std::vector<std::uint32_t>& output_nodes() const { return outputs_; }

  std::vector<TypeId> input_types() const;
  std::vector<TypeId> output_types() const;

  TypeId port_type(PortRef p) const;
  TypeId port_type(std::uint32_t node, std::uint32_t port) const {
    return port_type(PortRef{node, port});
  }

  /** Number of non-boundary nodes. */
  std::size_t internal_node_count() const;

  bool is_closed() const { return inputs_.empty() && outputs_.empty(); }

  /** Checks every structural invariant; throws InternalError on failure. */
  void validate() const;

  /** Rebuilds the diagram with internal node slots permuted (a pure
   * relabeling; the result is canonically equal). `perm` maps old node id
   * to new node id and must fix boundary structure only up to position. */
  Diagram relabel(const std::vector<std::uint32_t>& perm) const;

 private:
  friend class DiagramBuilder;
  friend struct CanonicalBuilder;

  SignaturePtr sig_;
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::map<TypeId, std::uint32_t> loops_;
  std::vector<std::uint32_t> inputs_;
  std::vector<std::uint32_t> outputs_;
};

Diagram compose_seq(const Diagram& f, const Diagram& g);
Diagram compose_par(const Diagram& f, const Diagram& g);

/**
 * Byte-exact canonical serialization. Two diagrams are equal up to
 * deformation (open-graph isomorphism preserving boundary order, generator
 * labels and ports, spider colors, wire types; spider legs unordered) iff
 * their canonical forms are byte-equal.
 */
struct Canonical {
  std::string bytes;
  /** rank_of[node id] = position of the node in the canonical order. */
  std::vector<std::uint32_t> rank_of;
};

Canonical canonicalize(const Diagram& d);
std::string canonical_form(const Diagram& d);
std::uint64_t canonical_hash(const Diagram& d);
bool canonical_equal(const Diagram& a, const Diagram& b);

/** FNV-1a, used for stable trace hashes. */
std::uint64_t fnv1a(std::string_view bytes);

}  // namespace strand
