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

#include "strand/diagram.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "diagram_internal.hpp"

namespace strand {

const char* to_string(SpiderColor color) {
  return color == SpiderColor::Light ? "light" : "dark";
}

SpiderColor spider_color_from_string(const std::string& name) {
  if (name == "light") return SpiderColor::Light;
  if (name == "dark") return SpiderColor::Dark;
  throw ParseError("unknown spider color '" + name + "'");
}

// ---------------------------------------------------------------------------
// DiagramBuilder

std::uint32_t DiagramBuilder::add_generator_node(GenId gen) {
  const Generator& g = d_.sig_->generator(gen);
  Node n;
  n.kind = NodeKind::Generator;
  n.gen = gen;
  n.degree = static_cast<std::uint32_t>(g.inputs.size() + g.outputs.size());
  d_.nodes_.push_back(n);
  return static_cast<std::uint32_t>(d_.nodes_.size() - 1);
}

std::uint32_t DiagramBuilder::add_spider_node(SpiderColor color, TypeId type,
                                              std::uint32_t degree) {
  Node n;
  n.kind = NodeKind::Spider;
  n.color = color;
  n.type = type;
  n.degree = degree;
  d_.nodes_.push_back(n);
  return static_cast<std::uint32_t>(d_.nodes_.size() - 1);
}

std::uint32_t DiagramBuilder::add_input_node(TypeId type) {
  Node n;
  n.kind = NodeKind::Input;
  n.type = type;
  n.degree = 1;
  n.position = static_cast<std::uint32_t>(d_.inputs_.size());
  d_.nodes_.push_back(n);
  d_.inputs_.push_back(static_cast<std::uint32_t>(d_.nodes_.size() - 1));
  return static_cast<std::uint32_t>(d_.nodes_.size() - 1);
}

std::uint32_t DiagramBuilder::add_output_node(TypeId type) {
  Node n;
  n.kind = NodeKind::Output;
  n.type = type;
  n.degree = 1;
  n.position = static_cast<std::uint32_t>(d_.outputs_.size());
  d_.nodes_.push_back(n);
  d_.outputs_.push_back(static_cast<std::uint32_t>(d_.nodes_.size() - 1));
  return static_cast<std::uint32_t>(d_.nodes_.size() - 1);
}

std::uint32_t DiagramBuilder::add_node_like(const Node& n) {
  d_.nodes_.push_back(n);
  return static_cast<std::uint32_t>(d_.nodes_.size() - 1);
}

void DiagramBuilder::add_loops(const std::map<TypeId, std::uint32_t>& loops) {
  for (const auto& [t, c] : loops) d_.loops_[t] += c;
}

Diagram DiagramBuilder::finish(bool validate) {
  // Boundary lists are rebuilt from stored positions so that callers that
  // copy node shells keep the original ordering.
  d_.inputs_.clear();
  d_.outputs_.clear();
  for (std::uint32_t i = 0; i < d_.nodes_.size(); ++i) {
    if (d_.nodes_[i].kind == NodeKind::Input) d_.inputs_.push_back(i);
    if (d_.nodes_[i].kind == NodeKind::Output) d_.outputs_.push_back(i);
  }
  auto by_position = [&](std::uint32_t a, std::uint32_t b) {
    return d_.nodes_[a].position < d_.nodes_[b].position;
  };
  std::sort(d_.inputs_.begin(), d_.inputs_.end(), by_position);
  std::sort(d_.outputs_.begin(), d_.outputs_.end(), by_position);
  if (validate) d_.validate();
  return std::move(d_);
}

// ---------------------------------------------------------------------------
// Splicing

std::vector<std::pair<std::uint32_t, int>> incident_endpoints(
    const std::vector<Edge>& edges, std::uint32_t node) {
  std::vector<std::pair<std::uint32_t, int>> out;
  for (std::uint32_t e = 0; e < edges.size(); ++e) {
    if (edges[e].a.node == node) out.emplace_back(e, 0);
    if (edges[e].b.node == node) out.emplace_back(e, 1);
  }
  return out;
}

namespace {

const PortRef& endpoint(const Edge& e, int side) { return side ? e.b : e.a; }

}  // namespace

void splice(std::vector<Edge>& edges, const std::vector<Junction>& junctions,
            std::map<TypeId, std::uint32_t>& loops) {
  if (junctions.empty()) return;

  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> jmap;
  for (std::uint32_t j = 0; j < junctions.size(); ++j) {
    jmap[{junctions[j].a.node, junctions[j].a.port}] = j;
    jmap[{junctions[j].b.node, junctions[j].b.port}] = j;
  }
  auto junction_at = [&](const PortRef& p) -> int {
    auto it = jmap.find({p.node, p.port});
    return it == jmap.end() ? -1 : static_cast<int>(it->second);
  };

  // Each junction fuses two ports that each carried exactly one edge end.
  std::vector<std::array<std::pair<std::uint32_t, int>, 2>> inc(junctions.size());
  std::vector<int> inc_n(junctions.size(), 0);
  for (std::uint32_t e = 0; e < edges.size(); ++e) {
    for (int side = 0; side < 2; ++side) {
      int j = junction_at(endpoint(edges[e], side));
      if (j < 0) continue;
      if (inc_n[j] >= 2) throw InternalError("junction port used more than once");
      inc[j][inc_n[j]++] = {e, side};
    }
  }
  for (std::size_t j = 0; j < junctions.size(); ++j)
    if (inc_n[j] != 2) throw InternalError("junction is not incident to two edge ends");

  auto exit_of = [&](std::uint32_t j, std::pair<std::uint32_t, int> entry) {
    return inc[j][0] == entry ? inc[j][1] : inc[j][0];
  };

  std::vector<char> consumed(edges.size(), 0);
  std::vector<Edge> out;
  out.reserve(edges.size());

  // Chains anchored at a non-junction port.
  for (std::uint32_t e = 0; e < edges.size(); ++e) {
    if (consumed[e]) continue;
    int ja = junction_at(edges[e].a);
    int jb = junction_at(edges[e].b);
    if (ja < 0 && jb < 0) {
      out.push_back(edges[e]);
      consumed[e] = 1;
      continue;
    }
    if (ja >= 0 && jb >= 0) continue;  // walked from an anchor later, or a cycle

    PortRef anchor = ja < 0 ? edges[e].a : edges[e].b;
    std::uint32_t cur_e = e;
    int far_side = ja < 0 ? 1 : 0;
    consumed[e] = 1;
    for (;;) {
      int j = junction_at(endpoint(edges[cur_e], far_side));
      auto [ne, ns] = exit_of(static_cast<std::uint32_t>(j), {cur_e, far_side});
      consumed[ne] = 1;
      const PortRef& far = endpoint(edges[ne], 1 - ns);
      if (junction_at(far) < 0) {
        out.push_back(Edge{anchor, far});
        break;
      }
      cur_e = ne;
      far_side = 1 - ns;
    }
  }

  // Whatever is left are pure junction cycles: circles.
  for (std::uint32_t e = 0; e < edges.size(); ++e) {
    if (consumed[e]) continue;
    consumed[e] = 1;
    int j0 = junction_at(edges[e].b);
    loops[junctions[j0].type] += 1;
    std::uint32_t cur_e = e;
    int far_side = 1;
    for (;;) {
      int j = junction_at(endpoint(edges[cur_e], far_side));
      auto [ne, ns] = exit_of(static_cast<std::uint32_t>(j), {cur_e, far_side});
      if (ne == e && ns == 0) break;  // closed the cycle at the start edge
      consumed[ne] = 1;
      cur_e = ne;
      far_side = 1 - ns;
    }
  }

  edges = std::move(out);
}

Diagram compact_nodes(const Diagram& d, std::vector<Node> nodes,
                      std::vector<Edge> edges,
                      std::map<TypeId, std::uint32_t> loops,
                      const std::vector<std::uint32_t>& remove) {
  std::vector<char> removed(nodes.size(), 0);
  for (std::uint32_t id : remove) removed.at(id) = 1;
  std::vector<std::uint32_t> remap(nodes.size(), 0);
  DiagramBuilder b(d.signature());
  for (std::uint32_t i = 0; i < nodes.size(); ++i) {
    if (removed[i]) continue;
    remap[i] = b.add_node_like(nodes[i]);
  }
  for (const Edge& e : edges) {
    if (removed.at(e.a.node) || removed.at(e.b.node))
      throw InternalError("edge references removed node");
    b.add_edge(PortRef{remap[e.a.node], e.a.port}, PortRef{remap[e.b.node], e.b.port});
  }
  b.add_loops(loops);
  return b.finish();
}

// ---------------------------------------------------------------------------
// Constructors

Diagram Diagram::identity(SignaturePtr sig, const std::vector<TypeId>& types) {
  for (TypeId t : types)
    if (t >= sig->type_count()) throw UnknownNameError("unknown wire type id");
  DiagramBuilder b(std::move(sig));
  for (TypeId t : types) {
    std::uint32_t in = b.add_input_node(t);
    std::uint32_t out = b.add_output_node(t);
    b.add_edge(PortRef{in, 0}, PortRef{out, 0});
  }
  return b.finish();
}

Diagram Diagram::generator(SignaturePtr sig, GenId gen) {
  if (gen >= sig->generator_count()) throw UnknownNameError("unknown generator id");
  const Generator& g = sig->generator(gen);
  DiagramBuilder b(sig);
  std::uint32_t node = b.add_generator_node(gen);
  for (std::uint32_t i = 0; i < g.inputs.size(); ++i) {
    std::uint32_t in = b.add_input_node(g.inputs[i]);
    b.add_edge(PortRef{in, 0}, PortRef{node, i});
  }
  std::uint32_t arity_in = static_cast<std::uint32_t>(g.inputs.size());
  for (std::uint32_t j = 0; j < g.outputs.size(); ++j) {
    std::uint32_t out = b.add_output_node(g.outputs[j]);
    b.add_edge(PortRef{node, arity_in + j}, PortRef{out, 0});
  }
  return b.finish();
}

Diagram Diagram::generator(SignaturePtr sig, const std::string& name) {
  GenId id = sig->generator_id(name);
  return generator(std::move(sig), id);
}

Diagram Diagram::cup(SignaturePtr sig, TypeId t) {
  if (t >= sig->type_count()) throw UnknownNameError("unknown wire type id");
  DiagramBuilder b(std::move(sig));
  std::uint32_t o0 = b.add_output_node(t);
  std::uint32_t o1 = b.add_output_node(t);
  b.add_edge(PortRef{o0, 0}, PortRef{o1, 0});
  return b.finish();
}

Diagram Diagram::cap(SignaturePtr sig, TypeId t) {
  if (t >= sig->type_count()) throw UnknownNameError("unknown wire type id");
  DiagramBuilder b(std::move(sig));
  std::uint32_t i0 = b.add_input_node(t);
  std::uint32_t i1 = b.add_input_node(t);
  b.add_edge(PortRef{i0, 0}, PortRef{i1, 0});
  return b.finish();
}

Diagram Diagram::swap_wires(SignaturePtr sig, TypeId s, TypeId t) {
  if (s >= sig->type_count() || t >= sig->type_count())
    throw UnknownNameError("unknown wire type id");
  DiagramBuilder b(std::move(sig));
  std::uint32_t i0 = b.add_input_node(s);
  std::uint32_t i1 = b.add_input_node(t);
  std::uint32_t o0 = b.add_output_node(t);
  std::uint32_t o1 = b.add_output_node(s);
  b.add_edge(PortRef{i0, 0}, PortRef{o1, 0});
  b.add_edge(PortRef{i1, 0}, PortRef{o0, 0});
  return b.finish();
}

Diagram Diagram::spider(SignaturePtr sig, SpiderColor color, TypeId t,
                        std::uint32_t n_in, std::uint32_t n_out) {
  if (t >= sig->type_count()) throw UnknownNameError("unknown wire type id");
  DiagramBuilder b(std::move(sig));
  std::uint32_t node = b.add_spider_node(color, t, n_in + n_out);
  for (std::uint32_t i = 0; i < n_in; ++i) {
    std::uint32_t in = b.add_input_node(t);
    b.add_edge(PortRef{in, 0}, PortRef{node, i});
  }
  for (std::uint32_t j = 0; j < n_out; ++j) {
    std::uint32_t out = b.add_output_node(t);
    b.add_edge(PortRef{node, n_in + j}, PortRef{out, 0});
  }
  return b.finish();
}

// ---------------------------------------------------------------------------
// Composition

namespace {

void require_same_signature(const Diagram& f, const Diagram& g) {
  if (f.signature() == g.signature()) return;
  if (*f.signature() == *g.signature()) return;
  throw Error("diagrams built over different signatures");
}

}  // namespace

Diagram compose_seq(const Diagram& f, const Diagram& g) {
  require_same_signature(f, g);
  std::vector<TypeId> mid_f = f.output_types();
  std::vector<TypeId> mid_g = g.input_types();
  if (mid_f.size() != mid_g.size())
    throw TypeMismatchError(
        "sequential composition: " + std::to_string(mid_f.size()) +
        " outputs vs " + std::to_string(mid_g.size()) + " inputs");
  for (std::size_t i = 0; i < mid_f.size(); ++i) {
    if (mid_f[i] != mid_g[i])
      throw TypeMismatchError(
          "sequential composition type mismatch at position " +
          std::to_string(i) + ": " + f.signature()->type(mid_f[i]).name +
          " vs " + f.signature()->type(mid_g[i]).name);
  }

  std::uint32_t off = static_cast<std::uint32_t>(f.nodes().size());
  std::vector<Node> nodes = f.nodes();
  nodes.insert(nodes.end(), g.nodes().begin(), g.nodes().end());
  std::vector<Edge> edges = f.edges();
  for (const Edge& e : g.edges())
    edges.push_back(Edge{PortRef{e.a.node + off, e.a.port},
                         PortRef{e.b.node + off, e.b.port}});
  std::map<TypeId, std::uint32_t> loops = f.loops();
  for (const auto& [t, c] : g.loops()) loops[t] += c;

  std::vector<Junction> junctions;
  std::vector<std::uint32_t> remove;
  for (std::size_t i = 0; i < mid_f.size(); ++i) {
    std::uint32_t fo = f.output_nodes()[i];
    std::uint32_t gi = g.input_nodes()[i] + off;
    junctions.push_back(Junction{PortRef{fo, 0}, PortRef{gi, 0}, mid_f[i]});
    remove.push_back(fo);
    remove.push_back(gi);
  }
  splice(edges, junctions, loops);
  std::sort(remove.begin(), remove.end());
  return compact_nodes(f, std::move(nodes), std::move(edges), std::move(loops),
                       remove);
}

Diagram compose_par(const Diagram& f, const Diagram& g) {
  require_same_signature(f, g);
  DiagramBuilder b(f.signature());
  std::vector<std::uint32_t> remap_f(f.nodes().size()), remap_g(g.nodes().size());
  for (std::uint32_t i = 0; i < f.nodes().size(); ++i)
    remap_f[i] = b.add_node_like(f.nodes()[i]);
  std::uint32_t in_shift = static_cast<std::uint32_t>(f.input_nodes().size());
  std::uint32_t out_shift = static_cast<std::uint32_t>(f.output_nodes().size());
  for (std::uint32_t i = 0; i < g.nodes().size(); ++i) {
    Node n = g.nodes()[i];
    if (n.kind == NodeKind::Input) n.position += in_shift;
    if (n.kind == NodeKind::Output) n.position += out_shift;
    remap_g[i] = b.add_node_like(n);
  }
  for (const Edge& e : f.edges())
    b.add_edge(PortRef{remap_f[e.a.node], e.a.port},
               PortRef{remap_f[e.b.node], e.b.port});
  for (const Edge& e : g.edges())
    b.add_edge(PortRef{remap_g[e.a.node], e.a.port},
               PortRef{remap_g[e.b.node], e.b.port});
  b.add_loops(f.loops());
  b.add_loops(g.loops());
  return b.finish();
}

// ---------------------------------------------------------------------------
// Dagger and transpose

Diagram Diagram::dagger() const {
  DiagramBuilder b(sig_);
  for (const Node& n : nodes_) {
    Node m = n;
    switch (n.kind) {
      case NodeKind::Input:
        m.kind = NodeKind::Output;
        break;
      case NodeKind::Output:
        m.kind = NodeKind::Input;
        break;
      case NodeKind::Generator:
        m.gen = sig_->generator(n.gen).dagger;
        break;
      case NodeKind::Spider:
        break;
    }
    b.add_node_like(m);
  }
  auto map_port = [&](PortRef p) -> PortRef {
    const Node& n = nodes_[p.node];
    if (n.kind != NodeKind::Generator) return p;
    const Generator& g = sig_->generator(n.gen);
    std::uint32_t a = static_cast<std::uint32_t>(g.inputs.size());
    std::uint32_t bo = static_cast<std::uint32_t>(g.outputs.size());
    // input i -> partner output i; output j -> partner input j
    if (p.port < a) return PortRef{p.node, bo + p.port};
    return PortRef{p.node, p.port - a};
  };
  for (const Edge& e : edges_) b.add_edge(map_port(e.a), map_port(e.b));
  b.add_loops(loops_);
  return b.finish();
}

Diagram Diagram::transpose() const {
  std::uint32_t n_in = static_cast<std::uint32_t>(inputs_.size());
  std::uint32_t n_out = static_cast<std::uint32_t>(outputs_.size());
  DiagramBuilder b(sig_);
  for (const Node& n : nodes_) {
    Node m = n;
    if (n.kind == NodeKind::Input) {
      m.kind = NodeKind::Output;
      m.position = n_in - 1 - n.position;
    } else if (n.kind == NodeKind::Output) {
      m.kind = NodeKind::Input;
      m.position = n_out - 1 - n.position;
    }
    b.add_node_like(m);
  }
  for (const Edge& e : edges_) b.add_edge(e.a, e.b);
  b.add_loops(loops_);
  return b.finish();
}

// ---------------------------------------------------------------------------
// Accessors and checks

std::vector<TypeId> Diagram::input_types() const {
  std::vector<TypeId> out;
  out.reserve(inputs_.size());
  for (std::uint32_t id : inputs_) out.push_back(nodes_[id].type);
  return out;
}

std::vector<TypeId> Diagram::output_types() const {
  std::vector<TypeId> out;
  out.reserve(outputs_.size());
  for (std::uint32_t id : outputs_) out.push_back(nodes_[id].type);
  return out;
}

TypeId Diagram::port_type(PortRef p) const {
  const Node& n = nodes_.at(p.node);
  if (n.kind == NodeKind::Generator) {
    const Generator& g = sig_->generator(n.gen);
    if (p.port < g.inputs.size()) return g.inputs[p.port];
    return g.outputs.at(p.port - g.inputs.size());
  }
  return n.type;
}

std::size_t Diagram::internal_node_count() const {
  std::size_t c = 0;
  for (const Node& n : nodes_)
    if (n.kind == NodeKind::Generator || n.kind == NodeKind::Spider) ++c;
  return c;
}

void Diagram::validate() const {
  std::vector<std::uint32_t> uses;
  std::size_t total_ports = 0;
  for (const Node& n : nodes_) total_ports += n.degree;
  if (2 * edges_.size() != total_ports)
    throw InternalError("edge count does not cover all ports");

  std::vector<std::size_t> offset(nodes_.size() + 1, 0);
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    offset[i + 1] = offset[i] + nodes_[i].degree;
  uses.assign(total_ports, 0);

  auto check_endpoint = [&](PortRef p) {
    if (p.node >= nodes_.size()) throw InternalError("edge endpoint out of range");
    if (p.port >= nodes_[p.node].degree)
      throw InternalError("edge endpoint port out of range");
    uses[offset[p.node] + p.port] += 1;
  };
  for (const Edge& e : edges_) {
    check_endpoint(e.a);
    check_endpoint(e.b);
    if (port_type(e.a) != port_type(e.b))
      throw InternalError("edge joins unequal wire types");
  }
  for (std::uint32_t u : uses)
    if (u != 1) throw InternalError("port not used exactly once");

  for (const Node& n : nodes_) {
    if (n.kind == NodeKind::Generator) {
      const Generator& g = sig_->generator(n.gen);
      if (n.degree != g.inputs.size() + g.outputs.size())
        throw InternalError("generator node degree mismatch");
    }
    if ((n.kind == NodeKind::Input || n.kind == NodeKind::Output) && n.degree != 1)
      throw InternalError("boundary node degree must be 1");
  }

  auto check_boundary = [&](const std::vector<std::uint32_t>& list, NodeKind kind) {
    for (std::uint32_t pos = 0; pos < list.size(); ++pos) {
      const Node& n = nodes_.at(list[pos]);
      if (n.kind != kind || n.position != pos)
        throw InternalError("boundary positions not contiguous");
    }
  };
  check_boundary(inputs_, NodeKind::Input);
  check_boundary(outputs_, NodeKind::Output);
}

Diagram Diagram::relabel(const std::vector<std::uint32_t>& perm) const {
  if (perm.size() != nodes_.size()) throw Error("relabel: wrong permutation size");
  std::vector<char> seen(perm.size(), 0);
  for (std::uint32_t p : perm) {
    if (p >= perm.size() || seen[p]) throw Error("relabel: not a permutation");
    seen[p] = 1;
  }
  DiagramBuilder b(sig_);
  std::vector<Node> reordered(nodes_.size());
  for (std::uint32_t i = 0; i < nodes_.size(); ++i) reordered[perm[i]] = nodes_[i];
  for (const Node& n : reordered) b.add_node_like(n);
  for (const Edge& e : edges_)
    b.add_edge(PortRef{perm[e.a.node], e.a.port}, PortRef{perm[e.b.node], e.b.port});
  b.add_loops(loops_);
  return b.finish();
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace strand
