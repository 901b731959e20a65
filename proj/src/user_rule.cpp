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

#include <algorithm>
#include <deque>
#include <set>

#include "diagram_internal.hpp"
#include "strand/rewrite.hpp"

namespace strand {

namespace {

bool is_internal(NodeKind k) {
  return k == NodeKind::Generator || k == NodeKind::Spider;
}

constexpr std::uint32_t kUnset = 0xffffffffu;

void renumber_node_ports(std::vector<Node>& nodes, std::vector<Edge>& edges,
                         std::uint32_t node) {
  std::vector<std::tuple<std::uint32_t, std::uint32_t, int>> eps;
  for (std::uint32_t e = 0; e < edges.size(); ++e) {
    if (edges[e].a.node == node) eps.emplace_back(edges[e].a.port, e, 0);
    if (edges[e].b.node == node) eps.emplace_back(edges[e].b.port, e, 1);
  }
  std::sort(eps.begin(), eps.end());
  for (std::uint32_t i = 0; i < eps.size(); ++i) {
    auto [old_port, e, side] = eps[i];
    (side ? edges[e].b : edges[e].a).port = i;
  }
  nodes[node].degree = static_cast<std::uint32_t>(eps.size());
}

}  // namespace

// ---------------------------------------------------------------------------

struct UserRule::Embedding {
  const Diagram* host = nullptr;
  std::vector<std::uint32_t> node_image;  // by lhs node id
  std::vector<char> node_used;            // host node taken
};

UserRule::UserRule(std::string name, Diagram lhs, Diagram rhs,
                   Soundness soundness, bool leg_polymorphic,
                   std::map<std::uint32_t, std::uint32_t> persistent)
    : Rule(std::move(name), soundness, leg_polymorphic),
      lhs_(std::move(lhs)),
      rhs_(std::move(rhs)),
      persistent_(std::move(persistent)) {
  const std::string& rn = Rule::name();
  if (!(lhs_.signature() == rhs_.signature() ||
        *lhs_.signature() == *rhs_.signature()))
    throw Error("rule '" + rn + "': lhs and rhs use different signatures");
  if (lhs_.input_types() != rhs_.input_types() ||
      lhs_.output_types() != rhs_.output_types())
    throw Error("rule '" + rn + "': boundary types of lhs and rhs disagree");
  if (!lhs_.loops().empty())
    throw Error("rule '" + rn + "': lhs must not contain circles");
  if (lhs_.nodes().empty())
    throw Error("rule '" + rn + "': lhs must not be empty");

  // connectivity of the lhs graph (boundary included)
  {
    std::vector<std::vector<std::uint32_t>> adj(lhs_.nodes().size());
    for (const Edge& e : lhs_.edges()) {
      adj[e.a.node].push_back(e.b.node);
      adj[e.b.node].push_back(e.a.node);
    }
    std::vector<char> seen(lhs_.nodes().size(), 0);
    std::deque<std::uint32_t> q{0};
    seen[0] = 1;
    while (!q.empty()) {
      std::uint32_t u = q.front();
      q.pop_front();
      for (std::uint32_t v : adj[u])
        if (!seen[v]) {
          seen[v] = 1;
          q.push_back(v);
        }
    }
    if (std::count(seen.begin(), seen.end(), 1) !=
        static_cast<long>(seen.size()))
      throw Error("rule '" + rn + "': lhs must be connected");
  }

  for (const auto& [l, r] : persistent_) {
    if (l >= lhs_.nodes().size() || r >= rhs_.nodes().size() ||
        lhs_.nodes()[l].kind != NodeKind::Spider ||
        rhs_.nodes()[r].kind != NodeKind::Spider ||
        lhs_.nodes()[l].color != rhs_.nodes()[r].color ||
        lhs_.nodes()[l].type != rhs_.nodes()[r].type)
      throw Error("rule '" + rn +
                  "': persistent entries must map spiders to equal spiders");
  }

  // search order: internal nodes, breadth-first over internal wires
  std::vector<std::uint32_t> internal;
  for (std::uint32_t i = 0; i < lhs_.nodes().size(); ++i)
    if (is_internal(lhs_.nodes()[i].kind)) internal.push_back(i);
  if (leg_polymorphic) {
    for (std::uint32_t i : internal)
      if (lhs_.nodes()[i].kind == NodeKind::Spider && !persistent_.count(i))
        throw Error("rule '" + rn +
                    "': leg-polymorphic rules need every lhs spider persistent");
  }
  if (!internal.empty()) {
    std::vector<std::vector<std::uint32_t>> adj(lhs_.nodes().size());
    for (const Edge& e : lhs_.edges()) {
      if (is_internal(lhs_.nodes()[e.a.node].kind) &&
          is_internal(lhs_.nodes()[e.b.node].kind)) {
        adj[e.a.node].push_back(e.b.node);
        adj[e.b.node].push_back(e.a.node);
      }
    }
    std::vector<char> seen(lhs_.nodes().size(), 0);
    std::deque<std::uint32_t> q{internal.front()};
    seen[internal.front()] = 1;
    while (!q.empty()) {
      std::uint32_t u = q.front();
      q.pop_front();
      lhs_internal_.push_back(u);
      std::vector<std::uint32_t> nb = adj[u];
      std::sort(nb.begin(), nb.end());
      for (std::uint32_t v : nb)
        if (!seen[v]) {
          seen[v] = 1;
          q.push_back(v);
        }
    }
    if (lhs_internal_.size() != internal.size())
      throw InternalError("lhs internal nodes not mutually connected");
  }
  lhs_edge_order_.resize(lhs_.edges().size());
  for (std::uint32_t i = 0; i < lhs_edge_order_.size(); ++i)
    lhs_edge_order_[i] = i;
}

namespace {

/** Deterministic edge-claiming pass shared by matching and application.
 * Returns false when the node assignment admits no edge mapping. On
 * success `edge_image[i]` is the host edge for lhs edge i and
 * `cut_side[i]` the host side consumed by a boundary cut (-1 otherwise). */
bool claim_edges(const Diagram& lhs, const Diagram& host,
                 const std::vector<std::uint32_t>& img,
                 std::vector<std::uint32_t>& edge_image,
                 std::vector<int>& cut_side) {
  const auto& ledges = lhs.edges();
  const auto& hedges = host.edges();
  std::vector<char> internal_used(hedges.size(), 0);
  std::vector<std::array<char, 2>> cut(hedges.size(), {0, 0});
  edge_image.assign(ledges.size(), kUnset);
  cut_side.assign(ledges.size(), -1);

  // host incidence
  std::vector<std::vector<std::uint32_t>> hinc(host.nodes().size());
  for (std::uint32_t e = 0; e < hedges.size(); ++e) {
    hinc[hedges[e].a.node].push_back(e);
    if (hedges[e].b.node != hedges[e].a.node)
      hinc[hedges[e].b.node].push_back(e);
  }

  auto is_gen = [&](std::uint32_t lnode) {
    return lhs.nodes()[lnode].kind == NodeKind::Generator;
  };

  for (std::uint32_t li = 0; li < ledges.size(); ++li) {
    const Edge& le = ledges[li];
    bool a_int = is_internal(lhs.nodes()[le.a.node].kind);
    bool b_int = is_internal(lhs.nodes()[le.b.node].kind);
    if (a_int && b_int) {
      std::uint32_t ha = img[le.a.node], hb = img[le.b.node];
      std::uint32_t found = kUnset;
      for (std::uint32_t e : hinc[ha]) {
        if (internal_used[e] || cut[e][0] || cut[e][1]) continue;
        const Edge& he = hedges[e];
        // orientations: (a->ha, b->hb) or flipped
        for (int flip = 0; flip < 2 && found == kUnset; ++flip) {
          PortRef ea = flip ? he.b : he.a;
          PortRef eb = flip ? he.a : he.b;
          if (ea.node != ha || eb.node != hb) continue;
          if (is_gen(le.a.node) && ea.port != le.a.port) continue;
          if (is_gen(le.b.node) && eb.port != le.b.port) continue;
          found = e;
        }
        if (found != kUnset) break;
      }
      if (found == kUnset) return false;
      internal_used[found] = 1;
      edge_image[li] = found;
    } else if (a_int || b_int) {
      std::uint32_t lnode = a_int ? le.a.node : le.b.node;
      std::uint32_t lport = a_int ? le.a.port : le.b.port;
      std::uint32_t h = img[lnode];
      std::uint32_t found = kUnset;
      int found_side = -1;
      for (std::uint32_t e : hinc[h]) {
        if (internal_used[e]) continue;
        for (int side = 0; side < 2; ++side) {
          PortRef p = side ? hedges[e].b : hedges[e].a;
          if (p.node != h || cut[e][side]) continue;
          if (is_gen(lnode) && p.port != lport) continue;
          found = e;
          found_side = side;
          break;
        }
        if (found != kUnset) break;
      }
      if (found == kUnset) return false;
      cut[found][found_side] = 1;
      edge_image[li] = found;
      cut_side[li] = found_side;
    } else {
      // boundary-boundary: only legal as the entire lhs; resolved upstream
      return false;
    }
  }
  return true;
}

bool node_compatible(const Diagram& lhs, std::uint32_t lnode,
                     const Diagram& host, std::uint32_t hnode, bool poly) {
  const Node& ln = lhs.nodes()[lnode];
  const Node& hn = host.nodes()[hnode];
  if (ln.kind != hn.kind) return false;
  if (ln.kind == NodeKind::Generator)
    return ln.gen == hn.gen;  // degree implied
  if (ln.color != hn.color || ln.type != hn.type) return false;
  return poly ? hn.degree >= ln.degree : hn.degree == ln.degree;
}

}  // namespace

bool UserRule::extend(const Diagram& d, Embedding& emb, std::size_t next,
                      std::vector<Match>& out, bool all) const {
  if (next == lhs_internal_.size()) {
    std::vector<std::uint32_t> img(lhs_.nodes().size(), kUnset);
    for (std::size_t i = 0; i < lhs_internal_.size(); ++i)
      img[lhs_internal_[i]] = emb.node_image[lhs_internal_[i]];
    std::vector<std::uint32_t> edge_image;
    std::vector<int> cut_side;
    if (!claim_edges(lhs_, d, img, edge_image, cut_side)) return false;
    Match m;
    for (std::uint32_t lid : lhs_internal_) m.nodes.push_back(img[lid]);
    m.edges = edge_image;
    out.push_back(std::move(m));
    return !all;  // stop after the first when not collecting all
  }
  std::uint32_t lnode = lhs_internal_[next];
  for (std::uint32_t h = 0; h < d.nodes().size(); ++h) {
    if (emb.node_used[h]) continue;
    if (!node_compatible(lhs_, lnode, d, h, leg_polymorphic())) continue;
    emb.node_image[lnode] = h;
    emb.node_used[h] = 1;
    bool stop = extend(d, emb, next + 1, out, all);
    emb.node_used[h] = 0;
    emb.node_image[lnode] = kUnset;
    if (stop) return true;
  }
  return false;
}

std::vector<Match> UserRule::find_matches(const Diagram& d) const {
  std::vector<Match> out;
  if (lhs_internal_.empty()) {
    // the lhs is a single bent or straight wire: match host edges by type
    const Edge& le = lhs_.edges()[0];
    TypeId t = lhs_.port_type(le.a);
    for (std::uint32_t e = 0; e < d.edges().size(); ++e) {
      if (d.port_type(d.edges()[e].a) == t)
        out.push_back(Match{{}, {e}});
    }
    return out;
  }
  Embedding emb;
  emb.host = &d;
  emb.node_image.assign(lhs_.nodes().size(), kUnset);
  emb.node_used.assign(d.nodes().size(), 0);
  extend(d, emb, 0, out, /*all=*/true);
  return out;
}

Diagram UserRule::apply(const Diagram& d, const Match& m) const {
  if (m.nodes.size() != lhs_internal_.size() ||
      m.edges.size() != lhs_.edges().size())
    throw StaleMatchError("user rule '" + name() + "': malformed match");

  std::vector<std::uint32_t> img(lhs_.nodes().size(), kUnset);
  for (std::size_t i = 0; i < lhs_internal_.size(); ++i) {
    std::uint32_t lid = lhs_internal_[i];
    std::uint32_t h = m.nodes[i];
    if (h >= d.nodes().size() ||
        !node_compatible(lhs_, lid, d, h, leg_polymorphic()))
      throw StaleMatchError("user rule '" + name() + "': match no longer fits");
    img[lid] = h;
  }

  // Re-derive the deterministic edge claims and check they agree.
  std::vector<std::uint32_t> edge_image;
  std::vector<int> cut_side;
  if (!lhs_internal_.empty()) {
    if (!claim_edges(lhs_, d, img, edge_image, cut_side) ||
        edge_image != m.edges)
      throw StaleMatchError("user rule '" + name() + "': match no longer fits");
  } else {
    edge_image = m.edges;
    cut_side.assign(1, 0);
    if (edge_image.size() != 1 || edge_image[0] >= d.edges().size())
      throw StaleMatchError("user rule '" + name() + "': match no longer fits");
  }

  std::vector<Node> nodes = d.nodes();
  std::map<TypeId, std::uint32_t> loops = d.loops();

  // Drop host edges imaging internal lhs wires.
  std::set<std::uint32_t> drop;
  for (std::uint32_t li = 0; li < lhs_.edges().size(); ++li) {
    const Edge& le = lhs_.edges()[li];
    if (is_internal(lhs_.nodes()[le.a.node].kind) &&
        is_internal(lhs_.nodes()[le.b.node].kind))
      drop.insert(edge_image[li]);
  }
  std::vector<Edge> edges;
  edges.reserve(d.edges().size());
  std::vector<std::uint32_t> edge_remap(d.edges().size(), kUnset);
  for (std::uint32_t e = 0; e < d.edges().size(); ++e) {
    if (drop.count(e)) continue;
    edge_remap[e] = static_cast<std::uint32_t>(edges.size());
    edges.push_back(d.edges()[e]);
  }

  std::uint32_t temp_port = 1u << 20;  // above any real port; renumbered later

  // Merge persistent groups onto one surviving host slot per rhs target.
  std::map<std::uint32_t, std::uint32_t> survivor_of_rhs;  // rhs node -> slot
  std::set<std::uint32_t> touched;
  std::vector<std::uint32_t> remove;
  for (const auto& [l, r] : persistent_) {
    std::uint32_t h = img[l];
    auto it = survivor_of_rhs.find(r);
    if (it == survivor_of_rhs.end()) {
      survivor_of_rhs.emplace(r, h);
      touched.insert(h);
    } else {
      // fold this image into the survivor
      for (Edge& e : edges) {
        for (PortRef* p : {&e.a, &e.b}) {
          if (p->node == h) {
            p->node = it->second;
            p->port = temp_port++;
          }
        }
      }
      remove.push_back(h);
    }
  }
  for (std::uint32_t lid : lhs_internal_)
    if (!persistent_.count(lid)) remove.push_back(img[lid]);

  // Instantiate rhs internal nodes and temporary boundary pins.
  std::vector<std::uint32_t> rhs_slot(rhs_.nodes().size(), kUnset);
  for (std::uint32_t r = 0; r < rhs_.nodes().size(); ++r) {
    const Node& rn = rhs_.nodes()[r];
    if (is_internal(rn.kind)) {
      auto it = survivor_of_rhs.find(r);
      if (it != survivor_of_rhs.end()) {
        rhs_slot[r] = it->second;
      } else {
        nodes.push_back(rn);
        rhs_slot[r] = static_cast<std::uint32_t>(nodes.size() - 1);
      }
    } else {
      Node pin;
      pin.kind = NodeKind::Spider;  // placeholder; removed below
      pin.type = rn.type;
      pin.degree = 1;
      nodes.push_back(pin);
      rhs_slot[r] = static_cast<std::uint32_t>(nodes.size() - 1);
      remove.push_back(rhs_slot[r]);
    }
  }
  for (const Edge& re : rhs_.edges()) {
    auto place = [&](PortRef p) -> PortRef {
      std::uint32_t slot = rhs_slot[p.node];
      const Node& rn = rhs_.nodes()[p.node];
      if (!is_internal(rn.kind)) return PortRef{slot, 0};
      if (survivor_of_rhs.count(p.node)) return PortRef{slot, temp_port++};
      return PortRef{slot, p.port};
    };
    edges.push_back(Edge{place(re.a), place(re.b)});
  }
  for (const auto& [t, c] : rhs_.loops()) loops[t] += c;

  // Junctions: matched boundary port of the host edge meets the rhs pin.
  std::vector<Junction> junctions;
  auto add_boundary_junctions = [&](const std::vector<std::uint32_t>& lhs_bnodes,
                                    const std::vector<std::uint32_t>& rhs_bnodes) {
    for (std::size_t pos = 0; pos < lhs_bnodes.size(); ++pos) {
      std::uint32_t lb = lhs_bnodes[pos];
      // the unique lhs edge at this boundary node
      std::uint32_t li = kUnset;
      for (std::uint32_t i = 0; i < lhs_.edges().size(); ++i) {
        if (lhs_.edges()[i].a.node == lb || lhs_.edges()[i].b.node == lb) {
          li = i;
          break;
        }
      }
      if (li == kUnset) throw InternalError("lhs boundary node without wire");
      std::uint32_t he = edge_image[li];
      const Edge& hedge = d.edges()[he];
      PortRef matched;
      if (lhs_internal_.empty()) {
        // wire pattern: lhs endpoint a corresponds to host side a
        matched = lhs_.edges()[li].a.node == lb ? hedge.a : hedge.b;
      } else {
        int side = cut_side[li];
        matched = side ? hedge.b : hedge.a;
      }
      std::uint32_t pin = rhs_slot[rhs_bnodes[pos]];
      junctions.push_back(
          Junction{matched, PortRef{pin, 0}, lhs_.nodes()[lb].type});
    }
  };
  add_boundary_junctions(lhs_.input_nodes(), rhs_.input_nodes());
  add_boundary_junctions(lhs_.output_nodes(), rhs_.output_nodes());

  splice(edges, junctions, loops);
  for (std::uint32_t t : touched) renumber_node_ports(nodes, edges, t);
  std::sort(remove.begin(), remove.end());
  return compact_nodes(d, std::move(nodes), std::move(edges), std::move(loops),
                       remove);
}

std::optional<std::pair<Diagram, Diagram>> UserRule::sample_instance(
    const SignaturePtr& sig, std::mt19937_64&, const InstanceHints&) const {
  if (!(lhs_.signature() == sig || *lhs_.signature() == *sig))
    return std::nullopt;
  return std::make_pair(lhs_, rhs_);
}

}  // namespace strand
