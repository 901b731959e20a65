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
#include <map>
#include <set>

#include "diagram_internal.hpp"
#include "strand/rewrite.hpp"

namespace strand {

namespace {


bool is_spider(const Diagram& d, std::uint32_t node) {
  return node < d.nodes().size() && d.nodes()[node].kind == NodeKind::Spider;
}


/** Gives the endpoints sitting on `node` fresh contiguous port numbers
 * (ordered by old port) and fixes the node degree. */
void renumber_spider_ports(std::vector<Node>& nodes, std::vector<Edge>& edges,
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

std::vector<std::uint32_t> connecting_edges(const Diagram& d, std::uint32_t x,
                                            std::uint32_t y) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t e = 0; e < d.edges().size(); ++e) {
    const Edge& ed = d.edges()[e];
    std::uint32_t a = ed.a.node, b = ed.b.node;
    if ((a == x && b == y) || (a == y && b == x)) out.push_back(e);
  }
  return out;
}


Diagram id_wires(const SignaturePtr& sig, TypeId t, std::uint32_t n) {
  return Diagram::identity(sig, std::vector<TypeId>(n, t));
}

/** Two spiders joined by k parallel edges, with the stated numbers of
 * external boundary legs; inputs are A's then B's, outputs likewise. */
Diagram spider_pair(const SignaturePtr& sig, SpiderColor ca, SpiderColor cb,
                    TypeId t, std::uint32_t n_a, std::uint32_t m_a,
                    std::uint32_t n_b, std::uint32_t m_b, std::uint32_t k) {
  Diagram top = compose_par(Diagram::spider(sig, ca, t, n_a, m_a + k),
                            id_wires(sig, t, n_b));
  Diagram bottom = compose_par(id_wires(sig, t, m_a),
                               Diagram::spider(sig, cb, t, k + n_b, m_b));
  return compose_seq(top, bottom);
}

// ---------------------------------------------------------------------------

class SpiderIdentityRule final : public Rule {
 public:
  SpiderIdentityRule() : Rule("spider_identity", Soundness::Exact, false) {}

  std::vector<Match> find_matches(const Diagram& d) const override {
    std::vector<Match> out;
    for (std::uint32_t n = 0; n < d.nodes().size(); ++n) {
      if (!is_spider(d, n) || d.nodes()[n].degree != 2) continue;
      auto inc = incident_endpoints(d.edges(), n);
      if (inc.size() != 2 || inc[0].first == inc[1].first) continue;  // self-loop
      out.push_back(Match{{n}, {inc[0].first, inc[1].first}});
    }
    return out;
  }

  Diagram apply(const Diagram& d, const Match& m) const override {
    if (m.nodes.size() != 1 || !is_spider(d, m.nodes[0]) ||
        d.nodes()[m.nodes[0]].degree != 2)
      throw StaleMatchError("spider_identity: match no longer fits");
    std::uint32_t n = m.nodes[0];
    std::vector<Edge> edges = d.edges();
    std::map<TypeId, std::uint32_t> loops = d.loops();
    std::vector<Junction> junctions{
        Junction{PortRef{n, 0}, PortRef{n, 1}, d.nodes()[n].type}};
    splice(edges, junctions, loops);
    return compact_nodes(d, d.nodes(), std::move(edges), std::move(loops), {n});
  }

  std::optional<std::pair<Diagram, Diagram>> sample_instance(
      const SignaturePtr& sig, std::mt19937_64& rng,
      const InstanceHints& hints) const override {
    std::vector<std::pair<SpiderColor, TypeId>> opts;
    for (TypeId t : hints.light_types) opts.emplace_back(SpiderColor::Light, t);
    for (TypeId t : hints.dark_types) opts.emplace_back(SpiderColor::Dark, t);
    if (opts.empty()) return std::nullopt;
    std::uniform_int_distribution<std::size_t> at(0, opts.size() - 1);
    auto [c, t] = opts[at(rng)];
    std::uniform_int_distribution<int> shape(0, 2);
    switch (shape(rng)) {
      case 0:
        return std::make_pair(Diagram::spider(sig, c, t, 1, 1),
                              Diagram::identity(sig, {t}));
      case 1:
        return std::make_pair(Diagram::spider(sig, c, t, 2, 0),
                              Diagram::cap(sig, t));
      default:
        return std::make_pair(Diagram::spider(sig, c, t, 0, 2),
                              Diagram::cup(sig, t));
    }
  }
};

// ---------------------------------------------------------------------------

class SpiderLoopRule final : public Rule {
 public:
  SpiderLoopRule() : Rule("spider_loop", Soundness::Exact, true) {}

  std::vector<Match> find_matches(const Diagram& d) const override {
    std::vector<Match> out;
    for (std::uint32_t e = 0; e < d.edges().size(); ++e) {
      const Edge& ed = d.edges()[e];
      if (ed.a.node == ed.b.node && is_spider(d, ed.a.node))
        out.push_back(Match{{ed.a.node}, {e}});
    }
    return out;
  }

  Diagram apply(const Diagram& d, const Match& m) const override {
    if (m.nodes.size() != 1 || m.edges.size() != 1 ||
        m.edges[0] >= d.edges().size())
      throw StaleMatchError("spider_loop: malformed match");
    const Edge& loop = d.edges()[m.edges[0]];
    if (loop.a.node != m.nodes[0] || loop.b.node != m.nodes[0] ||
        !is_spider(d, m.nodes[0]))
      throw StaleMatchError("spider_loop: match no longer fits");
    std::vector<Node> nodes = d.nodes();
    std::vector<Edge> edges = d.edges();
    edges.erase(edges.begin() + m.edges[0]);
    renumber_spider_ports(nodes, edges, m.nodes[0]);
    return compact_nodes(d, std::move(nodes), std::move(edges), d.loops(), {});
  }

  std::optional<std::pair<Diagram, Diagram>> sample_instance(
      const SignaturePtr& sig, std::mt19937_64& rng,
      const InstanceHints& hints) const override {
    std::vector<std::pair<SpiderColor, TypeId>> opts;
    for (TypeId t : hints.light_types) opts.emplace_back(SpiderColor::Light, t);
    for (TypeId t : hints.dark_types) opts.emplace_back(SpiderColor::Dark, t);
    if (opts.empty()) return std::nullopt;
    std::uniform_int_distribution<std::size_t> at(0, opts.size() - 1);
    auto [c, t] = opts[at(rng)];
    std::uniform_int_distribution<std::uint32_t> legs(0, hints.max_legs - 2);
    std::uint32_t total = legs(rng);
    std::uniform_int_distribution<std::uint32_t> split(0, total);
    std::uint32_t n = split(rng), mm = total - n;
    // close the last two outputs of spider(n, m+2) into a self-loop
    Diagram lhs = compose_seq(
        Diagram::spider(sig, c, t, n, mm + 2),
        compose_par(id_wires(sig, t, mm), Diagram::cap(sig, t)));
    return std::make_pair(std::move(lhs), Diagram::spider(sig, c, t, n, mm));
  }
};

// ---------------------------------------------------------------------------

class SpiderFuseRule final : public Rule {
 public:
  SpiderFuseRule() : Rule("spider_fuse", Soundness::Exact, true) {}

  std::vector<Match> find_matches(const Diagram& d) const override {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>>
        pairs;
    for (std::uint32_t e = 0; e < d.edges().size(); ++e) {
      const Edge& ed = d.edges()[e];
      std::uint32_t x = ed.a.node, y = ed.b.node;
      if (x == y || !is_spider(d, x) || !is_spider(d, y)) continue;
      const Node& nx = d.nodes()[x];
      const Node& ny = d.nodes()[y];
      if (nx.color != ny.color || nx.type != ny.type) continue;
      auto [lo, hi] = std::minmax(x, y);
      pairs[{lo, hi}].push_back(e);
    }
    std::vector<Match> out;
    out.reserve(pairs.size());
    for (auto& [key, es] : pairs)
      out.push_back(Match{{key.first, key.second}, std::move(es)});
    return out;
  }

  Diagram apply(const Diagram& d, const Match& m) const override {
    if (m.nodes.size() != 2) throw StaleMatchError("spider_fuse: malformed match");
    std::uint32_t x = m.nodes[0], y = m.nodes[1];
    if (!is_spider(d, x) || !is_spider(d, y) || x == y ||
        d.nodes()[x].color != d.nodes()[y].color ||
        d.nodes()[x].type != d.nodes()[y].type)
      throw StaleMatchError("spider_fuse: match no longer fits");
    std::vector<std::uint32_t> conn = connecting_edges(d, x, y);
    std::vector<std::uint32_t> claimed = m.edges;
    std::sort(claimed.begin(), claimed.end());
    if (conn.empty() || claimed != conn)
      throw StaleMatchError("spider_fuse: connecting wires changed");

    std::vector<Node> nodes = d.nodes();
    std::vector<Edge> edges;
    edges.reserve(d.edges().size() - conn.size());
    std::set<std::uint32_t> drop(conn.begin(), conn.end());
    std::uint32_t port_shift = nodes[x].degree;  // keeps y's ports distinct
    for (std::uint32_t e = 0; e < d.edges().size(); ++e) {
      if (drop.count(e)) continue;
      Edge ed = d.edges()[e];
      for (PortRef* p : {&ed.a, &ed.b}) {
        if (p->node == y) {
          p->node = x;
          p->port += port_shift;
        }
      }
      edges.push_back(ed);
    }
    renumber_spider_ports(nodes, edges, x);
    return compact_nodes(d, std::move(nodes), std::move(edges), d.loops(), {y});
  }

  std::optional<std::pair<Diagram, Diagram>> sample_instance(
      const SignaturePtr& sig, std::mt19937_64& rng,
      const InstanceHints& hints) const override {
    std::vector<std::pair<SpiderColor, TypeId>> opts;
    for (TypeId t : hints.light_types) opts.emplace_back(SpiderColor::Light, t);
    for (TypeId t : hints.dark_types) opts.emplace_back(SpiderColor::Dark, t);
    if (opts.empty()) return std::nullopt;
    std::uniform_int_distribution<std::size_t> at(0, opts.size() - 1);
    auto [c, t] = opts[at(rng)];
    std::uniform_int_distribution<std::uint32_t> kd(1, 3);
    std::uint32_t k = std::min(kd(rng), hints.max_legs);
    auto legs = [&](std::uint32_t used) {
      std::uniform_int_distribution<std::uint32_t> ld(0, hints.max_legs - used);
      return ld(rng);
    };
    std::uint32_t ext_a = legs(k), ext_b = legs(k);
    std::uniform_int_distribution<std::uint32_t> sa(0, ext_a), sb(0, ext_b);
    std::uint32_t n_a = sa(rng), m_a = ext_a - n_a;
    std::uint32_t n_b = sb(rng), m_b = ext_b - n_b;
    Diagram lhs = spider_pair(sig, c, c, t, n_a, m_a, n_b, m_b, k);
    Diagram rhs = Diagram::spider(sig, c, t, n_a + n_b, m_a + m_b);
    return std::make_pair(std::move(lhs), std::move(rhs));
  }
};

// ---------------------------------------------------------------------------

class UnitarityRule final : public Rule {
 public:
  UnitarityRule() : Rule("unitarity", Soundness::Exact, false) {}

  std::vector<Match> find_matches(const Diagram& d) const override {
    std::vector<Match> out;
    const Signature& sig = *d.signature();
    // port -> edge lookup
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> at_port;
    for (std::uint32_t e = 0; e < d.edges().size(); ++e) {
      at_port[{d.edges()[e].a.node, d.edges()[e].a.port}] = e;
      at_port[{d.edges()[e].b.node, d.edges()[e].b.port}] = e;
    }
    for (std::uint32_t u = 0; u < d.nodes().size(); ++u) {
      if (d.nodes()[u].kind != NodeKind::Generator) continue;
      const Generator& f = sig.generator(d.nodes()[u].gen);
      if (!f.unitary || f.outputs.empty()) continue;
      std::uint32_t a = static_cast<std::uint32_t>(f.inputs.size());
      // all outputs of u must run straight into one partner box
      std::uint32_t e0 = at_port.at({u, a});
      const Edge& first = d.edges()[e0];
      PortRef other = first.a.node == u && first.a.port == a ? first.b : first.a;
      std::uint32_t v = other.node;
      if (v == u || v >= d.nodes().size()) continue;
      if (d.nodes()[v].kind != NodeKind::Generator) continue;
      if (d.nodes()[v].gen != f.dagger) continue;
      bool ok = true;
      std::vector<std::uint32_t> es;
      for (std::uint32_t j = 0; j < f.outputs.size() && ok; ++j) {
        auto it = at_port.find({u, a + j});
        if (it == at_port.end()) {
          ok = false;
          break;
        }
        const Edge& e = d.edges()[it->second];
        PortRef p = e.a.node == u && e.a.port == a + j ? e.b : e.a;
        if (p.node != v || p.port != j) ok = false;
        es.push_back(it->second);
      }
      if (ok) out.push_back(Match{{u, v}, std::move(es)});
    }
    return out;
  }

  Diagram apply(const Diagram& d, const Match& m) const override {
    if (m.nodes.size() != 2) throw StaleMatchError("unitarity: malformed match");
    std::uint32_t u = m.nodes[0], v = m.nodes[1];
    const Signature& sig = *d.signature();
    if (u >= d.nodes().size() || v >= d.nodes().size() ||
        d.nodes()[u].kind != NodeKind::Generator ||
        d.nodes()[v].kind != NodeKind::Generator)
      throw StaleMatchError("unitarity: match no longer fits");
    const Generator& f = sig.generator(d.nodes()[u].gen);
    if (d.nodes()[v].gen != f.dagger || !f.unitary)
      throw StaleMatchError("unitarity: match no longer fits");
    std::uint32_t a = static_cast<std::uint32_t>(f.inputs.size());
    std::uint32_t b = static_cast<std::uint32_t>(f.outputs.size());

    std::set<std::uint32_t> drop(m.edges.begin(), m.edges.end());
    if (drop.size() != b) throw StaleMatchError("unitarity: wires changed");
    std::vector<Edge> edges;
    for (std::uint32_t e = 0; e < d.edges().size(); ++e)
      if (!drop.count(e)) edges.push_back(d.edges()[e]);

    std::vector<Junction> junctions;
    for (std::uint32_t i = 0; i < a; ++i)
      junctions.push_back(
          Junction{PortRef{u, i}, PortRef{v, b + i}, f.inputs[i]});
    std::map<TypeId, std::uint32_t> loops = d.loops();
    splice(edges, junctions, loops);
    std::vector<std::uint32_t> remove{std::min(u, v), std::max(u, v)};
    return compact_nodes(d, d.nodes(), std::move(edges), std::move(loops), remove);
  }

  std::optional<std::pair<Diagram, Diagram>> sample_instance(
      const SignaturePtr& sig, std::mt19937_64& rng,
      const InstanceHints& hints) const override {
    if (hints.unitary_generators.empty()) return std::nullopt;
    std::uniform_int_distribution<std::size_t> at(
        0, hints.unitary_generators.size() - 1);
    GenId g = hints.unitary_generators[at(rng)];
    const Generator& f = sig->generator(g);
    if (f.outputs.empty()) return std::nullopt;
    Diagram lhs = compose_seq(Diagram::generator(sig, g),
                              Diagram::generator(sig, f.dagger));
    return std::make_pair(std::move(lhs), Diagram::identity(sig, f.inputs));
  }
};

// ---------------------------------------------------------------------------

class ComplementarityHopfRule final : public Rule {
 public:
  ComplementarityHopfRule()
      : Rule("complementarity_hopf", Soundness::UpToScalar, true) {}

  std::vector<Match> find_matches(const Diagram& d) const override {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>>
        pairs;
    for (std::uint32_t e = 0; e < d.edges().size(); ++e) {
      const Edge& ed = d.edges()[e];
      std::uint32_t x = ed.a.node, y = ed.b.node;
      if (x == y || !is_spider(d, x) || !is_spider(d, y)) continue;
      const Node& nx = d.nodes()[x];
      const Node& ny = d.nodes()[y];
      if (nx.type != ny.type || nx.color == ny.color) continue;
      if (nx.color != SpiderColor::Light) std::swap(x, y);
      pairs[{x, y}].push_back(e);
    }
    std::vector<Match> out;
    for (auto& [key, es] : pairs) {
      // The shipped law is the two-wire Hopf form: the unbiasedness factor
      // <e_i|h_j>^2 = 1/d is leg-independent only for an even number of
      // connecting wires, so a single wire cannot fall off soundly.
      if (es.size() == 2)
        out.push_back(Match{{key.first, key.second}, std::move(es)});
    }
    return out;
  }

  Diagram apply(const Diagram& d, const Match& m) const override {
    if (m.nodes.size() != 2 || m.edges.size() != 2)
      throw StaleMatchError("complementarity_hopf: malformed match");
    std::uint32_t x = m.nodes[0], y = m.nodes[1];
    std::vector<std::uint32_t> claimed = m.edges;
    std::sort(claimed.begin(), claimed.end());
    if (!is_spider(d, x) || !is_spider(d, y) ||
        d.nodes()[x].color == d.nodes()[y].color ||
        connecting_edges(d, x, y) != claimed)
      throw StaleMatchError("complementarity_hopf: match no longer fits");
    std::vector<Node> nodes = d.nodes();
    std::vector<Edge> edges = d.edges();
    edges.erase(edges.begin() + claimed[1]);
    edges.erase(edges.begin() + claimed[0]);
    renumber_spider_ports(nodes, edges, x);
    renumber_spider_ports(nodes, edges, y);
    return compact_nodes(d, std::move(nodes), std::move(edges), d.loops(), {});
  }

  std::optional<std::pair<Diagram, Diagram>> sample_instance(
      const SignaturePtr& sig, std::mt19937_64& rng,
      const InstanceHints& hints) const override {
    if (hints.complementary.empty()) return std::nullopt;
    std::uniform_int_distribution<std::size_t> at(0, hints.complementary.size() - 1);
    auto [lt, dt] = hints.complementary[at(rng)];
    if (lt != dt) return std::nullopt;  // complementary pairs live on one type
    TypeId t = lt;
    auto legs = [&](std::uint32_t used) {
      std::uniform_int_distribution<std::uint32_t> ld(0, hints.max_legs - used);
      return ld(rng);
    };
    std::uint32_t ext_a = legs(2), ext_b = legs(2);
    std::uniform_int_distribution<std::uint32_t> sa(0, ext_a), sb(0, ext_b);
    std::uint32_t n_a = sa(rng), m_a = ext_a - n_a;
    std::uint32_t n_b = sb(rng), m_b = ext_b - n_b;
    Diagram lhs = spider_pair(sig, SpiderColor::Light, SpiderColor::Dark, t, n_a,
                              m_a, n_b, m_b, 2);
    Diagram rhs =
        compose_par(Diagram::spider(sig, SpiderColor::Light, t, n_a, m_a),
                    Diagram::spider(sig, SpiderColor::Dark, t, n_b, m_b));
    return std::make_pair(std::move(lhs), std::move(rhs));
  }
};

}  // namespace

RulePtr make_spider_identity_rule() {
  return std::make_shared<SpiderIdentityRule>();
}
RulePtr make_spider_loop_rule() { return std::make_shared<SpiderLoopRule>(); }
RulePtr make_spider_fuse_rule() { return std::make_shared<SpiderFuseRule>(); }
RulePtr make_unitarity_rule() { return std::make_shared<UnitarityRule>(); }
RulePtr make_complementarity_hopf_rule() {
  return std::make_shared<ComplementarityHopfRule>();
}

Ruleset Ruleset::builtin() {
  Ruleset rs;
  rs.add(make_spider_identity_rule());
  rs.add(make_spider_loop_rule());
  rs.add(make_spider_fuse_rule());
  rs.add(make_unitarity_rule());
  rs.add(make_complementarity_hopf_rule());
  return rs;
}

RulePtr Ruleset::find(const std::string& name) const {
  for (const auto& r : rules_)
    if (r->name() == name) return r;
  return nullptr;
}

}  // namespace strand
