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
#include <sstream>

#include "strand/diagram.hpp"

namespace strand {

namespace {

// Port identity inside the canonical form: generator ports are ordered,
// spider legs are interchangeable, boundary nodes have one port.
long long port_key(const Diagram& d, PortRef p) {
  const Node& n = d.nodes()[p.node];
  if (n.kind == NodeKind::Generator) return static_cast<long long>(p.port);
  if (n.kind == NodeKind::Spider) return -1;
  return 0;
}

struct Workspace {
  const Diagram& d;
  // incident endpoints per node: (edge, side)
  std::vector<std::vector<std::pair<std::uint32_t, int>>> inc;

  explicit Workspace(const Diagram& diagram) : d(diagram) {
    inc.resize(d.nodes().size());
    const auto& edges = d.edges();
    for (std::uint32_t e = 0; e < edges.size(); ++e) {
      inc[edges[e].a.node].emplace_back(e, 0);
      inc[edges[e].b.node].emplace_back(e, 1);
    }
  }

  PortRef endpoint(std::uint32_t e, int side) const {
    return side ? d.edges()[e].b : d.edges()[e].a;
  }
};

std::string node_label(const Diagram& d, const Node& n) {
  switch (n.kind) {
    case NodeKind::Generator:
      return "G " + d.signature()->generator(n.gen).name;
    case NodeKind::Spider:
      return std::string("S ") + to_string(n.color) + " " +
             d.signature()->type(n.type).name;
    case NodeKind::Input:
      return "I " + std::to_string(n.position) + " " +
             d.signature()->type(n.type).name;
    case NodeKind::Output:
      return "O " + std::to_string(n.position) + " " +
             d.signature()->type(n.type).name;
  }
  return {};
}

// Classic 1-dimensional Weisfeiler-Leman refinement over the node coloring.
std::vector<long long> refine(const Workspace& ws, std::vector<long long> colors) {
  const std::size_t n = colors.size();
  for (;;) {
    const std::size_t distinct_before =
        std::set<long long>(colors.begin(), colors.end()).size();
    std::vector<std::vector<long long>> keys(n);
    for (std::uint32_t u = 0; u < n; ++u) {
      std::vector<std::array<long long, 3>> sig;
      sig.reserve(ws.inc[u].size());
      for (auto [e, side] : ws.inc[u]) {
        PortRef own = ws.endpoint(e, side);
        PortRef other = ws.endpoint(e, 1 - side);
        sig.push_back({port_key(ws.d, own), colors[other.node],
                       port_key(ws.d, other)});
      }
      std::sort(sig.begin(), sig.end());
      std::vector<long long> key;
      key.reserve(1 + 3 * sig.size());
      key.push_back(colors[u]);
      for (const auto& t : sig) {
        key.push_back(t[0]);
        key.push_back(t[1]);
        key.push_back(t[2]);
      }
      keys[u] = std::move(key);
    }
    std::map<std::vector<long long>, long long> rank;
    for (const auto& k : keys) rank.emplace(k, 0);
    long long next = 0;
    for (auto& [k, r] : rank) r = next++;
    for (std::uint32_t u = 0; u < n; ++u) colors[u] = rank[keys[u]];
    if (static_cast<std::size_t>(next) == distinct_before) return colors;
  }
}

bool discrete(const std::vector<long long>& colors) {
  std::map<long long, int> count;
  for (long long c : colors) count[c] += 1;
  for (const auto& [c, k] : count)
    if (k > 1) return false;
  return true;
}

Canonical serialize(const Workspace& ws, const std::vector<long long>& colors) {
  const Diagram& d = ws.d;
  const std::size_t n = colors.size();
  std::vector<std::uint32_t> order(n);
  for (std::uint32_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return colors[a] < colors[b];
  });
  std::vector<std::uint32_t> rank_of(n);
  for (std::uint32_t r = 0; r < n; ++r) rank_of[order[r]] = r;

  std::ostringstream os;
  os << "strand-canon-1\n";
  os << "d " << n << ' ' << d.edges().size() << ' ' << d.input_nodes().size()
     << ' ' << d.output_nodes().size() << '\n';
  for (std::uint32_t r = 0; r < n; ++r)
    os << 'v' << r << ' ' << node_label(d, d.nodes()[order[r]]) << '\n';

  std::vector<std::array<long long, 4>> lines;
  lines.reserve(d.edges().size());
  for (const Edge& e : d.edges()) {
    std::array<long long, 2> pa{rank_of[e.a.node], port_key(d, e.a)};
    std::array<long long, 2> pb{rank_of[e.b.node], port_key(d, e.b)};
    if (pb < pa) std::swap(pa, pb);
    lines.push_back({pa[0], pa[1], pb[0], pb[1]});
  }
  std::sort(lines.begin(), lines.end());
  auto put_port = [&os](long long pk) {
    if (pk < 0)
      os << '*';
    else
      os << pk;
  };
  for (const auto& l : lines) {
    os << "e " << l[0] << ' ';
    put_port(l[1]);
    os << ' ' << l[2] << ' ';
    put_port(l[3]);
    os << '\n';
  }
  for (const auto& [t, c] : d.loops())
    if (c > 0) os << "l " << d.signature()->type(t).name << ' ' << c << '\n';
  return Canonical{os.str(), std::move(rank_of)};
}

// Individualization-refinement search for the lexicographically least
// serialization over all discrete refinements.
Canonical search(const Workspace& ws, const std::vector<long long>& colors) {
  if (discrete(colors)) return serialize(ws, colors);

  // target cell: smallest color value with multiplicity > 1
  std::map<long long, std::vector<std::uint32_t>> cells;
  for (std::uint32_t u = 0; u < colors.size(); ++u) cells[colors[u]].push_back(u);
  const std::vector<std::uint32_t>* cell = nullptr;
  for (const auto& [c, members] : cells) {
    if (members.size() > 1) {
      cell = &members;
      break;
    }
  }

  Canonical best;
  for (std::uint32_t v : *cell) {
    std::vector<long long> branch(colors.size());
    for (std::uint32_t u = 0; u < colors.size(); ++u) branch[u] = colors[u] * 2;
    branch[v] += 1;
    Canonical c = search(ws, refine(ws, std::move(branch)));
    if (best.bytes.empty() || c.bytes < best.bytes) best = std::move(c);
  }
  return best;
}

}  // namespace

Canonical canonicalize(const Diagram& d) {
  Workspace ws(d);
  std::vector<long long> colors(d.nodes().size());
  {
    std::map<std::string, long long> label_rank;
    std::vector<std::string> labels;
    labels.reserve(d.nodes().size());
    for (const Node& n : d.nodes()) {
      labels.push_back(node_label(d, n));
      label_rank.emplace(labels.back(), 0);
    }
    long long next = 0;
    for (auto& [k, r] : label_rank) r = next++;
    for (std::size_t i = 0; i < labels.size(); ++i) colors[i] = label_rank[labels[i]];
  }
  return search(ws, refine(ws, std::move(colors)));
}

std::string canonical_form(const Diagram& d) { return canonicalize(d).bytes; }

std::uint64_t canonical_hash(const Diagram& d) { return fnv1a(canonical_form(d)); }

bool canonical_equal(const Diagram& a, const Diagram& b) {
  return canonical_form(a) == canonical_form(b);
}

}  // namespace strand
