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

#include "strand/pregroup.hpp"

#include <algorithm>
#include <sstream>

#include "diagram_internal.hpp"

namespace strand::pregroup {

SimpleType parse_simple_type(const std::string& text) {
  if (text.empty()) throw ParseError("empty pregroup type");
  std::size_t caret = text.find('^');
  if (caret == std::string::npos) return SimpleType{text, 0};
  std::string atom = text.substr(0, caret);
  std::string adj = text.substr(caret + 1);
  if (atom.empty()) throw ParseError("missing atom in '" + text + "'");
  if (adj == "l") return SimpleType{atom, -1};
  if (adj == "r") return SimpleType{atom, +1};
  throw ParseError("adjoint must be ^l or ^r in '" + text + "'");
}

TypeSeq parse_type_sequence(const std::string& text) {
  TypeSeq out;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) out.push_back(parse_simple_type(tok));
  return out;
}

std::string to_string(const SimpleType& t) {
  if (t.z == 0) return t.atom;
  return t.atom + (t.z < 0 ? "^l" : "^r");
}

std::string to_string(const TypeSeq& ts) {
  std::string out;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i) out += ' ';
    out += to_string(ts[i]);
  }
  return out;
}

TypeSeq mirror(const TypeSeq& ts) {
  TypeSeq out = ts;
  for (SimpleType& t : out) t.z = -t.z;
  return out;
}

bool contract_ok(const SimpleType& a, const SimpleType& b) {
  if (a.atom != b.atom) return false;
  return (a.z == 0 && b.z == -1) || (a.z == +1 && b.z == 0);
}

namespace {

/** empty[i][j]: the interval [i, j) contracts away completely. */
std::vector<std::vector<char>> empty_table(const TypeSeq& ts) {
  int n = static_cast<int>(ts.size());
  std::vector<std::vector<char>> empty(n + 1, std::vector<char>(n + 1, 0));
  for (int i = 0; i <= n; ++i) empty[i][i] = 1;
  for (int len = 2; len <= n; len += 2) {
    for (int i = 0; i + len <= n; ++i) {
      int j = i + len;
      for (int k = i + 1; k < j; k += 2) {
        if (contract_ok(ts[i], ts[k]) && empty[i + 1][k] && empty[k + 1][j]) {
          empty[i][j] = 1;
          break;
        }
      }
    }
  }
  return empty;
}

/** Lexicographically least complete matching of [i, j), appended to out.
 * Pairs come out sorted by first coordinate. */
void rebuild(const TypeSeq& ts, const std::vector<std::vector<char>>& empty,
             int i, int j, std::vector<std::pair<int, int>>& out) {
  if (i == j) return;
  for (int k = i + 1; k < j; k += 2) {
    if (contract_ok(ts[i], ts[k]) && empty[i + 1][k] && empty[k + 1][j]) {
      out.emplace_back(i, k);
      rebuild(ts, empty, i + 1, k, out);
      rebuild(ts, empty, k + 1, j, out);
      return;
    }
  }
  throw InternalError("reduction table lost its witness");
}

}  // namespace

std::optional<Reduction> reduce_to(const TypeSeq& ts, const SimpleType& target) {
  int n = static_cast<int>(ts.size());
  std::vector<std::vector<char>> empty = empty_table(ts);
  std::optional<std::vector<std::pair<int, int>>> best;
  int best_pos = -1;
  for (int p = 0; p < n; ++p) {
    if (!(ts[p] == target)) continue;
    if (!empty[0][p] || !empty[p + 1][n]) continue;
    std::vector<std::pair<int, int>> pairs;
    rebuild(ts, empty, 0, p, pairs);
    rebuild(ts, empty, p + 1, n, pairs);
    if (!best || pairs < *best) {
      best = std::move(pairs);
      best_pos = p;
    }
  }
  if (!best) return std::nullopt;
  Reduction r;
  r.input = ts;
  r.pairs = std::move(*best);
  r.survivors = {best_pos};
  return r;
}

namespace {

bool can_empty_bf(const TypeSeq& ts, int i, int j) {
  if (i == j) return true;
  for (int k = i + 1; k < j; k += 2) {
    if (contract_ok(ts[i], ts[k]) && can_empty_bf(ts, i + 1, k) &&
        can_empty_bf(ts, k + 1, j))
      return true;
  }
  return false;
}

bool search_bf(const TypeSeq& ts, int i, std::vector<int>& survivors,
               const SimpleType& target) {
  int n = static_cast<int>(ts.size());
  if (static_cast<int>(survivors.size()) > 1) return false;
  if (i == n)
    return survivors.size() == 1 && ts[survivors[0]] == target;
  // ts[i] survives
  survivors.push_back(i);
  if (search_bf(ts, i + 1, survivors, target)) return true;
  survivors.pop_back();
  // or pairs with some k, with everything strictly inside contracted away
  for (int k = i + 1; k < n; k += 2) {
    if (!contract_ok(ts[i], ts[k])) continue;
    if (!can_empty_bf(ts, i + 1, k)) continue;
    if (search_bf(ts, k + 1, survivors, target)) return true;
  }
  return false;
}

}  // namespace

bool brute_force_reduce(const TypeSeq& ts, const SimpleType& target) {
  if (ts.size() > 12)
    throw Error("brute_force_reduce is limited to strings of length 12");
  std::vector<int> survivors;
  return search_bf(ts, 0, survivors, target);
}

bool brute_force_reduce_to_unit(const TypeSeq& ts) {
  if (ts.size() > 12)
    throw Error("brute_force_reduce is limited to strings of length 12");
  return can_empty_bf(ts, 0, static_cast<int>(ts.size()));
}

bool reduces_to_unit(const TypeSeq& ts) {
  return empty_table(ts)[0][ts.size()] != 0;
}

Diagram reduction_to_diagram(const SignaturePtr& sig, const Reduction& r) {
  DiagramBuilder b(sig);
  std::vector<std::uint32_t> wires;
  wires.reserve(r.input.size());
  for (const SimpleType& t : r.input)
    wires.push_back(b.add_input_node(sig->type_id(t.atom)));
  for (const auto& [p, q] : r.pairs)
    b.add_edge(PortRef{wires.at(p), 0}, PortRef{wires.at(q), 0});
  for (int s : r.survivors) {
    std::uint32_t out = b.add_output_node(sig->type_id(r.input.at(s).atom));
    b.add_edge(PortRef{wires.at(s), 0}, PortRef{out, 0});
  }
  return b.finish();
}

}  // namespace strand::pregroup
