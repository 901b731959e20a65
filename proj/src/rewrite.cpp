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

#include "strand/rewrite.hpp"

#include <algorithm>
#include <set>

namespace strand {

namespace {

const std::set<std::string>& shipped_rule_names() {
  static const std::set<std::string> names{
      "spider_identity", "spider_loop", "spider_fuse", "unitarity",
      "complementarity_hopf"};
  return names;
}

// Sort key making the match choice independent of internal node ids:
// canonical ranks of the matched nodes (sorted, then raw), then the
// canonical endpoint tuples of the matched edges.
std::vector<long long> match_key(const Diagram& d, const Canonical& canon,
                                 const Match& m) {
  std::vector<long long> key;
  std::vector<long long> ranks;
  ranks.reserve(m.nodes.size());
  for (std::uint32_t n : m.nodes) ranks.push_back(canon.rank_of[n]);
  std::vector<long long> sorted = ranks;
  std::sort(sorted.begin(), sorted.end());
  key.insert(key.end(), sorted.begin(), sorted.end());
  key.push_back(-1);
  key.insert(key.end(), ranks.begin(), ranks.end());
  key.push_back(-1);
  for (std::uint32_t e : m.edges) {
    const Edge& ed = d.edges()[e];
    auto pk = [&](PortRef p) -> std::pair<long long, long long> {
      const Node& n = d.nodes()[p.node];
      long long port = n.kind == NodeKind::Generator
                           ? static_cast<long long>(p.port)
                           : -1;
      return {canon.rank_of[p.node], port};
    };
    auto a = pk(ed.a);
    auto b = pk(ed.b);
    if (b < a) std::swap(a, b);
    key.push_back(a.first);
    key.push_back(a.second);
    key.push_back(b.first);
    key.push_back(b.second);
  }
  return key;
}

std::string scalar_marker(const Diagram& d, const Rule& rule, const Match& m) {
  std::string marker = rule.name();
  if (!m.edges.empty() && m.edges[0] < d.edges().size()) {
    TypeId t = d.port_type(d.edges()[m.edges[0]].a);
    marker += "(" + d.signature()->type(t).name + ")";
  }
  return marker;
}

}  // namespace

NormalizeResult normalize(const Diagram& input, const Ruleset& rules,
                          const NormalizeOptions& options) {
  Diagram d = input;
  RewriteTrace trace;
  trace.initial_hash = canonical_hash(d);
  trace.note =
      "wire bending is resolved by boundary splicing at construction; "
      "steps below start from the spliced graph";
  std::optional<std::mt19937_64> rng;
  if (options.random_seed) rng.emplace(*options.random_seed);

  for (std::uint32_t step = 0;; ++step) {
    const Rule* chosen = nullptr;
    std::vector<Match> matches;
    for (const RulePtr& r : rules.rules()) {
      matches = r->find_matches(d);
      if (!matches.empty()) {
        chosen = r.get();
        break;
      }
    }
    if (!chosen) break;
    if (step >= options.max_steps) {
      trace.budget_exhausted = true;
      break;
    }

    std::size_t pick = 0;
    if (rng) {
      std::uniform_int_distribution<std::size_t> at(0, matches.size() - 1);
      pick = at(*rng);
    } else if (matches.size() > 1) {
      Canonical canon = canonicalize(d);
      std::vector<long long> best;
      for (std::size_t i = 0; i < matches.size(); ++i) {
        std::vector<long long> key = match_key(d, canon, matches[i]);
        if (i == 0 || key < best) {
          best = std::move(key);
          pick = i;
        }
      }
    }

    const Match& m = matches[pick];
    Diagram next = chosen->apply(d, m);
    if (shipped_rule_names().count(chosen->name())) {
      // every shipped rule strictly shrinks (nodes, edges) lexicographically
      auto before = std::make_pair(d.nodes().size(), d.edges().size());
      auto after = std::make_pair(next.nodes().size(), next.edges().size());
      if (!(after < before))
        throw InternalError("shipped rule did not decrease the diagram");
    }
    if (chosen->soundness() == Soundness::UpToScalar)
      trace.scalars.push_back(scalar_marker(d, *chosen, m));
    trace.steps.push_back(
        TraceStep{chosen->name(), m.nodes, canonical_hash(next)});
    d = std::move(next);
  }
  return NormalizeResult{std::move(d), std::move(trace)};
}

bool replay(const Diagram& initial, const RewriteTrace& trace,
            const Ruleset& rules, std::string* why) {
  auto fail = [&](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  Diagram d = initial;
  if (canonical_hash(d) != trace.initial_hash)
    return fail("initial diagram hash differs");
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const TraceStep& step = trace.steps[i];
    RulePtr rule = rules.find(step.rule);
    if (!rule) return fail("unknown rule '" + step.rule + "'");
    std::vector<Match> matches = rule->find_matches(d);
    const Match* hit = nullptr;
    for (const Match& m : matches) {
      if (m.nodes == step.nodes) {
        hit = &m;
        break;
      }
    }
    if (!hit)
      return fail("step " + std::to_string(i) + ": recorded match not found");
    d = rule->apply(d, *hit);
    if (canonical_hash(d) != step.hash)
      return fail("step " + std::to_string(i) + ": hash mismatch");
  }
  return true;
}

const char* to_string(EqVerdict v) {
  switch (v) {
    case EqVerdict::EqualExact:
      return "equal-exact";
    case EqVerdict::EqualUpToScalar:
      return "equal-up-to-scalar";
    case EqVerdict::Unknown:
      return "unknown";
  }
  return "unknown";
}

CheckEqualResult check_equal_by_rewriting(const Diagram& a, const Diagram& b,
                                          const Ruleset& rules,
                                          std::uint32_t budget) {
  auto type_names = [](const Diagram& d, const std::vector<TypeId>& ts) {
    std::vector<std::string> out;
    for (TypeId t : ts) out.push_back(d.signature()->type(t).name);
    return out;
  };
  if (type_names(a, a.input_types()) != type_names(b, b.input_types()) ||
      type_names(a, a.output_types()) != type_names(b, b.output_types()))
    throw TypeMismatchError("cannot compare diagrams with different boundaries");

  NormalizeOptions opt;
  opt.max_steps = budget;
  CheckEqualResult res;
  NormalizeResult na = normalize(a, rules, opt);
  NormalizeResult nb = normalize(b, rules, opt);
  res.trace_a = na.trace;
  res.trace_b = nb.trace;
  if (canonical_form(na.diagram) != canonical_form(nb.diagram)) {
    res.verdict = EqVerdict::Unknown;
    return res;
  }
  std::vector<std::string> sa = na.trace.scalars;
  std::vector<std::string> sb = nb.trace.scalars;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  // identical dropped-scalar multisets cancel; anything else is only up to
  // a scalar
  res.verdict = sa == sb ? EqVerdict::EqualExact : EqVerdict::EqualUpToScalar;
  return res;
}

}  // namespace strand
