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
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "strand/diagram.hpp"

namespace strand {

/** Exact rules preserve the interpretation on the nose; up-to-scalar rules
 * may discard a nonzero global scalar, recorded abstractly in the trace. */
enum class Soundness { Exact, UpToScalar };

/**
 * One occurrence of a rule in a host diagram. `nodes` are the matched
 * internal nodes in rule-specific order; `edges` the matched host edges.
 */
struct Match {
  std::vector<std::uint32_t> nodes;
  std::vector<std::uint32_t> edges;
};

/** Capabilities the soundness harness may use when sampling rule
 * instances: which (color, type) pairs have a basis in the model, and how
 * many legs a sampled spider may carry. */
struct InstanceHints {
  std::vector<TypeId> light_types;
  std::vector<TypeId> dark_types;
  std::vector<std::pair<TypeId, TypeId>> complementary;  // (light, dark) type pairs
  std::vector<GenId> unitary_generators;
  std::uint32_t max_legs = 6;
};

/**
 * A rewrite rule: subgraph occurrence search plus occurrence replacement.
 * Both are pure; `apply` throws StaleMatchError if the match does not fit
 * the diagram anymore.
 */
class Rule {
 public:
  Rule(std::string name, Soundness soundness, bool leg_polymorphic)
      : name_(std::move(name)),
        soundness_(soundness),
        leg_polymorphic_(leg_polymorphic) {}
  virtual ~Rule() = default;

  const std::string& name() const { return name_; }
  Soundness soundness() const { return soundness_; }
  bool leg_polymorphic() const { return leg_polymorphic_; }

  virtual std::vector<Match> find_matches(const Diagram& d) const = 0;
  virtual Diagram apply(const Diagram& d, const Match& m) const = 0;

  /** A concrete (lhs, rhs) instance for tensor-level soundness checking;
   * nullopt when the hints cannot support one. */
  virtual std::optional<std::pair<Diagram, Diagram>> sample_instance(
      const SignaturePtr& sig, std::mt19937_64& rng,
      const InstanceHints& hints) const = 0;

 private:
  std::string name_;
  Soundness soundness_;
  bool leg_polymorphic_;
};

using RulePtr = std::shared_ptr<const Rule>;

/** Priority-ordered rule collection. The shipped ruleset is
 * spider_identity > spider_loop > spider_fuse > unitarity >
 * complementarity_hopf; user rules follow in file order. */
class Ruleset {
 public:
  static Ruleset builtin();
  static Ruleset empty() { return Ruleset(); }

  void add(RulePtr rule) { rules_.push_back(std::move(rule)); }
  const std::vector<RulePtr>& rules() const { return rules_; }
  RulePtr find(const std::string& name) const;

 private:
  std::vector<RulePtr> rules_;
};

// Shipped rule constructors (also reachable via Ruleset::builtin()).
RulePtr make_spider_identity_rule();
RulePtr make_spider_loop_rule();
RulePtr make_spider_fuse_rule();
RulePtr make_unitarity_rule();
RulePtr make_complementarity_hopf_rule();

/**
 * A rule given by a left/right diagram pair with equal boundary types.
 * Internal nodes listed in `persistent` survive the rewrite: extra host
 * legs beyond the pattern's stay attached (leg-polymorphic matching), and
 * several left nodes may merge into one right node. Only spiders may be
 * persistent. The left side must be connected and loop-free.
 */
class UserRule : public Rule {
 public:
  UserRule(std::string name, Diagram lhs, Diagram rhs, Soundness soundness,
           bool leg_polymorphic,
           std::map<std::uint32_t, std::uint32_t> persistent = {});

  std::vector<Match> find_matches(const Diagram& d) const override;
  Diagram apply(const Diagram& d, const Match& m) const override;
  std::optional<std::pair<Diagram, Diagram>> sample_instance(
      const SignaturePtr& sig, std::mt19937_64& rng,
      const InstanceHints& hints) const override;

  const Diagram& lhs() const { return lhs_; }
  const Diagram& rhs() const { return rhs_; }

 private:
  struct Embedding;
  bool extend(const Diagram& d, Embedding& emb, std::size_t next,
              std::vector<Match>& out, bool all) const;

  Diagram lhs_;
  Diagram rhs_;
  std::map<std::uint32_t, std::uint32_t> persistent_;  // lhs node -> rhs node
  std::vector<std::uint32_t> lhs_internal_;            // ordered for search
  std::vector<std::uint32_t> lhs_edge_order_;
};

struct TraceStep {
  std::string rule;
  std::vector<std::uint32_t> nodes;  // matched nodes, in the pre-step diagram
  std::uint64_t hash = 0;            // canonical hash after the step
};

struct RewriteTrace {
  std::uint64_t initial_hash = 0;
  std::vector<TraceStep> steps;
  std::vector<std::string> scalars;  // formal markers dropped by up-to-scalar rules
  bool budget_exhausted = false;
  std::string note;
};

struct NormalizeOptions {
  std::uint32_t max_steps = 1000;
  /** When set, matches of the selected rule are chosen uniformly at random
   * instead of by lowest canonical node index. */
  std::optional<std::uint64_t> random_seed;
};

struct NormalizeResult {
  Diagram diagram;
  RewriteTrace trace;
};

NormalizeResult normalize(const Diagram& d, const Ruleset& rules,
                          const NormalizeOptions& options = {});

/** Re-runs a trace from `initial`, checking every recorded hash. Returns
 * false (and a reason) on any divergence. */
bool replay(const Diagram& initial, const RewriteTrace& trace,
            const Ruleset& rules, std::string* why = nullptr);

enum class EqVerdict { EqualExact, EqualUpToScalar, Unknown };

const char* to_string(EqVerdict v);

struct CheckEqualResult {
  EqVerdict verdict = EqVerdict::Unknown;
  RewriteTrace trace_a, trace_b;
};

/** Normalizes both sides and compares canonical forms. Throws
 * TypeMismatchError when the boundary types differ. */
CheckEqualResult check_equal_by_rewriting(const Diagram& a, const Diagram& b,
                                          const Ruleset& rules,
                                          std::uint32_t budget = 1000);

}  // namespace strand
