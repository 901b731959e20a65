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

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "strand/rewrite.hpp"

namespace strand {

using Cplx = std::complex<double>;

/** The three shipped scalar carriers. Boolean addition is disjunction, so
 * boolean models interpret diagrams as relations. */
enum class SemiringKind { Complex, NonnegReal, Boolean };

const char* to_string(SemiringKind k);
SemiringKind semiring_from_string(const std::string& name);

/**
 * A dense tensor whose axes follow the diagram boundary: output legs first
 * (by position), then input legs. Row-major storage.
 */
struct TensorValue {
  SemiringKind kind = SemiringKind::Complex;
  std::vector<std::size_t> shape;
  std::size_t out_rank = 0;
  std::variant<std::vector<Cplx>, std::vector<double>, std::vector<std::uint8_t>>
      data;

  std::size_t size() const;
  /** Entry as a complex number regardless of carrier. */
  Cplx entry(std::size_t flat) const;
  static TensorValue scalar(SemiringKind kind, Cplx value);
};

enum class CompareMode { Exact, UpToScalar };

struct TensorCompare {
  bool equal = false;
  std::optional<Cplx> scale;  // the lambda found in up-to-scalar mode
};

/** Entrywise comparison; up-to-scalar estimates a nonzero lambda from the
 * largest-magnitude entry pair. Boolean tensors compare exactly in both
 * modes. Throws TypeMismatchError on shape or carrier mismatch. */
TensorCompare equal_tensors(const TensorValue& a, const TensorValue& b,
                            CompareMode mode, double tol = 1e-9);

/**
 * Dimension and tensor assignments turning diagrams into concrete
 * processes. Generator tensors are stored with complex entries whatever
 * the carrier; the carrier constrains them at finalize().
 */
class Model {
 public:
  struct Options {
    bool check_dagger = true;  // partner tensors must be conjugate transposes
    double tol = 1e-9;
  };

  Model(SignaturePtr sig, SemiringKind kind);

  void set_dim(TypeId t, std::size_t dim);
  /** Entries row-major over [outputs..., inputs...]. */
  void set_generator(GenId g, std::vector<Cplx> entries);
  /** `basis[i]` is the i-th basis vector; entries must be real so that
   * spider legs stay interchangeable. */
  void set_basis(SpiderColor color, TypeId t, std::vector<std::vector<double>> basis);

  /** Fills missing partner tensors with conjugate transposes and checks
   * every invariant (shapes, carrier constraints, basis orthonormality,
   * dagger consistency unless disabled). */
  void finalize() { finalize(Options{}); }
  void finalize(const Options& options);

  SemiringKind semiring() const { return kind_; }
  const SignaturePtr& signature() const { return sig_; }
  bool has_dim(TypeId t) const;
  std::size_t dim(TypeId t) const;
  bool has_generator(GenId g) const;
  const std::vector<Cplx>& generator_entries(GenId g) const;
  bool has_basis(SpiderColor color, TypeId t) const;
  const std::vector<std::vector<double>>& basis(SpiderColor color, TypeId t) const;
  std::vector<std::pair<SpiderColor, TypeId>> basis_keys() const;

  /** What the soundness harness may instantiate against this model.
   * Complementary pairs are detected numerically (mutually unbiased
   * light/dark bases on the same type). */
  InstanceHints hints() const;

 private:
  SignaturePtr sig_;
  SemiringKind kind_;
  std::map<TypeId, std::size_t> dims_;
  std::map<GenId, std::vector<Cplx>> generators_;
  std::map<std::pair<std::uint8_t, TypeId>, std::vector<std::vector<double>>>
      bases_;
  bool finalized_ = false;

  void check_entries(const std::vector<Cplx>& entries, double tol,
                     const std::string& what) const;
};

/**
 * Pairwise contraction order over the diagram's internal nodes, greedy on
 * the number of open legs of the intermediate (uniform-dimension cost
 * model). Steps name components by their smallest node id.
 */
struct ContractionPlan {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> steps;
  std::uint32_t max_intermediate_legs = 0;
  double cost_estimate = 0;  // sum of 2^legs over intermediates
};

ContractionPlan contraction_plan(const Diagram& d);

/** Contracts the diagram in the model: cups become unnormalized
 * sum-over-basis pairs, spiders the basis copy tensors, circles dimension
 * scalars; closed components multiply in. */
TensorValue interpret(const Diagram& d, const Model& m);
TensorValue interpret(const Diagram& d, const Model& m,
                      const ContractionPlan& plan);

struct SoundnessFailure {
  std::string rule;
  int case_index = 0;
  std::string detail;
};

struct SoundnessReport {
  int cases_run = 0;
  int cases_skipped = 0;
  std::vector<SoundnessFailure> failures;
  bool ok() const { return failures.empty(); }
};

/** Interprets sampled instances of every rule and checks tensor equality
 * in the rule's declared mode. Cases get independent deterministic seeds
 * and run concurrently. Failures are data, not errors. */
SoundnessReport soundness_harness(const Ruleset& rules, const Model& model,
                                  int cases_per_rule, std::uint64_t seed,
                                  double tol = 1e-9);

}  // namespace strand
