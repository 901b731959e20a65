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

#include <optional>
#include <string>
#include <vector>

#include "strand/tensor.hpp"

namespace strand::proto {

/**
 * Outcome of a protocol demonstration. The rewrite and tensor checks are
 * independent; the demo passes only when both do.
 */
struct ProtocolReport {
  std::string name;
  RewriteTrace trace;
  bool rewrite_ok = false;
  bool tensor_ok = false;
  std::string tensor_mode = "up-to-scalar";
  double tolerance = 1e-9;
  std::optional<Cplx> scalar;  // lambda found by the tensor comparison
  double elapsed_seconds = 0;
  bool passed() const { return rewrite_ok && tensor_ok; }
};

/**
 * Teleportation: an input wire, a shared cup, a bell effect decorated with
 * the chosen unitary, and the matching correction box. Verified to equal
 * the plain wire both by rewriting (within `budget` steps) and by tensor
 * contraction up to a scalar. The unitary must be a flagged one-wire
 * endo-generator whose tensor is numerically unitary.
 */
ProtocolReport teleportation_demo(const Model& model,
                                  const std::string& unitary_name,
                                  std::uint32_t budget = 50, double tol = 1e-9);

/**
 * Entanglement swapping: two cups, a decorated bell effect on the middle
 * wires and a correction, verified to equal the outer cup. `misroute`
 * deliberately applies the effect to the first cup's own legs; the
 * resulting diagram must fail both checks (negative control).
 */
ProtocolReport swapping_demo(const Model& model, const std::string& unitary_name,
                             bool misroute = false, std::uint32_t budget = 50,
                             double tol = 1e-9);

/** A conditional distribution as a row-stochastic matrix: entry (x, y) is
 * M(y|x). */
struct Channel {
  std::size_t in_dim = 0;   // |X|
  std::size_t out_dim = 0;  // |Y|
  std::vector<double> entries;

  double operator()(std::size_t x, std::size_t y) const {
    return entries.at(x * out_dim + y);
  }
  void validate(double tol = 1e-12) const;
};

struct Prior {
  std::vector<double> p;
  void validate(double tol = 1e-12) const;
};

struct BayesResult {
  Channel inverse;               // rows indexed by y: entry (y, x) = B(x|y)
  std::vector<double> marginal;  // q(y)
  std::vector<std::size_t> unsupported;  // y with q(y) <= tol, rows zeroed
};

/**
 * Bayesian inversion B(x|y) = M(y|x) p(x) / q(y), computed by the rule and
 * re-derived diagrammatically by transposing the channel across the
 * prior-weighted cup and inverse-marginal cap; the two paths must agree
 * entrywise within 1e-12 (an internal consistency assertion).
 */
BayesResult bayes_invert(const Prior& prior, const Channel& channel,
                         double tol = 1e-12);

}  // namespace strand::proto
