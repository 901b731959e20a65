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

#include "strand/diagram.hpp"

namespace strand::pregroup {

/**
 * One pregroup factor: an atom with an adjoint order. z = -1 is the left
 * inverse (written `x^l`), z = +1 the right inverse (`x^r`), z = 0 the
 * plain atom. Iterated adjoints are out of scope.
 */
struct SimpleType {
  std::string atom;
  int z = 0;
  friend bool operator==(const SimpleType&, const SimpleType&) = default;
};

using TypeSeq = std::vector<SimpleType>;

/** `x^l` / `x^r` notation; bare identifiers are plain atoms. */
SimpleType parse_simple_type(const std::string& text);
/** Whitespace-separated sequence, e.g. "n^l s n^r". */
TypeSeq parse_type_sequence(const std::string& text);
std::string to_string(const SimpleType& t);
std::string to_string(const TypeSeq& ts);

/** Mirrors the adjoint convention (x^l <-> x^r) on every factor. Lexicons
 * written in the literature's convention load through this. */
TypeSeq mirror(const TypeSeq& ts);

/** The contraction laws x . x^l <= 1 and x^r . x <= 1: true iff the atoms
 * agree and (a.z, b.z) is (0,-1) or (+1,0). */
bool contract_ok(const SimpleType& a, const SimpleType& b);

/**
 * A witness that a type string reduces: a non-crossing set of contracted
 * index pairs plus the surviving positions in left-to-right order.
 */
struct Reduction {
  TypeSeq input;
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> survivors;
};

/**
 * Interval dynamic program deciding whether `ts` reduces to exactly
 * [target] by non-crossing contractions; returns the witness with the
 * lexicographically least pair list, or nullopt. Cubic time.
 */
std::optional<Reduction> reduce_to(const TypeSeq& ts, const SimpleType& target);

/** Exhaustive oracle over all non-crossing contract_ok pairings; lengths
 * above 12 are rejected. */
bool brute_force_reduce(const TypeSeq& ts, const SimpleType& target);

/** Same oracle for reduction to the unit 1 (no survivors at all). */
bool brute_force_reduce_to_unit(const TypeSeq& ts);

/** DP decision for reduction to the unit. */
bool reduces_to_unit(const TypeSeq& ts);

/** The cup-wiring diagram of a reduction: one input wire per simple type
 * (typed by its atom), a cap per contracted pair, survivors passed through
 * to the output boundary in order. Atom names must exist as wire types in
 * `sig`. */
Diagram reduction_to_diagram(const SignaturePtr& sig, const Reduction& r);

}  // namespace strand::pregroup
