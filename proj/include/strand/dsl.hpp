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

#include <cstdint>
#include <string>
#include <vector>

#include "strand/diagram.hpp"

namespace strand::dsl {

/**
 * Textual diagram expressions.
 *
 *   e ::= e . e            sequential; reads left-to-right as "then"
 *       | e * e            parallel; binds tighter than .
 *       | id[T, ...] | cup[T] | cap[T] | swap[S, T]
 *       | spider{light|dark, T, n_in, n_out}
 *       | dag(e) | tr(e) | name | (e)
 *
 * Note the orientation: `f . g` applies f first, matching the top-to-bottom
 * reading of diagrams, while the symbolic composition g o f of the
 * literature reads right-to-left.
 */
struct Expr {
  enum class Kind {
    Id,
    Gen,
    Seq,
    Par,
    Cup,
    Cap,
    Swap,
    Spider,
    Dagger,
    Transpose
  };
  Kind kind = Kind::Id;
  int line = 1, column = 1;
  std::vector<std::string> types;  // Id: all; Cup/Cap/Spider: one; Swap: two
  std::string name;                // Gen
  SpiderColor color = SpiderColor::Light;
  std::uint32_t n_in = 0, n_out = 0;  // Spider
  std::vector<Expr> children;         // Seq/Par (two), Dagger/Transpose (one)
};

/** Throws ParseError with 1-based line/column on bad syntax. */
Expr parse_expr(const std::string& text);

/** Builds the diagram; name and type errors carry the position of the
 * offending sub-expression. */
Diagram elaborate(const Expr& expr, const SignaturePtr& sig);

Diagram parse_diagram(const std::string& text, const SignaturePtr& sig);

/** Minimal-parentheses form; parses back to the same diagram. */
std::string pretty(const Expr& expr);

}  // namespace strand::dsl
