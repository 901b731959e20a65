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

#include <string>

#include "strand/diagram.hpp"

namespace strand::render {

/** Graphviz DOT: inputs ranked left, outputs right, boxes for generators,
 * filled circles for spiders (fill by color family), wire types on edges. */
std::string to_dot(const Diagram& d);

/** Standalone SVG with a simple layered layout; no external tools needed. */
std::string to_svg(const Diagram& d);

}  // namespace strand::render
