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
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "strand/error.hpp"

namespace strand {

using TypeId = std::uint32_t;
using GenId = std::uint32_t;

/** A wire type. Dimension-free: concrete dimensions live in tensor models. */
struct WireType {
  std::string name;
};

/**
 * A process constant. Every generator has a unique dagger partner whose
 * inputs/outputs are the generator's outputs/inputs (order preserved, so
 * that the dagger stays covariant for parallel composition).
 */
struct Generator {
  std::string name;
  std::vector<TypeId> inputs;
  std::vector<TypeId> outputs;
  GenId dagger = 0;
  bool unitary = false;
};

/**
 * The ambient collection of wire types and generators a diagram is built
 * over. Signatures are assembled once and then shared immutably between
 * diagrams via `freeze()`.
 */
class Signature {
 public:
  TypeId add_type(const std::string& name);

  /**
   * Registers a generator. If `dagger_name` is empty and the generator is
   * not self-adjoint-by-name, a partner named `<name>_dag` is created
   * automatically. Registering `f` with `dagger_name == name` declares a
   * self-adjoint box (requires inputs == outputs).
   */
  GenId add_generator(const std::string& name, std::vector<TypeId> inputs,
                      std::vector<TypeId> outputs,
                      const std::string& dagger_name = "", bool unitary = false);

  bool has_type(const std::string& name) const;
  bool has_generator(const std::string& name) const;
  TypeId type_id(const std::string& name) const;
  GenId generator_id(const std::string& name) const;

  const WireType& type(TypeId id) const { return types_.at(id); }
  const Generator& generator(GenId id) const { return generators_.at(id); }
  std::size_t type_count() const { return types_.size(); }
  std::size_t generator_count() const { return generators_.size(); }

  void set_unitary(GenId id, bool unitary);

  /** Structural equality, by names and arities. */
  bool operator==(const Signature& other) const;

  std::shared_ptr<const Signature> freeze() && {
    return std::make_shared<const Signature>(std::move(*this));
  }

 private:
  std::vector<WireType> types_;
  std::vector<Generator> generators_;
  std::unordered_map<std::string, TypeId> type_index_;
  std::unordered_map<std::string, GenId> gen_index_;
};

using SignaturePtr = std::shared_ptr<const Signature>;

}  // namespace strand
