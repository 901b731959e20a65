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

#include "strand/signature.hpp"

#include <algorithm>

namespace strand {

TypeId Signature::add_type(const std::string& name) {
  if (name.empty()) throw Error("wire type name must not be empty");
  auto it = type_index_.find(name);
  if (it != type_index_.end()) return it->second;
  TypeId id = static_cast<TypeId>(types_.size());
  types_.push_back(WireType{name});
  type_index_.emplace(name, id);
  return id;
}

GenId Signature::add_generator(const std::string& name,
                               std::vector<TypeId> inputs,
                               std::vector<TypeId> outputs,
                               const std::string& dagger_name, bool unitary) {
  if (name.empty()) throw Error("generator name must not be empty");
  if (gen_index_.count(name))
    throw Error("generator '" + name + "' already registered");
  for (TypeId t : inputs)
    if (t >= types_.size()) throw UnknownNameError("unknown input type id");
  for (TypeId t : outputs)
    if (t >= types_.size()) throw UnknownNameError("unknown output type id");

  GenId id = static_cast<GenId>(generators_.size());
  Generator g{name, inputs, outputs, id, unitary};

  if (dagger_name == name) {
    if (inputs != outputs)
      throw Error("self-adjoint generator '" + name +
                  "' needs equal input and output types");
    generators_.push_back(std::move(g));
    gen_index_.emplace(name, id);
    return id;
  }

  std::string partner = dagger_name.empty() ? name + "_dag" : dagger_name;
  auto pit = gen_index_.find(partner);
  if (pit != gen_index_.end()) {
    Generator& p = generators_[pit->second];
    if (p.inputs != outputs || p.outputs != inputs)
      throw Error("dagger partner '" + partner + "' of '" + name +
                  "' has mismatched arity");
    if (p.dagger != pit->second && p.dagger != id)
      throw Error("dagger partner '" + partner + "' is already paired");
    g.dagger = pit->second;
    p.dagger = id;
    generators_.push_back(std::move(g));
    gen_index_.emplace(name, id);
    return id;
  }

  // Create the flipped box alongside.
  GenId pid = id + 1;
  g.dagger = pid;
  generators_.push_back(std::move(g));
  gen_index_.emplace(name, id);
  Generator p{partner, outputs, inputs, id, unitary};
  generators_.push_back(std::move(p));
  gen_index_.emplace(partner, pid);
  return id;
}

bool Signature::has_type(const std::string& name) const {
  return type_index_.count(name) != 0;
}

bool Signature::has_generator(const std::string& name) const {
  return gen_index_.count(name) != 0;
}

TypeId Signature::type_id(const std::string& name) const {
  auto it = type_index_.find(name);
  if (it == type_index_.end())
    throw UnknownNameError("unknown wire type '" + name + "'");
  return it->second;
}

GenId Signature::generator_id(const std::string& name) const {
  auto it = gen_index_.find(name);
  if (it == gen_index_.end())
    throw UnknownNameError("unknown generator '" + name + "'");
  return it->second;
}

void Signature::set_unitary(GenId id, bool unitary) {
  generators_.at(id).unitary = unitary;
  generators_.at(generators_.at(id).dagger).unitary = unitary;
}

bool Signature::operator==(const Signature& other) const {
  if (types_.size() != other.types_.size() ||
      generators_.size() != other.generators_.size())
    return false;
  for (std::size_t i = 0; i < types_.size(); ++i)
    if (types_[i].name != other.types_[i].name) return false;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const Generator& a = generators_[i];
    const Generator& b = other.generators_[i];
    if (a.name != b.name || a.inputs != b.inputs || a.outputs != b.outputs ||
        a.dagger != b.dagger || a.unitary != b.unitary)
      return false;
  }
  return true;
}

}  // namespace strand
