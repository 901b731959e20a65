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

#include <algorithm>
#include <cmath>

#include "strand/tensor.hpp"

namespace strand {

namespace {

std::vector<std::size_t> generator_shape(const Model& m, const Generator& g) {
  std::vector<std::size_t> shape;
  for (TypeId t : g.outputs) shape.push_back(m.dim(t));
  for (TypeId t : g.inputs) shape.push_back(m.dim(t));
  return shape;
}

std::size_t total(const std::vector<std::size_t>& shape) {
  std::size_t n = 1;
  for (std::size_t s : shape) n *= s;
  return n;
}

/** Conjugate transpose of an [outs, ins] tensor: swaps the two index
 * groups and conjugates entries. */
std::vector<Cplx> conjugate_transpose(const std::vector<Cplx>& data,
                                      const std::vector<std::size_t>& out_dims,
                                      const std::vector<std::size_t>& in_dims) {
  std::size_t no = total(out_dims), ni = total(in_dims);
  std::vector<Cplx> result(data.size());
  for (std::size_t o = 0; o < no; ++o)
    for (std::size_t i = 0; i < ni; ++i)
      result[i * no + o] = std::conj(data[o * ni + i]);
  return result;
}

}  // namespace

Model::Model(SignaturePtr sig, SemiringKind kind)
    : sig_(std::move(sig)), kind_(kind) {}

void Model::set_dim(TypeId t, std::size_t dim) {
  if (t >= sig_->type_count()) throw UnknownNameError("unknown wire type id");
  if (dim == 0) throw Error("wire dimension must be positive");
  dims_[t] = dim;
  finalized_ = false;
}

void Model::set_generator(GenId g, std::vector<Cplx> entries) {
  if (g >= sig_->generator_count())
    throw UnknownNameError("unknown generator id");
  generators_[g] = std::move(entries);
  finalized_ = false;
}

void Model::set_basis(SpiderColor color, TypeId t,
                      std::vector<std::vector<double>> basis) {
  if (t >= sig_->type_count()) throw UnknownNameError("unknown wire type id");
  bases_[{static_cast<std::uint8_t>(color), t}] = std::move(basis);
  finalized_ = false;
}

bool Model::has_dim(TypeId t) const { return dims_.count(t) != 0; }

std::size_t Model::dim(TypeId t) const {
  auto it = dims_.find(t);
  if (it == dims_.end())
    throw Error("model assigns no dimension to type '" + sig_->type(t).name +
                "'");
  return it->second;
}

bool Model::has_generator(GenId g) const { return generators_.count(g) != 0; }

const std::vector<Cplx>& Model::generator_entries(GenId g) const {
  auto it = generators_.find(g);
  if (it == generators_.end())
    throw Error("model does not assign a tensor to generator '" +
                sig_->generator(g).name + "'");
  return it->second;
}

bool Model::has_basis(SpiderColor color, TypeId t) const {
  return bases_.count({static_cast<std::uint8_t>(color), t}) != 0;
}

std::vector<std::pair<SpiderColor, TypeId>> Model::basis_keys() const {
  std::vector<std::pair<SpiderColor, TypeId>> out;
  out.reserve(bases_.size());
  for (const auto& [key, basis] : bases_) {
    (void)basis;
    out.emplace_back(static_cast<SpiderColor>(key.first), key.second);
  }
  return out;
}

const std::vector<std::vector<double>>& Model::basis(SpiderColor color,
                                                     TypeId t) const {
  auto it = bases_.find({static_cast<std::uint8_t>(color), t});
  if (it == bases_.end())
    throw Error(std::string("model has no ") + to_string(color) +
                " spider basis for type '" + sig_->type(t).name + "'");
  return it->second;
}

void Model::check_entries(const std::vector<Cplx>& entries, double tol,
                          const std::string& what) const {
  switch (kind_) {
    case SemiringKind::Complex:
      return;
    case SemiringKind::NonnegReal:
      for (Cplx c : entries) {
        if (std::abs(c.imag()) > tol)
          throw Error(what + ": complex entry in a nonneg_real model");
        if (c.real() < -tol)
          throw Error(what + ": negative entry in a nonneg_real model");
      }
      return;
    case SemiringKind::Boolean:
      for (Cplx c : entries) {
        double m = std::abs(c);
        if (std::abs(m) > tol && std::abs(m - 1.0) > tol)
          throw Error(what + ": non-boolean entry in a boolean model");
        if (std::abs(c.imag()) > tol)
          throw Error(what + ": complex entry in a boolean model");
      }
      return;
  }
}

void Model::finalize(const Options& options) {
  // shapes and carrier constraints
  for (const auto& [g, entries] : generators_) {
    const Generator& gen = sig_->generator(g);
    std::vector<std::size_t> shape = generator_shape(*this, gen);
    if (entries.size() != total(shape))
      throw Error("tensor for generator '" + gen.name +
                  "' has wrong entry count");
    check_entries(entries, options.tol, "generator '" + gen.name + "'");
  }

  // fill in missing dagger partners; verify present ones
  std::vector<std::pair<GenId, std::vector<Cplx>>> derived;
  for (const auto& [g, entries] : generators_) {
    const Generator& gen = sig_->generator(g);
    GenId p = gen.dagger;
    if (p == g) continue;
    std::vector<std::size_t> out_dims, in_dims;
    for (TypeId t : gen.outputs) out_dims.push_back(dim(t));
    for (TypeId t : gen.inputs) in_dims.push_back(dim(t));
    std::vector<Cplx> expected = conjugate_transpose(entries, out_dims, in_dims);
    auto it = generators_.find(p);
    if (it == generators_.end()) {
      derived.emplace_back(p, std::move(expected));
    } else if (options.check_dagger) {
      const std::vector<Cplx>& actual = it->second;
      if (actual.size() != expected.size())
        throw Error("dagger partner of '" + gen.name + "' has wrong shape");
      for (std::size_t i = 0; i < actual.size(); ++i) {
        if (std::abs(actual[i] - expected[i]) > options.tol)
          throw Error("tensor for '" + sig_->generator(p).name +
                      "' is not the conjugate transpose of '" + gen.name + "'");
      }
    }
  }
  for (auto& [g, entries] : derived) generators_.emplace(g, std::move(entries));

  // self-adjoint generators must be hermitian
  if (options.check_dagger) {
    for (const auto& [g, entries] : generators_) {
      const Generator& gen = sig_->generator(g);
      if (gen.dagger != g) continue;
      std::vector<std::size_t> out_dims, in_dims;
      for (TypeId t : gen.outputs) out_dims.push_back(dim(t));
      for (TypeId t : gen.inputs) in_dims.push_back(dim(t));
      std::vector<Cplx> expected =
          conjugate_transpose(entries, out_dims, in_dims);
      for (std::size_t i = 0; i < entries.size(); ++i)
        if (std::abs(entries[i] - expected[i]) > options.tol)
          throw Error("self-adjoint generator '" + gen.name +
                      "' has a non-hermitian tensor");
    }
  }

  // bases: square, orthonormal, real by construction, carrier-compatible
  for (const auto& [key, basis] : bases_) {
    TypeId t = key.second;
    std::size_t d = dim(t);
    std::string what = std::string(to_string(static_cast<SpiderColor>(key.first))) +
                       " basis for '" + sig_->type(t).name + "'";
    if (basis.size() != d) throw Error(what + ": wrong number of vectors");
    for (const auto& row : basis) {
      if (row.size() != d) throw Error(what + ": wrong vector length");
      if (kind_ == SemiringKind::NonnegReal)
        for (double x : row)
          if (x < -options.tol)
            throw Error(what + ": negative entry in a nonneg_real model");
      if (kind_ == SemiringKind::Boolean)
        for (double x : row)
          if (std::abs(x) > options.tol && std::abs(x - 1.0) > options.tol)
            throw Error(what + ": non-boolean entry in a boolean model");
    }
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        double dot = 0;
        for (std::size_t k = 0; k < d; ++k) dot += basis[i][k] * basis[j][k];
        double want = i == j ? 1.0 : 0.0;
        if (std::abs(dot - want) > 1e-6)
          throw Error(what + ": vectors are not orthonormal");
      }
    }
  }

  finalized_ = true;
}

InstanceHints Model::hints() const {
  InstanceHints h;
  for (const auto& [key, basis] : bases_) {
    (void)basis;
    if (static_cast<SpiderColor>(key.first) == SpiderColor::Light)
      h.light_types.push_back(key.second);
    else
      h.dark_types.push_back(key.second);
  }
  // mutually unbiased light/dark pairs on the same type
  for (TypeId t : h.light_types) {
    if (std::find(h.dark_types.begin(), h.dark_types.end(), t) ==
        h.dark_types.end())
      continue;
    const auto& light = basis(SpiderColor::Light, t);
    const auto& dark = basis(SpiderColor::Dark, t);
    std::size_t d = dim(t);
    bool unbiased = true;
    for (std::size_t i = 0; i < d && unbiased; ++i) {
      for (std::size_t j = 0; j < d && unbiased; ++j) {
        double dot = 0;
        for (std::size_t k = 0; k < d; ++k) dot += light[i][k] * dark[j][k];
        if (std::abs(dot * dot - 1.0 / static_cast<double>(d)) > 1e-6)
          unbiased = false;
      }
    }
    if (unbiased) h.complementary.emplace_back(t, t);
  }
  for (GenId g = 0; g < sig_->generator_count(); ++g) {
    const Generator& gen = sig_->generator(g);
    if (gen.unitary && has_generator(g) && has_generator(gen.dagger))
      h.unitary_generators.push_back(g);
  }
  return h;
}

}  // namespace strand
