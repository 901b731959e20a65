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

#include "strand/tensor.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <future>
#include <numeric>
#include <set>

namespace strand {

const char* to_string(SemiringKind k) {
  switch (k) {
    case SemiringKind::Complex:
      return "complex";
    case SemiringKind::NonnegReal:
      return "nonneg_real";
    case SemiringKind::Boolean:
      return "boolean";
  }
  return "complex";
}

SemiringKind semiring_from_string(const std::string& name) {
  if (name == "complex") return SemiringKind::Complex;
  if (name == "nonneg_real") return SemiringKind::NonnegReal;
  if (name == "boolean") return SemiringKind::Boolean;
  throw ParseError("unknown semiring '" + name + "'");
}

std::size_t TensorValue::size() const {
  return std::visit([](const auto& v) { return v.size(); }, data);
}

Cplx TensorValue::entry(std::size_t flat) const {
  switch (kind) {
    case SemiringKind::Complex:
      return std::get<std::vector<Cplx>>(data)[flat];
    case SemiringKind::NonnegReal:
      return Cplx(std::get<std::vector<double>>(data)[flat], 0.0);
    case SemiringKind::Boolean:
      return Cplx(std::get<std::vector<std::uint8_t>>(data)[flat] ? 1.0 : 0.0,
                  0.0);
  }
  return {};
}

TensorValue TensorValue::scalar(SemiringKind kind, Cplx value) {
  TensorValue t;
  t.kind = kind;
  switch (kind) {
    case SemiringKind::Complex:
      t.data = std::vector<Cplx>{value};
      break;
    case SemiringKind::NonnegReal:
      t.data = std::vector<double>{value.real()};
      break;
    case SemiringKind::Boolean:
      t.data = std::vector<std::uint8_t>{
          static_cast<std::uint8_t>(std::abs(value) > 0.5 ? 1 : 0)};
      break;
  }
  return t;
}

namespace {

// ---------------------------------------------------------------------------
// Semiring policies

struct ComplexS {
  using V = Cplx;
  static constexpr SemiringKind kind = SemiringKind::Complex;
  static V zero() { return {0.0, 0.0}; }
  static V one() { return {1.0, 0.0}; }
  static V add(V a, V b) { return a + b; }
  static V mul(V a, V b) { return a * b; }
  static V from_complex(Cplx c) { return c; }
  static V from_real(double x) { return {x, 0.0}; }
};

struct RealS {
  using V = double;
  static constexpr SemiringKind kind = SemiringKind::NonnegReal;
  static V zero() { return 0.0; }
  static V one() { return 1.0; }
  static V add(V a, V b) { return a + b; }
  static V mul(V a, V b) { return a * b; }
  static V from_complex(Cplx c) { return c.real(); }
  static V from_real(double x) { return x; }
};

struct BoolS {
  using V = std::uint8_t;
  static constexpr SemiringKind kind = SemiringKind::Boolean;
  static V zero() { return 0; }
  static V one() { return 1; }
  static V add(V a, V b) { return a | b; }
  static V mul(V a, V b) { return a & b; }
  static V from_complex(Cplx c) { return std::abs(c) > 0.5 ? 1 : 0; }
  static V from_real(double x) { return std::abs(x) > 0.5 ? 1 : 0; }
};

// ---------------------------------------------------------------------------
// Factors

template <class S>
struct Factor {
  std::vector<long long> legs;  // per axis; >= 0 contractible edge ids, < 0 open
  std::vector<std::size_t> shape;
  std::vector<typename S::V> data;

  std::size_t size() const {
    std::size_t n = 1;
    for (std::size_t s : shape) n *= s;
    return n;
  }
};

template <class S>
Factor<S> permuted(const Factor<S>& f, const std::vector<std::size_t>& perm) {
  Factor<S> out;
  out.legs.resize(f.legs.size());
  out.shape.resize(f.shape.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    out.legs[i] = f.legs[perm[i]];
    out.shape[i] = f.shape[perm[i]];
  }
  out.data.resize(f.data.size());
  std::size_t rank = f.shape.size();
  // strides of the source in its own order
  std::vector<std::size_t> src_stride(rank, 1);
  for (std::size_t i = rank; i-- > 1;)
    src_stride[i - 1] = src_stride[i] * f.shape[i];
  std::vector<std::size_t> idx(rank, 0);
  for (std::size_t flat = 0; flat < out.data.size(); ++flat) {
    std::size_t src = 0;
    for (std::size_t i = 0; i < rank; ++i) src += idx[i] * src_stride[perm[i]];
    out.data[flat] = f.data[src];
    for (std::size_t i = rank; i-- > 0;) {
      if (++idx[i] < out.shape[i]) break;
      idx[i] = 0;
    }
  }
  return out;
}

/** Contracts two equal legs of the same factor (a trace). */
template <class S>
Factor<S> trace_once(const Factor<S>& f, std::size_t p, std::size_t q) {
  Factor<S> out;
  for (std::size_t i = 0; i < f.legs.size(); ++i) {
    if (i == p || i == q) continue;
    out.legs.push_back(f.legs[i]);
    out.shape.push_back(f.shape[i]);
  }
  out.data.assign(out.size(), S::zero());
  std::size_t rank = f.shape.size();
  std::vector<std::size_t> stride(rank, 1);
  for (std::size_t i = rank; i-- > 1;) stride[i - 1] = stride[i] * f.shape[i];
  std::size_t d = f.shape[p];
  std::vector<std::size_t> idx(out.shape.size(), 0);
  for (std::size_t flat = 0; flat < out.data.size(); ++flat) {
    std::size_t base = 0;
    for (std::size_t i = 0, j = 0; i < rank; ++i) {
      if (i == p || i == q) continue;
      base += idx[j++] * stride[i];
    }
    typename S::V acc = S::zero();
    for (std::size_t k = 0; k < d; ++k)
      acc = S::add(acc, f.data[base + k * stride[p] + k * stride[q]]);
    out.data[flat] = acc;
    for (std::size_t i = out.shape.size(); i-- > 0;) {
      if (++idx[i] < out.shape[i]) break;
      idx[i] = 0;
    }
  }
  return out;
}

template <class S>
void trace_repeated(Factor<S>& f) {
  for (;;) {
    bool again = false;
    for (std::size_t p = 0; p < f.legs.size() && !again; ++p) {
      for (std::size_t q = p + 1; q < f.legs.size() && !again; ++q) {
        if (f.legs[p] == f.legs[q]) {
          f = trace_once(f, p, q);
          again = true;
        }
      }
    }
    if (!again) return;
  }
}

template <class S>
Factor<S> contract_pair(const Factor<S>& a, const Factor<S>& b) {
  std::vector<long long> shared;
  for (long long l : a.legs)
    if (l >= 0 && std::find(b.legs.begin(), b.legs.end(), l) != b.legs.end())
      shared.push_back(l);
  std::sort(shared.begin(), shared.end());

  auto split = [&](const Factor<S>& f, bool shared_first) {
    std::vector<std::size_t> free_axes, shared_axes(shared.size());
    for (std::size_t i = 0; i < f.legs.size(); ++i) {
      auto it = std::find(shared.begin(), shared.end(), f.legs[i]);
      if (it == shared.end())
        free_axes.push_back(i);
      else
        shared_axes[static_cast<std::size_t>(it - shared.begin())] = i;
    }
    std::vector<std::size_t> perm;
    if (shared_first) {
      perm = shared_axes;
      perm.insert(perm.end(), free_axes.begin(), free_axes.end());
    } else {
      perm = free_axes;
      perm.insert(perm.end(), shared_axes.begin(), shared_axes.end());
    }
    return permuted(f, perm);
  };

  Factor<S> pa = split(a, false);  // [free_a..., shared...]
  Factor<S> pb = split(b, true);   // [shared..., free_b...]

  std::size_t k = 1;
  for (std::size_t i = 0; i < shared.size(); ++i)
    k *= pb.shape[i];
  std::size_t m = pa.size() / std::max<std::size_t>(k, 1);
  std::size_t n = pb.size() / std::max<std::size_t>(k, 1);

  Factor<S> out;
  out.legs.assign(pa.legs.begin(), pa.legs.end() - shared.size());
  out.legs.insert(out.legs.end(), pb.legs.begin() + shared.size(), pb.legs.end());
  out.shape.assign(pa.shape.begin(), pa.shape.end() - shared.size());
  out.shape.insert(out.shape.end(), pb.shape.begin() + shared.size(),
                   pb.shape.end());
  out.data.assign(m * n, S::zero());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t kk = 0; kk < k; ++kk) {
      typename S::V av = pa.data[i * k + kk];
      for (std::size_t j = 0; j < n; ++j) {
        out.data[i * n + j] =
            S::add(out.data[i * n + j], S::mul(av, pb.data[kk * n + j]));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Leg bookkeeping shared by the plan and the interpreter

struct LegLayout {
  // per edge: contractible id (the edge index) or open ids per endpoint
  std::vector<std::array<long long, 2>> edge_leg;  // leg id seen from side 0/1
  std::vector<char> internal_edge;
  std::size_t out_count = 0, in_count = 0;
};

bool node_is_internal(const Diagram& d, std::uint32_t n) {
  NodeKind k = d.nodes()[n].kind;
  return k == NodeKind::Generator || k == NodeKind::Spider;
}

LegLayout make_layout(const Diagram& d) {
  LegLayout lay;
  lay.out_count = d.output_nodes().size();
  lay.in_count = d.input_nodes().size();
  lay.edge_leg.resize(d.edges().size());
  lay.internal_edge.resize(d.edges().size(), 0);
  auto open_id = [&](std::uint32_t bnode) -> long long {
    const Node& n = d.nodes()[bnode];
    if (n.kind == NodeKind::Output) return -static_cast<long long>(1 + n.position);
    return -static_cast<long long>(1 + lay.out_count + n.position);
  };
  for (std::uint32_t e = 0; e < d.edges().size(); ++e) {
    const Edge& ed = d.edges()[e];
    bool ia = node_is_internal(d, ed.a.node);
    bool ib = node_is_internal(d, ed.b.node);
    if (ia && ib) {
      lay.edge_leg[e] = {static_cast<long long>(e), static_cast<long long>(e)};
      lay.internal_edge[e] = 1;
    } else if (ia) {
      lay.edge_leg[e] = {open_id(ed.b.node), open_id(ed.b.node)};
    } else if (ib) {
      lay.edge_leg[e] = {open_id(ed.a.node), open_id(ed.a.node)};
    } else {
      lay.edge_leg[e] = {open_id(ed.a.node), open_id(ed.b.node)};
    }
  }
  return lay;
}

// ---------------------------------------------------------------------------
// Interpreter

template <class S>
Factor<S> spider_factor(const Model& m, SpiderColor color, TypeId t,
                        std::uint32_t degree) {
  if (!m.has_basis(color, t))
    throw Error(std::string("model has no ") + to_string(color) +
                " spider basis for type '" +
                m.signature()->type(t).name + "'");
  const auto& basis = m.basis(color, t);
  std::size_t dim = m.dim(t);
  Factor<S> f;
  f.shape.assign(degree, dim);
  f.legs.assign(degree, 0);  // caller fills
  f.data.assign(f.size(), S::zero());
  std::vector<std::size_t> idx(degree, 0);
  for (std::size_t flat = 0; flat < f.data.size(); ++flat) {
    typename S::V acc = S::zero();
    for (std::size_t i = 0; i < dim; ++i) {
      typename S::V prod = S::one();
      for (std::size_t l = 0; l < degree; ++l)
        prod = S::mul(prod, S::from_real(basis[i][idx[l]]));
      acc = S::add(acc, prod);
    }
    f.data[flat] = acc;
    for (std::size_t i = degree; i-- > 0;) {
      if (++idx[i] < dim) break;
      idx[i] = 0;
    }
  }
  return f;
}

template <class S>
TensorValue interpret_impl(const Diagram& d, const Model& m,
                           const ContractionPlan& plan) {
  const Signature& sig = *d.signature();
  LegLayout lay = make_layout(d);

  // edge at every (node, port)
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> at_port;
  for (std::uint32_t e = 0; e < d.edges().size(); ++e) {
    const Edge& ed = d.edges()[e];
    at_port[{ed.a.node, ed.a.port}] = e;
    at_port[{ed.b.node, ed.b.port}] = e;
  }
  auto leg_at = [&](std::uint32_t node, std::uint32_t port) -> long long {
    std::uint32_t e = at_port.at({node, port});
    const Edge& ed = d.edges()[e];
    int side = (ed.a.node == node && ed.a.port == port) ? 0 : 1;
    return lay.edge_leg[e][side];
  };

  std::map<std::uint32_t, Factor<S>> factors;  // by internal node id
  for (std::uint32_t n = 0; n < d.nodes().size(); ++n) {
    const Node& node = d.nodes()[n];
    if (node.kind == NodeKind::Generator) {
      const Generator& g = sig.generator(node.gen);
      if (!m.has_generator(node.gen))
        throw Error("model does not assign a tensor to generator '" + g.name +
                    "'");
      Factor<S> f;
      std::uint32_t a = static_cast<std::uint32_t>(g.inputs.size());
      for (TypeId t : g.outputs) f.shape.push_back(m.dim(t));
      for (TypeId t : g.inputs) f.shape.push_back(m.dim(t));
      for (std::uint32_t j = 0; j < g.outputs.size(); ++j)
        f.legs.push_back(leg_at(n, a + j));
      for (std::uint32_t i = 0; i < a; ++i) f.legs.push_back(leg_at(n, i));
      const auto& entries = m.generator_entries(node.gen);
      f.data.reserve(entries.size());
      for (Cplx c : entries) f.data.push_back(S::from_complex(c));
      if (f.data.size() != f.size())
        throw Error("tensor for generator '" + g.name + "' has wrong size");
      trace_repeated(f);
      factors.emplace(n, std::move(f));
    } else if (node.kind == NodeKind::Spider) {
      Factor<S> f = spider_factor<S>(m, node.color, node.type, node.degree);
      for (std::uint32_t p = 0; p < node.degree; ++p) f.legs[p] = leg_at(n, p);
      trace_repeated(f);
      factors.emplace(n, std::move(f));
    }
  }

  // identity factors for wires running boundary-to-boundary
  std::vector<Factor<S>> extra;
  for (std::uint32_t e = 0; e < d.edges().size(); ++e) {
    const Edge& ed = d.edges()[e];
    if (node_is_internal(d, ed.a.node) || node_is_internal(d, ed.b.node))
      continue;
    std::size_t dim = m.dim(d.port_type(ed.a));
    Factor<S> f;
    f.shape = {dim, dim};
    f.legs = {lay.edge_leg[e][0], lay.edge_leg[e][1]};
    f.data.assign(dim * dim, S::zero());
    for (std::size_t i = 0; i < dim; ++i) f.data[i * dim + i] = S::one();
    extra.push_back(std::move(f));
  }

  // circles: the dimension as a semiring sum
  typename S::V scalar = S::one();
  for (const auto& [t, count] : d.loops()) {
    typename S::V dim_sum = S::zero();
    for (std::size_t i = 0; i < m.dim(t); ++i) dim_sum = S::add(dim_sum, S::one());
    for (std::uint32_t c = 0; c < count; ++c) scalar = S::mul(scalar, dim_sum);
  }

  // planned pairwise contractions
  std::map<std::uint32_t, Factor<S>> comp = std::move(factors);
  for (auto [a, b] : plan.steps) {
    auto ia = comp.find(a);
    auto ib = comp.find(b);
    if (ia == comp.end() || ib == comp.end())
      throw Error("contraction plan does not fit this diagram");
    Factor<S> merged = contract_pair(ia->second, ib->second);
    trace_repeated(merged);
    std::uint32_t keep = std::min(a, b);
    comp.erase(std::max(a, b));
    comp[keep] = std::move(merged);
  }

  // deterministic cleanup: contract any remaining shared legs, then outer
  // products and the circle scalar
  std::vector<Factor<S>> rest;
  for (auto& [n, f] : comp) rest.push_back(std::move(f));
  rest.insert(rest.end(), std::make_move_iterator(extra.begin()),
              std::make_move_iterator(extra.end()));
  for (;;) {
    bool merged_any = false;
    for (std::size_t i = 0; i < rest.size() && !merged_any; ++i) {
      for (std::size_t j = i + 1; j < rest.size() && !merged_any; ++j) {
        bool share = false;
        for (long long l : rest[i].legs)
          if (l >= 0 &&
              std::find(rest[j].legs.begin(), rest[j].legs.end(), l) !=
                  rest[j].legs.end())
            share = true;
        if (!share) continue;
        Factor<S> f = contract_pair(rest[i], rest[j]);
        trace_repeated(f);
        rest.erase(rest.begin() + j);
        rest[i] = std::move(f);
        merged_any = true;
      }
    }
    if (!merged_any) break;
  }
  Factor<S> result;
  result.data = {scalar};
  for (Factor<S>& f : rest) result = contract_pair(result, f);

  // order the open legs: outputs by position, then inputs by position
  std::vector<std::size_t> perm(result.legs.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) {
    return -result.legs[x] < -result.legs[y];
  });
  result = permuted(result, perm);
  for (long long l : result.legs)
    if (l >= 0) throw InternalError("unresolved contraction leg");

  TensorValue out;
  out.kind = S::kind;
  out.shape = result.shape;
  out.out_rank = lay.out_count;
  out.data = std::move(result.data);
  return out;
}

}  // namespace

ContractionPlan contraction_plan(const Diagram& d) {
  ContractionPlan plan;
  std::map<std::uint32_t, std::uint32_t> comp;  // node -> component rep
  std::map<std::uint32_t, long long> legs;      // rep -> open leg count
  for (std::uint32_t n = 0; n < d.nodes().size(); ++n) {
    if (!node_is_internal(d, n)) continue;
    comp[n] = n;
    legs[n] = d.nodes()[n].degree;
  }
  // connection counts between components; self edges reduce leg counts
  std::map<std::pair<std::uint32_t, std::uint32_t>, long long> between;
  for (const Edge& e : d.edges()) {
    if (!node_is_internal(d, e.a.node) || !node_is_internal(d, e.b.node))
      continue;
    if (e.a.node == e.b.node) {
      legs[e.a.node] -= 2;
      continue;
    }
    auto [lo, hi] = std::minmax(e.a.node, e.b.node);
    between[{lo, hi}] += 1;
  }

  while (!between.empty()) {
    long long best_cost = 0;
    std::pair<std::uint32_t, std::uint32_t> best{};
    bool first = true;
    for (const auto& [pr, k] : between) {
      long long cost = legs[pr.first] + legs[pr.second] - 2 * k;
      if (first || cost < best_cost ||
          (cost == best_cost && pr < best)) {
        best = pr;
        best_cost = cost;
        first = false;
      }
    }
    plan.steps.push_back(best);
    plan.max_intermediate_legs = std::max(
        plan.max_intermediate_legs, static_cast<std::uint32_t>(best_cost));
    plan.cost_estimate += std::pow(2.0, static_cast<double>(best_cost));

    std::uint32_t keep = best.first, gone = best.second;
    legs[keep] = best_cost;
    legs.erase(gone);
    std::map<std::pair<std::uint32_t, std::uint32_t>, long long> next;
    for (const auto& [pr, k] : between) {
      std::uint32_t x = pr.first == gone ? keep : pr.first;
      std::uint32_t y = pr.second == gone ? keep : pr.second;
      if (x == y) continue;  // the contracted pair itself
      auto [lo, hi] = std::minmax(x, y);
      next[{lo, hi}] += k;
    }
    between = std::move(next);
  }
  return plan;
}

TensorValue interpret(const Diagram& d, const Model& m) {
  return interpret(d, m, contraction_plan(d));
}

TensorValue interpret(const Diagram& d, const Model& m,
                      const ContractionPlan& plan) {
  switch (m.semiring()) {
    case SemiringKind::Complex:
      return interpret_impl<ComplexS>(d, m, plan);
    case SemiringKind::NonnegReal:
      return interpret_impl<RealS>(d, m, plan);
    case SemiringKind::Boolean:
      return interpret_impl<BoolS>(d, m, plan);
  }
  throw InternalError("unhandled semiring");
}

// ---------------------------------------------------------------------------

TensorCompare equal_tensors(const TensorValue& a, const TensorValue& b,
                            CompareMode mode, double tol) {
  if (a.kind != b.kind)
    throw TypeMismatchError("cannot compare tensors over different semirings");
  if (a.shape != b.shape)
    throw TypeMismatchError("cannot compare tensors of different shapes");

  std::size_t n = a.size();
  if (a.kind == SemiringKind::Boolean || mode == CompareMode::Exact) {
    double worst = 0;
    for (std::size_t i = 0; i < n; ++i)
      worst = std::max(worst, std::abs(a.entry(i) - b.entry(i)));
    bool eq = a.kind == SemiringKind::Boolean ? worst == 0 : worst <= tol;
    TensorCompare r;
    r.equal = eq;
    if (eq) r.scale = Cplx(1, 0);
    return r;
  }

  // up to scalar: lambda from the largest jointly-supported entry pair
  double amax = 0, bmax = 0;
  std::size_t pivot = 0;
  double pivot_mag = -1;
  for (std::size_t i = 0; i < n; ++i) {
    double ma = std::abs(a.entry(i));
    double mb = std::abs(b.entry(i));
    amax = std::max(amax, ma);
    bmax = std::max(bmax, mb);
    if (std::min(ma, mb) > pivot_mag) {
      pivot_mag = std::min(ma, mb);
      pivot = i;
    }
  }
  TensorCompare r;
  if (amax <= tol && bmax <= tol) {
    r.equal = true;
    r.scale = Cplx(1, 0);
    return r;
  }
  if (amax <= tol || bmax <= tol) return r;  // one side vanishes
  Cplx lambda = a.entry(pivot) / b.entry(pivot);
  if (std::abs(lambda) <= tol) return r;  // scalar must be nonzero
  double worst = 0;
  for (std::size_t i = 0; i < n; ++i)
    worst = std::max(worst, std::abs(a.entry(i) - lambda * b.entry(i)));
  r.equal = worst <= tol * std::max(amax, 1.0);
  if (r.equal) r.scale = lambda;
  return r;
}

// ---------------------------------------------------------------------------

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

SoundnessReport soundness_harness(const Ruleset& rules, const Model& model,
                                  int cases_per_rule, std::uint64_t seed,
                                  double tol) {
  SoundnessReport report;
  InstanceHints hints = model.hints();
  const SignaturePtr& sig = model.signature();

  struct CaseOutcome {
    bool ran = false;
    bool failed = false;
    std::string detail;
  };

  std::vector<std::future<std::vector<CaseOutcome>>> futures;
  for (std::size_t ri = 0; ri < rules.rules().size(); ++ri) {
    RulePtr rule = rules.rules()[ri];
    futures.push_back(std::async(std::launch::async, [=, &model]() {
      std::vector<CaseOutcome> outcomes(cases_per_rule);
      for (int ci = 0; ci < cases_per_rule; ++ci) {
        std::mt19937_64 rng(splitmix64(seed ^ splitmix64(ri * 1000003ull + ci)));
        auto inst = rule->sample_instance(sig, rng, hints);
        if (!inst) continue;
        CaseOutcome& oc = outcomes[ci];
        oc.ran = true;
        try {
          TensorValue lhs = interpret(inst->first, model);
          TensorValue rhs = interpret(inst->second, model);
          CompareMode mode = rule->soundness() == Soundness::Exact
                                 ? CompareMode::Exact
                                 : CompareMode::UpToScalar;
          TensorCompare cmp = equal_tensors(lhs, rhs, mode, tol);
          if (!cmp.equal) {
            oc.failed = true;
            oc.detail = "interpret(lhs) and interpret(rhs) differ (" +
                        std::string(mode == CompareMode::Exact
                                        ? "exact"
                                        : "up-to-scalar") +
                        ")";
          }
        } catch (const Error& e) {
          oc.failed = true;
          oc.detail = std::string("interpretation error: ") + e.what();
        }
      }
      return outcomes;
    }));
  }
  for (std::size_t ri = 0; ri < futures.size(); ++ri) {
    std::vector<CaseOutcome> outcomes = futures[ri].get();
    for (int ci = 0; ci < static_cast<int>(outcomes.size()); ++ci) {
      const CaseOutcome& oc = outcomes[ci];
      if (!oc.ran) {
        report.cases_skipped += 1;
        continue;
      }
      report.cases_run += 1;
      if (oc.failed)
        report.failures.push_back(
            SoundnessFailure{rules.rules()[ri]->name(), ci, oc.detail});
    }
  }
  return report;
}

}  // namespace strand
