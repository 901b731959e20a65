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

#include "strand/protocols.hpp"

#include <chrono>
#include <cmath>

namespace strand::proto {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/** The flagged unitary must be a one-wire endo-box and its tensor must
 * actually be unitary in the model. Returns the generator and its wire. */
std::pair<GenId, TypeId> checked_unitary(const Model& model,
                                         const std::string& name, double tol) {
  const SignaturePtr& sig = model.signature();
  GenId g = sig->generator_id(name);
  const Generator& gen = sig->generator(g);
  if (!gen.unitary)
    throw Error("generator '" + name + "' is not flagged unitary");
  if (gen.inputs.size() != 1 || gen.outputs != gen.inputs)
    throw Error("protocol unitaries must be endo-boxes on one wire");
  TypeId t = gen.inputs[0];
  Diagram closed = compose_seq(Diagram::generator(sig, g),
                               Diagram::generator(sig, gen.dagger));
  TensorValue got = interpret(closed, model);
  TensorValue want = interpret(Diagram::identity(sig, {t}), model);
  if (!equal_tensors(got, want, CompareMode::Exact, tol).equal)
    throw Error("tensor for '" + name + "' is not numerically unitary");
  return {g, t};
}

/** (f (x) 1) ; cap — the bell effect decorated with f on its first leg. */
Diagram decorated_cap(const SignaturePtr& sig, GenId f, TypeId t) {
  return compose_seq(
      compose_par(Diagram::generator(sig, f), Diagram::identity(sig, {t})),
      Diagram::cap(sig, t));
}

ProtocolReport verdicts(std::string name, const Model& model, const Diagram& lhs,
                        const Diagram& rhs, std::uint32_t budget, double tol,
                        Clock::time_point start) {
  ProtocolReport report;
  report.name = std::move(name);
  report.tolerance = tol;

  NormalizeOptions opt;
  opt.max_steps = budget;
  NormalizeResult lhs_norm = normalize(lhs, Ruleset::builtin(), opt);
  NormalizeResult rhs_norm = normalize(rhs, Ruleset::builtin(), opt);
  report.trace = lhs_norm.trace;
  report.rewrite_ok =
      !lhs_norm.trace.budget_exhausted &&
      canonical_equal(lhs_norm.diagram, rhs_norm.diagram);

  TensorCompare cmp = equal_tensors(interpret(lhs, model), interpret(rhs, model),
                                    CompareMode::UpToScalar, tol);
  report.tensor_ok = cmp.equal;
  report.scalar = cmp.scale;
  report.elapsed_seconds = seconds_since(start);
  return report;
}

}  // namespace

/** The empty name runs the undecorated protocol (f = identity wire). */
TypeId first_dim_type(const Model& model) {
  const SignaturePtr& sig = model.signature();
  for (TypeId t = 0; t < sig->type_count(); ++t)
    if (model.has_dim(t)) return t;
  throw Error("the model assigns no wire dimensions");
}

ProtocolReport teleportation_demo(const Model& model,
                                  const std::string& unitary_name,
                                  std::uint32_t budget, double tol) {
  Clock::time_point start = Clock::now();
  const SignaturePtr& sig = model.signature();
  bool plain = unitary_name.empty() ||
               (unitary_name == "identity" && !sig->has_generator("identity"));
  GenId f = 0;
  TypeId t = 0;
  if (plain) {
    t = first_dim_type(model);
  } else {
    std::tie(f, t) = checked_unitary(model, unitary_name, tol);
  }

  Diagram id = Diagram::identity(sig, {t});
  // Alice's input alongside the shared pair, the decorated bell effect on
  // Alice's two wires, then Bob's correction.
  Diagram share = compose_par(id, Diagram::cup(sig, t));
  Diagram bell = plain ? Diagram::cap(sig, t) : decorated_cap(sig, f, t);
  Diagram effect = compose_par(bell, id);
  Diagram lhs = compose_seq(share, effect);
  if (!plain)
    lhs = compose_seq(lhs, Diagram::generator(sig, sig->generator(f).dagger));
  return verdicts("teleportation(" + (plain ? "identity" : unitary_name) + ")",
                  model, lhs, id, budget, tol, start);
}

ProtocolReport swapping_demo(const Model& model, const std::string& unitary_name,
                             bool misroute, std::uint32_t budget, double tol) {
  Clock::time_point start = Clock::now();
  const SignaturePtr& sig = model.signature();
  bool plain = unitary_name.empty() ||
               (unitary_name == "identity" && !sig->has_generator("identity"));
  GenId f = 0;
  TypeId t = 0;
  if (plain) {
    t = first_dim_type(model);
  } else {
    std::tie(f, t) = checked_unitary(model, unitary_name, tol);
  }

  Diagram id = Diagram::identity(sig, {t});
  Diagram pairs = compose_par(Diagram::cup(sig, t), Diagram::cup(sig, t));
  Diagram bell = plain ? Diagram::cap(sig, t) : decorated_cap(sig, f, t);
  // the bell effect belongs on the two middle wires; the misrouted control
  // swallows the first cup whole
  Diagram effect = misroute ? compose_par(bell, compose_par(id, id))
                            : compose_par(id, compose_par(bell, id));
  Diagram lhs = compose_seq(pairs, effect);
  if (!plain)
    lhs = compose_seq(lhs, compose_par(id, Diagram::generator(
                                               sig, sig->generator(f).dagger)));
  Diagram rhs = Diagram::cup(sig, t);
  std::string name = std::string("entanglement-swapping(") +
                     (plain ? "identity" : unitary_name) +
                     (misroute ? ", misrouted)" : ")");
  return verdicts(std::move(name), model, lhs, rhs, budget, tol, start);
}

// ---------------------------------------------------------------------------

void Channel::validate(double tol) const {
  if (entries.size() != in_dim * out_dim)
    throw Error("channel entry count does not match its dimensions");
  for (std::size_t x = 0; x < in_dim; ++x) {
    double row = 0;
    for (std::size_t y = 0; y < out_dim; ++y) {
      if ((*this)(x, y) < -tol) throw Error("channel entries must be nonnegative");
      row += (*this)(x, y);
    }
    if (std::abs(row - 1.0) > tol)
      throw Error("channel row " + std::to_string(x) + " does not sum to 1");
  }
}

void Prior::validate(double tol) const {
  double sum = 0;
  for (double v : p) {
    if (v < -tol) throw Error("prior entries must be nonnegative");
    sum += v;
  }
  if (std::abs(sum - 1.0) > tol) throw Error("prior does not sum to 1");
}

BayesResult bayes_invert(const Prior& prior, const Channel& channel,
                         double tol) {
  prior.validate(1e-12);
  channel.validate(1e-12);
  std::size_t nx = channel.in_dim, ny = channel.out_dim;
  if (prior.p.size() != nx)
    throw Error("prior dimension does not match the channel input");

  BayesResult result;
  result.marginal.assign(ny, 0.0);
  for (std::size_t y = 0; y < ny; ++y)
    for (std::size_t x = 0; x < nx; ++x)
      result.marginal[y] += prior.p[x] * channel(x, y);

  result.inverse.in_dim = ny;
  result.inverse.out_dim = nx;
  result.inverse.entries.assign(ny * nx, 0.0);
  for (std::size_t y = 0; y < ny; ++y) {
    if (result.marginal[y] <= tol) {
      result.unsupported.push_back(y);
      continue;  // unsupported evidence: the row stays zero
    }
    for (std::size_t x = 0; x < nx; ++x)
      result.inverse.entries[y * nx + x] =
          channel(x, y) * prior.p[x] / result.marginal[y];
  }

  // Diagrammatic path: transpose the channel across the prior-weighted cup
  // on X and the inverse-marginal cap on Y, and insist the contraction
  // reproduces the rule.
  Signature s;
  TypeId X = s.add_type("X");
  TypeId Y = s.add_type("Y");
  GenId cup_p = s.add_generator("prior_cup", {}, {X, X});
  GenId chan = s.add_generator("channel", {X}, {Y});
  GenId cap_q = s.add_generator("marginal_cap", {Y, Y}, {});
  SignaturePtr sig = std::move(s).freeze();

  Model m(sig, SemiringKind::NonnegReal);
  m.set_dim(X, nx);
  m.set_dim(Y, ny);
  std::vector<Cplx> cup_entries(nx * nx, 0.0);
  for (std::size_t x = 0; x < nx; ++x) cup_entries[x * nx + x] = prior.p[x];
  m.set_generator(cup_p, cup_entries);
  std::vector<Cplx> chan_entries(ny * nx, 0.0);
  for (std::size_t y = 0; y < ny; ++y)
    for (std::size_t x = 0; x < nx; ++x)
      chan_entries[y * nx + x] = channel(x, y);
  m.set_generator(chan, chan_entries);
  std::vector<Cplx> cap_entries(ny * ny, 0.0);
  for (std::size_t y = 0; y < ny; ++y) {
    if (result.marginal[y] > tol)
      cap_entries[y * ny + y] = 1.0 / result.marginal[y];
  }
  m.set_generator(cap_q, cap_entries);
  m.finalize();

  Diagram idX = Diagram::identity(sig, {X});
  Diagram idY = Diagram::identity(sig, {Y});
  Diagram step1 = compose_par(Diagram::generator(sig, cup_p), idY);
  Diagram step2 =
      compose_par(idX, compose_par(Diagram::generator(sig, chan), idY));
  Diagram step3 = compose_par(idX, Diagram::generator(sig, cap_q));
  Diagram diagrammatic = compose_seq(compose_seq(step1, step2), step3);

  TensorValue via_diagram = interpret(diagrammatic, m);
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t y = 0; y < ny; ++y) {
      double want = result.inverse.entries[y * nx + x];
      double got = via_diagram.entry(x * ny + y).real();
      if (std::abs(got - want) > 1e-12)
        throw InternalError(
            "diagrammatic Bayesian inversion drifted from the rule");
    }
  }
  return result;
}

}  // namespace strand::proto
