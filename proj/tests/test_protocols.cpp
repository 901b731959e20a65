#include <cmath>
#include <random>

#include "doctest.h"
#include "strand/protocols.hpp"

using namespace strand;
using namespace strand::proto;

namespace {

/** Dim-2 complex model with the four demo unitaries and a projector. */
Model demo_model() {
  Signature s;
  TypeId Q = s.add_type("Q");
  GenId x = s.add_generator("u_x", {Q}, {Q}, "u_x", true);
  GenId z = s.add_generator("u_z", {Q}, {Q}, "u_z", true);
  GenId h = s.add_generator("u_h", {Q}, {Q}, "u_h", true);
  GenId sg = s.add_generator("u_s", {Q}, {Q}, "", true);
  GenId proj = s.add_generator("proj0", {Q}, {Q}, "proj0", false);
  SignaturePtr sig = std::move(s).freeze();

  Model m(sig, SemiringKind::Complex);
  m.set_dim(Q, 2);
  const double r = 1.0 / std::sqrt(2.0);
  m.set_generator(x, {0, 1, 1, 0});
  m.set_generator(z, {1, 0, 0, -1});
  m.set_generator(h, {r, r, r, -r});
  m.set_generator(sg, {Cplx(1, 0), 0, 0, Cplx(0, 1)});
  m.set_generator(proj, {1, 0, 0, 0});
  m.set_basis(SpiderColor::Light, Q, {{1, 0}, {0, 1}});
  m.set_basis(SpiderColor::Dark, Q, {{r, r}, {r, -r}});
  m.finalize();
  return m;
}

Model dim3_model() {
  Signature s;
  TypeId Q = s.add_type("Q");
  GenId shift = s.add_generator("shift3", {Q}, {Q}, "", true);
  SignaturePtr sig = std::move(s).freeze();

  Model m(sig, SemiringKind::Complex);
  m.set_dim(Q, 3);
  // |x> -> |x+1 mod 3>
  m.set_generator(shift, {0, 0, 1, 1, 0, 0, 0, 1, 0});
  m.set_basis(SpiderColor::Light, Q, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  m.finalize();
  return m;
}

}  // namespace

TEST_CASE("teleportation passes both verdicts for the demo unitaries") {
  Model m = demo_model();
  for (const char* u : {"u_x", "u_z", "u_h", "u_s"}) {
    ProtocolReport r = teleportation_demo(m, u);
    CHECK_MESSAGE(r.rewrite_ok, u);
    CHECK_MESSAGE(r.tensor_ok, u);
    CHECK(r.passed());
    REQUIRE(r.scalar.has_value());
    // eager splicing leaves no leftover closed component, so lambda is 1
    CHECK(std::abs(*r.scalar - Cplx(1, 0)) < 1e-9);
    CHECK(r.trace.steps.size() <= 50);
    CHECK(r.elapsed_seconds >= 0);
  }
}

TEST_CASE("teleportation works in dimension 3 as well") {
  Model m = dim3_model();
  ProtocolReport r = teleportation_demo(m, "shift3");
  CHECK(r.passed());
}

TEST_CASE("the undecorated protocols pass trivially") {
  Model m = demo_model();
  ProtocolReport tele = teleportation_demo(m, "identity");
  CHECK(tele.passed());
  REQUIRE(tele.scalar.has_value());
  CHECK(std::abs(*tele.scalar - Cplx(1, 0)) < 1e-12);
  CHECK(swapping_demo(m, "").passed());
}

TEST_CASE("non-unitary boxes are rejected up front") {
  Model m = demo_model();
  CHECK_THROWS_AS(teleportation_demo(m, "proj0"), Error);
  CHECK_THROWS_AS(teleportation_demo(m, "missing"), UnknownNameError);

  // flagged but numerically non-unitary is caught too
  Signature s;
  TypeId Q = s.add_type("Q");
  GenId bad = s.add_generator("bad_u", {Q}, {Q}, "bad_u", true);
  SignaturePtr sig = std::move(s).freeze();
  Model lying(sig, SemiringKind::Complex);
  lying.set_dim(Q, 2);
  lying.set_generator(bad, {1, 0, 0, 0});
  lying.finalize();
  CHECK_THROWS_AS(teleportation_demo(lying, "bad_u"), Error);
}

TEST_CASE("entanglement swapping passes in dims 2 and 3") {
  Model m2 = demo_model();
  for (const char* u : {"u_x", "u_z", "u_h", "u_s"}) {
    ProtocolReport r = swapping_demo(m2, u);
    CHECK_MESSAGE(r.passed(), u);
  }
  Model m3 = dim3_model();
  CHECK(swapping_demo(m3, "shift3").passed());
}

TEST_CASE("the misrouted bell effect fails both verdicts") {
  Model m = demo_model();
  for (const char* u : {"u_x", "u_z", "u_h", "u_s"}) {
    ProtocolReport r = swapping_demo(m, u, /*misroute=*/true);
    CHECK_FALSE(r.rewrite_ok);
    CHECK_FALSE(r.tensor_ok);
    CHECK_FALSE(r.passed());
  }
}

TEST_CASE("bayes_invert reproduces the worked example") {
  Prior p{{0.25, 0.75}};
  Channel m{2, 2, {0.9, 0.1, 0.2, 0.8}};
  BayesResult r = bayes_invert(p, m);
  CHECK(r.marginal[0] == doctest::Approx(0.375).epsilon(1e-12));
  CHECK(r.marginal[1] == doctest::Approx(0.625).epsilon(1e-12));
  // B(x|y) = M(y|x) p(x) / q(y)
  CHECK(r.inverse(0, 0) == doctest::Approx(0.9 * 0.25 / 0.375).epsilon(1e-12));
  CHECK(r.inverse(0, 1) == doctest::Approx(0.2 * 0.75 / 0.375).epsilon(1e-12));
  CHECK(r.inverse(1, 0) == doctest::Approx(0.1 * 0.25 / 0.625).epsilon(1e-12));
  CHECK(r.inverse(1, 1) == doctest::Approx(0.8 * 0.75 / 0.625).epsilon(1e-12));
  CHECK(r.unsupported.empty());
}

TEST_CASE("uniform prior with the identity channel inverts to itself") {
  Prior p{{0.5, 0.5}};
  Channel id{2, 2, {1, 0, 0, 1}};
  BayesResult r = bayes_invert(p, id);
  for (std::size_t y = 0; y < 2; ++y)
    for (std::size_t x = 0; x < 2; ++x)
      CHECK(r.inverse(y, x) == doctest::Approx(y == x ? 1.0 : 0.0));
}

namespace {

std::pair<Prior, Channel> random_instance(std::mt19937_64& rng, std::size_t nx,
                                          std::size_t ny, bool full_support) {
  std::uniform_real_distribution<double> u(full_support ? 0.05 : 0.0, 1.0);
  Prior p;
  p.p.resize(nx);
  double sum = 0;
  for (auto& v : p.p) {
    v = u(rng);
    sum += v;
  }
  for (auto& v : p.p) v /= sum;
  Channel c;
  c.in_dim = nx;
  c.out_dim = ny;
  c.entries.resize(nx * ny);
  for (std::size_t x = 0; x < nx; ++x) {
    double row = 0;
    for (std::size_t y = 0; y < ny; ++y) {
      c.entries[x * ny + y] = u(rng);
      row += c.entries[x * ny + y];
    }
    for (std::size_t y = 0; y < ny; ++y) c.entries[x * ny + y] /= row;
  }
  return {p, c};
}

}  // namespace

TEST_CASE("inverted channels are row-stochastic and double inversion returns") {
  std::mt19937_64 rng(2718);
  std::uniform_int_distribution<std::size_t> dx(2, 5), dy(2, 7);
  for (int i = 0; i < 60; ++i) {
    auto [p, c] = random_instance(rng, dx(rng), dy(rng), true);
    BayesResult r = bayes_invert(p, c);
    CHECK(r.unsupported.empty());
    r.inverse.validate(1e-9);

    // invert back across the marginal
    Prior q{r.marginal};
    BayesResult back = bayes_invert(q, r.inverse);
    REQUIRE(back.inverse.in_dim == c.in_dim);
    for (std::size_t x = 0; x < c.in_dim; ++x)
      for (std::size_t y = 0; y < c.out_dim; ++y)
        CHECK(back.inverse(x, y) == doctest::Approx(c(x, y)).epsilon(1e-10));
  }
}

TEST_CASE("unsupported evidence is flagged and zeroed") {
  Prior p{{1.0, 0.0}};
  Channel c{2, 2, {1.0, 0.0, 0.0, 1.0}};
  BayesResult r = bayes_invert(p, c);
  REQUIRE(r.unsupported == std::vector<std::size_t>{1});
  CHECK(r.inverse(1, 0) == 0.0);
  CHECK(r.inverse(1, 1) == 0.0);
  CHECK(r.inverse(0, 0) == doctest::Approx(1.0));
}
