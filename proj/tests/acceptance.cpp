// Acceptance suite: runs every shipped verification scenario end to end and
// prints one PASS/FAIL line per criterion. Exits nonzero when any fails.

#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "strand/distsem.hpp"
#include "strand/dsl.hpp"
#include "strand/json_io.hpp"
#include "strand/protocols.hpp"
#include "test_support.hpp"

using namespace strand;
using strand::testing::Env;

namespace {

std::string data_path(const std::string& name) {
  return std::string(STRAND_DATA_DIR) + "/" + name;
}

struct Checker {
  std::ostringstream detail;
  int checks = 0;
  int failed = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++failed;
      if (detail.tellp() < 400) detail << "    failed: " << what << "\n";
    }
  }
};

Model dim_model(std::size_t dim, bool dark_basis) {
  Signature s;
  TypeId Q = s.add_type("Q");
  SignaturePtr sig = std::move(s).freeze();
  Model m(sig, SemiringKind::Complex);
  m.set_dim(Q, dim);
  std::vector<std::vector<double>> light(dim, std::vector<double>(dim, 0));
  for (std::size_t i = 0; i < dim; ++i) light[i][i] = 1;
  m.set_basis(SpiderColor::Light, Q, light);
  if (dark_basis) {
    if (dim == 2) {
      const double r = 1.0 / std::sqrt(2.0);
      m.set_basis(SpiderColor::Dark, Q, {{r, r}, {r, -r}});
    } else {
      // a real orthonormal (not unbiased) basis: swap the first two axes
      std::vector<std::vector<double>> dark = light;
      std::swap(dark[0], dark[1]);
      m.set_basis(SpiderColor::Dark, Q, dark);
    }
  }
  m.finalize();
  return m;
}

bool tensors_exactly_equal(const TensorValue& a, const TensorValue& b) {
  if (a.shape != b.shape || a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.entry(i) != b.entry(i)) return false;
  return true;
}

// --- criterion 1: snake equation -------------------------------------------

void snake_equation(Checker& c) {
  for (std::size_t dim = 2; dim <= 4; ++dim) {
    Model m = dim_model(dim, false);
    const SignaturePtr& sig = m.signature();
    TypeId Q = sig->type_id("Q");
    Diagram id = Diagram::identity(sig, {Q});
    Diagram snake = compose_seq(compose_par(id, Diagram::cup(sig, Q)),
                                compose_par(Diagram::cap(sig, Q), id));
    c.expect(canonical_equal(snake, id), "snake not structurally the wire");
    c.expect(check_equal_by_rewriting(snake, id, Ruleset::builtin()).verdict ==
                 EqVerdict::EqualExact,
             "check-eq on the snake");
    // spider-built variant actually contracts
    Diagram snake_sp = compose_seq(
        compose_par(id, Diagram::spider(sig, SpiderColor::Light, Q, 0, 2)),
        compose_par(Diagram::spider(sig, SpiderColor::Light, Q, 2, 0), id));
    TensorValue lhs = interpret(snake_sp, m);
    TensorValue rhs = interpret(id, m);
    c.expect(tensors_exactly_equal(lhs, rhs),
             "snake tensor not exactly the identity at dim " +
                 std::to_string(dim));
    TensorValue spliced = interpret(snake, m);
    c.expect(tensors_exactly_equal(spliced, rhs), "spliced snake tensor");
  }
}

// --- criterion 2: bifunctoriality -------------------------------------------

void bifunctoriality(Checker& c) {
  Env env = strand::testing::make_env();
  std::mt19937_64 rng(101);
  for (int i = 0; i < 100; ++i) {
    Diagram f = strand::testing::random_diagram(rng, env, 2);
    Diagram g =
        strand::testing::random_diagram_with_input(rng, env, f.output_types(), 2);
    Diagram h = strand::testing::random_diagram(rng, env, 2);
    Diagram k =
        strand::testing::random_diagram_with_input(rng, env, h.output_types(), 2);
    std::string lhs =
        canonical_form(compose_par(compose_seq(f, g), compose_seq(h, k)));
    std::string rhs =
        canonical_form(compose_seq(compose_par(f, h), compose_par(g, k)));
    c.expect(lhs == rhs, "bifunctoriality case " + std::to_string(i));
  }
}

// --- criterion 3: dagger laws ------------------------------------------------

void dagger_laws(Checker& c) {
  Env env = strand::testing::make_env();
  std::mt19937_64 rng(103);
  for (int i = 0; i < 100; ++i) {
    Diagram a = strand::testing::random_diagram(rng, env, 3);
    c.expect(canonical_equal(a.dagger().dagger(), a),
             "involution case " + std::to_string(i));
    Diagram b =
        strand::testing::random_diagram_with_input(rng, env, a.output_types(), 2);
    c.expect(canonical_equal(compose_seq(a, b).dagger(),
                             compose_seq(b.dagger(), a.dagger())),
             "contravariance case " + std::to_string(i));
    Diagram p = strand::testing::random_diagram(rng, env, 2);
    c.expect(canonical_equal(compose_par(a, p).dagger(),
                             compose_par(a.dagger(), p.dagger())),
             "covariance case " + std::to_string(i));
  }
}

// --- criterion 4: spider fusion ---------------------------------------------

void spider_fusion(Checker& c) {
  RulePtr fuse = Ruleset::builtin().find("spider_fuse");
  std::mt19937_64 rng(104);
  std::uniform_int_distribution<int> dim_pick(2, 3);
  std::uniform_int_distribution<int> color_pick(0, 1);
  for (int i = 0; i < 200; ++i) {
    std::size_t dim = static_cast<std::size_t>(dim_pick(rng));
    Model m = dim_model(dim, true);
    const SignaturePtr& sig = m.signature();
    TypeId Q = sig->type_id("Q");
    SpiderColor color = color_pick(rng) ? SpiderColor::Dark : SpiderColor::Light;

    std::uniform_int_distribution<std::uint32_t> kd(1, 4);
    std::uint32_t k = kd(rng);
    auto legs = [&](std::uint32_t used) {
      std::uniform_int_distribution<std::uint32_t> ld(0, 6 - used);
      return ld(rng);
    };
    std::uint32_t ext_a = legs(k), ext_b = legs(k);
    std::uniform_int_distribution<std::uint32_t> sa(0, ext_a), sb(0, ext_b);
    std::uint32_t n_a = sa(rng), m_a = ext_a - n_a;
    std::uint32_t n_b = sb(rng), m_b = ext_b - n_b;

    Diagram top = compose_par(Diagram::spider(sig, color, Q, n_a, m_a + k),
                              Diagram::identity(sig, std::vector<TypeId>(n_b, Q)));
    Diagram bottom =
        compose_par(Diagram::identity(sig, std::vector<TypeId>(m_a, Q)),
                    Diagram::spider(sig, color, Q, k + n_b, m_b));
    Diagram joined = compose_seq(top, bottom);
    Diagram expect = Diagram::spider(sig, color, Q, n_a + n_b, m_a + m_b);

    auto matches = fuse->find_matches(joined);
    bool ok = matches.size() == 1 && matches[0].edges.size() == k;
    if (ok) {
      Diagram fused = fuse->apply(joined, matches[0]);
      ok = canonical_equal(fused, expect);
    }
    c.expect(ok, "fusion structure case " + std::to_string(i));

    TensorCompare cmp = equal_tensors(interpret(joined, m), interpret(expect, m),
                                      CompareMode::Exact, 1e-9);
    c.expect(cmp.equal, "fusion tensor case " + std::to_string(i));
  }
}

// --- criterion 5: spider-basis semantics --------------------------------------

void spider_basis(Checker& c) {
  for (std::size_t dim = 2; dim <= 4; ++dim) {
    Model m = dim_model(dim, false);
    const SignaturePtr& sig = m.signature();
    TypeId Q = sig->type_id("Q");
    for (std::uint32_t total = 0; total <= 6; ++total) {
      for (std::uint32_t n = 0; n <= total; ++n) {
        std::uint32_t mm = total - n;
        TensorValue got =
            interpret(Diagram::spider(sig, SpiderColor::Light, Q, n, mm), m);
        bool ok = true;
        std::vector<std::size_t> idx(total, 0);
        for (std::size_t flat = 0; flat < got.size(); ++flat) {
          bool all_same = true;
          for (std::uint32_t j = 1; j < total; ++j)
            if (idx[j] != idx[0]) all_same = false;
          Cplx want = total == 0 ? Cplx(static_cast<double>(dim), 0)
                                 : Cplx(all_same ? 1 : 0, 0);
          if (got.entry(flat) != want) ok = false;
          for (std::uint32_t j = total; j-- > 0;) {
            if (++idx[j] < dim) break;
            idx[j] = 0;
          }
        }
        c.expect(ok, "spider(" + std::to_string(n) + "," + std::to_string(mm) +
                         ") dim " + std::to_string(dim));
      }
    }
  }
}

// --- criterion 6: complementarity ----------------------------------------------

void complementarity(Checker& c) {
  Model m = dim_model(2, true);
  RulePtr hopf = Ruleset::builtin().find("complementarity_hopf");
  InstanceHints hints = m.hints();
  c.expect(hints.complementary.size() == 1, "dim-2 bases detected complementary");
  std::mt19937_64 rng(106);
  for (int i = 0; i < 50; ++i) {
    auto inst = hopf->sample_instance(m.signature(), rng, hints);
    if (!inst) {
      c.expect(false, "no hopf instance");
      continue;
    }
    TensorCompare cmp = equal_tensors(interpret(inst->first, m),
                                      interpret(inst->second, m),
                                      CompareMode::UpToScalar, 1e-9);
    c.expect(cmp.equal, "hopf tensor case " + std::to_string(i));
  }
}

// --- criterion 7: teleportation and swapping -----------------------------------

void protocols_criterion(Checker& c) {
  Model m2 = io::model_from_json(io::read_file(data_path("model_dim2.json")));
  for (const char* u : {"u_x", "u_z", "u_h", "u_s"}) {
    proto::ProtocolReport tele = proto::teleportation_demo(m2, u, 50, 1e-9);
    c.expect(tele.passed() && tele.trace.steps.size() <= 50,
             std::string("teleportation ") + u);
    proto::ProtocolReport swap = proto::swapping_demo(m2, u, false, 50, 1e-9);
    c.expect(swap.passed(), std::string("swapping ") + u);
  }
  Model m3 = io::model_from_json(io::read_file(data_path("model_dim3.json")));
  c.expect(proto::teleportation_demo(m3, "shift3", 50, 1e-9).passed(),
           "teleportation dim 3");
  c.expect(proto::swapping_demo(m3, "shift3", false, 50, 1e-9).passed(),
           "swapping dim 3");
  proto::ProtocolReport bad = proto::swapping_demo(m2, "u_x", true, 50, 1e-9);
  c.expect(!bad.rewrite_ok && !bad.tensor_ok, "misrouted control fails");
}

// --- criterion 8: pregroup reduction ---------------------------------------------

void pregroup_criterion(Checker& c) {
  using namespace strand::pregroup;
  const SimpleType s{"s", 0};
  auto r = reduce_to(parse_type_sequence("n n^l s n^r n"), s);
  c.expect(r.has_value() && r->pairs.size() == 2 && r->survivors.size() == 1,
           "n tv n reduces to s");

  std::mt19937_64 rng(108);
  std::uniform_int_distribution<int> len(0, 8), atom(0, 1), adj(-1, 1);
  int agree = 0;
  for (int i = 0; i < 2000; ++i) {
    TypeSeq ts(static_cast<std::size_t>(len(rng)));
    for (auto& t : ts) t = SimpleType{atom(rng) ? "n" : "s", adj(rng)};
    bool dp = reduce_to(ts, s).has_value();
    bool bf = brute_force_reduce(ts, s);
    if (dp == bf) ++agree;
  }
  c.expect(agree == 2000, "DP vs oracle agreement " + std::to_string(agree) +
                              "/2000");
}

// --- criterion 9: negation derivation ---------------------------------------------

void negation_criterion(Checker& c) {
  distsem::Lexicon lex =
      io::lexicon_from_json(io::read_file(data_path("lexicon_en.json")));
  Model m = io::model_from_json(io::read_file(data_path("distsem_model.json")));

  TensorValue plain =
      distsem::sentence_meaning({"alice", "likes", "bob"}, lex, m).meaning;
  TensorValue with_does =
      distsem::sentence_meaning({"alice", "does", "like", "bob"}, lex, m).meaning;
  c.expect(tensors_exactly_equal(plain, with_does),
           "'does' leaves the meaning unchanged");

  TensorValue negated =
      distsem::sentence_meaning({"alice", "does", "not", "like", "bob"}, lex, m)
          .meaning;
  // apply the not-map to the plain meaning: the basis swap
  c.expect(negated.size() == 2 && plain.size() == 2 &&
               negated.entry(0) == plain.entry(1) &&
               negated.entry(1) == plain.entry(0),
           "'not' negates exactly");
}

// --- criterion 10: distributional pipeline ------------------------------------------

void distributional_criterion(Checker& c) {
  distsem::ContextConfig cfg =
      io::context_from_text(io::read_file(data_path("context_toy.txt")));
  auto lines = distsem::tokenize(io::read_file(data_path("corpus_toy.txt")));
  distsem::CooccurrenceModel model = distsem::CooccurrenceModel::ingest(lines, cfg);

  c.expect(model.token_count() == 30, "30 tokens");
  c.expect(model.counts("likes") == std::vector<long long>{3, 2, 1}, "N(likes)");
  c.expect(model.counts("cake") == std::vector<long long>{3, 5, 0}, "N(cake)");
  c.expect(model.counts("alice") == std::vector<long long>{0, 5, 3}, "N(alice)");
  c.expect(model.counts("bob") == std::vector<long long>{5, 0, 5}, "N(bob)");
  c.expect(model.counts("happily") == std::vector<long long>{0, 0, 1},
           "N(happily)");

  for (const std::string& w : model.words()) {
    distsem::MeaningVector mv = distsem::meaning_vector(model, w);
    if (mv.zero) continue;
    double norm2 = 0;
    for (double v : mv.values) norm2 += v * v;
    c.expect(std::abs(norm2 - 1.0) < 1e-12, "unit norm for " + w);
  }
  distsem::MeaningVector a = distsem::meaning_vector(model, "alice");
  distsem::MeaningVector b = distsem::meaning_vector(model, "bob");
  double ab = distsem::similarity(a, b);
  double ba = distsem::similarity(b, a);
  c.expect(ab == ba, "similarity symmetric");
  c.expect(ab >= 0.0 && ab <= 1.0 + 1e-12, "similarity in range");

  // shard-merge equals the single pass
  std::mt19937_64 rng(110);
  for (const auto& line : lines) {
    std::uniform_int_distribution<std::size_t> cut(0, line.size());
    std::size_t mid = cut(rng);
    distsem::CooccurrenceModel left(cfg), right(cfg);
    left.ingest_line_range(line, 0, mid);
    right.ingest_line_range(line, mid, line.size());
    left.merge(right);
    distsem::CooccurrenceModel whole(cfg);
    whole.ingest_line(line);
    bool same = left.token_count() == whole.token_count();
    for (const std::string& w : whole.words())
      same = same && left.counts(w) == whole.counts(w);
    c.expect(same, "shard merge equals single pass");
  }
}

// --- criterion 11: Bayesian inversion --------------------------------------------

void bayes_criterion(Checker& c) {
  std::mt19937_64 rng(111);
  std::uniform_int_distribution<std::size_t> dx(2, 7), dy(2, 9);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  for (int i = 0; i < 100; ++i) {
    std::size_t nx = dx(rng), ny = dy(rng);
    proto::Prior p;
    p.p.resize(nx);
    double sum = 0;
    for (auto& v : p.p) sum += (v = u(rng));
    for (auto& v : p.p) v /= sum;
    proto::Channel ch;
    ch.in_dim = nx;
    ch.out_dim = ny;
    ch.entries.resize(nx * ny);
    for (std::size_t x = 0; x < nx; ++x) {
      double row = 0;
      for (std::size_t y = 0; y < ny; ++y) row += (ch.entries[x * ny + y] = u(rng));
      for (std::size_t y = 0; y < ny; ++y) ch.entries[x * ny + y] /= row;
    }
    // bayes_invert checks the diagrammatic path against the rule at 1e-12
    // internally and throws on drift
    bool ok = true;
    proto::BayesResult r;
    try {
      r = proto::bayes_invert(p, ch, 1e-12);
    } catch (const Error&) {
      ok = false;
    }
    c.expect(ok && r.unsupported.empty(), "inversion case " + std::to_string(i));
    if (!ok) continue;

    proto::Prior q{r.marginal};
    proto::BayesResult back = proto::bayes_invert(q, r.inverse, 1e-12);
    double worst = 0;
    for (std::size_t x = 0; x < nx; ++x)
      for (std::size_t y = 0; y < ny; ++y)
        worst = std::max(worst, std::abs(back.inverse(x, y) - ch(x, y)));
    c.expect(worst <= 1e-10, "double inversion case " + std::to_string(i));
  }
}

// --- criterion 12: relational model ------------------------------------------------

struct Rel {
  std::size_t in = 1, out = 1;
  std::set<std::pair<std::size_t, std::size_t>> pairs;
};

Rel rel_compose(const Rel& a, const Rel& b) {
  Rel r;
  r.in = a.in;
  r.out = b.out;
  for (auto [x, y] : a.pairs)
    for (auto [y2, z] : b.pairs)
      if (y == y2) r.pairs.insert({x, z});
  return r;
}

Rel rel_product(const Rel& a, const Rel& b) {
  Rel r;
  r.in = a.in * b.in;
  r.out = a.out * b.out;
  for (auto [xa, ya] : a.pairs)
    for (auto [xb, yb] : b.pairs)
      r.pairs.insert({xa * b.in + xb, ya * b.out + yb});
  return r;
}

Rel rel_converse(const Rel& a) {
  Rel r;
  r.in = a.out;
  r.out = a.in;
  for (auto [x, y] : a.pairs) r.pairs.insert({y, x});
  return r;
}

void relational_criterion(Checker& c) {
  Signature s;
  TypeId X = s.add_type("X");
  TypeId Y = s.add_type("Y");
  GenId rxy = s.add_generator("rxy", {X}, {Y});
  GenId ryx = s.add_generator("ryx", {Y}, {X});
  GenId rxx = s.add_generator("rxx", {X}, {X});
  GenId ryy = s.add_generator("ryy", {Y}, {Y});
  SignaturePtr sig = std::move(s).freeze();

  std::mt19937_64 rng(112);
  std::bernoulli_distribution coin(0.4);
  Model m(sig, SemiringKind::Boolean);
  std::size_t nx = 3, ny = 4;
  m.set_dim(X, nx);
  m.set_dim(Y, ny);
  std::map<GenId, Rel> base;
  auto random_rel = [&](GenId g, std::size_t in, std::size_t out) {
    std::vector<Cplx> t(in * out, 0.0);
    Rel r;
    r.in = in;
    r.out = out;
    for (std::size_t x = 0; x < in; ++x) {
      for (std::size_t y = 0; y < out; ++y) {
        if (coin(rng)) {
          t[y * in + x] = 1.0;  // tensor is [out; in]
          r.pairs.insert({x, y});
        }
      }
    }
    m.set_generator(g, t);
    base[g] = r;
  };
  random_rel(rxy, nx, ny);
  random_rel(ryx, ny, nx);
  random_rel(rxx, nx, nx);
  random_rel(ryy, ny, ny);
  m.finalize();

  auto leaf_for = [&](TypeId t, std::mt19937_64& r) {
    std::uniform_int_distribution<int> pick(0, 3);
    int k = pick(r);
    if (t == X) {
      if (k == 0) return std::make_pair(Diagram::generator(sig, rxy), base[rxy]);
      if (k == 1) return std::make_pair(Diagram::generator(sig, rxx), base[rxx]);
      if (k == 2)
        return std::make_pair(Diagram::generator(sig, ryx).dagger(),
                              rel_converse(base[ryx]));
      Rel idr;
      idr.in = idr.out = nx;
      for (std::size_t i = 0; i < nx; ++i) idr.pairs.insert({i, i});
      return std::make_pair(Diagram::identity(sig, {X}), idr);
    }
    if (k == 0) return std::make_pair(Diagram::generator(sig, ryx), base[ryx]);
    if (k == 1) return std::make_pair(Diagram::generator(sig, ryy), base[ryy]);
    if (k == 2)
      return std::make_pair(Diagram::generator(sig, rxy).dagger(),
                            rel_converse(base[rxy]));
    Rel idr;
    idr.in = idr.out = ny;
    for (std::size_t i = 0; i < ny; ++i) idr.pairs.insert({i, i});
    return std::make_pair(Diagram::identity(sig, {Y}), idr);
  };

  std::function<std::pair<Diagram, Rel>(int)> build = [&](int depth) {
    std::uniform_int_distribution<int> t_pick(0, 1);
    if (depth == 0) return leaf_for(t_pick(rng) ? Y : X, rng);
    std::uniform_int_distribution<int> op(0, 3);
    switch (op(rng)) {
      case 0: {  // sequential: extend with type-matching wires
        auto [d, r] = build(depth - 1);
        if (d.output_types().empty()) return std::make_pair(d, r);
        Diagram layer = Diagram::empty(sig);
        Rel layer_rel;
        bool first = true;
        for (TypeId t : d.output_types()) {
          auto [ld, lr] = leaf_for(t, rng);
          layer = compose_par(layer, ld);
          layer_rel = first ? lr : rel_product(layer_rel, lr);
          first = false;
        }
        return std::make_pair(compose_seq(d, layer), rel_compose(r, layer_rel));
      }
      case 1: {  // parallel
        auto [d1, r1] = build(depth - 1);
        auto [d2, r2] = build(depth - 1);
        return std::make_pair(compose_par(d1, d2), rel_product(r1, r2));
      }
      case 2: {  // converse
        auto [d, r] = build(depth - 1);
        return std::make_pair(d.dagger(), rel_converse(r));
      }
      default:
        return leaf_for(t_pick(rng) ? Y : X, rng);
    }
  };

  for (int i = 0; i < 100; ++i) {
    auto [d, r] = build(2);
    TensorValue t = interpret(d, m);
    std::size_t in_total = 1, out_total = 1;
    for (std::size_t k = 0; k < t.out_rank; ++k) out_total *= t.shape[k];
    for (std::size_t k = t.out_rank; k < t.shape.size(); ++k)
      in_total *= t.shape[k];
    bool ok = in_total == r.in && out_total == r.out;
    for (std::size_t x = 0; x < in_total && ok; ++x) {
      for (std::size_t y = 0; y < out_total && ok; ++y) {
        bool related = r.pairs.count({x, y}) != 0;
        bool entry = t.entry(y * in_total + x) != Cplx(0, 0);
        if (related != entry) ok = false;
      }
    }
    c.expect(ok, "relation diagram " + std::to_string(i));
  }
}

// --- criterion 13: soundness harness -----------------------------------------------

void harness_criterion(Checker& c) {
  for (const char* file :
       {"model_dim2.json", "model_dim3.json", "distsem_model.json"}) {
    Model m = io::model_from_json(io::read_file(data_path(file)));
    SoundnessReport report = soundness_harness(Ruleset::builtin(), m, 200, 13);
    c.expect(report.ok(), std::string(file) + ": " +
                              std::to_string(report.failures.size()) +
                              " failures");
  }
  Model broken = io::model_from_json(
      io::read_file(data_path("model_dim2_broken_dagger.json")), nullptr,
      /*check_dagger=*/false);
  SoundnessReport report = soundness_harness(Ruleset::builtin(), broken, 200, 13);
  c.expect(!report.failures.empty(), "broken-dagger mutant must fail");
}

struct CriterionSpec {
  int id;
  const char* title;
  std::function<void(Checker&)> run;
};

}  // namespace

int main() {
  std::vector<CriterionSpec> criteria = {
      {1, "snake equation: structural and exact tensor identity (dims 2-4)",
       snake_equation},
      {2, "bifunctoriality tautology on 100 random quadruples", bifunctoriality},
      {3, "dagger involution/contravariance/covariance on 100 random diagrams",
       dagger_laws},
      {4, "spider fusion: 200 random two-spider webs, dims 2-3, exact tensors",
       spider_fusion},
      {5, "spider-basis semantics vs brute force, legs <= 6, dims 2-4",
       spider_basis},
      {6, "complementarity hopf rule sound up to scalar, 50 cases, dim 2",
       complementarity},
      {7, "teleportation and entanglement swapping, 4 unitaries + dim 3",
       protocols_criterion},
      {8, "pregroup reduction: n tv n <= s and 2000-case oracle agreement",
       pregroup_criterion},
      {9, "negation derivation over the shipped lexicon, exact",
       negation_criterion},
      {10, "distributional pipeline: toy corpus counts, norms, shards",
       distributional_criterion},
      {11, "Bayesian inversion: 100 random pairs at 1e-12, double inversion",
       bayes_criterion},
      {12, "relational model vs set-based oracle, 100 random diagrams",
       relational_criterion},
      {13, "soundness harness: shipped models clean, mutant flagged",
       harness_criterion},
  };

  int failures = 0;
  for (const CriterionSpec& spec : criteria) {
    Checker checker;
    std::string crash;
    try {
      spec.run(checker);
    } catch (const std::exception& e) {
      crash = e.what();
    }
    bool ok = crash.empty() && checker.failed == 0;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << spec.id << ": "
              << spec.title << " (" << (checker.checks - checker.failed) << "/"
              << checker.checks << " checks)\n";
    if (!crash.empty()) std::cout << "    crashed: " << crash << "\n";
    if (!ok) {
      std::cout << checker.detail.str();
      ++failures;
    }
  }
  std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed\n"
                              : "ACCEPTANCE: failures present\n");
  return failures;
}
