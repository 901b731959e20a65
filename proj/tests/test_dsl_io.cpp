#include <random>

#include "doctest.h"
#include "strand/dsl.hpp"
#include "strand/json_io.hpp"
#include "strand/render.hpp"
#include "test_support.hpp"

using namespace strand;
using strand::testing::Env;
using strand::testing::make_env;

namespace {
const Env& env() {
  static Env e = make_env();
  return e;
}
}  // namespace

TEST_CASE("the snake expression parses to the snake diagram") {
  Diagram snake = dsl::parse_diagram("(id[Q] * cup[Q]) . (cap[Q] * id[Q])",
                                     env().sig);
  CHECK(canonical_equal(snake, Diagram::identity(env().sig, {env().Q})));
}

TEST_CASE("star binds tighter than dot") {
  // f . f * eps  must parse as  f . (f * eps):  Q -> Q with a closed... no:
  // f: Q->Q, f * eps: [Q,Q] -> [Q]; f . (f * eps) needs two inputs - reject.
  CHECK_THROWS_AS(dsl::parse_diagram("f . f * eps", env().sig), ParseError);
  // with explicit grouping it is fine
  Diagram d = dsl::parse_diagram("(f . f) * eps", env().sig);
  CHECK(d.input_types().size() == 2);
}

TEST_CASE("dagger and transpose operators elaborate") {
  Diagram d1 = dsl::parse_diagram("dag(dag(f))", env().sig);
  CHECK(canonical_equal(d1, Diagram::generator(env().sig, "f")));
  Diagram d2 = dsl::parse_diagram("tr(tr(split))", env().sig);
  CHECK(canonical_equal(d2, Diagram::generator(env().sig, "split")));
  Diagram d3 = dsl::parse_diagram("spider{dark, Q, 2, 1}", env().sig);
  CHECK(canonical_equal(
      d3, Diagram::spider(env().sig, SpiderColor::Dark, env().Q, 2, 1)));
}

TEST_CASE("parse errors carry positions") {
  try {
    dsl::parse_expr("f . (g *");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() >= 8);
  }
  try {
    dsl::parse_diagram("f .\nmix . f", env().sig);
    FAIL("expected a positioned type error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("mismatch") != std::string::npos);
  }
  CHECK_THROWS_AS(dsl::parse_diagram("nope_box", env().sig), ParseError);
}

TEST_CASE("pretty-printing round-trips through the parser") {
  const char* cases[] = {
      "(id[Q] * cup[Q]) . (cap[Q] * id[Q])",
      "f . g . u",
      "(f * g) . merge",
      "dag(f . g) * tr(split)",
      "spider{light, Q, 2, 1} . spider{light, Q, 1, 0}",
      "swap[Q, R] . swap[R, Q]",
      "psi . eps",
  };
  for (const char* text : cases) {
    dsl::Expr e1 = dsl::parse_expr(text);
    std::string printed = dsl::pretty(e1);
    dsl::Expr e2 = dsl::parse_expr(printed);
    CHECK(dsl::pretty(e2) == printed);
    CHECK(canonical_equal(dsl::elaborate(e1, env().sig),
                          dsl::elaborate(e2, env().sig)));
  }
}

TEST_CASE("diagrams round-trip through JSON, signature embedded") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 20; ++i) {
    Diagram d = strand::testing::random_diagram(rng, env(), 3);
    std::string json = io::diagram_to_json(d);
    Diagram back = io::diagram_from_json(json);
    CHECK(canonical_equal(d, back));

    // and against a caller-provided signature
    Diagram back2 = io::diagram_from_json(json, env().sig);
    CHECK(canonical_equal(d, back2));
  }
}

TEST_CASE("signatures round-trip through JSON") {
  std::string json = io::signature_to_json(env().sig);
  SignaturePtr back = io::signature_from_json(json);
  CHECK(*back == *env().sig);
}

TEST_CASE("model JSON loads dims, tensors and bases") {
  const char* text = R"({
    "semiring": "complex",
    "types": {"Q": 2},
    "generators": {"u_x": [0, 1, 1, 0], "u_s": [[1,0], 0, 0, [0,1]]},
    "spider_bases": {
      "light": {"Q": [[1, 0], [0, 1]]},
      "dark": {"Q": [[0.7071067811865476, 0.7071067811865476],
                     [0.7071067811865476, -0.7071067811865476]]}
    },
    "signature": {
      "types": ["Q"],
      "generators": [
        {"name": "u_x", "inputs": ["Q"], "outputs": ["Q"], "dagger": "u_x", "unitary": true},
        {"name": "u_s", "inputs": ["Q"], "outputs": ["Q"], "dagger": "u_s_dag", "unitary": true}
      ]
    }
  })";
  Model m = io::model_from_json(text);
  CHECK(m.semiring() == SemiringKind::Complex);
  const SignaturePtr& sig = m.signature();
  CHECK(m.dim(sig->type_id("Q")) == 2);
  // the partner tensor was derived as the conjugate transpose
  GenId sdag = sig->generator_id("u_s_dag");
  REQUIRE(m.has_generator(sdag));
  CHECK(m.generator_entries(sdag)[3] == Cplx(0, -1));
  CHECK(m.hints().complementary.size() == 1);

  // trace + normalize over this model's signature
  Diagram closed = compose_seq(Diagram::generator(sig, "u_s"),
                               Diagram::generator(sig, "u_s_dag"));
  NormalizeResult res = normalize(closed, Ruleset::builtin());
  CHECK(canonical_equal(res.diagram,
                        Diagram::identity(sig, {sig->type_id("Q")})));
  std::string trace_json = io::trace_to_json(res.trace);
  CHECK(trace_json.find("unitarity") != std::string::npos);
}

TEST_CASE("ruleset files load as user rules") {
  Diagram f = Diagram::generator(env().sig, "f");
  Diagram lhs = compose_seq(f, f);
  Diagram rhs = Diagram::generator(env().sig, "g");
  std::string rules_json = std::string(R"({"rules": [{"name": "ff_to_g",)") +
                           R"("soundness": "exact", "lhs": )" +
                           io::diagram_to_json(lhs, false) + ", \"rhs\": " +
                           io::diagram_to_json(rhs, false) + "}]}";
  std::vector<RulePtr> rules = io::rules_from_json(rules_json, env().sig);
  REQUIRE(rules.size() == 1);
  CHECK(rules[0]->name() == "ff_to_g");
  Diagram host = compose_seq(f, f);
  auto matches = rules[0]->find_matches(host);
  REQUIRE(matches.size() == 1);
  CHECK(canonical_equal(rules[0]->apply(host, matches[0]), rhs));
}

TEST_CASE("context files declare words and the window") {
  distsem::ContextConfig cfg =
      io::context_from_text("# toy context\nwindow = 2\nalice\nbob\ncake\n");
  CHECK(cfg.window == 2);
  CHECK(cfg.context_words ==
        std::vector<std::string>{"alice", "bob", "cake"});
  CHECK_THROWS_AS(io::context_from_text("alice\n"), ParseError);
}

TEST_CASE("counts round-trip through JSON") {
  distsem::ContextConfig cfg{{"a", "b"}, 1};
  distsem::CooccurrenceModel m(cfg);
  m.ingest_line({"a", "x", "b", "x"});
  std::string json = io::counts_to_json(m);
  distsem::CooccurrenceModel back = io::counts_from_json(json);
  CHECK(back.token_count() == m.token_count());
  for (const std::string& w : m.words()) CHECK(back.counts(w) == m.counts(w));
}

TEST_CASE("lexicon files honor the convention flag") {
  const char* text = R"({
    "convention": "mirrored",
    "words": {
      "alice": {"type": "n", "tensor": [1, 2]},
      "like": {"type": "n^r s n^l", "tensor": [1, 0, 2, 1, 0, 3, 1, 1]},
      "does": {"type": "n^r s s^l n", "builtin": "does"}
    }
  })";
  distsem::Lexicon lex = io::lexicon_from_json(text);
  CHECK(lex.at("like").type == pregroup::parse_type_sequence("n^l s n^r"));
  CHECK(lex.at("does").builtin == distsem::BuiltinWord::Does);
  CHECK(lex.at("alice").tensor.size() == 2);
}

TEST_CASE("prior and channel files parse") {
  proto::Prior p = io::prior_from_json("[0.25, 0.75]");
  CHECK(p.p == std::vector<double>{0.25, 0.75});
  proto::Channel c = io::channel_from_json("[[0.9, 0.1], [0.2, 0.8]]");
  CHECK(c.in_dim == 2);
  CHECK(c.out_dim == 2);
  CHECK(c(0, 0) == 0.9);
  proto::BayesResult r = proto::bayes_invert(p, c);
  std::string out = io::bayes_to_json(r);
  CHECK(out.find("marginal") != std::string::npos);
}

TEST_CASE("DOT and SVG renderings contain the expected shapes") {
  Diagram d = compose_seq(
      Diagram::generator(env().sig, "f"),
      compose_seq(Diagram::spider(env().sig, SpiderColor::Light, env().Q, 1, 1),
                  Diagram::generator(env().sig, "g")));
  std::string dot = render::to_dot(d);
  CHECK(dot.find("graph diagram") != std::string::npos);
  CHECK(dot.find("rankdir=LR") != std::string::npos);
  CHECK(dot.find("rank=source") != std::string::npos);
  CHECK(dot.find("rank=sink") != std::string::npos);
  CHECK(dot.find("shape=circle, style=filled") != std::string::npos);
  CHECK(dot.find("label=\"f\"") != std::string::npos);

  std::string svg = render::to_svg(d);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("<circle") != std::string::npos);
  CHECK(svg.find(">f<") != std::string::npos);

  // circles render too
  Diagram circle = compose_seq(Diagram::cup(env().sig, env().Q),
                               Diagram::cap(env().sig, env().Q));
  CHECK(render::to_dot(circle).find("loop0") != std::string::npos);
  CHECK(render::to_svg(circle).find("circle") != std::string::npos);
}
