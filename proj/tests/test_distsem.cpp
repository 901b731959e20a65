#include <cmath>
#include <random>

#include "doctest.h"
#include "strand/distsem.hpp"

using namespace strand;
using namespace strand::distsem;

namespace {

const char* kToyCorpus =
    "Alice likes Bob, and Alice likes cake; but Bob hates cake and Bob likes "
    "Alice.\n"
    "Cake pleases Alice and cake pleases Bob, while Alice and Bob share cake "
    "happily today.\n";

ContextConfig toy_config(int k = 2) {
  return ContextConfig{{"alice", "bob", "cake"}, k};
}

CooccurrenceModel toy_model(int k = 2) {
  return CooccurrenceModel::ingest(tokenize(kToyCorpus), toy_config(k));
}

/** The shipped-style sentence fixture: 2-dimensional noun and sentence
 * spaces over nonnegative reals, not-box = basis swap. */
Model sentence_model() {
  Signature s;
  TypeId n = s.add_type("n");
  TypeId st = s.add_type("s");
  GenId nb = s.add_generator("not_box", {st}, {st}, "not_box", true);
  SignaturePtr sig = std::move(s).freeze();
  Model m(sig, SemiringKind::NonnegReal);
  m.set_dim(n, 2);
  m.set_dim(st, 2);
  m.set_generator(nb, {0, 1, 1, 0});
  m.finalize();
  return m;
}

const std::vector<Cplx> kLike = {1, 0, 2, 1, 0, 3, 1, 1};
const std::vector<Cplx> kHate = {2, 1, 0, 1, 1, 0, 1, 2};

Lexicon toy_lexicon() {
  using pregroup::mirror;
  using pregroup::parse_type_sequence;
  Lexicon lex;
  lex.add({"alice", parse_type_sequence("n"), std::nullopt, {1, 2}});
  lex.add({"bob", parse_type_sequence("n"), std::nullopt, {3, 1}});
  lex.add({"like", mirror(parse_type_sequence("n^r s n^l")), std::nullopt, kLike});
  lex.add({"likes", mirror(parse_type_sequence("n^r s n^l")), std::nullopt, kLike});
  lex.add({"hates", mirror(parse_type_sequence("n^r s n^l")), std::nullopt, kHate});
  lex.add({"does", mirror(parse_type_sequence("n^r s s^l n")), BuiltinWord::Does, {}});
  lex.add({"not", mirror(parse_type_sequence("n^r s s^l n")), BuiltinWord::Not, {}});
  return lex;
}

std::vector<double> real_entries(const TensorValue& t) {
  std::vector<double> out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = t.entry(i).real();
  return out;
}

}  // namespace

TEST_CASE("tokenization lowercases, strips punctuation, keeps lines apart") {
  auto lines = tokenize("Alice likes Bob!\nBob, not so much.");
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == std::vector<std::string>{"alice", "likes", "bob"});
  CHECK(lines[1] == std::vector<std::string>{"bob", "not", "so", "much"});
}

TEST_CASE("the toy corpus reproduces the hand-counted co-occurrences") {
  CooccurrenceModel m = toy_model();
  CHECK(m.token_count() == 30);
  CHECK(m.counts("likes") == std::vector<long long>{3, 2, 1});
  CHECK(m.counts("cake") == std::vector<long long>{3, 5, 0});
  CHECK(m.counts("alice") == std::vector<long long>{0, 5, 3});
  CHECK(m.counts("bob") == std::vector<long long>{5, 0, 5});
  CHECK(m.counts("happily") == std::vector<long long>{0, 0, 1});
  CHECK(m.counts("today") == std::vector<long long>{0, 0, 1});

  // the pair counts are symmetric when both words are context words
  CHECK(m.counts("alice")[1] == m.counts("bob")[0]);
  CHECK(m.counts("alice")[2] == m.counts("cake")[0]);
  CHECK(m.counts("bob")[2] == m.counts("cake")[1]);
}

TEST_CASE("windows clamp to line boundaries") {
  // with k=5 the windows around "pleases" still see line 2 only
  CooccurrenceModel wide = toy_model(5);
  CHECK(wide.counts("pleases") == std::vector<long long>{3, 3, 4});
  // "today" sits at the very end of its line
  CHECK(wide.counts("today") == std::vector<long long>{0, 1, 1});
}

TEST_CASE("tiny stream examples behave as specified") {
  ContextConfig cfg{{"b"}, 1};
  auto lines = tokenize("a b a");
  CooccurrenceModel m = CooccurrenceModel::ingest(lines, cfg);
  CHECK(m.counts("a") == std::vector<long long>{2});

  ContextConfig wide{{"b"}, 5};
  CooccurrenceModel m2 = CooccurrenceModel::ingest(lines, wide);
  CHECK(m2.counts("a") == std::vector<long long>{2});

  // a context word absent from the corpus yields a zero column
  ContextConfig ghost{{"b", "zz"}, 2};
  CooccurrenceModel m3 = CooccurrenceModel::ingest(lines, ghost);
  CHECK(m3.counts("a") == std::vector<long long>{2, 0});

  CooccurrenceModel empty = CooccurrenceModel::ingest({}, cfg);
  CHECK(empty.empty());
}

TEST_CASE("meaning vectors normalize and flag zero counts") {
  ContextConfig cfg{{"x", "y"}, 1};
  CooccurrenceModel m(cfg);
  m.ingest_line({"x", "a", "y"});  // a sees x and y once each... plus 3-4-5
  m.ingest_line({"b"});
  // craft a 3-4-5 vector through repetition
  for (int i = 0; i < 2; ++i) m.ingest_line({"x", "c"});
  for (int i = 0; i < 3; ++i) m.ingest_line({"c", "y"});
  // c saw x 2 times? no: each line "x c" contributes x once; "c y" adds y
  CHECK(m.counts("c") == std::vector<long long>{2, 3});

  MeaningVector mv = meaning_vector(m, "c");
  double n = std::sqrt(13.0);
  CHECK(mv.values[0] == doctest::Approx(2 / n));
  CHECK(mv.values[1] == doctest::Approx(3 / n));
  CHECK_FALSE(mv.zero);

  MeaningVector zero = meaning_vector(m, "b");
  CHECK(zero.zero);
  CHECK(zero.values == std::vector<double>{0, 0});

  CHECK_THROWS_AS(meaning_vector(m, "nope"), UnknownNameError);

  // unit vectors are fixed points of normalization
  CooccurrenceModel m345(ContextConfig{{"x", "y"}, 1});
  m345.ingest_line({"y", "d", "y"});
  for (int i = 0; i < 3; ++i) m345.ingest_line({"x", "d"});
  m345.ingest_line({"d", "y", "d"});
  CHECK(m345.counts("d") == std::vector<long long>{3, 4});
  MeaningVector u = meaning_vector(m345, "d");
  CHECK(u.values[0] == doctest::Approx(0.6));
  CHECK(u.values[1] == doctest::Approx(0.8));
}

TEST_CASE("similarity is a bounded symmetric inner product") {
  MeaningVector u{"u", {0.6, 0.8}, false};
  MeaningVector e0{"e0", {1.0, 0.0}, false};
  CHECK(similarity(u, u) == doctest::Approx(1.0));
  CHECK(similarity(u, e0) == doctest::Approx(0.6));
  CHECK(similarity(e0, u) == doctest::Approx(0.6));
  MeaningVector ortho{"o", {0.0, 1.0}, false};
  CHECK(similarity(e0, ortho) == doctest::Approx(0.0));
  MeaningVector short_vec{"s", {1.0}, false};
  CHECK_THROWS_AS(similarity(u, short_vec), TypeMismatchError);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> c(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    std::vector<double> a(4), b(4);
    double na = 0, nb = 0;
    for (int k = 0; k < 4; ++k) {
      a[k] = c(rng);
      b[k] = c(rng);
      na += a[k] * a[k];
      nb += b[k] * b[k];
    }
    for (int k = 0; k < 4; ++k) {
      a[k] /= std::sqrt(na);
      b[k] /= std::sqrt(nb);
    }
    double s = similarity({"a", a, false}, {"b", b, false});
    CHECK(s >= 0.0);
    CHECK(s <= 1.0 + 1e-12);
    CHECK(s == doctest::Approx(similarity({"b", b, false}, {"a", a, false})));
  }
}

TEST_CASE("shard ingestion merges to the single-pass counts") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> letter(0, 4);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::string> line;
    std::uniform_int_distribution<int> len(0, 40);
    int n = len(rng);
    for (int i = 0; i < n; ++i)
      line.push_back(std::string(1, static_cast<char>('a' + letter(rng))));
    ContextConfig cfg{{"a", "b"}, 2};

    CooccurrenceModel whole(cfg);
    whole.ingest_line(line);

    std::uniform_int_distribution<std::size_t> cut(0, line.size());
    std::size_t mid = cut(rng);
    CooccurrenceModel left(cfg), right(cfg);
    left.ingest_line_range(line, 0, mid);
    right.ingest_line_range(line, mid, line.size());
    left.merge(right);

    CHECK(left.token_count() == whole.token_count());
    for (const std::string& w : whole.words())
      CHECK(left.counts(w) == whole.counts(w));
  }
}

TEST_CASE("transitive sentences contract subject and object into the verb") {
  Model m = sentence_model();
  Lexicon lex = toy_lexicon();
  SentenceResult r = sentence_meaning({"alice", "likes", "bob"}, lex, m);
  REQUIRE(r.meaning.shape == std::vector<std::size_t>{2});

  // oracle: result_s = sum_{i,j} a_i b_j L[i,s,j]
  std::vector<double> a{1, 2}, b{3, 1};
  for (std::size_t s = 0; s < 2; ++s) {
    double want = 0;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        want += a[i] * b[j] * kLike[(i * 2 + s) * 2 + j].real();
    CHECK(r.meaning.entry(s).real() == want);  // integer arithmetic, exact
  }
  CHECK(real_entries(r.meaning) == std::vector<double>{9, 15});
}

TEST_CASE("an outer-product verb factorizes the sentence meaning") {
  Model m = sentence_model();
  Lexicon lex = toy_lexicon();
  // verb = x (x) w (x) y with x=(1,1), w=(2,3), y=(1,0)
  std::vector<Cplx> v(8);
  std::vector<double> x{1, 1}, w{2, 3}, y{1, 0};
  for (int i = 0; i < 2; ++i)
    for (int s = 0; s < 2; ++s)
      for (int j = 0; j < 2; ++j) v[(i * 2 + s) * 2 + j] = x[i] * w[s] * y[j];
  lex.add({"sees", lex.at("likes").type, std::nullopt, v});
  SentenceResult r = sentence_meaning({"alice", "sees", "bob"}, lex, m);
  // <x|a> = 1+2 = 3, <y|b> = 3: meaning = 9 w
  CHECK(real_entries(r.meaning) == std::vector<double>{18, 27});
}

TEST_CASE("ungrammatical and unknown input is refused") {
  Model m = sentence_model();
  Lexicon lex = toy_lexicon();
  CHECK_THROWS_AS(sentence_meaning({"alice", "bob"}, lex, m), GrammarError);
  CHECK_THROWS_AS(sentence_meaning({"alice", "zaps", "bob"}, lex, m),
                  UnknownNameError);
}

TEST_CASE("'does' does nothing and 'not' negates") {
  Model m = sentence_model();
  Lexicon lex = toy_lexicon();
  std::vector<double> plain =
      real_entries(sentence_meaning({"alice", "likes", "bob"}, lex, m).meaning);
  std::vector<double> with_does = real_entries(
      sentence_meaning({"alice", "does", "like", "bob"}, lex, m).meaning);
  CHECK(with_does == plain);  // exact: integer tensors throughout

  std::vector<double> negated = real_entries(
      sentence_meaning({"alice", "does", "not", "like", "bob"}, lex, m).meaning);
  // the not-box is the basis swap
  CHECK(negated == std::vector<double>{plain[1], plain[0]});
}

TEST_CASE("the not-box is an involution under rewriting") {
  Model m = sentence_model();
  const SignaturePtr& sig = m.signature();
  Diagram nb = Diagram::generator(sig, "not_box");
  NormalizeResult res = normalize(compose_seq(nb, nb), Ruleset::builtin());
  CHECK(canonical_equal(res.diagram,
                        Diagram::identity(sig, {sig->type_id("s")})));
}

TEST_CASE("sentence meaning is multilinear in each word state") {
  Model m = sentence_model();
  Lexicon lex = toy_lexicon();
  std::vector<double> base =
      real_entries(sentence_meaning({"alice", "likes", "bob"}, lex, m).meaning);

  Lexicon scaled = toy_lexicon();
  std::vector<Cplx> big = kLike;
  for (auto& c : big) c *= 3.0;
  scaled.add({"likes", lex.at("likes").type, std::nullopt, big});
  std::vector<double> tripled = real_entries(
      sentence_meaning({"alice", "likes", "bob"}, scaled, m).meaning);
  for (std::size_t i = 0; i < base.size(); ++i)
    CHECK(tripled[i] == doctest::Approx(3 * base[i]).epsilon(1e-9));
}

TEST_CASE("noun choices genuinely change sentence meaning") {
  Model m = sentence_model();
  Lexicon lex = toy_lexicon();
  lex.add({"carol", lex.at("alice").type, std::nullopt, {5, 1}});
  auto v1 = real_entries(sentence_meaning({"alice", "hates", "bob"}, lex, m).meaning);
  auto v2 = real_entries(sentence_meaning({"carol", "hates", "bob"}, lex, m).meaning);
  CHECK(v1 != v2);
}

TEST_CASE("the verb-as-function form computes the same meaning") {
  Model m = sentence_model();
  Lexicon lex = toy_lexicon();
  std::vector<double> via_caps =
      real_entries(sentence_meaning({"alice", "likes", "bob"}, lex, m).meaning);

  // transposed form: a generator n (x) n -> s applied to alice (x) bob
  Signature s;
  TypeId n = s.add_type("n");
  TypeId st = s.add_type("s");
  GenId alice = s.add_generator("alice", {}, {n});
  GenId bob = s.add_generator("bob", {}, {n});
  GenId like_fn = s.add_generator("like_fn", {n, n}, {st});
  SignaturePtr sig = std::move(s).freeze();
  Model fn_model(sig, SemiringKind::NonnegReal);
  fn_model.set_dim(n, 2);
  fn_model.set_dim(st, 2);
  fn_model.set_generator(alice, {1, 2});
  fn_model.set_generator(bob, {3, 1});
  std::vector<Cplx> vfn(8);
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k)
      for (int j = 0; j < 2; ++j)
        vfn[(k * 2 + i) * 2 + j] = kLike[(i * 2 + k) * 2 + j];  // [s; i, j]
  fn_model.set_generator(like_fn, vfn);
  fn_model.finalize();

  Diagram applied = compose_seq(
      compose_par(Diagram::generator(sig, alice), Diagram::generator(sig, bob)),
      Diagram::generator(sig, like_fn));
  TensorValue got = interpret(applied, fn_model);
  CHECK(real_entries(got) == via_caps);
}

TEST_CASE("corpus-built verb tensors sum subject-object outer products") {
  CooccurrenceModel m = toy_model();
  std::vector<Cplx> v = verb_tensor_from_pairs({{"alice", "cake"}, {"bob", "cake"}},
                                               m, {1.0, 0.0});
  MeaningVector a = meaning_vector(m, "alice");
  MeaningVector b = meaning_vector(m, "bob");
  MeaningVector c = meaning_vector(m, "cake");
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      double want = a.values[i] * c.values[j] + b.values[i] * c.values[j];
      CHECK(v[(i * 2 + 0) * 3 + j].real() == doctest::Approx(want));
      CHECK(v[(i * 2 + 1) * 3 + j].real() == doctest::Approx(0.0));
    }
  }
  CHECK_THROWS_AS(verb_tensor_from_pairs({}, m, {2.0, 0.0}), Error);
}
