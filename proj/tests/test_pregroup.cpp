#include <random>

#include "doctest.h"
#include "strand/pregroup.hpp"

using namespace strand;
using namespace strand::pregroup;

namespace {

const SimpleType kS{"s", 0};

TypeSeq seq(const std::string& text) { return parse_type_sequence(text); }

bool non_crossing(const std::vector<std::pair<int, int>>& pairs) {
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    for (std::size_t b = a + 1; b < pairs.size(); ++b) {
      auto [p, q] = pairs[a];
      auto [r, t] = pairs[b];
      if (p < r && r < q && q < t) return false;
      if (r < p && p < t && t < q) return false;
    }
  }
  return true;
}

TypeSeq random_seq(std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> atom(0, 1);
  std::uniform_int_distribution<int> adj(-1, 1);
  TypeSeq out(static_cast<std::size_t>(len(rng)));
  for (auto& t : out) t = SimpleType{atom(rng) ? "n" : "s", adj(rng)};
  return out;
}

}  // namespace

TEST_CASE("type notation parses and prints") {
  CHECK(parse_simple_type("n") == SimpleType{"n", 0});
  CHECK(parse_simple_type("n^l") == SimpleType{"n", -1});
  CHECK(parse_simple_type("n^r") == SimpleType{"n", +1});
  CHECK_THROWS_AS(parse_simple_type("n^x"), ParseError);
  CHECK_THROWS_AS(parse_simple_type("^l"), ParseError);
  CHECK(to_string(seq("n^l s n^r")) == "n^l s n^r");
  CHECK(mirror(seq("n^r s s^l n")) == seq("n^l s s^r n"));
}

TEST_CASE("the contraction laws accept exactly x.x^l and x^r.x") {
  CHECK(contract_ok({"n", 0}, {"n", -1}));
  CHECK(contract_ok({"n", +1}, {"n", 0}));
  CHECK_FALSE(contract_ok({"n", 0}, {"s", -1}));
  CHECK_FALSE(contract_ok({"n", -1}, {"n", 0}));
  CHECK_FALSE(contract_ok({"n", 0}, {"n", +1}));
  CHECK_FALSE(contract_ok({"n", 0}, {"n", 0}));
  CHECK_FALSE(contract_ok({"n", -1}, {"n", +1}));
}

TEST_CASE("noun, transitive verb, noun reduces to the sentence type") {
  // tv = n^l s n^r, the paper's order
  TypeSeq ts = seq("n n^l s n^r n");
  auto r = reduce_to(ts, kS);
  REQUIRE(r.has_value());
  CHECK(r->pairs == std::vector<std::pair<int, int>>{{0, 1}, {3, 4}});
  CHECK(r->survivors == std::vector<int>{2});
}

TEST_CASE("single sentence type reduces with the empty matching") {
  auto r = reduce_to(seq("s"), kS);
  REQUIRE(r.has_value());
  CHECK(r->pairs.empty());
  CHECK(r->survivors == std::vector<int>{0});
}

TEST_CASE("two nouns do not make a sentence") {
  CHECK_FALSE(reduce_to(seq("n n"), kS).has_value());
  CHECK_FALSE(brute_force_reduce(seq("n n"), kS));
}

TEST_CASE("a lone contractible pair does not leave a sentence behind") {
  CHECK_FALSE(brute_force_reduce(seq("n n^l"), kS));
  // but it does reduce to 1 next to an s
  CHECK(brute_force_reduce(seq("n n^l s"), kS));
}

TEST_CASE("reduction to the unit (no survivors)") {
  CHECK(brute_force_reduce_to_unit(seq("n n^l")));
  CHECK(brute_force_reduce_to_unit({}));
  CHECK_FALSE(brute_force_reduce_to_unit(seq("n")));
  CHECK_FALSE(brute_force_reduce_to_unit(seq("n^l n")));
  CHECK(brute_force_reduce_to_unit(seq("n n^l n n^l")));
  CHECK(brute_force_reduce_to_unit(seq("n s s^l n^l")));

  std::mt19937_64 rng(77);
  for (int i = 0; i < 500; ++i) {
    TypeSeq ts = random_seq(rng, 8);
    CHECK(reduces_to_unit(ts) == brute_force_reduce_to_unit(ts));
  }
}

TEST_CASE("the DP agrees with the exhaustive oracle") {
  std::mt19937_64 rng(2026);
  int agreements = 0;
  for (int i = 0; i < 2000; ++i) {
    TypeSeq ts = random_seq(rng, 8);
    bool dp = reduce_to(ts, kS).has_value();
    bool bf = brute_force_reduce(ts, kS);
    CHECK(dp == bf);
    if (dp == bf) ++agreements;
  }
  CHECK(agreements == 2000);
}

TEST_CASE("witnesses are non-crossing, disjoint and contract correctly") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    TypeSeq ts = random_seq(rng, 10);
    auto r = reduce_to(ts, kS);
    if (!r) continue;
    CHECK(non_crossing(r->pairs));
    std::vector<int> used;
    for (auto [p, q] : r->pairs) {
      CHECK(p < q);
      CHECK(contract_ok(ts[p], ts[q]));
      used.push_back(p);
      used.push_back(q);
    }
    for (int s : r->survivors) used.push_back(s);
    std::sort(used.begin(), used.end());
    CHECK(std::unique(used.begin(), used.end()) == used.end());
    CHECK(used.size() == ts.size());
  }
}

TEST_CASE("inserting a contractible adjacent pair preserves reducibility") {
  std::mt19937_64 rng(11);
  int tested = 0;
  while (tested < 300) {
    TypeSeq ts = random_seq(rng, 6);
    if (!reduce_to(ts, kS)) continue;
    ++tested;
    std::uniform_int_distribution<std::size_t> at(0, ts.size());
    std::size_t k = at(rng);
    std::uniform_int_distribution<int> which(0, 1);
    TypeSeq longer = ts;
    if (which(rng)) {
      longer.insert(longer.begin() + k, {SimpleType{"n", 0}, SimpleType{"n", -1}});
    } else {
      longer.insert(longer.begin() + k, {SimpleType{"n", +1}, SimpleType{"n", 0}});
    }
    CHECK(reduce_to(longer, kS).has_value());
  }
}

TEST_CASE("reductions become cap-wiring diagrams") {
  Signature s;
  s.add_type("n");
  s.add_type("s");
  SignaturePtr sig = std::move(s).freeze();

  auto r = reduce_to(seq("n n^l s n^r n"), kS);
  REQUIRE(r.has_value());
  Diagram d = reduction_to_diagram(sig, *r);
  d.validate();
  CHECK(d.input_types().size() == 5);
  REQUIRE(d.output_types().size() == 1);
  CHECK(sig->type(d.output_types()[0]).name == "s");
  // two caps and one through-wire: no internal nodes at all
  CHECK(d.internal_node_count() == 0);
  CHECK(d.edges().size() == 3);

  // empty matching on [s] gives the identity wire
  auto rs = reduce_to(seq("s"), kS);
  REQUIRE(rs.has_value());
  CHECK(canonical_equal(reduction_to_diagram(sig, *rs),
                        Diagram::identity(sig, {sig->type_id("s")})));
}

TEST_CASE("the spec lexicon sentence reduces with six caps over 13 wires") {
  // alice does not like bob, written in the mirrored convention
  TypeSeq ts;
  auto append = [&](const TypeSeq& w) { ts.insert(ts.end(), w.begin(), w.end()); };
  append(mirror(seq("n")));
  append(mirror(seq("n^r s s^l n")));
  append(mirror(seq("n^r s s^l n")));
  append(mirror(seq("n^r s n^l")));
  append(mirror(seq("n")));
  REQUIRE(ts.size() == 13);
  auto r = reduce_to(ts, kS);
  REQUIRE(r.has_value());
  CHECK(r->pairs.size() == 6);
  CHECK(r->survivors.size() == 1);
  CHECK(ts[r->survivors[0]] == kS);
}
