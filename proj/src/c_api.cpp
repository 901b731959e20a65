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

#include "strand/strand_c.h"

#include <cstring>
#include <sstream>

#include "strand/dsl.hpp"
#include "strand/json_io.hpp"
#include "strand/render.hpp"

using namespace strand;

extern "C" {

struct strand_signature {
  SignaturePtr rep;
};
struct strand_diagram {
  Diagram rep;
};
struct strand_ruleset {
  Ruleset rep;
};
struct strand_model {
  Model rep;
};
struct strand_lexicon {
  distsem::Lexicon rep;
};
struct strand_corpus {
  distsem::CooccurrenceModel rep;
};

}  // extern "C"

namespace {

thread_local std::string g_last_error;

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

strand_status fail(strand_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

strand_status classify(const Error& e) {
  if (dynamic_cast<const UnknownNameError*>(&e))
    return fail(STRAND_ERR_UNKNOWN_NAME, e.what());
  if (dynamic_cast<const TypeMismatchError*>(&e))
    return fail(STRAND_ERR_TYPE_MISMATCH, e.what());
  if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
    std::ostringstream os;
    if (pe->line() > 0) os << "line " << pe->line() << ':' << pe->column() << ": ";
    os << pe->what();
    return fail(STRAND_ERR_PARSE, os.str());
  }
  if (dynamic_cast<const StaleMatchError*>(&e))
    return fail(STRAND_ERR_STALE_MATCH, e.what());
  if (dynamic_cast<const distsem::GrammarError*>(&e))
    return fail(STRAND_ERR_GRAMMAR, e.what());
  if (dynamic_cast<const InternalError*>(&e))
    return fail(STRAND_ERR_INTERNAL, e.what());
  return fail(STRAND_ERR_INVALID_ARGUMENT, e.what());
}

template <class F>
strand_status guarded(F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    return classify(e);
  } catch (const std::exception& e) {
    return fail(STRAND_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(STRAND_ERR_INTERNAL, "unknown error");
  }
}

strand_status require(bool ok, const char* what) {
  return ok ? STRAND_OK : fail(STRAND_ERR_INVALID_ARGUMENT, what);
}

#define STRAND_REQUIRE(cond, what)                        \
  do {                                                    \
    if (strand_status s_ = require((cond), (what)); s_ != STRAND_OK) return s_; \
  } while (0)

std::vector<TypeId> parse_type_list(const SignaturePtr& sig,
                                    const char* space_separated) {
  std::vector<TypeId> out;
  std::istringstream is(space_separated ? space_separated : "");
  std::string name;
  while (is >> name) out.push_back(sig->type_id(name));
  return out;
}

}  // namespace

extern "C" {

const char* strand_last_error(void) { return g_last_error.c_str(); }

void strand_string_free(char* s) { std::free(s); }
void strand_signature_free(strand_signature* sig) { delete sig; }
void strand_diagram_free(strand_diagram* d) { delete d; }
void strand_ruleset_free(strand_ruleset* rs) { delete rs; }
void strand_model_free(strand_model* m) { delete m; }
void strand_lexicon_free(strand_lexicon* lex) { delete lex; }
void strand_corpus_free(strand_corpus* c) { delete c; }

// --- signatures -----------------------------------------------------------

strand_status strand_signature_from_json(const char* json,
                                         strand_signature** out) {
  STRAND_REQUIRE(json && out, "null argument");
  return guarded([&] {
    *out = new strand_signature{io::signature_from_json(json)};
    return STRAND_OK;
  });
}

strand_status strand_signature_to_json(const strand_signature* sig,
                                       char** out) {
  STRAND_REQUIRE(sig && out, "null argument");
  return guarded([&] {
    *out = copy_string(io::signature_to_json(sig->rep));
    return STRAND_OK;
  });
}

// --- diagrams ---------------------------------------------------------------

strand_status strand_diagram_parse(const strand_signature* sig, const char* dsl,
                                   strand_diagram** out) {
  STRAND_REQUIRE(sig && dsl && out, "null argument");
  return guarded([&] {
    *out = new strand_diagram{dsl::parse_diagram(dsl, sig->rep)};
    return STRAND_OK;
  });
}

strand_status strand_dsl_pretty(const char* dsl, char** out) {
  STRAND_REQUIRE(dsl && out, "null argument");
  return guarded([&] {
    *out = copy_string(dsl::pretty(dsl::parse_expr(dsl)));
    return STRAND_OK;
  });
}

strand_status strand_diagram_from_json(const char* json,
                                       const strand_signature* sig_or_null,
                                       strand_diagram** out) {
  STRAND_REQUIRE(json && out, "null argument");
  return guarded([&] {
    SignaturePtr sig = sig_or_null ? sig_or_null->rep : nullptr;
    *out = new strand_diagram{io::diagram_from_json(json, sig)};
    return STRAND_OK;
  });
}

strand_status strand_diagram_to_json(const strand_diagram* d, char** out) {
  STRAND_REQUIRE(d && out, "null argument");
  return guarded([&] {
    *out = copy_string(io::diagram_to_json(d->rep));
    return STRAND_OK;
  });
}

strand_status strand_diagram_identity(const strand_signature* sig,
                                      const char* types, strand_diagram** out) {
  STRAND_REQUIRE(sig && out, "null argument");
  return guarded([&] {
    *out = new strand_diagram{
        Diagram::identity(sig->rep, parse_type_list(sig->rep, types))};
    return STRAND_OK;
  });
}

strand_status strand_diagram_generator(const strand_signature* sig,
                                       const char* name, strand_diagram** out) {
  STRAND_REQUIRE(sig && name && out, "null argument");
  return guarded([&] {
    *out = new strand_diagram{Diagram::generator(sig->rep, name)};
    return STRAND_OK;
  });
}

strand_status strand_diagram_cup(const strand_signature* sig, const char* type,
                                 strand_diagram** out) {
  STRAND_REQUIRE(sig && type && out, "null argument");
  return guarded([&] {
    *out = new strand_diagram{Diagram::cup(sig->rep, sig->rep->type_id(type))};
    return STRAND_OK;
  });
}

strand_status strand_diagram_cap(const strand_signature* sig, const char* type,
                                 strand_diagram** out) {
  STRAND_REQUIRE(sig && type && out, "null argument");
  return guarded([&] {
    *out = new strand_diagram{Diagram::cap(sig->rep, sig->rep->type_id(type))};
    return STRAND_OK;
  });
}

strand_status strand_diagram_swap(const strand_signature* sig, const char* s,
                                  const char* t, strand_diagram** out) {
  STRAND_REQUIRE(sig && s && t && out, "null argument");
  return guarded([&] {
    *out = new strand_diagram{Diagram::swap_wires(
        sig->rep, sig->rep->type_id(s), sig->rep->type_id(t))};
    return STRAND_OK;
  });
}

strand_status strand_diagram_spider(const strand_signature* sig,
                                    const char* color, const char* type,
                                    uint32_t n_in, uint32_t n_out,
                                    strand_diagram** out) {
  STRAND_REQUIRE(sig && color && type && out, "null argument");
  return guarded([&] {
    *out = new strand_diagram{
        Diagram::spider(sig->rep, spider_color_from_string(color),
                        sig->rep->type_id(type), n_in, n_out)};
    return STRAND_OK;
  });
}

strand_status strand_diagram_compose_seq(const strand_diagram* f,
                                         const strand_diagram* g,
                                         strand_diagram** out) {
  STRAND_REQUIRE(f && g && out, "null argument");
  return guarded([&] {
    *out = new strand_diagram{compose_seq(f->rep, g->rep)};
    return STRAND_OK;
  });
}

strand_status strand_diagram_compose_par(const strand_diagram* f,
                                         const strand_diagram* g,
                                         strand_diagram** out) {
  STRAND_REQUIRE(f && g && out, "null argument");
  return guarded([&] {
    *out = new strand_diagram{compose_par(f->rep, g->rep)};
    return STRAND_OK;
  });
}

strand_status strand_diagram_dagger(const strand_diagram* d,
                                    strand_diagram** out) {
  STRAND_REQUIRE(d && out, "null argument");
  return guarded([&] {
    *out = new strand_diagram{d->rep.dagger()};
    return STRAND_OK;
  });
}

strand_status strand_diagram_transpose(const strand_diagram* d,
                                       strand_diagram** out) {
  STRAND_REQUIRE(d && out, "null argument");
  return guarded([&] {
    *out = new strand_diagram{d->rep.transpose()};
    return STRAND_OK;
  });
}

strand_status strand_diagram_canonical(const strand_diagram* d, char** out) {
  STRAND_REQUIRE(d && out, "null argument");
  return guarded([&] {
    *out = copy_string(canonical_form(d->rep));
    return STRAND_OK;
  });
}

strand_status strand_diagram_hash(const strand_diagram* d, uint64_t* out) {
  STRAND_REQUIRE(d && out, "null argument");
  return guarded([&] {
    *out = canonical_hash(d->rep);
    return STRAND_OK;
  });
}

strand_status strand_diagram_equal(const strand_diagram* a,
                                   const strand_diagram* b, int* equal) {
  STRAND_REQUIRE(a && b && equal, "null argument");
  return guarded([&] {
    *equal = canonical_equal(a->rep, b->rep) ? 1 : 0;
    return STRAND_OK;
  });
}

strand_status strand_diagram_to_dot(const strand_diagram* d, char** out) {
  STRAND_REQUIRE(d && out, "null argument");
  return guarded([&] {
    *out = copy_string(render::to_dot(d->rep));
    return STRAND_OK;
  });
}

strand_status strand_diagram_to_svg(const strand_diagram* d, char** out) {
  STRAND_REQUIRE(d && out, "null argument");
  return guarded([&] {
    *out = copy_string(render::to_svg(d->rep));
    return STRAND_OK;
  });
}

// --- rewriting --------------------------------------------------------------

strand_status strand_ruleset_builtin(strand_ruleset** out) {
  STRAND_REQUIRE(out, "null argument");
  return guarded([&] {
    *out = new strand_ruleset{Ruleset::builtin()};
    return STRAND_OK;
  });
}

strand_status strand_ruleset_from_json(const char* json,
                                       const strand_signature* sig,
                                       int include_builtin,
                                       strand_ruleset** out) {
  STRAND_REQUIRE(json && sig && out, "null argument");
  return guarded([&] {
    Ruleset rs = include_builtin ? Ruleset::builtin() : Ruleset::empty();
    for (RulePtr& r : io::rules_from_json(json, sig->rep)) rs.add(std::move(r));
    *out = new strand_ruleset{std::move(rs)};
    return STRAND_OK;
  });
}

strand_status strand_normalize(const strand_diagram* d,
                               const strand_ruleset* rules, uint32_t max_steps,
                               strand_diagram** out, char** trace_json) {
  STRAND_REQUIRE(d && rules && out, "null argument");
  return guarded([&] {
    NormalizeOptions opt;
    opt.max_steps = max_steps;
    NormalizeResult res = normalize(d->rep, rules->rep, opt);
    *out = new strand_diagram{std::move(res.diagram)};
    if (trace_json) *trace_json = copy_string(io::trace_to_json(res.trace));
    return STRAND_OK;
  });
}

strand_status strand_check_equal(const strand_diagram* a,
                                 const strand_diagram* b,
                                 const strand_ruleset* rules, uint32_t budget,
                                 char** verdict) {
  STRAND_REQUIRE(a && b && rules && verdict, "null argument");
  return guarded([&] {
    CheckEqualResult res =
        check_equal_by_rewriting(a->rep, b->rep, rules->rep, budget);
    *verdict = copy_string(to_string(res.verdict));
    return STRAND_OK;
  });
}

// --- tensor models ------------------------------------------------------------

strand_status strand_model_from_json(const char* json,
                                     const strand_signature* sig_or_null,
                                     int validate_dagger, strand_model** out) {
  STRAND_REQUIRE(json && out, "null argument");
  return guarded([&] {
    SignaturePtr sig = sig_or_null ? sig_or_null->rep : nullptr;
    *out = new strand_model{
        io::model_from_json(json, sig, validate_dagger != 0)};
    return STRAND_OK;
  });
}

strand_status strand_model_signature(const strand_model* m,
                                     strand_signature** out) {
  STRAND_REQUIRE(m && out, "null argument");
  *out = new strand_signature{m->rep.signature()};
  return STRAND_OK;
}

strand_status strand_interpret(const strand_diagram* d, const strand_model* m,
                               char** tensor_json) {
  STRAND_REQUIRE(d && m && tensor_json, "null argument");
  return guarded([&] {
    *tensor_json = copy_string(io::tensor_to_json(interpret(d->rep, m->rep)));
    return STRAND_OK;
  });
}

strand_status strand_equal_tensors(const char* tensor_json_a,
                                   const char* tensor_json_b, int up_to_scalar,
                                   double tol, int* equal, double* scale_re,
                                   double* scale_im) {
  STRAND_REQUIRE(tensor_json_a && tensor_json_b && equal, "null argument");
  return guarded([&]() -> strand_status {
    TensorValue a = io::tensor_from_json(tensor_json_a);
    TensorValue b = io::tensor_from_json(tensor_json_b);
    TensorCompare cmp = equal_tensors(
        a, b, up_to_scalar ? CompareMode::UpToScalar : CompareMode::Exact, tol);
    *equal = cmp.equal ? 1 : 0;
    if (cmp.scale) {
      if (scale_re) *scale_re = cmp.scale->real();
      if (scale_im) *scale_im = cmp.scale->imag();
    }
    return STRAND_OK;
  });
}

strand_status strand_soundness(const strand_ruleset* rules,
                               const strand_model* m, int cases_per_rule,
                               uint64_t seed, char** report_json) {
  STRAND_REQUIRE(rules && m && report_json, "null argument");
  return guarded([&] {
    SoundnessReport report =
        soundness_harness(rules->rep, m->rep, cases_per_rule, seed);
    *report_json = copy_string(io::soundness_to_json(report));
    return STRAND_OK;
  });
}

// --- grammar ------------------------------------------------------------------

strand_status strand_grammar_check(const char* type_sequence,
                                   const char* target_atom, int* reduces,
                                   char** reduction_json) {
  STRAND_REQUIRE(type_sequence && target_atom && reduces, "null argument");
  return guarded([&] {
    pregroup::TypeSeq ts = pregroup::parse_type_sequence(type_sequence);
    auto r = pregroup::reduce_to(ts, pregroup::SimpleType{target_atom, 0});
    *reduces = r.has_value() ? 1 : 0;
    if (reduction_json && r)
      *reduction_json = copy_string(io::reduction_to_json(*r));
    return STRAND_OK;
  });
}

// --- distributional semantics ---------------------------------------------------

strand_status strand_lexicon_from_json(const char* json, strand_lexicon** out) {
  STRAND_REQUIRE(json && out, "null argument");
  return guarded([&] {
    *out = new strand_lexicon{io::lexicon_from_json(json)};
    return STRAND_OK;
  });
}

strand_status strand_corpus_build(const char* corpus_text,
                                  const char* context_text,
                                  strand_corpus** out) {
  STRAND_REQUIRE(corpus_text && context_text && out, "null argument");
  return guarded([&] {
    distsem::ContextConfig cfg = io::context_from_text(context_text);
    *out = new strand_corpus{
        distsem::CooccurrenceModel::ingest(distsem::tokenize(corpus_text), cfg)};
    return STRAND_OK;
  });
}

strand_status strand_corpus_counts_json(const strand_corpus* c, char** out) {
  STRAND_REQUIRE(c && out, "null argument");
  return guarded([&] {
    *out = copy_string(io::counts_to_json(c->rep));
    return STRAND_OK;
  });
}

strand_status strand_corpus_from_counts_json(const char* json,
                                             strand_corpus** out) {
  STRAND_REQUIRE(json && out, "null argument");
  return guarded([&] {
    *out = new strand_corpus{io::counts_from_json(json)};
    return STRAND_OK;
  });
}

strand_status strand_meaning_vector(const strand_corpus* c, const char* word,
                                    char** json) {
  STRAND_REQUIRE(c && word && json, "null argument");
  return guarded([&] {
    distsem::MeaningVector mv = distsem::meaning_vector(c->rep, word);
    std::ostringstream os;
    os << "{\n  \"word\": \"" << mv.word << "\",\n  \"zero\": "
       << (mv.zero ? "true" : "false") << ",\n  \"values\": [";
    for (std::size_t i = 0; i < mv.values.size(); ++i) {
      if (i) os << ", ";
      os << mv.values[i];
    }
    os << "]\n}";
    *json = copy_string(os.str());
    return STRAND_OK;
  });
}

strand_status strand_similarity(const strand_corpus* c, const char* word_a,
                                const char* word_b, double* out) {
  STRAND_REQUIRE(c && word_a && word_b && out, "null argument");
  return guarded([&] {
    *out = distsem::similarity(distsem::meaning_vector(c->rep, word_a),
                               distsem::meaning_vector(c->rep, word_b));
    return STRAND_OK;
  });
}

strand_status strand_sentence_meaning(const char* sentence,
                                      const strand_lexicon* lex,
                                      const strand_model* m,
                                      char** tensor_json) {
  STRAND_REQUIRE(sentence && lex && m && tensor_json, "null argument");
  return guarded([&] {
    std::vector<std::string> words;
    std::istringstream is(sentence);
    std::string w;
    while (is >> w) words.push_back(w);
    distsem::SentenceResult r =
        distsem::sentence_meaning(words, lex->rep, m->rep);
    *tensor_json = copy_string(io::tensor_to_json(r.meaning));
    return STRAND_OK;
  });
}

// --- protocols -------------------------------------------------------------------

strand_status strand_demo_teleportation(const strand_model* m,
                                        const char* unitary, uint32_t budget,
                                        char** report_json) {
  STRAND_REQUIRE(m && unitary && report_json, "null argument");
  return guarded([&] {
    *report_json = copy_string(io::report_to_json(
        proto::teleportation_demo(m->rep, unitary, budget)));
    return STRAND_OK;
  });
}

strand_status strand_demo_swap(const strand_model* m, const char* unitary,
                               int misroute, uint32_t budget,
                               char** report_json) {
  STRAND_REQUIRE(m && unitary && report_json, "null argument");
  return guarded([&] {
    *report_json = copy_string(io::report_to_json(
        proto::swapping_demo(m->rep, unitary, misroute != 0, budget)));
    return STRAND_OK;
  });
}

strand_status strand_bayes_invert(const char* prior_json,
                                  const char* channel_json,
                                  char** result_json) {
  STRAND_REQUIRE(prior_json && channel_json && result_json, "null argument");
  return guarded([&] {
    proto::BayesResult r = proto::bayes_invert(
        io::prior_from_json(prior_json), io::channel_from_json(channel_json));
    *result_json = copy_string(io::bayes_to_json(r));
    return STRAND_OK;
  });
}

}  // extern "C"
