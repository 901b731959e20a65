/* Copyright 2026 The strand authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the strand engine.
 *
 * Conventions: every function returns a strand_status; results come back
 * through out-parameters. Handles are opaque and freed with the matching
 * *_free function. Returned strings are heap-allocated and released with
 * strand_string_free. On failure, strand_last_error() describes the
 * problem for the calling thread.
 */

#ifndef STRAND_STRAND_C_H_
#define STRAND_STRAND_C_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum strand_status {
  STRAND_OK = 0,
  STRAND_ERR_INVALID_ARGUMENT = 1,
  STRAND_ERR_UNKNOWN_NAME = 2,
  STRAND_ERR_TYPE_MISMATCH = 3,
  STRAND_ERR_PARSE = 4,
  STRAND_ERR_STALE_MATCH = 5,
  STRAND_ERR_IO = 6,
  STRAND_ERR_GRAMMAR = 7,
  STRAND_ERR_INTERNAL = 8
} strand_status;

typedef struct strand_signature strand_signature;
typedef struct strand_diagram strand_diagram;
typedef struct strand_ruleset strand_ruleset;
typedef struct strand_model strand_model;
typedef struct strand_lexicon strand_lexicon;
typedef struct strand_corpus strand_corpus;

/* Last error message of the calling thread; valid until the next failing
 * call on the same thread. */
const char* strand_last_error(void);

void strand_string_free(char* s);
void strand_signature_free(strand_signature* sig);
void strand_diagram_free(strand_diagram* d);
void strand_ruleset_free(strand_ruleset* rs);
void strand_model_free(strand_model* m);
void strand_lexicon_free(strand_lexicon* lex);
void strand_corpus_free(strand_corpus* c);

/* --- signatures --------------------------------------------------------- */

strand_status strand_signature_from_json(const char* json,
                                         strand_signature** out);
strand_status strand_signature_to_json(const strand_signature* sig, char** out);

/* --- diagrams ----------------------------------------------------------- */

/* Parses the expression language: `.` then, `*` beside, id[..], cup[..],
 * cap[..], swap[..], spider{..}, dag(..), tr(..), generator names. */
strand_status strand_diagram_parse(const strand_signature* sig, const char* dsl,
                                   strand_diagram** out);
/* Pretty-prints an expression without elaborating it (no signature
 * needed); round-trips through strand_diagram_parse. */
strand_status strand_dsl_pretty(const char* dsl, char** out);

strand_status strand_diagram_from_json(const char* json,
                                       const strand_signature* sig_or_null,
                                       strand_diagram** out);
strand_status strand_diagram_to_json(const strand_diagram* d, char** out);

strand_status strand_diagram_identity(const strand_signature* sig,
                                      const char* space_separated_types,
                                      strand_diagram** out);
strand_status strand_diagram_generator(const strand_signature* sig,
                                       const char* name, strand_diagram** out);
strand_status strand_diagram_cup(const strand_signature* sig, const char* type,
                                 strand_diagram** out);
strand_status strand_diagram_cap(const strand_signature* sig, const char* type,
                                 strand_diagram** out);
strand_status strand_diagram_swap(const strand_signature* sig, const char* s,
                                  const char* t, strand_diagram** out);
strand_status strand_diagram_spider(const strand_signature* sig,
                                    const char* color, const char* type,
                                    uint32_t n_in, uint32_t n_out,
                                    strand_diagram** out);
strand_status strand_diagram_compose_seq(const strand_diagram* f,
                                         const strand_diagram* g,
                                         strand_diagram** out);
strand_status strand_diagram_compose_par(const strand_diagram* f,
                                         const strand_diagram* g,
                                         strand_diagram** out);
strand_status strand_diagram_dagger(const strand_diagram* d,
                                    strand_diagram** out);
strand_status strand_diagram_transpose(const strand_diagram* d,
                                       strand_diagram** out);

strand_status strand_diagram_canonical(const strand_diagram* d, char** out);
strand_status strand_diagram_hash(const strand_diagram* d, uint64_t* out);
/* equal becomes 1 when the diagrams are equal up to deformation. */
strand_status strand_diagram_equal(const strand_diagram* a,
                                   const strand_diagram* b, int* equal);
strand_status strand_diagram_to_dot(const strand_diagram* d, char** out);
strand_status strand_diagram_to_svg(const strand_diagram* d, char** out);

/* --- rewriting ---------------------------------------------------------- */

strand_status strand_ruleset_builtin(strand_ruleset** out);
/* Rules from a JSON file; include_builtin prepends the shipped set. */
strand_status strand_ruleset_from_json(const char* json,
                                       const strand_signature* sig,
                                       int include_builtin,
                                       strand_ruleset** out);

/* Normalizes and reports; trace_json may be NULL when not wanted. */
strand_status strand_normalize(const strand_diagram* d,
                               const strand_ruleset* rules, uint32_t max_steps,
                               strand_diagram** out, char** trace_json);
/* verdict: "equal-exact", "equal-up-to-scalar" or "unknown". */
strand_status strand_check_equal(const strand_diagram* a,
                                 const strand_diagram* b,
                                 const strand_ruleset* rules, uint32_t budget,
                                 char** verdict);

/* --- tensor models ------------------------------------------------------ */

strand_status strand_model_from_json(const char* json,
                                     const strand_signature* sig_or_null,
                                     int validate_dagger, strand_model** out);
/* Borrowed view of the model's signature; freed like any signature. */
strand_status strand_model_signature(const strand_model* m,
                                     strand_signature** out);
strand_status strand_interpret(const strand_diagram* d, const strand_model* m,
                               char** tensor_json);
/* Compares two tensor JSON payloads. equal is 1/0; when equal in
 * up-to-scalar mode the scalar found lands in scale_re/scale_im. */
strand_status strand_equal_tensors(const char* tensor_json_a,
                                   const char* tensor_json_b, int up_to_scalar,
                                   double tol, int* equal, double* scale_re,
                                   double* scale_im);
strand_status strand_soundness(const strand_ruleset* rules,
                               const strand_model* m, int cases_per_rule,
                               uint64_t seed, char** report_json);

/* --- pregroup grammar --------------------------------------------------- */

/* type_sequence uses the ^l/^r notation, whitespace-separated. On success
 * reduces is 1/0; reduction_json carries the witness when it exists. */
strand_status strand_grammar_check(const char* type_sequence,
                                   const char* target_atom, int* reduces,
                                   char** reduction_json);

/* --- distributional semantics ------------------------------------------- */

strand_status strand_lexicon_from_json(const char* json, strand_lexicon** out);
/* context_text: one context word per line plus `window = k`. */
strand_status strand_corpus_build(const char* corpus_text,
                                  const char* context_text,
                                  strand_corpus** out);
strand_status strand_corpus_counts_json(const strand_corpus* c, char** out);
strand_status strand_corpus_from_counts_json(const char* json,
                                             strand_corpus** out);
strand_status strand_meaning_vector(const strand_corpus* c, const char* word,
                                    char** json);
strand_status strand_similarity(const strand_corpus* c, const char* word_a,
                                const char* word_b, double* out);
/* sentence: whitespace-separated words. Grammar failures come back as
 * STRAND_ERR_GRAMMAR. */
strand_status strand_sentence_meaning(const char* sentence,
                                      const strand_lexicon* lex,
                                      const strand_model* m,
                                      char** tensor_json);

/* --- protocol demos ----------------------------------------------------- */

strand_status strand_demo_teleportation(const strand_model* m,
                                        const char* unitary, uint32_t budget,
                                        char** report_json);
strand_status strand_demo_swap(const strand_model* m, const char* unitary,
                               int misroute, uint32_t budget,
                               char** report_json);
strand_status strand_bayes_invert(const char* prior_json,
                                  const char* channel_json,
                                  char** result_json);

#ifdef __cplusplus
}
#endif

#endif /* STRAND_STRAND_C_H_ */
