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

#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "strand/pregroup.hpp"
#include "strand/tensor.hpp"

namespace strand::distsem {

/** A sentence failed to reduce to the target type; grammatically incorrect
 * input has no meaning rather than a zero one. */
class GrammarError : public Error {
 public:
  using Error::Error;
};

struct ContextConfig {
  std::vector<std::string> context_words;
  int window = 1;  // the scope k
};

/**
 * Co-occurrence counts N_x(a): how often each corpus word a appears within
 * k tokens of context word x. Windows never cross line boundaries and
 * distance 0 is excluded. Ingestion can be sharded by center range; merging
 * shard counts is exact because every center is counted in exactly one
 * shard against the full line.
 */
class CooccurrenceModel {
 public:
  explicit CooccurrenceModel(ContextConfig config);

  static CooccurrenceModel ingest(const std::vector<std::vector<std::string>>& lines,
                                  const ContextConfig& config);
  /** Restores a model from previously exported rows. */
  static CooccurrenceModel from_counts(
      const ContextConfig& config,
      std::unordered_map<std::string, std::vector<long long>> counts,
      long long token_count);
  /** Counts centers in [lo, hi) of one token line (context may look
   * outside the range, never outside the line). */
  void ingest_line_range(const std::vector<std::string>& line, std::size_t lo,
                         std::size_t hi);
  void ingest_line(const std::vector<std::string>& line) {
    ingest_line_range(line, 0, line.size());
  }
  void merge(const CooccurrenceModel& other);

  const ContextConfig& config() const { return config_; }
  bool empty() const { return token_count_ == 0; }
  long long token_count() const { return token_count_; }
  bool has_word(const std::string& word) const;
  const std::vector<long long>& counts(const std::string& word) const;
  std::vector<std::string> words() const;

 private:
  ContextConfig config_;
  std::unordered_map<std::string, std::size_t> context_index_;
  std::unordered_map<std::string, std::vector<long long>> counts_;
  long long token_count_ = 0;
};

/** Lowercased, punctuation-stripped tokens, one vector per input line. */
std::vector<std::vector<std::string>> tokenize(const std::string& text);

struct MeaningVector {
  std::string word;
  std::vector<double> values;
  bool zero = false;  // the counts vanished; values stay all-zero
};

/** Euclidean-normalized count vector. Unknown words are errors; known
 * words with no context hits come back zero-flagged. */
MeaningVector meaning_vector(const CooccurrenceModel& model,
                             const std::string& word);

/** Plain inner product; cosine similarity for unit vectors. */
double similarity(const MeaningVector& u, const MeaningVector& v);

enum class BuiltinWord { Does, Not };

struct LexiconEntry {
  std::string word;
  pregroup::TypeSeq type;              // stored in the paper convention
  std::optional<BuiltinWord> builtin;  // cups-and-not-box template words
  std::vector<Cplx> tensor;            // state entries, row-major over atoms
};

class Lexicon {
 public:
  void add(LexiconEntry entry);
  bool has(const std::string& word) const;
  const LexiconEntry& at(const std::string& word) const;
  std::vector<std::string> words() const;

 private:
  std::unordered_map<std::string, LexiconEntry> entries_;
};

/**
 * The cups-only wiring of the functional words: a four-wire state over
 * [noun, sentence, sentence, noun] with the outer noun wires joined, the
 * inner sentence wires joined straight through ("does") or through the
 * not-box ("not", output toward the first sentence wire).
 */
Diagram functional_word_diagram(BuiltinWord kind, const SignaturePtr& sig,
                                TypeId noun, TypeId sentence, GenId not_box);

struct SentenceResult {
  TensorValue meaning;
  pregroup::Reduction reduction;
};

/**
 * From word meanings to sentence meaning: looks every word up, reduces the
 * concatenated pregroup types to the sentence atom, wires word states into
 * the reduction's caps and contracts. `base_model` supplies the atom
 * dimensions and the not-box tensor (generator "not_box").
 */
SentenceResult sentence_meaning(const std::vector<std::string>& words,
                                const Lexicon& lexicon, const Model& base_model,
                                const std::string& sentence_atom = "s");

/** Same, against a caller-supplied reduction over the same type string. */
TensorValue sentence_meaning(const std::vector<std::string>& words,
                             const Lexicon& lexicon,
                             const pregroup::Reduction& reduction,
                             const Model& base_model);

/**
 * Transitive-verb tensor from observed (subject, object) pairs:
 * V = sum of subj (x) s_hat (x) obj over pairs, with s_hat a fixed unit
 * sentence-space vector. Subjects and objects take their corpus meaning
 * vectors.
 */
std::vector<Cplx> verb_tensor_from_pairs(
    const std::vector<std::pair<std::string, std::string>>& subject_object,
    const CooccurrenceModel& model, const std::vector<double>& sentence_unit);

}  // namespace strand::distsem
