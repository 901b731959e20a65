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

#include "strand/distsem.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace strand::distsem {

CooccurrenceModel::CooccurrenceModel(ContextConfig config)
    : config_(std::move(config)) {
  if (config_.window < 1) throw Error("window scope k must be at least 1");
  for (std::size_t i = 0; i < config_.context_words.size(); ++i) {
    if (!context_index_.emplace(config_.context_words[i], i).second)
      throw Error("context words must be distinct");
  }
}

CooccurrenceModel CooccurrenceModel::ingest(
    const std::vector<std::vector<std::string>>& lines,
    const ContextConfig& config) {
  CooccurrenceModel model(config);
  for (const auto& line : lines) model.ingest_line(line);
  return model;
}

CooccurrenceModel CooccurrenceModel::from_counts(
    const ContextConfig& config,
    std::unordered_map<std::string, std::vector<long long>> counts,
    long long token_count) {
  CooccurrenceModel model(config);
  for (const auto& [w, row] : counts) {
    if (row.size() != config.context_words.size())
      throw Error("counts row for '" + w + "' has the wrong width");
  }
  model.counts_ = std::move(counts);
  model.token_count_ = token_count;
  return model;
}

void CooccurrenceModel::ingest_line_range(const std::vector<std::string>& line,
                                          std::size_t lo, std::size_t hi) {
  hi = std::min(hi, line.size());
  std::size_t k = static_cast<std::size_t>(config_.window);
  for (std::size_t i = lo; i < hi; ++i) {
    auto [it, inserted] = counts_.try_emplace(
        line[i], std::vector<long long>(config_.context_words.size(), 0));
    std::vector<long long>& row = it->second;
    std::size_t from = i >= k ? i - k : 0;
    std::size_t to = std::min(line.size(), i + k + 1);
    for (std::size_t j = from; j < to; ++j) {
      if (j == i) continue;  // a word is not its own context occurrence
      auto cit = context_index_.find(line[j]);
      if (cit != context_index_.end()) row[cit->second] += 1;
    }
    token_count_ += 1;
  }
}

void CooccurrenceModel::merge(const CooccurrenceModel& other) {
  if (config_.window != other.config_.window ||
      config_.context_words != other.config_.context_words)
    throw Error("cannot merge counts built over different context configs");
  for (const auto& [word, row] : other.counts_) {
    auto [it, inserted] = counts_.try_emplace(
        word, std::vector<long long>(config_.context_words.size(), 0));
    for (std::size_t i = 0; i < row.size(); ++i) it->second[i] += row[i];
  }
  token_count_ += other.token_count_;
}

bool CooccurrenceModel::has_word(const std::string& word) const {
  return counts_.count(word) != 0;
}

const std::vector<long long>& CooccurrenceModel::counts(
    const std::string& word) const {
  auto it = counts_.find(word);
  if (it == counts_.end())
    throw UnknownNameError("word '" + word + "' does not occur in the corpus");
  return it->second;
}

std::vector<std::string> CooccurrenceModel::words() const {
  std::vector<std::string> out;
  out.reserve(counts_.size());
  for (const auto& [w, row] : counts_) {
    (void)row;
    out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::string>> tokenize(const std::string& text) {
  std::vector<std::vector<std::string>> lines;
  std::vector<std::string> line;
  std::string word;
  auto flush_word = [&] {
    if (!word.empty()) {
      line.push_back(word);
      word.clear();
    }
  };
  for (char ch : text) {
    unsigned char c = static_cast<unsigned char>(ch);
    if (ch == '\n') {
      flush_word();
      lines.push_back(std::move(line));
      line.clear();
    } else if (std::isalnum(c) || ch == '\'') {
      word.push_back(static_cast<char>(std::tolower(c)));
    } else {
      flush_word();
    }
  }
  flush_word();
  if (!line.empty()) lines.push_back(std::move(line));
  return lines;
}

MeaningVector meaning_vector(const CooccurrenceModel& model,
                             const std::string& word) {
  const std::vector<long long>& row = model.counts(word);
  MeaningVector mv;
  mv.word = word;
  mv.values.assign(row.begin(), row.end());
  double norm2 = 0;
  for (double v : mv.values) norm2 += v * v;
  if (norm2 == 0) {
    mv.zero = true;
    return mv;
  }
  double norm = std::sqrt(norm2);
  for (double& v : mv.values) v /= norm;
  return mv;
}

double similarity(const MeaningVector& u, const MeaningVector& v) {
  if (u.values.size() != v.values.size())
    throw TypeMismatchError("meaning vectors live in different spaces");
  double dot = 0;
  for (std::size_t i = 0; i < u.values.size(); ++i) dot += u.values[i] * v.values[i];
  return dot;
}

// ---------------------------------------------------------------------------

void Lexicon::add(LexiconEntry entry) {
  std::string word = entry.word;
  entries_[word] = std::move(entry);
}

bool Lexicon::has(const std::string& word) const {
  return entries_.count(word) != 0;
}

const LexiconEntry& Lexicon::at(const std::string& word) const {
  auto it = entries_.find(word);
  if (it == entries_.end())
    throw UnknownNameError("word '" + word + "' is not in the lexicon");
  return it->second;
}

std::vector<std::string> Lexicon::words() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& [w, e] : entries_) {
    (void)e;
    out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Diagram functional_word_diagram(BuiltinWord kind, const SignaturePtr& sig,
                                TypeId noun, TypeId sentence, GenId not_box) {
  // cup over the noun pair, a sentence cup nested inside
  Diagram base = compose_seq(
      Diagram::cup(sig, noun),
      compose_par(Diagram::identity(sig, {noun}),
                  compose_par(Diagram::cup(sig, sentence),
                              Diagram::identity(sig, {noun}))));
  if (kind == BuiltinWord::Does) return base;
  // the not-box sits on the first sentence wire, output facing it
  Diagram layer = compose_par(
      Diagram::identity(sig, {noun}),
      compose_par(Diagram::generator(sig, not_box),
                  Diagram::identity(sig, {sentence, noun})));
  return compose_seq(base, layer);
}

namespace {

TypeId require_atom(const SignaturePtr& sig, const std::string& atom) {
  if (!sig->has_type(atom))
    throw GrammarError("the model does not declare the atom type '" + atom +
                       "'");
  return sig->type_id(atom);
}

std::string word_gen_name(const std::string& word) { return "word:" + word; }

}  // namespace

TensorValue sentence_meaning(const std::vector<std::string>& words,
                             const Lexicon& lexicon,
                             const pregroup::Reduction& reduction,
                             const Model& base_model) {
  const SignaturePtr& base_sig = base_model.signature();

  // extended signature: base types and generators plus one state per word
  Signature ext;
  for (TypeId t = 0; t < base_sig->type_count(); ++t)
    ext.add_type(base_sig->type(t).name);
  for (GenId g = 0; g < base_sig->generator_count(); ++g) {
    const Generator& gen = base_sig->generator(g);
    if (ext.has_generator(gen.name)) continue;  // added as someone's partner
    ext.add_generator(gen.name, gen.inputs, gen.outputs,
                      base_sig->generator(gen.dagger).name, gen.unitary);
  }
  std::vector<const LexiconEntry*> entries;
  for (const std::string& w : words) entries.push_back(&lexicon.at(w));
  for (const LexiconEntry* e : entries) {
    if (e->builtin) {
      if (e->type.size() != 4 || e->type[0].atom != e->type[3].atom ||
          e->type[1].atom != e->type[2].atom)
        throw GrammarError("builtin word '" + e->word +
                           "' needs a [n, s, s, n]-shaped type");
      continue;
    }
    std::string name = word_gen_name(e->word);
    if (ext.has_generator(name)) continue;
    std::vector<TypeId> outs;
    for (const pregroup::SimpleType& t : e->type)
      outs.push_back(require_atom(base_model.signature(), t.atom));
    ext.add_generator(name, {}, outs);
  }
  SignaturePtr ext_sig = std::move(ext).freeze();

  // extended model: copy base assignments by name, add word tensors
  Model model(ext_sig, base_model.semiring());
  for (TypeId t = 0; t < base_sig->type_count(); ++t) {
    if (base_model.has_dim(t))
      model.set_dim(ext_sig->type_id(base_sig->type(t).name), base_model.dim(t));
  }
  for (GenId g = 0; g < base_sig->generator_count(); ++g) {
    if (base_model.has_generator(g))
      model.set_generator(ext_sig->generator_id(base_sig->generator(g).name),
                          base_model.generator_entries(g));
  }
  for (auto [color, t] : base_model.basis_keys()) {
    model.set_basis(color, ext_sig->type_id(base_sig->type(t).name),
                    base_model.basis(color, t));
  }
  for (const LexiconEntry* e : entries) {
    if (e->builtin) continue;
    GenId g = ext_sig->generator_id(word_gen_name(e->word));
    if (!model.has_generator(g)) model.set_generator(g, e->tensor);
  }
  model.finalize();

  // word states in parallel, then the reduction's caps
  GenId not_box = ext_sig->has_generator("not_box")
                      ? ext_sig->generator_id("not_box")
                      : 0;
  Diagram stack = Diagram::empty(ext_sig);
  for (const LexiconEntry* e : entries) {
    Diagram state = [&] {
      if (!e->builtin)
        return Diagram::generator(ext_sig, word_gen_name(e->word));
      if (!ext_sig->has_generator("not_box"))
        throw GrammarError("builtin words need a 'not_box' generator in the model");
      TypeId noun = require_atom(ext_sig, e->type[0].atom);
      TypeId sentence = require_atom(ext_sig, e->type[1].atom);
      return functional_word_diagram(*e->builtin, ext_sig, noun, sentence,
                                     not_box);
    }();
    stack = compose_par(stack, state);
  }
  Diagram wiring = pregroup::reduction_to_diagram(ext_sig, reduction);
  return interpret(compose_seq(stack, wiring), model);
}

SentenceResult sentence_meaning(const std::vector<std::string>& words,
                                const Lexicon& lexicon, const Model& base_model,
                                const std::string& sentence_atom) {
  pregroup::TypeSeq ts;
  for (const std::string& w : words) {
    const LexiconEntry& e = lexicon.at(w);
    ts.insert(ts.end(), e.type.begin(), e.type.end());
  }
  auto reduction = pregroup::reduce_to(ts, pregroup::SimpleType{sentence_atom, 0});
  if (!reduction)
    throw GrammarError("'" + [&] {
      std::string s;
      for (std::size_t i = 0; i < words.size(); ++i) {
        if (i) s += ' ';
        s += words[i];
      }
      return s;
    }() + "' does not reduce to " + sentence_atom);
  SentenceResult result{
      sentence_meaning(words, lexicon, *reduction, base_model), *reduction};
  return result;
}

std::vector<Cplx> verb_tensor_from_pairs(
    const std::vector<std::pair<std::string, std::string>>& subject_object,
    const CooccurrenceModel& model, const std::vector<double>& sentence_unit) {
  double norm2 = 0;
  for (double v : sentence_unit) norm2 += v * v;
  if (std::abs(norm2 - 1.0) > 1e-9)
    throw Error("the sentence-space vector must have unit norm");
  std::size_t n = model.config().context_words.size();
  std::size_t s = sentence_unit.size();
  std::vector<Cplx> tensor(n * s * n, 0.0);
  for (const auto& [subj, obj] : subject_object) {
    MeaningVector sv = meaning_vector(model, subj);
    MeaningVector ov = meaning_vector(model, obj);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < s; ++k)
        for (std::size_t j = 0; j < n; ++j)
          tensor[(i * s + k) * n + j] +=
              sv.values[i] * sentence_unit[k] * ov.values[j];
  }
  return tensor;
}

}  // namespace strand::distsem
