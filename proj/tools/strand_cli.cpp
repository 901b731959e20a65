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

// Command-line front end. Everything goes through the C API in
// strand/strand_c.h; this file only shuffles files and flags around.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "strand/strand_c.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

struct CliError {
  int code;
  std::string message;
};

[[noreturn]] void die(int code, const std::string& message) {
  throw CliError{code, message};
}

[[noreturn]] void die_api(strand_status status) {
  (void)status;
  die(kExitUsage, strand_last_error());
}

void check(strand_status status) {
  if (status != STRAND_OK) die_api(status);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) die(kExitUsage, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) die(kExitUsage, "cannot write '" + path + "'");
  out << content;
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  strand_string_free(s);
  return out;
}

// RAII wrappers over the C handles
template <class T, void (*Free)(T*)>
struct Handle {
  T* ptr = nullptr;
  Handle() = default;
  explicit Handle(T* p) : ptr(p) {}
  ~Handle() { reset(); }
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  Handle(Handle&& o) noexcept : ptr(o.ptr) { o.ptr = nullptr; }
  Handle& operator=(Handle&& o) noexcept {
    reset();
    ptr = o.ptr;
    o.ptr = nullptr;
    return *this;
  }
  void reset() {
    if (ptr) Free(ptr);
    ptr = nullptr;
  }
  T** out() {
    reset();
    return &ptr;
  }
  T* get() const { return ptr; }
  explicit operator bool() const { return ptr != nullptr; }
};

using Signature = Handle<strand_signature, strand_signature_free>;
using DiagramH = Handle<strand_diagram, strand_diagram_free>;
using RulesetH = Handle<strand_ruleset, strand_ruleset_free>;
using ModelH = Handle<strand_model, strand_model_free>;
using LexiconH = Handle<strand_lexicon, strand_lexicon_free>;
using CorpusH = Handle<strand_corpus, strand_corpus_free>;

// The fallback model for the quantum demos: one qubit-like wire, the four
// standard unitaries, light/dark bases.
const char* kDefaultDemoModel = R"({
  "semiring": "complex",
  "types": {"Q": 2},
  "generators": {
    "u_x": [0, 1, 1, 0],
    "u_z": [1, 0, 0, -1],
    "u_h": [0.7071067811865476, 0.7071067811865476,
            0.7071067811865476, -0.7071067811865476],
    "u_s": [[1, 0], 0, 0, [0, 1]]
  },
  "spider_bases": {
    "light": {"Q": [[1, 0], [0, 1]]},
    "dark": {"Q": [[0.7071067811865476, 0.7071067811865476],
                   [0.7071067811865476, -0.7071067811865476]]}
  },
  "signature": {
    "types": ["Q"],
    "generators": [
      {"name": "u_x", "inputs": ["Q"], "outputs": ["Q"], "dagger": "u_x", "unitary": true},
      {"name": "u_z", "inputs": ["Q"], "outputs": ["Q"], "dagger": "u_z", "unitary": true},
      {"name": "u_h", "inputs": ["Q"], "outputs": ["Q"], "dagger": "u_h", "unitary": true},
      {"name": "u_s", "inputs": ["Q"], "outputs": ["Q"], "dagger": "u_s_dag", "unitary": true}
    ]
  }
})";

struct CommonState {
  std::string sig_path;
  std::string rules_path;
  std::string model_path;
  bool no_validate = false;

  Signature load_signature_for(const std::string& diagram_text_or_empty) {
    Signature sig;
    if (!sig_path.empty()) {
      check(strand_signature_from_json(read_file(sig_path).c_str(), sig.out()));
      return sig;
    }
    if (!model_path.empty()) {
      ModelH model = load_model();
      check(strand_model_signature(model.get(), sig.out()));
      return sig;
    }
    (void)diagram_text_or_empty;
    // a permissive default: bare wire types used by the cup/cap examples
    check(strand_signature_from_json(R"({"types": ["Q", "R"]})", sig.out()));
    return sig;
  }

  ModelH load_model() {
    ModelH model;
    std::string text =
        model_path.empty() ? std::string(kDefaultDemoModel) : read_file(model_path);
    check(strand_model_from_json(text.c_str(), nullptr, no_validate ? 0 : 1,
                                 model.out()));
    return model;
  }

  RulesetH load_rules(const Signature& sig) {
    RulesetH rules;
    if (rules_path.empty()) {
      check(strand_ruleset_builtin(rules.out()));
    } else {
      check(strand_ruleset_from_json(read_file(rules_path).c_str(), sig.get(),
                                     /*include_builtin=*/1, rules.out()));
    }
    return rules;
  }
};

bool is_existing_file(const std::string& path) {
  if (path.size() > 4096) return false;
  std::error_code ec;
  return std::filesystem::exists(path, ec) && !ec;
}

bool looks_like_json(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{';
  }
  return false;
}

/** Diagram inputs are inline DSL, a .dg/.txt file of DSL, or a .json file
 * in the diagram format. */
DiagramH load_diagram(CommonState& state, const std::string& input,
                      const Signature& sig) {
  DiagramH d;
  std::string text = input;
  if (is_existing_file(input)) text = read_file(input);
  if (looks_like_json(text)) {
    check(strand_diagram_from_json(text.c_str(), sig.get(), d.out()));
  } else {
    check(strand_diagram_parse(sig.get(), text.c_str(), d.out()));
  }
  (void)state;
  return d;
}

int run(int argc, char** argv) {
  CLI::App app{"strand: typed string diagrams, rewriting and tensor models"};
  app.require_subcommand(1);
  CommonState state;

  std::string input, input_b, output, format = "dot", expr;
  std::string lexicon_path, corpus_path, context_path, counts_path;
  std::string prior_path, channel_path, target = "s", unitary = "u_x";
  std::string word_a, word_b, sentence, trace_path;
  std::uint32_t max_steps = 1000, budget = 1000;
  int cases = 200;
  std::uint64_t seed = 2026;
  bool as_json = false, up_to_scalar = false, misroute = false;
  bool show_canonical = false;

  auto add_sig = [&](CLI::App* cmd) {
    cmd->add_option("--sig", state.sig_path, "signature JSON file");
  };
  auto add_json = [&](CLI::App* cmd) {
    cmd->add_flag("--json", as_json, "emit machine-readable JSON");
  };

  // parse
  CLI::App* parse = app.add_subcommand("parse", "parse a diagram expression");
  parse->add_option("expr", expr, "expression or file")->required();
  add_sig(parse);
  parse->add_flag("--canonical", show_canonical, "print the canonical form");
  add_json(parse);
  parse->callback([&] {
    Signature sig = state.load_signature_for("");
    std::string text = is_existing_file(expr) ? read_file(expr) : expr;
    DiagramH d = load_diagram(state, text, sig);
    if (show_canonical) {
      char* bytes = nullptr;
      check(strand_diagram_canonical(d.get(), &bytes));
      write_output(output, take_string(bytes));
      return;
    }
    if (as_json) {
      char* json = nullptr;
      check(strand_diagram_to_json(d.get(), &json));
      write_output(output, take_string(json));
      return;
    }
    if (!looks_like_json(text)) {
      char* pretty = nullptr;
      check(strand_dsl_pretty(text.c_str(), &pretty));
      std::cout << take_string(pretty) << '\n';
    }
    std::cout << "ok\n";
  });

  // normalize
  CLI::App* norm = app.add_subcommand("normalize", "rewrite to normal form");
  norm->add_option("input", input, "diagram (DSL, .dg or .json)")->required();
  add_sig(norm);
  norm->add_option("--rules", state.rules_path, "extra rules (JSON)");
  norm->add_option("--max-steps", max_steps, "step budget");
  norm->add_option("--trace", trace_path, "write the rewrite trace here");
  add_json(norm);
  norm->callback([&] {
    Signature sig = state.load_signature_for("");
    DiagramH d = load_diagram(state, input, sig);
    RulesetH rules = state.load_rules(sig);
    DiagramH out;
    char* trace = nullptr;
    check(strand_normalize(d.get(), rules.get(), max_steps, out.out(), &trace));
    std::string trace_json = take_string(trace);
    if (!trace_path.empty()) write_output(trace_path, trace_json);
    char* json = nullptr;
    check(strand_diagram_to_json(out.get(), &json));
    write_output(output, take_string(json));
  });

  // eval
  CLI::App* eval = app.add_subcommand("eval", "interpret in a tensor model");
  eval->add_option("input", input, "diagram (DSL, .dg or .json)")->required();
  eval->add_option("--model", state.model_path, "model JSON file")->required();
  add_sig(eval);
  eval->add_flag("--no-validate", state.no_validate,
                 "skip the dagger consistency check at model load");
  add_json(eval);
  eval->callback([&] {
    ModelH model = state.load_model();
    Signature sig;
    check(strand_model_signature(model.get(), sig.out()));
    DiagramH d = load_diagram(state, input, sig);
    char* tensor = nullptr;
    check(strand_interpret(d.get(), model.get(), &tensor));
    write_output(output, take_string(tensor));
  });

  // check-eq
  CLI::App* eq = app.add_subcommand("check-eq", "equality by rewriting");
  eq->add_option("a", input, "first diagram")->required();
  eq->add_option("b", input_b, "second diagram")->required();
  add_sig(eq);
  eq->add_option("--rules", state.rules_path, "extra rules (JSON)");
  eq->add_option("--budget", budget, "rewrite budget per side");
  eq->add_flag("--up-to-scalar", up_to_scalar,
               "accept equality up to a nonzero scalar");
  eq->callback([&] {
    Signature sig = state.load_signature_for("");
    DiagramH a = load_diagram(state, input, sig);
    DiagramH b = load_diagram(state, input_b, sig);
    RulesetH rules = state.load_rules(sig);
    char* verdict = nullptr;
    check(strand_check_equal(a.get(), b.get(), rules.get(), budget, &verdict));
    std::string v = take_string(verdict);
    std::cout << v << '\n';
    bool ok = v == "equal-exact" || (up_to_scalar && v == "equal-up-to-scalar");
    if (!ok) die(kExitVerificationFailed, "diagrams not shown equal");
  });

  // render
  CLI::App* render = app.add_subcommand("render", "emit DOT or SVG");
  render->add_option("input", input, "diagram (DSL, .dg or .json)")->required();
  add_sig(render);
  render->add_option("-f,--format", format, "dot or svg")
      ->check(CLI::IsMember({"dot", "svg"}));
  render->add_option("-o,--output", output, "output file (default stdout)");
  render->callback([&] {
    Signature sig = state.load_signature_for("");
    DiagramH d = load_diagram(state, input, sig);
    char* text = nullptr;
    if (format == "svg")
      check(strand_diagram_to_svg(d.get(), &text));
    else
      check(strand_diagram_to_dot(d.get(), &text));
    write_output(output, take_string(text));
  });

  // grammar check
  CLI::App* grammar = app.add_subcommand("grammar", "pregroup grammar tools");
  CLI::App* gcheck = grammar->add_subcommand("check", "reduce a type string");
  gcheck->add_option("types", input, "whitespace-separated ^l/^r types")
      ->required();
  gcheck->add_option("--target", target, "target atom (default s)");
  add_json(gcheck);
  gcheck->callback([&] {
    int reduces = 0;
    char* reduction = nullptr;
    check(strand_grammar_check(input.c_str(), target.c_str(), &reduces,
                               &reduction));
    std::string witness = take_string(reduction);
    if (!reduces) {
      std::cout << "does not reduce to " << target << '\n';
      die(kExitVerificationFailed, "");
    }
    write_output(output, witness);
  });

  // sentence
  CLI::App* sent = app.add_subcommand("sentence", "from words to meaning");
  sent->add_option("words", sentence, "the sentence, lowercased")->required();
  sent->add_option("--lexicon", lexicon_path, "lexicon JSON")->required();
  sent->add_option("--model", state.model_path, "model JSON")->required();
  add_json(sent);
  sent->callback([&] {
    LexiconH lex;
    check(strand_lexicon_from_json(read_file(lexicon_path).c_str(), lex.out()));
    ModelH model = state.load_model();
    char* tensor = nullptr;
    strand_status status =
        strand_sentence_meaning(sentence.c_str(), lex.get(), model.get(), &tensor);
    if (status == STRAND_ERR_GRAMMAR)
      die(kExitVerificationFailed, strand_last_error());
    check(status);
    write_output(output, take_string(tensor));
  });

  // corpus build
  CLI::App* corpus = app.add_subcommand("corpus", "corpus tools");
  CLI::App* cbuild = corpus->add_subcommand("build", "count co-occurrences");
  cbuild->add_option("--corpus", corpus_path, "plain-text corpus")->required();
  cbuild->add_option("--context", context_path, "context config")->required();
  cbuild->add_option("-o,--output", output, "counts JSON (default stdout)");
  cbuild->callback([&] {
    CorpusH c;
    check(strand_corpus_build(read_file(corpus_path).c_str(),
                              read_file(context_path).c_str(), c.out()));
    char* json = nullptr;
    check(strand_corpus_counts_json(c.get(), &json));
    write_output(output, take_string(json));
  });

  // similarity
  CLI::App* sim = app.add_subcommand("similarity", "compare word meanings");
  sim->add_option("a", word_a, "first word")->required();
  sim->add_option("b", word_b, "second word")->required();
  sim->add_option("--counts", counts_path, "counts JSON from `corpus build`");
  sim->add_option("--corpus", corpus_path, "plain-text corpus");
  sim->add_option("--context", context_path, "context config");
  sim->callback([&] {
    CorpusH c;
    if (!counts_path.empty()) {
      check(strand_corpus_from_counts_json(read_file(counts_path).c_str(),
                                           c.out()));
    } else if (!corpus_path.empty() && !context_path.empty()) {
      check(strand_corpus_build(read_file(corpus_path).c_str(),
                                read_file(context_path).c_str(), c.out()));
    } else {
      die(kExitUsage, "pass --counts or both --corpus and --context");
    }
    double value = 0;
    check(strand_similarity(c.get(), word_a.c_str(), word_b.c_str(), &value));
    std::printf("%.6f\n", value);
  });

  // demos
  CLI::App* demo = app.add_subcommand("demo", "paper protocol demonstrations");
  CLI::App* tele = demo->add_subcommand("teleportation", "teleportation");
  tele->add_option("--model", state.model_path, "model JSON");
  tele->add_option("--unitary", unitary, "decoration unitary (default u_x)");
  tele->add_option("--budget", budget, "rewrite budget");
  add_json(tele);
  CLI::App* swp = demo->add_subcommand("swap", "entanglement swapping");
  swp->add_option("--model", state.model_path, "model JSON");
  swp->add_option("--unitary", unitary, "decoration unitary (default u_x)");
  swp->add_flag("--misroute", misroute, "negative control: misroute the effect");
  swp->add_option("--budget", budget, "rewrite budget");
  add_json(swp);
  CLI::App* bay = demo->add_subcommand("bayes", "Bayesian inversion");
  bay->add_option("--prior", prior_path, "prior JSON")->required();
  bay->add_option("--channel", channel_path, "channel JSON")->required();
  add_json(bay);

  auto run_protocol = [&](bool swap_demo) {
    ModelH model = state.load_model();
    char* report = nullptr;
    if (swap_demo)
      check(strand_demo_swap(model.get(), unitary.c_str(), misroute ? 1 : 0,
                             budget, &report));
    else
      check(strand_demo_teleportation(model.get(), unitary.c_str(), budget,
                                      &report));
    std::string json = take_string(report);
    if (as_json) {
      write_output(output, json);
    } else {
      bool passed = json.find("\"passed\": true") != std::string::npos;
      std::cout << (swap_demo ? "entanglement swapping" : "teleportation")
                << " [" << unitary << "]: " << (passed ? "PASS" : "FAIL")
                << '\n';
    }
    if (json.find("\"passed\": true") == std::string::npos)
      die(kExitVerificationFailed, "protocol verdicts failed");
  };
  tele->callback([&] { run_protocol(false); });
  swp->callback([&] { run_protocol(true); });
  bay->callback([&] {
    char* result = nullptr;
    check(strand_bayes_invert(read_file(prior_path).c_str(),
                              read_file(channel_path).c_str(), &result));
    write_output(output, take_string(result));
  });

  // soundness
  CLI::App* sound = app.add_subcommand(
      "soundness", "tensor-check the ruleset against a model");
  sound->add_option("--model", state.model_path, "model JSON")->required();
  sound->add_option("--rules", state.rules_path, "extra rules (JSON)");
  sound->add_option("--cases", cases, "cases per rule");
  sound->add_option("--seed", seed, "base seed");
  sound->add_flag("--no-validate", state.no_validate,
                  "skip the dagger consistency check at model load");
  add_json(sound);
  sound->callback([&] {
    ModelH model = state.load_model();
    Signature sig;
    check(strand_model_signature(model.get(), sig.out()));
    RulesetH rules = state.load_rules(sig);
    char* report = nullptr;
    check(strand_soundness(rules.get(), model.get(), cases, seed, &report));
    std::string json = take_string(report);
    write_output(as_json ? output : std::string("-"), json);
    if (json.find("\"ok\": true") == std::string::npos)
      die(kExitVerificationFailed, "soundness failures reported");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CliError& e) {
    if (!e.message.empty()) std::cerr << "error: " << e.message << '\n';
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
