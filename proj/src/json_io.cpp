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

#include "strand/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "diagram_internal.hpp"
#include "json.hpp"

namespace strand::io {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw ParseError("malformed JSON");
  return j;
}

Cplx complex_from(const json& v, const std::string& what) {
  if (v.is_number()) return Cplx(v.get<double>(), 0.0);
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return Cplx(v[0].get<double>(), v[1].get<double>());
  throw ParseError(what + ": entries must be numbers or [re, im] pairs");
}

json complex_to(Cplx c) {
  if (c.imag() == 0.0) return json(c.real());
  return json::array({c.real(), c.imag()});
}

std::string hex64(std::uint64_t h) {
  std::ostringstream os;
  os << "0x" << std::hex << h;
  return os.str();
}

json signature_json(const Signature& sig) {
  json types = json::array();
  for (TypeId t = 0; t < sig.type_count(); ++t) types.push_back(sig.type(t).name);
  json gens = json::array();
  for (GenId g = 0; g < sig.generator_count(); ++g) {
    const Generator& gen = sig.generator(g);
    json e;
    e["name"] = gen.name;
    json ins = json::array(), outs = json::array();
    for (TypeId t : gen.inputs) ins.push_back(sig.type(t).name);
    for (TypeId t : gen.outputs) outs.push_back(sig.type(t).name);
    e["inputs"] = ins;
    e["outputs"] = outs;
    e["dagger"] = sig.generator(gen.dagger).name;
    if (gen.unitary) e["unitary"] = true;
    gens.push_back(e);
  }
  return json{{"types", types}, {"generators", gens}};
}

SignaturePtr signature_from(const json& j) {
  Signature sig;
  if (j.contains("types"))
    for (const auto& t : j.at("types")) sig.add_type(t.get<std::string>());
  if (j.contains("generators")) {
    for (const auto& e : j.at("generators")) {
      std::string name = e.at("name").get<std::string>();
      std::vector<TypeId> ins, outs;
      for (const auto& t : e.value("inputs", json::array()))
        ins.push_back(sig.type_id(t.get<std::string>()));
      for (const auto& t : e.value("outputs", json::array()))
        outs.push_back(sig.type_id(t.get<std::string>()));
      std::string dagger = e.value("dagger", std::string());
      bool unitary = e.value("unitary", false);
      if (sig.has_generator(name)) {
        // created earlier as someone's partner; check it lines up
        const Generator& g = sig.generator(sig.generator_id(name));
        if (g.inputs != ins || g.outputs != outs)
          throw ParseError("generator '" + name +
                           "' disagrees with its partner declaration");
        if (unitary) sig.set_unitary(sig.generator_id(name), true);
        continue;
      }
      sig.add_generator(name, ins, outs, dagger, unitary);
    }
  }
  return std::move(sig).freeze();
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
}

std::string signature_to_json(const Signature& sig) {
  return signature_json(sig).dump(2);
}

std::string signature_to_json(const SignaturePtr& sig) {
  return signature_to_json(*sig);
}

SignaturePtr signature_from_json(const std::string& text) {
  return signature_from(parse(text));
}

// ---------------------------------------------------------------------------

std::string diagram_to_json(const Diagram& d, bool embed_signature) {
  const Signature& sig = *d.signature();
  json j;
  std::set<std::string> used_types, used_gens;
  json nodes = json::array();
  for (std::uint32_t i = 0; i < d.nodes().size(); ++i) {
    const Node& n = d.nodes()[i];
    json e;
    e["id"] = i;
    switch (n.kind) {
      case NodeKind::Generator:
        e["kind"] = "gen";
        e["name"] = sig.generator(n.gen).name;
        used_gens.insert(sig.generator(n.gen).name);
        break;
      case NodeKind::Spider:
        e["kind"] = "spider";
        e["color"] = to_string(n.color);
        e["type"] = sig.type(n.type).name;
        used_types.insert(sig.type(n.type).name);
        break;
      case NodeKind::Input:
        e["kind"] = "in";
        e["pos"] = n.position;
        e["type"] = sig.type(n.type).name;
        used_types.insert(sig.type(n.type).name);
        break;
      case NodeKind::Output:
        e["kind"] = "out";
        e["pos"] = n.position;
        e["type"] = sig.type(n.type).name;
        used_types.insert(sig.type(n.type).name);
        break;
    }
    nodes.push_back(e);
  }
  json edges = json::array();
  for (const Edge& e : d.edges())
    edges.push_back(json::array(
        {json::array({e.a.node, e.a.port}), json::array({e.b.node, e.b.port})}));
  j["types"] = json(used_types);
  j["generators"] = json(used_gens);
  j["nodes"] = nodes;
  j["edges"] = edges;
  j["inputs"] = d.input_nodes();
  j["outputs"] = d.output_nodes();
  if (!d.loops().empty()) {
    json loops = json::object();
    for (const auto& [t, c] : d.loops()) loops[sig.type(t).name] = c;
    j["loops"] = loops;
  }
  if (embed_signature) j["signature"] = signature_json(sig);
  return j.dump(2);
}

Diagram diagram_from_json(const std::string& text, SignaturePtr sig) {
  json j = parse(text);
  if (!sig) {
    if (j.contains("signature")) {
      sig = signature_from(j.at("signature"));
    } else {
      // a bare diagram over named wire types only
      Signature s;
      for (const auto& t : j.value("types", json::array()))
        s.add_type(t.get<std::string>());
      if (!j.value("generators", json::array()).empty())
        throw ParseError(
            "diagram uses generators but carries no signature; pass one");
      sig = std::move(s).freeze();
    }
  }

  const json& nodes = j.at("nodes");
  DiagramBuilder b(sig);
  std::map<std::uint64_t, std::uint32_t> remap;
  // spider degrees are inferred from the edges
  std::map<std::uint64_t, std::uint32_t> degree;
  for (const auto& e : j.at("edges")) {
    degree[e.at(0).at(0).get<std::uint64_t>()] += 1;
    degree[e.at(1).at(0).get<std::uint64_t>()] += 1;
  }
  for (const auto& e : nodes) {
    std::uint64_t id = e.at("id").get<std::uint64_t>();
    std::string kind = e.at("kind").get<std::string>();
    std::uint32_t built;
    if (kind == "gen") {
      built = b.add_generator_node(sig->generator_id(e.at("name").get<std::string>()));
    } else if (kind == "spider") {
      built = b.add_spider_node(
          spider_color_from_string(e.at("color").get<std::string>()),
          sig->type_id(e.at("type").get<std::string>()),
          degree.count(id) ? degree[id] : 0);
    } else if (kind == "in" || kind == "out") {
      TypeId t = sig->type_id(e.at("type").get<std::string>());
      built = kind == "in" ? b.add_input_node(t) : b.add_output_node(t);
      if (e.contains("pos")) b.node(built).position = e.at("pos").get<std::uint32_t>();
    } else {
      throw ParseError("unknown node kind '" + kind + "'");
    }
    if (!remap.emplace(id, built).second)
      throw ParseError("duplicate node id " + std::to_string(id));
  }
  auto port_ref = [&](const json& pr) {
    std::uint64_t id = pr.at(0).get<std::uint64_t>();
    auto it = remap.find(id);
    if (it == remap.end())
      throw ParseError("edge references unknown node " + std::to_string(id));
    return PortRef{it->second, pr.at(1).get<std::uint32_t>()};
  };
  for (const auto& e : j.at("edges"))
    b.add_edge(port_ref(e.at(0)), port_ref(e.at(1)));
  if (j.contains("loops")) {
    for (const auto& [name, count] : j.at("loops").items())
      b.add_loop(sig->type_id(name), count.get<std::uint32_t>());
  }
  try {
    return b.finish();
  } catch (const InternalError& e) {
    throw ParseError(std::string("malformed diagram: ") + e.what());
  }
}

// ---------------------------------------------------------------------------

Model model_from_json(const std::string& text, SignaturePtr sig,
                      bool check_dagger) {
  json j = parse(text);
  if (!sig) {
    if (!j.contains("signature"))
      throw ParseError("model carries no signature; pass one");
    sig = signature_from(j.at("signature"));
  }
  Model m(sig, semiring_from_string(j.value("semiring", std::string("complex"))));
  const json types = j.value("types", json::object());
  for (const auto& [name, dim] : types.items())
    m.set_dim(sig->type_id(name), dim.get<std::size_t>());
  const json generators = j.value("generators", json::object());
  for (const auto& [name, spec] : generators.items()) {
    const json& data = spec.is_object() ? spec.at("data") : spec;
    std::vector<Cplx> entries;
    entries.reserve(data.size());
    for (const auto& v : data)
      entries.push_back(complex_from(v, "generator '" + name + "'"));
    m.set_generator(sig->generator_id(name), std::move(entries));
  }
  const json spider_bases = j.value("spider_bases", json::object());
  for (const auto& [color_name, per_type] : spider_bases.items()) {
    SpiderColor color = spider_color_from_string(color_name);
    for (const auto& [type_name, rows] : per_type.items()) {
      std::vector<std::vector<double>> basis;
      for (const auto& row : rows) {
        std::vector<double> r;
        for (const auto& v : row) {
          if (!v.is_number())
            throw ParseError("spider bases must have real entries");
          r.push_back(v.get<double>());
        }
        basis.push_back(std::move(r));
      }
      m.set_basis(color, sig->type_id(type_name), std::move(basis));
    }
  }
  Model::Options options;
  options.check_dagger = check_dagger;
  m.finalize(options);
  return m;
}

std::string tensor_to_json(const TensorValue& t) {
  json j;
  j["semiring"] = to_string(t.kind);
  j["shape"] = t.shape;
  j["out_rank"] = t.out_rank;
  json data = json::array();
  for (std::size_t i = 0; i < t.size(); ++i) data.push_back(complex_to(t.entry(i)));
  j["data"] = data;
  return j.dump(2);
}

TensorValue tensor_from_json(const std::string& text) {
  json j = parse(text);
  SemiringKind kind =
      semiring_from_string(j.value("semiring", std::string("complex")));
  std::vector<std::size_t> shape;
  for (const auto& s : j.value("shape", json::array()))
    shape.push_back(s.get<std::size_t>());
  std::vector<Cplx> entries;
  for (const auto& v : j.at("data")) entries.push_back(complex_from(v, "tensor"));
  TensorValue t;
  t.kind = kind;
  t.shape = std::move(shape);
  t.out_rank = j.value("out_rank", std::size_t{0});
  switch (kind) {
    case SemiringKind::Complex:
      t.data = entries;
      break;
    case SemiringKind::NonnegReal: {
      std::vector<double> d;
      for (Cplx c : entries) d.push_back(c.real());
      t.data = std::move(d);
      break;
    }
    case SemiringKind::Boolean: {
      std::vector<std::uint8_t> d;
      for (Cplx c : entries)
        d.push_back(static_cast<std::uint8_t>(std::abs(c) > 0.5 ? 1 : 0));
      t.data = std::move(d);
      break;
    }
  }
  std::size_t expect = 1;
  for (std::size_t s : t.shape) expect *= s;
  if (t.size() != expect) throw ParseError("tensor data does not fill its shape");
  return t;
}

// ---------------------------------------------------------------------------

std::vector<RulePtr> rules_from_json(const std::string& text,
                                     const SignaturePtr& sig) {
  json j = parse(text);
  std::vector<RulePtr> out;
  for (const auto& e : j.value("rules", json::array())) {
    std::string name = e.at("name").get<std::string>();
    Diagram lhs = diagram_from_json(e.at("lhs").dump(), sig);
    Diagram rhs = diagram_from_json(e.at("rhs").dump(), sig);
    Soundness soundness =
        e.value("soundness", std::string("exact")) == "up_to_scalar"
            ? Soundness::UpToScalar
            : Soundness::Exact;
    bool poly = e.value("leg_polymorphic", false);
    std::map<std::uint32_t, std::uint32_t> persistent;
    const json persistent_json = e.value("persistent", json::object());
    for (const auto& [l, r] : persistent_json.items())
      persistent[static_cast<std::uint32_t>(std::stoul(l))] =
          r.get<std::uint32_t>();
    out.push_back(std::make_shared<UserRule>(name, std::move(lhs),
                                             std::move(rhs), soundness, poly,
                                             std::move(persistent)));
  }
  return out;
}

std::string trace_to_json(const RewriteTrace& trace) {
  json j;
  j["initial_hash"] = hex64(trace.initial_hash);
  json steps = json::array();
  for (const TraceStep& s : trace.steps) {
    steps.push_back(json{
        {"rule", s.rule}, {"nodes", s.nodes}, {"hash", hex64(s.hash)}});
  }
  j["steps"] = steps;
  j["scalars"] = trace.scalars;
  j["budget_exhausted"] = trace.budget_exhausted;
  j["note"] = trace.note;
  return j.dump(2);
}

// ---------------------------------------------------------------------------

distsem::Lexicon lexicon_from_json(const std::string& text) {
  json j = parse(text);
  bool mirrored = j.value("convention", std::string("paper")) == "mirrored";
  distsem::Lexicon lex;
  const json words = j.value("words", json::object());
  for (const auto& [word, spec] : words.items()) {
    distsem::LexiconEntry entry;
    entry.word = word;
    entry.type = pregroup::parse_type_sequence(spec.at("type").get<std::string>());
    if (mirrored) entry.type = pregroup::mirror(entry.type);
    if (spec.contains("builtin")) {
      std::string b = spec.at("builtin").get<std::string>();
      if (b == "does")
        entry.builtin = distsem::BuiltinWord::Does;
      else if (b == "not")
        entry.builtin = distsem::BuiltinWord::Not;
      else
        throw ParseError("unknown builtin word '" + b + "'");
    } else {
      for (const auto& v : spec.at("tensor"))
        entry.tensor.push_back(complex_from(v, "word '" + word + "'"));
    }
    lex.add(std::move(entry));
  }
  return lex;
}

distsem::ContextConfig context_from_text(const std::string& text) {
  distsem::ContextConfig cfg;
  cfg.window = 0;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    // trim
    auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    auto end = line.find_last_not_of(" \t\r");
    line = line.substr(begin, end - begin + 1);
    if (line.empty() || line[0] == '#') continue;
    std::size_t eq = line.find('=');
    if (eq != std::string::npos) {
      std::string key = line.substr(0, eq);
      key.erase(key.find_last_not_of(" \t") + 1);
      if (key != "window")
        throw ParseError("unknown context option '" + key + "'");
      cfg.window = std::stoi(line.substr(eq + 1));
      continue;
    }
    cfg.context_words.push_back(line);
  }
  if (cfg.window < 1)
    throw ParseError("context file must set `window = k` with k >= 1");
  return cfg;
}

std::string counts_to_json(const distsem::CooccurrenceModel& model) {
  json j;
  j["context_words"] = model.config().context_words;
  j["window"] = model.config().window;
  j["token_count"] = model.token_count();
  json counts = json::object();
  for (const std::string& w : model.words()) counts[w] = model.counts(w);
  j["counts"] = counts;
  return j.dump(2);
}

distsem::CooccurrenceModel counts_from_json(const std::string& text) {
  json j = parse(text);
  distsem::ContextConfig cfg;
  cfg.window = j.at("window").get<int>();
  for (const auto& w : j.at("context_words"))
    cfg.context_words.push_back(w.get<std::string>());
  std::unordered_map<std::string, std::vector<long long>> counts;
  for (const auto& [word, row] : j.at("counts").items()) {
    std::vector<long long> r;
    for (const auto& v : row) r.push_back(v.get<long long>());
    counts.emplace(word, std::move(r));
  }
  return distsem::CooccurrenceModel::from_counts(
      cfg, std::move(counts), j.value("token_count", 0LL));
}

// ---------------------------------------------------------------------------

std::string report_to_json(const proto::ProtocolReport& report) {
  json j;
  j["protocol"] = report.name;
  j["rewrite_ok"] = report.rewrite_ok;
  j["tensor_ok"] = report.tensor_ok;
  j["passed"] = report.passed();
  j["tensor_mode"] = report.tensor_mode;
  j["tolerance"] = report.tolerance;
  if (report.scalar) j["scalar"] = complex_to(*report.scalar);
  j["elapsed_seconds"] = report.elapsed_seconds;
  j["trace"] = json::parse(trace_to_json(report.trace));
  return j.dump(2);
}

std::string soundness_to_json(const SoundnessReport& report) {
  json j;
  j["cases_run"] = report.cases_run;
  j["cases_skipped"] = report.cases_skipped;
  j["ok"] = report.ok();
  json fails = json::array();
  for (const auto& f : report.failures)
    fails.push_back(json{
        {"rule", f.rule}, {"case", f.case_index}, {"detail", f.detail}});
  j["failures"] = fails;
  return j.dump(2);
}

proto::Prior prior_from_json(const std::string& text) {
  json j = parse(text);
  const json& arr = j.is_object() ? j.at("prior") : j;
  proto::Prior p;
  for (const auto& v : arr) p.p.push_back(v.get<double>());
  return p;
}

proto::Channel channel_from_json(const std::string& text) {
  json j = parse(text);
  const json& rows = j.is_object() ? j.at("channel") : j;
  proto::Channel c;
  c.in_dim = rows.size();
  for (const auto& row : rows) {
    if (c.out_dim == 0) c.out_dim = row.size();
    if (row.size() != c.out_dim)
      throw ParseError("channel rows must all have the same length");
    for (const auto& v : row) c.entries.push_back(v.get<double>());
  }
  return c;
}

std::string bayes_to_json(const proto::BayesResult& result) {
  json j;
  json inv = json::array();
  for (std::size_t y = 0; y < result.inverse.in_dim; ++y) {
    json row = json::array();
    for (std::size_t x = 0; x < result.inverse.out_dim; ++x)
      row.push_back(result.inverse(y, x));
    inv.push_back(row);
  }
  j["inverse"] = inv;
  j["marginal"] = result.marginal;
  j["unsupported"] = result.unsupported;
  return j.dump(2);
}

std::string reduction_to_json(const pregroup::Reduction& r) {
  json j;
  j["input"] = pregroup::to_string(r.input);
  json pairs = json::array();
  for (auto [p, q] : r.pairs) pairs.push_back(json::array({p, q}));
  j["pairs"] = pairs;
  j["survivors"] = r.survivors;
  return j.dump(2);
}

}  // namespace strand::io
