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

#include <string>
#include <vector>

#include "strand/distsem.hpp"
#include "strand/protocols.hpp"
#include "strand/tensor.hpp"

namespace strand::io {

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

std::string signature_to_json(const Signature& sig);
std::string signature_to_json(const SignaturePtr& sig);
SignaturePtr signature_from_json(const std::string& json);

/** The interchange format: nodes with kinds, port-addressed edges, ordered
 * boundary lists, loops, and (by default) the signature inline so files
 * stand alone. */
std::string diagram_to_json(const Diagram& d, bool embed_signature = true);
Diagram diagram_from_json(const std::string& json, SignaturePtr sig = nullptr);

Model model_from_json(const std::string& json, SignaturePtr sig = nullptr,
                      bool check_dagger = true);

std::string tensor_to_json(const TensorValue& t);
TensorValue tensor_from_json(const std::string& json);

/** User rules only; append to Ruleset::builtin() for the shipped set. */
std::vector<RulePtr> rules_from_json(const std::string& json,
                                     const SignaturePtr& sig);

std::string trace_to_json(const RewriteTrace& trace);

distsem::Lexicon lexicon_from_json(const std::string& json);

/** "one context word per line, plus `window = k`" */
distsem::ContextConfig context_from_text(const std::string& text);

std::string counts_to_json(const distsem::CooccurrenceModel& model);
distsem::CooccurrenceModel counts_from_json(const std::string& json);

std::string report_to_json(const proto::ProtocolReport& report);
std::string soundness_to_json(const SoundnessReport& report);

proto::Prior prior_from_json(const std::string& json);
proto::Channel channel_from_json(const std::string& json);
std::string bayes_to_json(const proto::BayesResult& result);

std::string reduction_to_json(const pregroup::Reduction& r);

}  // namespace strand::io
