// Copyright 2026 The verdict-bn Authors
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

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"
#include "verdict/inference.hpp"
#include "verdict/network.hpp"

namespace verdict {

using OrderedJson = nlohmann::ordered_json;

// Model document layout:
//   {"variables": [{"id": ..., "states": [...]}, ...],
//    "cpts": [{"child": ..., "parents": [...], "rows": [[...]], "structural": [[...]]}, ...]}
// Keys are emitted in that order and numbers use shortest round-trip form, so
// a given network always serializes to the same bytes.
OrderedJson model_to_json(const bn::Network& net);
std::string dump_model(const bn::Network& net);

// Parses and validates a model document. Throws Error(kBadModelJson) for
// shape problems and the build_network() errors for semantic ones.
bn::Network model_from_json(const nlohmann::json& doc);
bn::Network parse_model(std::string_view text);
bn::Network load_model(const std::filesystem::path& path);

// {"evidence_probability": p, "zero_evidence": b, "posteriors": {var: {state: p}}}
OrderedJson inference_to_json(const bn::Network& net, const bn::InferenceResult& result);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace verdict
