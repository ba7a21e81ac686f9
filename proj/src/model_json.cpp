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

#include "verdict/model_json.hpp"

#include <fstream>
#include <sstream>

#include "verdict/error.hpp"

namespace verdict {
namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& message) {
  throw Error(ErrorCode::kBadModelJson, "model JSON: " + message);
}

const json& member(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) bad(where + " is missing \"" + key + "\"");
  return *it;
}

std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) bad(where + " must be a string");
  return j.get<std::string>();
}

std::vector<std::string> as_strings(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where + " must be an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(as_string(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

}  // namespace

OrderedJson model_to_json(const bn::Network& net) {
  OrderedJson doc;
  doc["variables"] = OrderedJson::array();
  for (const auto& v : net.variables()) {
    OrderedJson jv;
    jv["id"] = v.id;
    jv["states"] = v.states;
    doc["variables"].push_back(std::move(jv));
  }
  doc["cpts"] = OrderedJson::array();
  for (std::size_t i = 0; i < net.size(); ++i) {
    const auto& cpt = net.cpt(i);
    OrderedJson jc;
    jc["child"] = cpt.child;
    jc["parents"] = cpt.parents;
    jc["rows"] = cpt.rows;
    OrderedJson mask = OrderedJson::array();
    for (std::size_t r = 0; r < cpt.rows.size(); ++r) {
      OrderedJson row = OrderedJson::array();
      for (std::size_t s = 0; s < cpt.rows[r].size(); ++s) row.push_back(cpt.is_structural(r, s));
      mask.push_back(std::move(row));
    }
    jc["structural"] = std::move(mask);
    doc["cpts"].push_back(std::move(jc));
  }
  return doc;
}

std::string dump_model(const bn::Network& net) { return model_to_json(net).dump(2) + "\n"; }

bn::Network model_from_json(const json& doc) {
  if (!doc.is_object()) bad("top level must be an object");
  const json& jvars = member(doc, "variables", "model");
  const json& jcpts = member(doc, "cpts", "model");
  if (!jvars.is_array()) bad("\"variables\" must be an array");
  if (!jcpts.is_array()) bad("\"cpts\" must be an array");

  std::vector<bn::Variable> variables;
  for (std::size_t i = 0; i < jvars.size(); ++i) {
    const std::string where = "variables[" + std::to_string(i) + "]";
    const json& jv = jvars[i];
    if (!jv.is_object()) bad(where + " must be an object");
    variables.push_back({as_string(member(jv, "id", where), where + ".id"),
                         as_strings(member(jv, "states", where), where + ".states")});
  }

  std::vector<bn::Cpt> cpts;
  for (std::size_t i = 0; i < jcpts.size(); ++i) {
    const std::string where = "cpts[" + std::to_string(i) + "]";
    const json& jc = jcpts[i];
    if (!jc.is_object()) bad(where + " must be an object");
    bn::Cpt cpt;
    cpt.child = as_string(member(jc, "child", where), where + ".child");
    cpt.parents = as_strings(member(jc, "parents", where), where + ".parents");
    const json& rows = member(jc, "rows", where);
    if (!rows.is_array()) bad(where + ".rows must be an array");
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!rows[r].is_array()) bad(where + ".rows[" + std::to_string(r) + "] must be an array");
      std::vector<double> row;
      for (const auto& x : rows[r]) {
        if (!x.is_number()) bad(where + ".rows[" + std::to_string(r) + "] must hold numbers");
        row.push_back(x.get<double>());
      }
      cpt.rows.push_back(std::move(row));
    }
    if (auto it = jc.find("structural"); it != jc.end()) {
      if (!it->is_array()) bad(where + ".structural must be an array");
      for (std::size_t r = 0; r < it->size(); ++r) {
        const json& jr = (*it)[r];
        if (!jr.is_array()) bad(where + ".structural[" + std::to_string(r) + "] must be an array");
        std::vector<bool> row;
        for (const auto& x : jr) {
          if (!x.is_boolean()) bad(where + ".structural must hold booleans");
          row.push_back(x.get<bool>());
        }
        cpt.structural.push_back(std::move(row));
      }
    }
    cpts.push_back(std::move(cpt));
  }
  return bn::build_network(std::move(variables), std::move(cpts));
}

bn::Network parse_model(std::string_view text) {
  json doc = json::parse(text.begin(), text.end(), nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) bad("not valid JSON");
  return model_from_json(doc);
}

bn::Network load_model(const std::filesystem::path& path) {
  return parse_model(read_text_file(path));
}

OrderedJson inference_to_json(const bn::Network& net, const bn::InferenceResult& result) {
  OrderedJson out;
  out["evidence_probability"] = result.evidence_probability;
  out["zero_evidence"] = result.zero_evidence;
  OrderedJson posteriors = OrderedJson::object();
  for (const auto& p : result.posteriors) {
    const auto& states = net.variable(net.index_of(p.variable)).states;
    OrderedJson dist = OrderedJson::object();
    for (std::size_t s = 0; s < states.size(); ++s) dist[states[s]] = p.distribution[s];
    posteriors[p.variable] = std::move(dist);
  }
  out["posteriors"] = std::move(posteriors);
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path.string() + "'");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(ErrorCode::kIo, "failed writing '" + path.string() + "'");
}

}  // namespace verdict
