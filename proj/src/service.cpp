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

#include "verdict/service.hpp"

#include <set>
#include <thread>

#include "httplib.h"
#include "verdict/error.hpp"
#include "verdict/inference.hpp"
#include "verdict/model_json.hpp"
#include "verdict/negligence.hpp"

namespace verdict::service {
namespace {

using nlohmann::json;

Reply error_reply(int status, std::string_view message, std::string_view field = {}) {
  OrderedJson body;
  body["error"] = message;
  if (!field.empty()) body["field"] = field;
  return {status, body.dump()};
}

Reply ok(const OrderedJson& body) { return {200, body.dump()}; }

}  // namespace

Service::Service(bn::Network model) : model_(std::move(model)) {
  OrderedJson doc;
  doc["variables"] = OrderedJson::array();
  for (std::size_t i = 0; i < model_.size(); ++i) {
    const auto& v = model_.variable(i);
    OrderedJson jv;
    jv["id"] = v.id;
    jv["states"] = v.states;
    jv["parents"] = model_.cpt(i).parents;
    doc["variables"].push_back(std::move(jv));
  }
  doc["cpts"] = model_to_json(model_)["cpts"];
  model_body_ = doc.dump();
}

Reply Service::get_model() const { return {200, model_body_}; }

Reply Service::infer(std::string_view body) const {
  json req = json::parse(body.begin(), body.end(), nullptr, /*allow_exceptions=*/false);
  if (req.is_discarded()) return error_reply(400, "request body is not valid JSON", "body");
  if (!req.is_object()) return error_reply(400, "request body must be a JSON object", "body");

  bn::Evidence evidence;
  if (auto it = req.find("evidence"); it != req.end()) {
    if (!it->is_object()) return error_reply(400, "evidence must be an object", "evidence");
    for (const auto& [id, state] : it->items()) {
      const std::string field = "evidence." + id;
      if (!state.is_string()) return error_reply(400, "state must be a string", field);
      const auto v = model_.find(id);
      if (!v) return error_reply(400, "unknown variable '" + id + "'", field);
      const auto& states = model_.variable(*v).states;
      const auto label = state.get<std::string>();
      if (std::find(states.begin(), states.end(), label) == states.end()) {
        return error_reply(400, "variable '" + id + "' has no state '" + label + "'", field);
      }
      evidence.emplace(id, label);
    }
  }

  std::vector<std::string> query;
  if (auto it = req.find("query"); it != req.end() && !it->is_null()) {
    if (!it->is_array()) return error_reply(400, "query must be an array", "query");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string field = "query[" + std::to_string(i) + "]";
      const json& q = (*it)[i];
      if (!q.is_string()) return error_reply(400, "query entries must be strings", field);
      const auto id = q.get<std::string>();
      if (!model_.find(id)) return error_reply(400, "unknown variable '" + id + "'", field);
      if (!seen.insert(id).second) {
        return error_reply(422, "variable '" + id + "' is queried twice", field);
      }
      query.push_back(id);
    }
  } else {
    query = bn::unobserved_variables(model_, evidence);
  }

  const auto result = bn::infer(model_, evidence, query);
  return ok(inference_to_json(model_, result));
}

Reply Service::list_scenarios() const {
  return ok(OrderedJson(negligence::scenario_names()));
}

Reply Service::run_scenario(std::string_view name) const {
  bn::Evidence evidence;
  try {
    evidence = negligence::scenario_evidence(name);
  } catch (const Error&) {
    return error_reply(404, "unknown scenario '" + std::string(name) + "'", "name");
  }
  try {
    const auto result = negligence::run_scenario(model_, evidence, std::string(name));
    return ok(negligence::scenario_to_json(model_, result));
  } catch (const Error& e) {
    return error_reply(422, e.what(), "name");
  }
}

struct HttpServer::Impl {
  const Service& service;
  ServerOptions options;
  httplib::Server server;
  std::thread worker;

  Impl(const Service& s, ServerOptions o) : service(s), options(std::move(o)) {
    server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                                {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                                {"Access-Control-Allow-Headers", "Content-Type"}});
    auto send = [](httplib::Response& res, const Reply& reply) {
      res.status = reply.status;
      res.set_content(reply.body, "application/json");
    };
    server.Get("/api/model", [this, send](const httplib::Request&, httplib::Response& res) {
      send(res, service.get_model());
    });
    server.Post("/api/infer", [this, send](const httplib::Request& req, httplib::Response& res) {
      send(res, service.infer(req.body));
    });
    server.Get("/api/scenarios", [this, send](const httplib::Request&, httplib::Response& res) {
      send(res, service.list_scenarios());
    });
    server.Post(R"(/api/scenarios/([^/]+))",
                [this, send](const httplib::Request& req, httplib::Response& res) {
                  send(res, service.run_scenario(req.matches[1].str()));
                });
    server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) {
      res.status = 204;
    });
    if (!options.static_dir.empty() && std::filesystem::is_directory(options.static_dir)) {
      server.set_mount_point("/", options.static_dir.string());
    }
  }

  int bind() {
    int port = options.port;
    if (port == 0) {
      port = server.bind_to_any_port(options.host);
    } else if (!server.bind_to_port(options.host, port)) {
      port = -1;
    }
    if (port < 0) {
      throw Error(ErrorCode::kIo, "cannot bind " + options.host + ":" +
                                      std::to_string(options.port));
    }
    return port;
  }
};

HttpServer::HttpServer(const Service& service, ServerOptions options)
    : impl_(std::make_unique<Impl>(service, std::move(options))) {}

HttpServer::~HttpServer() { stop(); }

int HttpServer::start() {
  const int port = impl_->bind();
  impl_->worker = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
  return port;
}

void HttpServer::run() {
  impl_->bind();
  impl_->server.listen_after_bind();
}

void HttpServer::stop() {
  impl_->server.stop();
  if (impl_->worker.joinable()) impl_->worker.join();
}

}  // namespace verdict::service
