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
#include <memory>
#include <string>
#include <string_view>

#include "verdict/network.hpp"

namespace verdict::service {

struct Reply {
  int status = 200;
  std::string body;

  friend bool operator==(const Reply&, const Reply&) = default;
};

// Request handlers over one immutable model. Every handler is const and
// touches no shared mutable state, so one instance serves concurrent
// requests without locking.
//
// Routes:
//   GET  /api/model            -> get_model()
//   POST /api/infer            -> infer(body)
//   GET  /api/scenarios        -> list_scenarios()
//   POST /api/scenarios/{name} -> run_scenario(name)
class Service {
 public:
  explicit Service(bn::Network model);

  const bn::Network& model() const noexcept { return model_; }

  // Variables with states and parents, plus the CPTs.
  Reply get_model() const;

  // Body: {"evidence": {var: state}, "query": [var, ...]}; both optional,
  // query defaults to every unobserved variable. 400 for malformed JSON or an
  // unknown variable/state (the error names the field), 422 for a query list
  // that repeats a variable. Evidence of probability zero answers 200 with
  // "zero_evidence": true and no posteriors.
  Reply infer(std::string_view body) const;

  Reply list_scenarios() const;

  // 404 for an unregistered name; 422 when the loaded model cannot express
  // the scenario's evidence.
  Reply run_scenario(std::string_view name) const;

 private:
  bn::Network model_;
  std::string model_body_;
};

struct ServerOptions {
  std::string host = "127.0.0.1";
  // 0 picks a free port.
  int port = 8080;
  // Served at "/" when nonempty and present.
  std::filesystem::path static_dir;
};

// HTTP transport around a Service. Permissive CORS headers are attached to
// every response.
class HttpServer {
 public:
  HttpServer(const Service& service, ServerOptions options);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Binds and starts serving on a background thread; returns the bound port.
  // Throws Error(kIo) when the address cannot be bound.
  int start();
  // Binds and serves on the calling thread until stop() is called.
  void run();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace verdict::service
