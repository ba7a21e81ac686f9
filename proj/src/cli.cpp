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

#include "verdict/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "verdict/case_data.hpp"
#include "verdict/error.hpp"
#include "verdict/inference.hpp"
#include "verdict/learning.hpp"
#include "verdict/model_json.hpp"
#include "verdict/negligence.hpp"
#include "verdict/service.hpp"

namespace verdict::cli {
namespace {

// Built web UI assets, served at "/" by `serve` when present.
constexpr const char* kDefaultStaticDir = "webui/dist";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bn::Evidence parse_evidence_flags(const std::vector<std::string>& flags) {
  bn::Evidence ev;
  for (const auto& f : flags) {
    const auto eq = f.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == f.size()) {
      throw UsageError("--evidence expects Var=state, got '" + f + "'");
    }
    const std::string id = f.substr(0, eq);
    if (!ev.emplace(id, f.substr(eq + 1)).second) {
      throw UsageError("--evidence sets '" + id + "' more than once");
    }
  }
  return ev;
}

data::Dataset load_dataset(const std::string& path) {
  if (path.empty()) return negligence::builtin_audit_extract();
  return data::parse_case_csv(read_text_file(path));
}

void print_table(std::ostream& out, const bn::Network& net, const bn::Evidence& evidence,
                 const bn::InferenceResult& result) {
  std::size_t width = 8;
  for (const auto& v : net.variables()) width = std::max(width, v.id.size());
  std::size_t state_width = 5;
  for (const auto& v : net.variables()) {
    for (const auto& s : v.states) state_width = std::max(state_width, s.size());
  }

  const auto old_flags = out.flags();
  const auto old_precision = out.precision();
  out << std::fixed << std::setprecision(6);
  out << "P(evidence) = " << result.evidence_probability << '\n';
  if (result.zero_evidence) {
    out << "evidence has probability zero; posteriors are undefined\n";
  } else {
    out << std::left << std::setw(static_cast<int>(width)) << "variable" << "  "
        << std::setw(static_cast<int>(state_width)) << "state" << "  probability\n";
    for (const auto& p : result.posteriors) {
      const auto& states = net.variable(net.index_of(p.variable)).states;
      const auto observed = evidence.find(p.variable);
      for (std::size_t s = 0; s < states.size(); ++s) {
        out << std::left << std::setw(static_cast<int>(width)) << (s == 0 ? p.variable : "")
            << "  " << std::setw(static_cast<int>(state_width)) << states[s] << "  "
            << std::right << std::setw(8) << p.distribution[s]
            << (observed != evidence.end() && observed->second == states[s] ? "  (observed)" : "")
            << '\n';
      }
    }
  }
  out.flags(old_flags);
  out.precision(old_precision);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrete Bayesian network engine for negligence case outcomes", "verdict-bn"};
  app.require_subcommand(1);

  std::string model_path;
  std::string data_path;
  std::string out_path;
  std::string format = "table";
  std::string scenario_name;
  std::vector<std::string> evidence_flags;
  std::vector<std::string> query;
  double alpha = learning::LearningConfig{}.alpha;
  int port = 8080;

  auto add_model = [&](CLI::App* sub) {
    sub->add_option("--model", model_path, "Model JSON file")
        ->required()
        ->envname(kModelEnvVar);
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
  };

  auto* validate = app.add_subcommand("validate", "Check that a model file is a valid network");
  add_model(validate);

  auto* learn = app.add_subcommand("learn", "Learn the negligence model from case data");
  learn->add_option("--data", data_path, "Case CSV (default: built-in audit extract)");
  learn->add_option("--alpha", alpha, "Dirichlet pseudo-count per learnable cell")
      ->capture_default_str();
  learn->add_option("--out", out_path, "Where to write the model JSON")->required();

  auto* infer = app.add_subcommand("infer", "Posterior marginals under hard evidence");
  add_model(infer);
  infer->add_option("--evidence", evidence_flags, "Observation Var=state (repeatable)");
  infer->add_option("--query", query, "Variables to query (default: all unobserved)");
  add_format(infer);

  auto* scenario = app.add_subcommand("scenario", "Run a named scenario");
  scenario->add_option("name", scenario_name, "plaintiff-does-win | plaintiff-should-win")
      ->required();
  add_model(scenario);
  add_format(scenario);

  auto* summarize = app.add_subcommand("summarize", "Tally case data like the audit totals");
  summarize->add_option("--data", data_path, "Case CSV (default: built-in audit extract)");

  auto* serve = app.add_subcommand("serve", "Serve the JSON API");
  add_model(serve);
  serve->add_option("--port", port, "TCP port")->check(CLI::Range(0, 65535))->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    const auto subs = app.get_subcommands();
    err << "error: " << e.what() << "\n" << (subs.empty() ? app.help() : subs.front()->help());
    return kExitUsage;
  }

  try {
    if (validate->parsed()) {
      const auto net = load_model(model_path);
      out << "ok: " << net.size() << " variables, " << net.arc_count() << " arcs\n";
    } else if (learn->parsed()) {
      const auto ds = load_dataset(data_path);
      const auto net = learning::learn_parameters(ds, negligence::build_negligence_skeleton(),
                                                  learning::LearningConfig{alpha});
      write_text_file(out_path, dump_model(net));
    } else if (infer->parsed()) {
      const auto net = load_model(model_path);
      const auto evidence = parse_evidence_flags(evidence_flags);
      if (query.empty()) query = bn::unobserved_variables(net, evidence);
      const auto result = bn::infer(net, evidence, query);
      if (format == "json") {
        OrderedJson doc;
        OrderedJson ev = OrderedJson::object();
        for (const auto& [k, v] : evidence) ev[k] = v;
        doc["evidence"] = std::move(ev);
        const OrderedJson inference = inference_to_json(net, result);
        for (const auto& [k, v] : inference.items()) doc[k] = v;
        out << doc.dump(2) << '\n';
      } else {
        print_table(out, net, evidence, result);
      }
    } else if (scenario->parsed()) {
      const auto net = load_model(model_path);
      const auto result = negligence::run_scenario(net, scenario_name);
      if (format == "json") {
        out << negligence::scenario_to_json(net, result).dump(2) << '\n';
      } else {
        out << "scenario: " << result.name << '\n';
        print_table(out, net, result.evidence, result.result);
      }
    } else if (summarize->parsed()) {
      out << data::format_summary(data::summarize(load_dataset(data_path)));
    } else if (serve->parsed()) {
      const service::Service svc(load_model(model_path));
      service::ServerOptions options;
      options.port = port;
      options.static_dir = kDefaultStaticDir;
      service::HttpServer server(svc, options);
      err << "serving on http://" << options.host << ':' << port << '\n';
      err.flush();
      server.run();
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace verdict::cli
