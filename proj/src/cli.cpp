// Copyright 2026 The rdlab Authors
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

#include "rdlab/cli.hpp"

#include <fstream>
#include <map>
#include <ostream>

#include "CLI11.hpp"

namespace rdlab {

namespace {

constexpr const char* kFlagNames[] = {
    "--alpha-re", "--alpha-im", "--beta-re", "--beta-im", "--t-start", "--t-end", "--steps",
    "--seed",     "--trials",   "--tol",     "--dims",    "--config",  "--out",
};

struct HelpRequested {
  std::string text;
};

struct ParsedArgs {
  std::string subcommand;
  std::map<std::string, std::string> values;  // flag -> raw text, only if given
};

ParsedArgs parse_raw(const std::vector<std::string>& args) {
  CLI::App app{"Reduced-dynamics laboratory: exact two-party evolution, correlation terms, "
               "complete-positivity checks",
               "rdlab"};
  app.require_subcommand(1, 1);

  ParsedArgs parsed;
  std::map<std::string, std::map<std::string, std::string>> storage;
  std::vector<std::pair<CLI::App*, std::map<std::string, CLI::Option*>>> subs;
  for (const char* name : {"reproduce", "trajectory", "theorem", "cp-report"}) {
    CLI::App* sub = app.add_subcommand(name, std::string("run the ") + name + " scenario");
    std::map<std::string, CLI::Option*> opts;
    for (const char* flag : kFlagNames) {
      opts[flag] = sub->add_option(flag, storage[name][flag]);
    }
    subs.emplace_back(sub, std::move(opts));
  }

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }

  for (auto& [sub, opts] : subs) {
    if (!sub->parsed()) continue;
    parsed.subcommand = sub->get_name();
    for (const auto& [flag, opt] : opts) {
      if (opt->count() > 0) parsed.values[flag] = storage[parsed.subcommand][flag];
    }
  }
  return parsed;
}

double to_double(const std::string& text, const std::string& flag) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(flag + ": not a number: '" + text + "'");
  }
}

long long to_integer(const std::string& text, const std::string& flag) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(flag + ": not an integer: '" + text + "'");
  }
}

}  // namespace

ScenarioConfig parse_command_line(const std::vector<std::string>& args) {
  const ParsedArgs parsed = parse_raw(args);
  ScenarioConfig cfg;
  cfg.scenario = parse_scenario(parsed.subcommand);
  const auto& v = parsed.values;

  if (auto it = v.find("--config"); it != v.end()) {
    std::ifstream file(it->second);
    if (!file) throw IoError("cannot read config file '" + it->second + "'");
    nlohmann::json j;
    try {
      file >> j;
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("config file '" + it->second + "': " + e.what());
    }
    cfg = apply_json_config(j, cfg);
  }

  for (const auto& [flag, text] : v) {
    if (flag == "--alpha-re") cfg.alpha_re = to_double(text, flag);
    else if (flag == "--alpha-im") cfg.alpha_im = to_double(text, flag);
    else if (flag == "--beta-re") cfg.beta_re = to_double(text, flag);
    else if (flag == "--beta-im") cfg.beta_im = to_double(text, flag);
    else if (flag == "--t-start") cfg.t_start = parse_time(text);
    else if (flag == "--t-end") cfg.t_end = parse_time(text);
    else if (flag == "--steps") cfg.steps = int(to_integer(text, flag));
    else if (flag == "--trials") cfg.trials = int(to_integer(text, flag));
    else if (flag == "--tol") cfg.tol = to_double(text, flag);
    else if (flag == "--dims") std::tie(cfg.d_A, cfg.d_B) = parse_dims(text);
    else if (flag == "--out") cfg.output_path = text;
    else if (flag == "--seed") {
      const long long s = to_integer(text, flag);
      if (s < 0) throw ConfigError("--seed must be non-negative");
      cfg.seed = std::uint64_t(s);
    }
  }
  return cfg;
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  ScenarioConfig cfg;
  try {
    cfg = parse_command_line(args);
  } catch (const HelpRequested& help) {
    out << help.text;
    return kExitOk;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << "\n";
    return kExitIoError;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  }
  return run_scenario(cfg, out, err);
}

}  // namespace rdlab
