// Copyright 2026 The cpr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// cpr: command-line front end over the C API.
//
//   cpr solve  --instance FILE [--register onehot|binary] [--out DIR] ...
//   cpr brute  --instance FILE
//   cpr check  --instance FILE < bitstrings
//   cpr bound  --instance FILE [--gamma G] [--betas B1,B2,...]
//   cpr encode --n 3 --K 2 "(1,1) (2,2) (3,2)"
//   cpr decode --n 3 --K 2 100000000010000001
//   cpr bench  DIR
//
// Exit status: 0 success, 1 error, 2 unreadable input file, 3 no feasible
// configuration, 4 check found an infeasible string.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cpr/cpr.h"

namespace {

using nlohmann::json;

constexpr int kExitError = 1;
constexpr int kExitIo = 2;
constexpr int kExitEmpty = 3;
constexpr int kExitInfeasible = 4;

int exit_for(cpr_status s) {
  switch (s) {
    case CPR_OK: return 0;
    case CPR_E_IO: return kExitIo;
    case CPR_E_EMPTY_OPTIMAL_SET: return kExitEmpty;
    default: return kExitError;
  }
}

int fail(cpr_status s) {
  std::cerr << "cpr: " << cpr_status_name(s) << ": " << cpr_last_error() << "\n";
  return exit_for(s);
}

struct Flags {
  std::string instance;
  std::string config_path;
  std::string out;
  std::string reg = "onehot";
  std::string cap_mode = "hinge";
  std::string rounding = "exact";
  std::string shots_rule = "cubed";
  std::string score = "objective";
  int K = 2;
  int n = 0;
  int grid_points = 0;
  int depth = 1;
  int jobs = 1;
  int ceiling = 9;
  std::int64_t shots = 0;
  std::uint64_t seed = 1;
  std::uint64_t budget = 0;
  double w_once = 0, w_cap = 0, w_obj = 0, w_pad = 0;
  double gamma = 0;
  std::vector<double> betas;
  std::vector<double> confidences;
  bool preselect = false;
  double lambda = 0, rho = 0, alpha = 0;
  bool no_bench_phqc = false;
  std::vector<std::string> inputs;
};

// Flag -> config-key overlays, applied only for flags given on the command line.
struct Overlay {
  CLI::Option *opt;
  std::function<void(json &)> apply;
};

class Cli {
 public:
  Cli() : app_("Colored-permutation CVRP encoding, simulation and certification") {
    app_.require_subcommand(1);
    app_.set_version_flag("--version", std::string(cpr_version()));
  }

  int run(int argc, char **argv);

 private:
  CLI::App *command(const char *name, const char *help) {
    return app_.add_subcommand(name, help);
  }
  void add_instance(CLI::App *c, bool required);
  void add_run_options(CLI::App *c);
  void add_codec_options(CLI::App *c);
  json resolved_config() const;
  cpr_status load(cpr_instance **inst) const;

  int do_solve(const char *cmd);
  int do_check();
  int do_codec(bool encode);
  int do_bench();
  int emit(cpr_result *res, const char *primary);

  CLI::App app_;
  Flags f_;
  std::vector<Overlay> overlays_;
};

void Cli::add_instance(CLI::App *c, bool required) {
  auto *o = c->add_option("--instance,-i", f_.instance, "instance file (.vrp or .json)");
  if (required) o->required();
  overlays_.push_back({c->add_option("--K", f_.K, "vehicles for .vrp files (default 2)"),
                       [this](json &j) { j["K"] = f_.K; }});
  overlays_.push_back(
      {c->add_option("--rounding", f_.rounding, "distance rounding: exact|nearest")
           ->check(CLI::IsMember({"exact", "nearest"})),
       [this](json &j) { j["rounding"] = f_.rounding; }});
  c->add_option("--config", f_.config_path, "JSON config file (flags take precedence)");
}

void Cli::add_run_options(CLI::App *c) {
  auto add = [&](CLI::Option *o, std::function<void(json &)> fn) {
    overlays_.push_back({o, std::move(fn)});
  };
  add(c->add_option("--register", f_.reg, "onehot|binary")
          ->check(CLI::IsMember({"onehot", "binary"})),
      [this](json &j) { j["register"] = f_.reg; });
  add(c->add_option("--cap-mode", f_.cap_mode, "hinge|quadratic-surrogate|filter-only")
          ->check(CLI::IsMember({"hinge", "quadratic-surrogate", "filter-only"})),
      [this](json &j) { j["cap_mode"] = f_.cap_mode; });
  add(c->add_option("--lambda-once", f_.w_once, "once-per-customer penalty weight"),
      [this](json &j) { j["weights"]["once"] = f_.w_once; });
  add(c->add_option("--lambda-cap", f_.w_cap, "capacity penalty weight"),
      [this](json &j) { j["weights"]["cap"] = f_.w_cap; });
  add(c->add_option("--lambda-obj", f_.w_obj, "objective weight"),
      [this](json &j) { j["weights"]["obj"] = f_.w_obj; });
  add(c->add_option("--lambda-pad", f_.w_pad, "padded-word penalty (binary register)"),
      [this](json &j) { j["weights"]["pad"] = f_.w_pad; });
  add(c->add_option("--grid-points", f_.grid_points, "points per grid axis (default S+1)"),
      [this](json &j) { j["grid_points"] = f_.grid_points; });
  add(c->add_option("--shots-rule", f_.shots_rule, "cubed|fifty-cubed")
          ->check(CLI::IsMember({"cubed", "fifty-cubed"})),
      [this](json &j) { j["shots_rule"] = f_.shots_rule; });
  add(c->add_option("--shots", f_.shots, "shots per grid point (overrides the rule)"),
      [this](json &j) { j["shots"] = f_.shots; });
  add(c->add_option("--seed", f_.seed, "base RNG seed"),
      [this](json &j) { j["seed"] = f_.seed; });
  add(c->add_option("--depth,-p", f_.depth, "ansatz depth"),
      [this](json &j) { j["depth"] = f_.depth; });
  add(c->add_option("--jobs,-j", f_.jobs, "worker threads (default $CPR_JOBS or 1)"),
      [this](json &j) { j["jobs"] = f_.jobs; });
  add(c->add_option("--budget", f_.budget, "amplitude budget"),
      [this](json &j) { j["budget"] = f_.budget; });
  add(c->add_option("--score", f_.score, "objective|full")
          ->check(CLI::IsMember({"objective", "full"})),
      [this](json &j) { j["score"] = f_.score; });
  add(c->add_option("--ceiling", f_.ceiling, "largest n for exhaustive enumeration"),
      [this](json &j) { j["ceiling"] = f_.ceiling; });
  c->add_option("--out,-o", f_.out, "directory for result files");
}

void Cli::add_codec_options(CLI::App *c) {
  c->add_option("--n", f_.n, "customers (or take n, K from --instance)");
  c->add_option("--K", f_.K, "vehicles (default 2)");
  c->add_option("--instance,-i", f_.instance, "instance supplying n and K");
  c->add_option("inputs", f_.inputs, "values to convert (stdin lines when omitted)");
}

json Cli::resolved_config() const {
  json j = json::object();
  if (!f_.config_path.empty()) {
    std::ifstream in(f_.config_path);
    if (!in) throw std::runtime_error("cannot open config file '" + f_.config_path + "'");
    j = json::parse(in);
    if (!j.is_object()) throw std::runtime_error("config file must hold a JSON object");
  }
  if (!j.contains("jobs"))
    if (const char *env = std::getenv("CPR_JOBS")) j["jobs"] = std::atoi(env);
  for (const auto &o : overlays_)
    if (o.opt->count() > 0) o.apply(j);
  return j;
}

cpr_status Cli::load(cpr_instance **inst) const {
  const json cfg = resolved_config();
  const int K = cfg.value("K", 2);
  const auto rounding = cfg.value("rounding", std::string("exact")) == "nearest"
                            ? CPR_ROUNDING_NEAREST
                            : CPR_ROUNDING_EXACT;
  return cpr_instance_load(f_.instance.c_str(), K, rounding, inst);
}

int Cli::emit(cpr_result *res, const char *primary) {
  if (!f_.out.empty()) {
    std::filesystem::create_directories(f_.out);
    for (size_t i = 0; i < cpr_result_count(res); ++i) {
      const char *name = nullptr;
      const char *text = nullptr;
      cpr_result_item(res, i, &name, &text);
      std::ofstream o(std::filesystem::path(f_.out) / name, std::ios::binary);
      o << text;
      if (!o) {
        std::cerr << "cpr: cannot write " << name << " under " << f_.out << "\n";
        return kExitError;
      }
    }
  }
  const char *text = nullptr;
  if (cpr_result_get(res, primary, &text) == CPR_OK) std::cout << text;
  return 0;
}

int Cli::do_solve(const char *cmd) {
  cpr_instance *inst = nullptr;
  if (auto s = load(&inst); s != CPR_OK) return fail(s);
  const std::string cfg = resolved_config().dump();
  cpr_result *res = nullptr;
  cpr_status s = CPR_OK;
  const char *primary = "";
  if (std::string(cmd) == "solve") {
    s = cpr_solve(inst, cfg.c_str(), &res);
    primary = "result.json";
  } else if (std::string(cmd) == "brute") {
    s = cpr_brute(inst, cfg.c_str(), &res);
    primary = "brute.json";
  } else {
    s = cpr_bound(inst, cfg.c_str(), &res);
    primary = "bound.json";
  }
  cpr_instance_free(inst);
  int code = 0;
  if (res) code = emit(res, primary);
  cpr_result_free(res);
  if (s != CPR_OK) return fail(s);
  return code;
}

int Cli::do_check() {
  cpr_instance *inst = nullptr;
  if (auto s = load(&inst); s != CPR_OK) return fail(s);
  const std::string cfg = resolved_config().dump();
  bool malformed = false;
  bool infeasible = false;
  std::string line;
  while (std::getline(std::cin, line)) {
    cpr_check_outcome outcome;
    char *verdict = nullptr;
    const cpr_status s = cpr_check(inst, cfg.c_str(), line.c_str(), &outcome, &verdict);
    if (s != CPR_OK) {
      cpr_instance_free(inst);
      return fail(s);
    }
    if (outcome != CPR_CHECK_BLANK) std::cout << verdict << "\n";
    cpr_string_free(verdict);
    malformed |= outcome == CPR_CHECK_MALFORMED;
    infeasible |= outcome == CPR_CHECK_INFEASIBLE;
  }
  cpr_instance_free(inst);
  if (malformed) return kExitError;
  return infeasible ? kExitInfeasible : 0;
}

int Cli::do_codec(bool encode) {
  int n = f_.n;
  int K = f_.K;
  if (!f_.instance.empty()) {
    cpr_instance *inst = nullptr;
    if (auto s = cpr_instance_load(f_.instance.c_str(), f_.K, CPR_ROUNDING_EXACT, &inst);
        s != CPR_OK)
      return fail(s);
    cpr_instance_size(inst, &n, &K);
    cpr_instance_free(inst);
  }
  if (n < 1) {
    std::cerr << "cpr: --n or --instance is required\n";
    return kExitError;
  }
  std::vector<std::string> inputs = f_.inputs;
  if (inputs.empty()) {
    std::string line;
    while (std::getline(std::cin, line))
      if (line.find_first_not_of(" \t\r") != std::string::npos) inputs.push_back(line);
  }
  const cpr_register reg =
      f_.reg == "binary" ? CPR_REGISTER_BINARY : CPR_REGISTER_ONEHOT;
  for (const auto &in : inputs) {
    char *out = nullptr;
    const cpr_status s = encode ? cpr_encode(n, K, in.c_str(), &out)
                                : cpr_decode(n, K, reg, in.c_str(), &out);
    if (s != CPR_OK) return fail(s);
    std::cout << out;
    cpr_string_free(out);
  }
  return 0;
}

int Cli::do_bench() {
  if (f_.inputs.size() != 1) {
    std::cerr << "cpr: bench takes exactly one instance directory\n";
    return kExitError;
  }
  const std::string cfg = resolved_config().dump();
  cpr_result *res = nullptr;
  if (auto s = cpr_bench(f_.inputs[0].c_str(), cfg.c_str(), &res); s != CPR_OK)
    return fail(s);
  const int code = emit(res, "bench.csv");
  cpr_result_free(res);
  return code;
}

int Cli::run(int argc, char **argv) {
  auto *solve = command("solve", "grid-search the sampled ansatz and report the best route");
  add_instance(solve, true);
  add_run_options(solve);

  auto *brute = command("brute", "exhaustive optimum over all feasible configurations");
  add_instance(brute, true);
  add_run_options(brute);

  auto *check = command("check", "feasibility verdict per bitstring read from stdin");
  add_instance(check, true);
  overlays_.push_back({check->add_option("--register", f_.reg, "onehot|binary")
                           ->check(CLI::IsMember({"onehot", "binary"})),
                       [this](json &j) { j["register"] = f_.reg; }});

  auto *bound = command("bound", "filter-model success bound for one angle schedule");
  add_instance(bound, true);
  add_run_options(bound);
  overlays_.push_back({bound->add_option("--gamma", f_.gamma, "phase angle (default pi/S)"),
                       [this](json &j) { j["gamma"] = f_.gamma; }});
  overlays_.push_back(
      {bound->add_option("--betas", f_.betas, "mixer angles, one per layer")->delimiter(','),
       [this](json &j) { j["betas"] = f_.betas; }});
  overlays_.push_back(
      {bound->add_option("--confidence", f_.confidences, "confidence levels for shot counts")
           ->delimiter(','),
       [this](json &j) { j["confidences"] = f_.confidences; }});
  auto *pre = bound->add_flag("--preselect", f_.preselect,
                              "score the mixer-angle grid (needs --lambda --rho --alpha)");
  auto *lam = bound->add_option("--lambda", f_.lambda, "inverse temperature");
  auto *rho = bound->add_option("--rho", f_.rho, "spread penalty");
  auto *alpha = bound->add_option("--alpha", f_.alpha, "LP alignment weight");
  lam->needs(pre);
  rho->needs(pre);
  alpha->needs(pre);
  pre->needs(lam)->needs(rho)->needs(alpha);
  overlays_.push_back({pre, [this](json &j) {
                         j["preselect"] = {
                             {"lambda", f_.lambda}, {"rho", f_.rho}, {"alpha", f_.alpha}};
                       }});

  auto *encode = command("encode", "assignment list -> one-hot and binary strings");
  add_codec_options(encode);
  auto *decode = command("decode", "bitstring -> assignment, permutation matrix");
  add_codec_options(decode);
  decode->add_option("--register", f_.reg, "onehot|binary")
      ->check(CLI::IsMember({"onehot", "binary"}));

  auto *bench = command("bench", "oracle and qubit table over a directory of instances");
  bench->add_option("dir", f_.inputs, "instance directory")->required();
  add_run_options(bench);
  overlays_.push_back({bench->add_option("--K", f_.K, "vehicles for .vrp files"),
                       [this](json &j) { j["K"] = f_.K; }});
  overlays_.push_back(
      {bench->add_option("--rounding", f_.rounding, "exact|nearest")
           ->check(CLI::IsMember({"exact", "nearest"})),
       [this](json &j) { j["rounding"] = f_.rounding; }});
  overlays_.push_back({bench->add_flag("--no-phqc", f_.no_bench_phqc, "oracle column only"),
                       [](json &j) { j["bench_phqc"] = false; }});
  bench->add_option("--config", f_.config_path, "JSON config file");

  try {
    app_.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app_.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (solve->parsed()) return do_solve("solve");
    if (brute->parsed()) return do_solve("brute");
    if (bound->parsed()) return do_solve("bound");
    if (check->parsed()) return do_check();
    if (encode->parsed()) return do_codec(true);
    if (decode->parsed()) return do_codec(false);
    if (bench->parsed()) return do_bench();
  } catch (const std::exception &e) {
    std::cerr << "cpr: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace

int main(int argc, char **argv) {
  Cli cli;
  return cli.run(argc, argv);
}
