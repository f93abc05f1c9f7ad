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

#include "service.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "cpr/analysis.hpp"
#include "cpr/error.hpp"
#include "cpr/feasibility.hpp"
#include "cpr/simulator.hpp"
#include "text.hpp"

namespace cpr::service {
namespace {

using ojson = nlohmann::ordered_json;
using nlohmann::json;

std::string read_file(const std::string &path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::io, "cannot open instance file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

bool looks_like_json(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  return first != std::string_view::npos && text[first] == '{';
}

Register register_from(const std::string &s) {
  if (s == "onehot") return Register::onehot;
  if (s == "binary") return Register::binary;
  throw Error(ErrorCode::config, "register must be onehot or binary, got '" + s + "'");
}

CapMode cap_mode_from(const std::string &s) {
  if (s == "hinge") return CapMode::hinge;
  if (s == "quadratic-surrogate") return CapMode::quadratic_surrogate;
  if (s == "filter-only") return CapMode::filter_only;
  throw Error(ErrorCode::config, "unknown cap mode '" + s + "'");
}

Rounding rounding_from(const std::string &s) {
  if (s == "exact") return Rounding::exact;
  if (s == "nearest") return Rounding::nearest;
  throw Error(ErrorCode::config, "rounding must be exact or nearest, got '" + s + "'");
}

ShotsRule shots_rule_from(const std::string &s) {
  if (s == "cubed") return ShotsRule::cubed;
  if (s == "fifty-cubed") return ShotsRule::fifty_cubed;
  throw Error(ErrorCode::config, "shots rule must be cubed or fifty-cubed");
}

const char *to_string(Rounding r) { return r == Rounding::exact ? "exact" : "nearest"; }

template <class T>
ojson optional_json(const std::optional<T> &v) {
  return v ? ojson(*v) : ojson(nullptr);
}

ojson instance_json(const Problem &pb) {
  return {{"name", pb.name},
          {"kind", pb.kind},
          {"n", pb.costs.n},
          {"K", pb.costs.K},
          {"rounding", to_string(pb.rounding)}};
}

ojson encoding_json(const EncodingParams &p, Register reg) {
  const auto [onehot, binary] = qubit_counts(p.n, p.K);
  const auto dim = register_dimension(p, reg);
  return {{"S", p.S},
          {"q", p.q},
          {"onehot_qubits", onehot},
          {"binary_qubits", binary},
          {"register", to_string(reg)},
          {"dimension", optional_json(dim)}};
}

std::string dump(const ojson &j) { return j.dump(2) + "\n"; }

std::string opt_cell(const std::optional<double> &v) {
  return v ? detail::format_double(*v) : std::string();
}

EnergyModel make_model(const Problem &pb, const RunConfig &cfg) {
  return EnergyModel(pb.costs, cfg.weights, cfg.reg);
}

ojson assignment_json(const std::vector<int> &symbols, const EncodingParams &p) {
  ColoredAssignment a;
  for (int s : symbols) a.slots.push_back(symbol_at(s, p.n));
  const auto onehot = onehot_from_symbols(symbols, p);
  return {{"assignment", a.to_string()},
          {"onehot", render_bits(onehot.bits)},
          {"binary", render_bits(binary_from_words(symbols, p).bits)}};
}

std::vector<int> symbols_of(const ColoredAssignment &a, int n) {
  std::vector<int> s;
  for (const auto &x : a.slots) s.push_back(symbol_index(x, n));
  return s;
}

}  // namespace

RunConfig RunConfig::from_json(std::string_view text) {
  RunConfig c;
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) return c;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception &e) {
    throw Error(ErrorCode::config, std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::config, "config must be a JSON object");
  static const std::set<std::string> known = {
      "K",      "register", "cap_mode", "weights", "rounding",    "grid_points",
      "shots_rule", "shots", "seed",    "depth",   "jobs",        "budget",
      "score",  "ceiling",  "gamma",    "betas",   "confidences", "preselect",
      "bench_phqc"};
  for (const auto &[k, v] : j.items())
    if (!known.count(k)) throw Error(ErrorCode::config, "unknown config key '" + k + "'");
  try {
    auto has = [&](const char *k) { return j.contains(k) && !j[k].is_null(); };
    if (has("K")) c.K = j["K"].get<int>();
    if (has("register")) c.reg = register_from(j["register"].get<std::string>());
    if (has("cap_mode")) c.weights.cap_mode = cap_mode_from(j["cap_mode"].get<std::string>());
    bool pad_given = false;
    if (has("weights")) {
      const auto &w = j["weights"];
      for (const auto &[k, v] : w.items())
        if (k != "once" && k != "cap" && k != "obj" && k != "pad")
          throw Error(ErrorCode::config, "unknown weight '" + k + "'");
      if (w.contains("once")) c.weights.once = w["once"].get<double>();
      if (w.contains("cap")) c.weights.cap = w["cap"].get<double>();
      if (w.contains("obj")) c.weights.obj = w["obj"].get<double>();
      if (w.contains("pad")) {
        c.weights.pad = w["pad"].get<double>();
        pad_given = true;
      }
    }
    if (!pad_given) c.weights.pad = c.weights.once;
    if (has("rounding")) c.rounding = rounding_from(j["rounding"].get<std::string>());
    if (has("grid_points")) c.grid_points = j["grid_points"].get<int>();
    if (has("shots_rule")) c.shots_rule = shots_rule_from(j["shots_rule"].get<std::string>());
    if (has("shots")) c.shots = j["shots"].get<std::int64_t>();
    if (has("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (has("depth")) c.depth = j["depth"].get<int>();
    if (has("jobs")) c.jobs = j["jobs"].get<int>();
    if (has("budget")) c.budget = j["budget"].get<std::uint64_t>();
    if (has("score")) {
      const auto s = j["score"].get<std::string>();
      if (s != "objective" && s != "full")
        throw Error(ErrorCode::config, "score must be objective or full");
      c.score_full = s == "full";
    }
    if (has("ceiling")) c.ceiling = j["ceiling"].get<int>();
    if (has("gamma")) c.gamma = j["gamma"].get<double>();
    if (has("betas")) c.betas = j["betas"].get<std::vector<double>>();
    if (has("confidences")) c.confidences = j["confidences"].get<std::vector<double>>();
    if (has("preselect")) {
      const auto &p = j["preselect"];
      for (const char *k : {"lambda", "rho", "alpha"})
        if (!p.contains(k))
          throw Error(ErrorCode::config,
                      std::string("preselect needs explicit '") + k + "'");
      c.preselect = Preselect{p["lambda"].get<double>(), p["rho"].get<double>(),
                              p["alpha"].get<double>()};
    }
    if (has("bench_phqc")) c.bench_phqc = j["bench_phqc"].get<bool>();
  } catch (const json::exception &e) {
    throw Error(ErrorCode::config, std::string("config: ") + e.what());
  }
  if (c.K < 1) throw Error(ErrorCode::config, "K must be >= 1");
  if (c.depth < 1) throw Error(ErrorCode::config, "depth must be >= 1");
  if (c.grid_points && *c.grid_points < 1)
    throw Error(ErrorCode::config, "grid_points must be >= 1");
  if (c.shots && *c.shots < 1) throw Error(ErrorCode::config, "shots must be >= 1");
  if (c.betas && c.betas->empty()) throw Error(ErrorCode::config, "betas is empty");
  for (double x : c.confidences)
    if (!(x > 0.0 && x < 1.0))
      throw Error(ErrorCode::config, "confidences must lie in (0, 1)");
  c.weights.validate();
  return c;
}

ojson RunConfig::to_json() const {
  ojson j;
  j["K"] = K;
  j["register"] = to_string(reg);
  j["cap_mode"] = to_string(weights.cap_mode);
  j["weights"] = {{"once", weights.once},
                  {"cap", weights.cap},
                  {"obj", weights.obj},
                  {"pad", weights.pad}};
  j["rounding"] = to_string(rounding);
  j["grid_points"] = optional_json(grid_points);
  j["shots_rule"] = to_string(shots_rule);
  j["shots"] = optional_json(shots);
  j["seed"] = seed;
  j["depth"] = depth;
  j["jobs"] = jobs;
  j["budget"] = budget;
  j["score"] = score_full ? "full" : "objective";
  j["ceiling"] = ceiling;
  j["gamma"] = optional_json(gamma);
  j["betas"] = optional_json(betas);
  j["confidences"] = confidences;
  if (preselect)
    j["preselect"] = {{"lambda", preselect->lambda},
                      {"rho", preselect->rho},
                      {"alpha", preselect->alpha}};
  else
    j["preselect"] = nullptr;
  j["bench_phqc"] = bench_phqc;
  return j;
}

Problem problem_from_json(std::string_view text) {
  bool pdp = false;
  try {
    pdp = json::parse(text).contains("Wtilde");
  } catch (const json::exception &e) {
    throw Error(ErrorCode::parse, std::string("instance record: ") + e.what());
  }
  Problem pb;
  if (pdp) {
    const auto p = pdp_from_json(text);
    pb.name = p.name;
    pb.kind = "pdp";
    pb.costs = CostTables::of(p);
  } else {
    const auto inst = instance_from_json(text);
    pb.name = inst.name;
    pb.kind = "cvrp";
    pb.rounding = inst.rounding;
    pb.costs = CostTables::of(inst);
  }
  return pb;
}

Problem load_problem(const std::string &path, int K, Rounding rounding) {
  const std::string text = read_file(path);
  Problem pb;
  if (looks_like_json(text)) {
    pb = problem_from_json(text);
  } else {
    const auto inst = parse_vrp(text, K, rounding);
    pb.name = inst.name;
    pb.kind = "cvrp";
    pb.rounding = inst.rounding;
    pb.costs = CostTables::of(inst);
  }
  if (pb.name.empty()) pb.name = std::filesystem::path(path).filename().string();
  return pb;
}

Artifacts run_solve(const Problem &pb, const RunConfig &cfg) {
  const EnergyModel model = make_model(pb, cfg);
  const auto p = model.params();

  std::optional<ExactSolution> exact;
  if (pb.costs.n <= cfg.ceiling) exact = exact_solve(pb.costs, cfg.ceiling);

  PhqcOptions opts;
  opts.grid = GridSpec::uniform(p, cfg.grid_points);
  opts.shots = cfg.shots.value_or(default_shots(p, cfg.shots_rule));
  opts.seed = cfg.seed;
  opts.depth = cfg.depth;
  opts.score_full = cfg.score_full;
  opts.jobs = cfg.jobs;
  opts.budget = cfg.budget;
  if (exact && !exact->optimal_assignments.empty()) opts.reference = &*exact;
  const PhqcResult res = phqc(model, opts);

  ojson rec;
  rec["config"] = cfg.to_json();
  rec["instance"] = instance_json(pb);
  rec["encoding"] = encoding_json(p, cfg.reg);
  rec["grid"] = {{"gammas", opts.grid.gammas},
                 {"betas", opts.grid.betas},
                 {"points", opts.grid.size()}};
  rec["shots_per_point"] = opts.shots;
  rec["total_shots"] = res.total_shots;
  rec["filtered_strings"] = res.filtered_strings;
  if (res.best_symbols) {
    ojson best = assignment_json(*res.best_symbols, p);
    best["score"] = *res.best_score;
    best["grid_index"] = res.best_point;
    best["shot_index"] = res.best_shot;
    best["gamma"] = res.points[res.best_point].gamma;
    best["beta"] = res.points[res.best_point].beta;
    rec["best"] = best;
  } else {
    rec["best"] = nullptr;
  }
  std::int64_t hits = 0;
  for (const auto &pt : res.points) hits += pt.optimal_hits.value_or(0);
  if (exact) {
    const bool any = !exact->optimal_assignments.empty();
    rec["oracle"] = {
        {"optimal_cost", any ? ojson(exact->optimal_cost) : ojson(nullptr)},
        {"feasible_count", exact->feasible_count},
        {"optimal_hits", hits},
        {"match", any && res.best_score && !cfg.score_full &&
                      std::abs(*res.best_score - exact->optimal_cost) <=
                          1e-9 * std::max(1.0, std::abs(exact->optimal_cost))}};
  } else {
    rec["oracle"] = nullptr;
  }
  const auto anti = anticoncentration_report(res.best_point_samples, model);
  rec["anticoncentration"] = {{"grid_index", res.best_point},
                              {"D", anti.D},
                              {"baseline", anti.baseline},
                              {"feasible_outcomes", anti.feasible_outcomes},
                              {"share_above_baseline", anti.share_above_baseline}};

  std::string points =
      "index,gamma,beta,feasible_count,optimal_hits,p_star_exact,"
      "share_above_baseline,best_score\n";
  for (const auto &pt : res.points) {
    points += std::to_string(pt.index) + ',' + detail::format_double(pt.gamma) + ',' +
              detail::format_double(pt.beta) + ',' + std::to_string(pt.feasible_count) +
              ',' + (pt.optimal_hits ? std::to_string(*pt.optimal_hits) : "") + ',' +
              opt_cell(pt.p_star_exact) + ',' +
              detail::format_double(pt.share_above_baseline) + ',' +
              opt_cell(pt.best_score) + '\n';
  }
  return {{"result.json", dump(rec)},
          {"points.csv", points},
          {"histogram.csv", histogram_csv(anti)},
          {"samples.csv", sample_csv(res.best_point_samples, p, cfg.reg)}};
}

Artifacts run_brute(const Problem &pb, const RunConfig &cfg, bool &empty) {
  const auto p = pb.params();
  const ExactSolution sol = exact_solve(pb.costs, cfg.ceiling);
  empty = sol.optimal_assignments.empty();
  ojson rec;
  rec["config"] = cfg.to_json();
  rec["instance"] = instance_json(pb);
  rec["feasible_count"] = sol.feasible_count;
  rec["optimal_cost"] = empty ? ojson(nullptr) : ojson(sol.optimal_cost);
  ojson list = ojson::array();
  for (const auto &a : sol.optimal_assignments)
    list.push_back(assignment_json(symbols_of(a, p.n), p));
  rec["optimal"] = list;
  return {{"brute.json", dump(rec)}};
}

Artifacts run_bound(const Problem &pb, const RunConfig &cfg) {
  if (cfg.reg != Register::onehot)
    throw Error(ErrorCode::unsupported, "bound analysis runs on the one-hot register");
  const EnergyModel model = make_model(pb, cfg);
  const auto p = model.params();
  const ExactSolution sol = exact_solve(pb.costs, cfg.ceiling);
  if (sol.optimal_assignments.empty())
    throw Error(ErrorCode::empty_optimal_set, "no feasible configuration exists");
  const auto optimal = sol.optimal_labels(p, Register::onehot);

  const double step = std::numbers::pi / p.S;
  const double gamma = cfg.gamma.value_or(step);
  const std::vector<double> betas =
      cfg.betas.value_or(std::vector<double>(cfg.depth, step));
  const int order = static_cast<int>(betas.size());

  const auto profile = phase_profile(model, gamma, optimal);
  const auto env = envelope(p, betas);
  const auto rep = fejer_bound(profile, env, order, cfg.confidences);

  ojson r;
  r["config"] = cfg.to_json();
  r["instance"] = instance_json(pb);
  r["p"] = rep.p;
  r["gamma"] = rep.gamma;
  r["betas"] = betas;
  r["optimal_cost"] = sol.optimal_cost;
  r["optimal_count"] = rep.optimal_count;
  r["dimension"] = rep.dimension;
  r["theta_star"] = rep.theta_star;
  r["delta"] = rep.delta;
  r["degenerate"] = rep.degenerate;
  r["C_beta"] = rep.C_beta;
  r["M_p_delta"] = rep.M_p_delta;
  r["M_p_bound"] = optional_json(rep.M_p_bound);
  r["M_p_sup"] = rep.M_p_sup;
  r["q0_lower"] = rep.q0_lower;
  r["q0_exact_ref"] = rep.q0_exact_ref;
  ojson shots = ojson::array();
  for (const auto &[conf, s] : rep.required_shots)
    shots.push_back({{"confidence", conf}, {"shots", s}});
  r["required_shots"] = shots;

  if (cfg.preselect) {
    const auto grid = GridSpec::uniform(p, cfg.grid_points).betas;
    const auto pre =
        angle_preselect(model, grid,
                        {cfg.preselect->lambda, cfg.preselect->rho, cfg.preselect->alpha},
                        order);
    ojson rows = ojson::array();
    for (const auto &row : pre.rows)
      rows.push_back({{"beta", row.beta},
                      {"mu", row.mu},
                      {"sigma", row.sigma},
                      {"log_z", row.log_z},
                      {"s_lp", row.s_lp},
                      {"score", row.score}});
    r["preselect"] = {{"beta_star", pre.beta_star}, {"index", pre.index}, {"rows", rows}};
  } else {
    r["preselect"] = nullptr;
  }
  return {{"bound.json", dump(r)}};
}

Artifacts run_bench(const std::string &dir, const RunConfig &cfg) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec))
    throw Error(ErrorCode::io, "not a directory: '" + dir + "'");
  std::vector<fs::path> files;
  for (const auto &e : fs::directory_iterator(dir)) {
    if (!e.is_regular_file()) continue;
    const auto ext = e.path().extension().string();
    if (ext == ".vrp" || ext == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());

  std::string csv =
      "instance,n,K,onehot_qubits,binary_qubits,oracle_optimum,phqc_best,match,error\n";
  for (const auto &f : files) {
    std::string name = f.filename().string();
    std::string n_s, k_s, q1, q2, oracle, best, match, err;
    try {
      const Problem pb = load_problem(f.string(), cfg.K, cfg.rounding);
      const auto p = pb.params();
      n_s = std::to_string(p.n);
      k_s = std::to_string(p.K);
      const auto [a, b] = qubit_counts(p.n, p.K);
      q1 = std::to_string(a);
      q2 = std::to_string(b);
      std::optional<ExactSolution> sol;
      if (p.n <= cfg.ceiling) {
        sol = exact_solve(pb.costs, cfg.ceiling);
        oracle = sol->optimal_assignments.empty() ? "infeasible"
                                                  : detail::format_double(sol->optimal_cost);
      } else {
        oracle = "ceiling-exceeded";
      }
      const auto dim = register_dimension(p, cfg.reg);
      if (!cfg.bench_phqc) {
        best = "skipped";
      } else if (!dim || *dim > cfg.budget) {
        best = "budget-exceeded";
      } else {
        const EnergyModel model = make_model(pb, cfg);
        PhqcOptions opts;
        opts.grid = GridSpec::uniform(p, cfg.grid_points);
        opts.shots = cfg.shots.value_or(default_shots(p, cfg.shots_rule));
        opts.seed = cfg.seed;
        opts.depth = cfg.depth;
        opts.score_full = cfg.score_full;
        opts.jobs = cfg.jobs;
        opts.budget = cfg.budget;
        const auto res = phqc(model, opts);
        best = res.best_score ? detail::format_double(*res.best_score) : "none";
        if (sol && !sol->optimal_assignments.empty() && res.best_score)
          match = std::abs(*res.best_score - sol->optimal_cost) <=
                          1e-9 * std::max(1.0, std::abs(sol->optimal_cost))
                      ? "true"
                      : "false";
      }
    } catch (const std::exception &e) {
      err = e.what();
      std::replace(err.begin(), err.end(), ',', ';');
      std::replace(err.begin(), err.end(), '\n', ' ');
    }
    csv += name + ',' + n_s + ',' + k_s + ',' + q1 + ',' + q2 + ',' + oracle + ',' +
           best + ',' + match + ',' + err + '\n';
  }
  return {{"bench.csv", csv}};
}

std::string check_line(const Problem &pb, const RunConfig &cfg, std::string_view line,
                       LineOutcome &outcome) {
  const auto first = line.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) {
    outcome = LineOutcome::blank;
    return {};
  }
  const auto last = line.find_last_not_of(" \t\r\n");
  const std::string input(line.substr(first, last - first + 1));
  const LoadLimits lim = pb.costs.limits();
  ojson v;
  v["input"] = input;
  v["register"] = to_string(cfg.reg);
  try {
    auto bits = parse_bits(input);
    const FeasibilityVerdict r = cfg.reg == Register::onehot
                                     ? feasible_global_positions(bits, lim)
                                     : decode_binary_and_check(BinaryBits{bits}, lim);
    v["feasible"] = r.feasible;
    v["reason"] = to_string(r.reason);
    v["detail"] = describe(r, lim);
    if (!r.loads.empty()) v["loads"] = r.loads;
    outcome = r.feasible ? LineOutcome::feasible : LineOutcome::infeasible;
  } catch (const Error &e) {
    v["feasible"] = false;
    v["error"] = e.what();
    outcome = LineOutcome::malformed;
  }
  return v.dump();
}

std::string encode_text(int n, int K, std::string_view assignment) {
  const auto p = EncodingParams::make(n, K);
  const auto a = ColoredAssignment::parse(assignment);
  const auto onehot = encode_assignment(a, p);
  const auto binary = compress(onehot, p);
  ojson j{{"n", n},
          {"K", K},
          {"assignment", a.to_string()},
          {"onehot", render_bits(onehot.bits)},
          {"binary", render_bits(binary.bits)}};
  return j.dump() + "\n";
}

std::string decode_text(int n, int K, Register reg, std::string_view bits) {
  const auto p = EncodingParams::make(n, K);
  OneHotBits onehot;
  if (reg == Register::onehot) {
    onehot.bits = parse_bits(bits);
  } else {
    onehot = decompress(BinaryBits{parse_bits(bits)}, p);
  }
  const auto a = decode_bitstring(onehot, p);
  ojson j{{"n", n},
          {"K", K},
          {"assignment", a.to_string()},
          {"onehot", render_bits(onehot.bits)},
          {"binary", render_bits(compress(onehot, p).bits)}};
  try {
    const auto view = permutation_view(a, n, K);
    ojson rows = ojson::array();
    for (int i = 0; i < n; ++i) {
      std::string row;
      for (int c = 0; c < n; ++c) row += static_cast<char>('0' + view.P(i, c));
      rows.push_back(row);
    }
    j["permutation"] = rows;
  } catch (const CodecError &) {
    j["permutation"] = nullptr;
  }
  return j.dump() + "\n";
}

}  // namespace cpr::service
