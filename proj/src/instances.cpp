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

#include "cpr/instances.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "cpr/error.hpp"
#include "json.hpp"

namespace cpr {
namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(int line, const std::string &msg) {
  throw Error(ErrorCode::parse,
              "line " + std::to_string(line) + ": " + msg);
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const std::size_t b = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > b) out.push_back(s.substr(b, i - b));
  }
  return out;
}

template <typename T>
std::optional<T> to_number(std::string_view tok) {
  T value{};
  const auto *first = tok.data();
  const auto *last = tok.data() + tok.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return value;
}

double apply_rounding(double v, Rounding r) {
  return r == Rounding::nearest ? std::round(v) : v;
}

bool is_section(std::string_view key) {
  return key.size() > 8 && key.substr(key.size() - 8) == "_SECTION";
}

Matrix<double> legs_from_json(const json &j, int n, int K, const char *what) {
  Matrix<double> out(n, K);
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw Error(ErrorCode::parse, std::string(what) + ": expected length " +
                                      std::to_string(n));
  for (int i = 0; i < n; ++i) {
    if (j[i].is_number()) {
      for (int k = 0; k < K; ++k) out(i, k) = j[i].get<double>();
    } else if (j[i].is_array() && static_cast<int>(j[i].size()) == K) {
      for (int k = 0; k < K; ++k) out(i, k) = j[i][k].get<double>();
    } else {
      throw Error(ErrorCode::parse,
                  std::string(what) + ": row " + std::to_string(i) +
                      " must be a number or a length-K array");
    }
  }
  return out;
}

Matrix<double> square_from_json(const json &j, int n, const char *what) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw Error(ErrorCode::parse, std::string(what) + ": expected " +
                                      std::to_string(n) + " rows");
  Matrix<double> out(n, n);
  for (int i = 0; i < n; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != n)
      throw Error(ErrorCode::parse, std::string(what) + ": row " +
                                        std::to_string(i) + " has wrong length");
    for (int c = 0; c < n; ++c) out(i, c) = j[i][c].get<double>();
  }
  return out;
}

std::vector<std::int64_t> integers_from_json(const json &j, std::size_t count,
                                             const char *what) {
  std::vector<std::int64_t> out;
  if (j.is_number_integer()) {
    out.assign(count, j.get<std::int64_t>());
    return out;
  }
  if (!j.is_array() || j.size() != count)
    throw Error(ErrorCode::parse, std::string(what) + ": expected " +
                                      std::to_string(count) + " integers");
  for (const auto &v : j) {
    if (!v.is_number_integer())
      throw Error(ErrorCode::parse, std::string(what) + ": non-integer entry");
    out.push_back(v.get<std::int64_t>());
  }
  return out;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception &e) {
    throw Error(ErrorCode::parse, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

bool Instance::single_depot() const {
  for (int i = 0; i < n; ++i)
    for (int k = 1; k < K; ++k)
      if (dep_to(i, k) != dep_to(i, 0) || to_dep(i, k) != to_dep(i, 0))
        return false;
  return true;
}

void Instance::validate() const {
  auto bad = [](const std::string &m) {
    throw Error(ErrorCode::invalid_argument, "invalid instance: " + m);
  };
  if (n < 1) bad("n must be >= 1");
  if (K < 1) bad("K must be >= 1");
  if (static_cast<int>(demand.size()) != n) bad("demand length != n");
  if (static_cast<int>(capacity.size()) != K) bad("capacity length != K");
  for (auto d : demand)
    if (d < 0) bad("negative demand");
  for (auto q : capacity)
    if (q <= 0) bad("capacities must be positive");
  if (W.rows() != static_cast<std::size_t>(n) || W.cols() != W.rows())
    bad("W must be n x n");
  if (dep_to.rows() != static_cast<std::size_t>(n) ||
      dep_to.cols() != static_cast<std::size_t>(K) ||
      to_dep.rows() != dep_to.rows() || to_dep.cols() != dep_to.cols())
    bad("depot legs must be n x K");
  for (int i = 0; i < n; ++i) {
    if (W(i, i) != 0.0) bad("W must have a zero diagonal");
    for (int j = 0; j < n; ++j)
      if (!(W(i, j) >= 0.0)) bad("W must be nonnegative");
    for (int k = 0; k < K; ++k)
      if (!(dep_to(i, k) >= 0.0) || !(to_dep(i, k) >= 0.0))
        bad("depot legs must be nonnegative");
  }
}

void PdpInstance::validate() const {
  auto bad = [](const std::string &m) {
    throw Error(ErrorCode::invalid_argument, "invalid PDP instance: " + m);
  };
  if (T < 1) bad("T must be >= 1");
  if (K < 1) bad("K must be >= 1");
  if (static_cast<int>(weight.size()) != T) bad("weight length != T");
  if (static_cast<int>(capacity.size()) != K) bad("capacity length != K");
  for (auto w : weight)
    if (w < 0) bad("negative tour weight");
  for (auto q : capacity)
    if (q <= 0) bad("capacities must be positive");
  if (Wtilde.rows() != static_cast<std::size_t>(T) || Wtilde.cols() != Wtilde.rows())
    bad("Wtilde must be T x T");
  for (double v : Wtilde.data())
    if (!(v >= 0.0)) bad("Wtilde must be nonnegative");
  if (dep_to.rows() != static_cast<std::size_t>(T) ||
      dep_to.cols() != static_cast<std::size_t>(K) ||
      to_dep.rows() != dep_to.rows() || to_dep.cols() != dep_to.cols())
    bad("depot legs must be T x K");
}

DistanceTables build_matrices(std::span<const Point> coords, Point depot,
                              Rounding rounding) {
  const std::size_t n = coords.size();
  DistanceTables t{Matrix<double>(n, n), std::vector<double>(n),
                   std::vector<double>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      t.W(i, j) = apply_rounding(
          std::hypot(coords[i].x - coords[j].x, coords[i].y - coords[j].y),
          rounding);
    }
    t.dep_to[i] = apply_rounding(
        std::hypot(depot.x - coords[i].x, depot.y - coords[i].y), rounding);
    t.to_dep[i] = apply_rounding(
        std::hypot(coords[i].x - depot.x, coords[i].y - depot.y), rounding);
  }
  return t;
}

Instance parse_vrp(std::string_view text, int K, Rounding rounding) {
  if (K < 1) throw Error(ErrorCode::invalid_argument, "K must be >= 1");

  std::optional<std::int64_t> dimension;
  std::optional<std::int64_t> capacity;
  std::string name;
  std::map<std::int64_t, Point> coords;
  std::map<std::int64_t, std::int64_t> demands;
  std::vector<std::int64_t> depots;
  bool saw_eof = false;

  enum class Section { none, coords, demand, depot, ignored };
  Section section = Section::none;
  bool depot_terminated = false;

  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line == "EOF") {
      saw_eof = true;
      break;
    }

    const auto colon = line.find(':');
    const auto toks = tokens(line);
    const std::string_view head =
        colon != std::string_view::npos ? trim(line.substr(0, colon)) : toks[0];
    const bool keyword = !head.empty() &&
                         std::isalpha(static_cast<unsigned char>(head[0]));

    if (keyword) {
      if (is_section(head)) {
        if (head == "NODE_COORD_SECTION") {
          section = Section::coords;
        } else if (head == "DEMAND_SECTION") {
          section = Section::demand;
        } else if (head == "DEPOT_SECTION") {
          section = Section::depot;
        } else {
          section = Section::ignored;
        }
        continue;
      }
      section = Section::none;
      if (colon == std::string_view::npos)
        parse_fail(lineno, "expected 'KEY : VALUE', got '" + std::string(line) + "'");
      const std::string_view value = trim(line.substr(colon + 1));
      if (head == "NAME") {
        name = std::string(value);
      } else if (head == "DIMENSION") {
        dimension = to_number<std::int64_t>(value);
        if (!dimension || *dimension < 2)
          parse_fail(lineno, "DIMENSION must be an integer >= 2");
      } else if (head == "CAPACITY") {
        capacity = to_number<std::int64_t>(value);
        if (!capacity || *capacity <= 0)
          parse_fail(lineno, "CAPACITY must be a positive integer");
      } else if (head == "EDGE_WEIGHT_TYPE") {
        if (value != "EUC_2D")
          parse_fail(lineno, "unsupported EDGE_WEIGHT_TYPE '" +
                                 std::string(value) + "'");
      } else if (head == "TYPE") {
        if (value != "CVRP")
          parse_fail(lineno, "unsupported TYPE '" + std::string(value) + "'");
      }
      // COMMENT and other keys are informational.
      continue;
    }

    switch (section) {
      case Section::coords: {
        if (toks.size() != 3) parse_fail(lineno, "coordinate rows need 'id x y'");
        const auto id = to_number<std::int64_t>(toks[0]);
        const auto x = to_number<double>(toks[1]);
        const auto y = to_number<double>(toks[2]);
        if (!id || !x || !y) parse_fail(lineno, "malformed coordinate row");
        if (!coords.emplace(*id, Point{*x, *y}).second)
          parse_fail(lineno, "duplicate node id " + std::to_string(*id));
        break;
      }
      case Section::demand: {
        if (toks.size() != 2) parse_fail(lineno, "demand rows need 'id demand'");
        const auto id = to_number<std::int64_t>(toks[0]);
        if (!id) parse_fail(lineno, "malformed node id in DEMAND_SECTION");
        const auto d = to_number<std::int64_t>(toks[1]);
        if (!d || *d < 0)
          parse_fail(lineno, "nonnumeric demand '" + std::string(toks[1]) + "'");
        if (!demands.emplace(*id, *d).second)
          parse_fail(lineno, "duplicate node id " + std::to_string(*id));
        break;
      }
      case Section::depot: {
        for (auto tok : toks) {
          const auto id = to_number<std::int64_t>(tok);
          if (!id) parse_fail(lineno, "malformed DEPOT_SECTION entry");
          if (*id == -1) {
            depot_terminated = true;
            section = Section::none;
            break;
          }
          if (depot_terminated) parse_fail(lineno, "entries after -1 terminator");
          depots.push_back(*id);
        }
        break;
      }
      case Section::ignored:
        break;
      case Section::none:
        parse_fail(lineno, "data outside of any section");
    }
  }

  if (!dimension) throw Error(ErrorCode::parse, "missing DIMENSION");
  if (!capacity) throw Error(ErrorCode::parse, "missing CAPACITY");
  if (!saw_eof) throw Error(ErrorCode::parse, "missing EOF terminator");
  if (depots.size() > 1)
    throw Error(ErrorCode::parse, "multiple depots are not supported");
  const std::int64_t depot_id = depots.empty() ? 1 : depots.front();

  const auto dim = *dimension;
  auto check_ids = [&](const auto &m, const char *what) {
    if (static_cast<std::int64_t>(m.size()) != dim)
      throw Error(ErrorCode::parse, std::string(what) + " has " +
                                        std::to_string(m.size()) +
                                        " rows, expected DIMENSION=" +
                                        std::to_string(dim));
    for (const auto &[id, _] : m)
      if (id < 1 || id > dim)
        throw Error(ErrorCode::parse, std::string(what) + ": node id " +
                                          std::to_string(id) + " out of range");
  };
  check_ids(coords, "NODE_COORD_SECTION");
  check_ids(demands, "DEMAND_SECTION");
  if (depot_id < 1 || depot_id > dim)
    throw Error(ErrorCode::parse, "depot id out of range");

  Instance inst;
  inst.name = name;
  inst.n = static_cast<int>(dim - 1);
  inst.K = K;
  inst.rounding = rounding;
  inst.depot = coords.at(depot_id);
  std::vector<Point> cs;
  for (const auto &[id, p] : coords) {
    if (id == depot_id) continue;
    cs.push_back(p);
    inst.demand.push_back(demands.at(id));
  }
  inst.capacity.assign(K, *capacity);
  auto tables = build_matrices(cs, *inst.depot, rounding);
  inst.W = std::move(tables.W);
  inst.dep_to = Matrix<double>(inst.n, K);
  inst.to_dep = Matrix<double>(inst.n, K);
  for (int i = 0; i < inst.n; ++i)
    for (int k = 0; k < K; ++k) {
      inst.dep_to(i, k) = tables.dep_to[i];
      inst.to_dep(i, k) = tables.to_dep[i];
    }
  inst.coords = std::move(cs);
  inst.validate();
  return inst;
}

Instance instance_from_json(std::string_view text) {
  const json j = parse_json(text);
  try {
    Instance inst;
    inst.name = j.value("name", std::string{});
    inst.K = j.value("K", 2);
    if (inst.K < 1) throw Error(ErrorCode::parse, "K must be >= 1");
    const json &w = j.at("W");
    inst.n = static_cast<int>(w.size());
    if (inst.n < 1) throw Error(ErrorCode::parse, "W must be nonempty");
    inst.W = square_from_json(w, inst.n, "W");
    inst.dep_to = legs_from_json(j.at("dep_to"), inst.n, inst.K, "dep_to");
    inst.to_dep = legs_from_json(j.at("to_dep"), inst.n, inst.K, "to_dep");
    inst.demand = integers_from_json(j.at("demands"), inst.n, "demands");
    inst.capacity = integers_from_json(j.at("capacities"), inst.K, "capacities");
    if (j.contains("rounding"))
      inst.rounding = j["rounding"] == "nearest" ? Rounding::nearest : Rounding::exact;
    inst.validate();
    return inst;
  } catch (const json::exception &e) {
    throw Error(ErrorCode::parse, std::string("instance record: ") + e.what());
  }
}

PdpInstance pdp_from_json(std::string_view text) {
  const json j = parse_json(text);
  try {
    PdpInstance p;
    p.name = j.value("name", std::string{});
    p.K = j.value("K", 2);
    if (p.K < 1) throw Error(ErrorCode::parse, "K must be >= 1");
    const json &w = j.at("Wtilde");
    p.T = static_cast<int>(w.size());
    if (p.T < 1) throw Error(ErrorCode::parse, "Wtilde must be nonempty");
    p.Wtilde = square_from_json(w, p.T, "Wtilde");
    p.dep_to = legs_from_json(j.at("dep_to"), p.T, p.K, "dep_to");
    p.to_dep = legs_from_json(j.at("to_dep"), p.T, p.K, "to_dep");
    p.weight = j.contains("weights")
                   ? integers_from_json(j["weights"], p.T, "weights")
                   : std::vector<std::int64_t>(p.T, 0);
    p.capacity = j.contains("capacities")
                     ? integers_from_json(j["capacities"], p.K, "capacities")
                     : std::vector<std::int64_t>(p.K, 1);
    p.validate();
    return p;
  } catch (const json::exception &e) {
    throw Error(ErrorCode::parse, std::string("PDP record: ") + e.what());
  }
}

Instance load_instance(const std::string &path, int K, Rounding rounding) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::io, "cannot open instance file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  const std::string text = ss.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    return instance_from_json(text);
  }
  Instance inst = parse_vrp(text, K, rounding);
  if (inst.name.empty()) inst.name = path.substr(path.find_last_of('/') + 1);
  return inst;
}

int ceil_log2(std::int64_t x) {
  if (x < 1) throw Error(ErrorCode::invalid_argument, "ceil_log2 of x < 1");
  int q = 0;
  while ((std::int64_t{1} << q) < x) ++q;
  return q;
}

std::pair<std::int64_t, std::int64_t> qubit_counts(int n, int K) {
  if (n < 1 || K < 1)
    throw Error(ErrorCode::invalid_argument, "qubit_counts needs n, K >= 1");
  const std::int64_t nn = n;
  return {K * nn * nn, nn * ceil_log2(nn * K)};
}

}  // namespace cpr
