// Copyright 2026 The qem-bench Authors
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

#include "qem/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

#include "qem/errors.hpp"

namespace qem {

namespace {

const std::set<std::string> kKnownEstimators = {
    "raw", "vd", "seq_poly", "seq_exp", "data_efficient", "tse"};

struct ConfigValue {
  int line = 0;
  bool is_array = false;
  bool is_string = false;
  std::vector<std::string> items;  // raw tokens; single element when scalar
};

class ConfigDocument {
 public:
  ConfigDocument(std::string path, std::map<std::string, ConfigValue> values)
      : path_(std::move(path)), values_(std::move(values)) {}

  bool has(const std::string& key) const { return values_.count(key) > 0; }

  [[noreturn]] void fail(const std::string& key, const std::string& msg) const {
    const auto it = values_.find(key);
    const int line = it == values_.end() ? 0 : it->second.line;
    throw ConfigError(path_ + ":" + std::to_string(line) + ": key '" + key +
                      "': " + msg);
  }

  double get_double(const std::string& key, double fallback) const {
    const ConfigValue* v = find_scalar(key, /*want_string=*/false);
    if (!v) return fallback;
    return parse_double(key, v->items[0]);
  }

  std::string get_string(const std::string& key,
                         const std::string& fallback) const {
    const ConfigValue* v = find_scalar(key, /*want_string=*/true);
    if (!v) return fallback;
    return v->items[0];
  }

  std::int64_t get_int(const std::string& key, std::int64_t fallback) const {
    const ConfigValue* v = find_scalar(key, /*want_string=*/false);
    if (!v) return fallback;
    return parse_int(key, v->items[0]);
  }

  std::uint64_t get_uint(const std::string& key, std::uint64_t fallback) const {
    const ConfigValue* v = find_scalar(key, /*want_string=*/false);
    if (!v) return fallback;
    const std::string& raw = v->items[0];
    if (raw.find_first_of(".eE") == std::string::npos) {
      errno = 0;
      char* end = nullptr;
      const unsigned long long parsed = std::strtoull(raw.c_str(), &end, 10);
      if (errno != 0 || end == raw.c_str() || *end != '\0') {
        fail(key, "expected an unsigned integer, got '" + raw + "'");
      }
      return parsed;
    }
    const double d = parse_double(key, raw);
    if (d < 0.0 || d != std::floor(d) || d > 1.8e19) {
      fail(key, "expected an unsigned integer, got '" + raw + "'");
    }
    return static_cast<std::uint64_t>(d);
  }

  std::vector<double> get_double_array(const std::string& key,
                                       std::vector<double> fallback) const {
    const ConfigValue* v = find_array(key, /*want_string=*/false);
    if (!v) return fallback;
    std::vector<double> out;
    for (const std::string& item : v->items) {
      out.push_back(parse_double(key, item));
    }
    return out;
  }

  std::vector<std::int64_t> get_int_array(
      const std::string& key, std::vector<std::int64_t> fallback) const {
    const ConfigValue* v = find_array(key, /*want_string=*/false);
    if (!v) return fallback;
    std::vector<std::int64_t> out;
    for (const std::string& item : v->items) {
      out.push_back(parse_int(key, item));
    }
    return out;
  }

  std::vector<std::string> get_string_array(
      const std::string& key, std::vector<std::string> fallback) const {
    const ConfigValue* v = find_array(key, /*want_string=*/true);
    if (!v) return fallback;
    return v->items;
  }

  void check_no_unknown_keys(const std::set<std::string>& known) const {
    for (const auto& [key, value] : values_) {
      if (!known.count(key)) {
        throw ConfigError(path_ + ":" + std::to_string(value.line) +
                          ": unknown key '" + key + "'");
      }
    }
  }

 private:
  const ConfigValue* find_scalar(const std::string& key,
                                 bool want_string) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return nullptr;
    if (it->second.is_array) fail(key, "expected a scalar, got an array");
    if (it->second.is_string != want_string) {
      fail(key, want_string ? "expected a quoted string"
                            : "expected a number, got a string");
    }
    return &it->second;
  }

  const ConfigValue* find_array(const std::string& key,
                                bool want_string) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return nullptr;
    if (!it->second.is_array) fail(key, "expected an array");
    if (it->second.is_string != want_string && !it->second.items.empty()) {
      fail(key, want_string ? "expected an array of quoted strings"
                            : "expected an array of numbers");
    }
    return &it->second;
  }

  double parse_double(const std::string& key, const std::string& raw) const {
    errno = 0;
    char* end = nullptr;
    const double parsed = std::strtod(raw.c_str(), &end);
    if (errno != 0 || end == raw.c_str() || *end != '\0') {
      fail(key, "expected a number, got '" + raw + "'");
    }
    return parsed;
  }

  std::int64_t parse_int(const std::string& key, const std::string& raw) const {
    const double d = parse_double(key, raw);
    if (d != std::floor(d) || std::abs(d) > 9.0e18) {
      fail(key, "expected an integer, got '" + raw + "'");
    }
    return static_cast<std::int64_t>(d);
  }

  std::string path_;
  std::map<std::string, ConfigValue> values_;
};

std::string trim(const std::string& s) {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) {
    ++begin;
  }
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) {
    --end;
  }
  return s.substr(begin, end - begin);
}

// Strips a trailing '#' comment, respecting quoted strings.
std::string strip_comment(const std::string& line) {
  bool in_string = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') in_string = !in_string;
    if (line[i] == '#' && !in_string) return line.substr(0, i);
  }
  return line;
}

ConfigValue parse_value(const std::string& path, int line_no,
                        const std::string& raw) {
  ConfigValue value;
  value.line = line_no;
  const std::string text = trim(raw);
  auto fail = [&](const std::string& msg) -> void {
    throw ConfigError(path + ":" + std::to_string(line_no) + ": " + msg);
  };
  if (text.empty()) fail("missing value");

  auto parse_token = [&](const std::string& token, bool& is_string) {
    const std::string t = trim(token);
    if (t.empty()) fail("empty array element");
    if (t.front() == '"') {
      if (t.size() < 2 || t.back() != '"') fail("unterminated string");
      is_string = true;
      return t.substr(1, t.size() - 2);
    }
    is_string = false;
    return t;
  };

  if (text.front() == '[') {
    if (text.back() != ']') fail("unterminated array");
    value.is_array = true;
    const std::string inner = text.substr(1, text.size() - 2);
    if (trim(inner).empty()) return value;
    std::stringstream ss(inner);
    std::string token;
    bool first = true;
    while (std::getline(ss, token, ',')) {
      bool is_string = false;
      value.items.push_back(parse_token(token, is_string));
      if (first) {
        value.is_string = is_string;
        first = false;
      } else if (value.is_string != is_string) {
        fail("mixed string/number array");
      }
    }
    return value;
  }

  bool is_string = false;
  value.items.push_back(parse_token(text, is_string));
  value.is_string = is_string;
  return value;
}

ConfigDocument parse_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open config file");
  std::map<std::string, ConfigValue> values;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string content = trim(strip_comment(line));
    if (content.empty()) continue;
    const std::size_t eq = content.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path + ":" + std::to_string(line_no) +
                        ": expected 'key = value'");
    }
    const std::string key = trim(content.substr(0, eq));
    if (key.empty()) {
      throw ConfigError(path + ":" + std::to_string(line_no) + ": empty key");
    }
    if (values.count(key)) {
      throw ConfigError(path + ":" + std::to_string(line_no) +
                        ": duplicate key '" + key + "'");
    }
    values[key] = parse_value(path, line_no, content.substr(eq + 1));
  }
  return ConfigDocument(path, std::move(values));
}

}  // namespace

ExperimentConfig ExperimentConfig::paper_default() { return {}; }

ExperimentConfig ExperimentConfig::smoke_profile() {
  ExperimentConfig cfg;
  cfg.n_qubits = 6;
  // p2_base chosen so floor(c/sqrt(6 lambda p2)) lands on M = (15, 11, 8).
  const double p2_base = 6.873e-4;
  cfg.p2_list = {p2_base, 2.0 * p2_base, 3.0 * p2_base};
  cfg.observable = "XIIIII";
  cfg.trials = 20;
  cfg.n_sweep = {1000000LL, 100000000LL, 10000000000LL, 1000000000000LL};
  return cfg;
}

LayerOrder ExperimentConfig::parsed_layer_order() const {
  if (layer_order == "x_then_zz") return LayerOrder::XThenZz;
  if (layer_order == "zz_then_x") return LayerOrder::ZzThenX;
  throw ConfigError("config: layer_order must be 'x_then_zz' or 'zz_then_x', got '" +
                    layer_order + "'");
}

void ExperimentConfig::validate() const {
  auto fail = [](const std::string& msg) -> void {
    throw ConfigError("config: " + msg);
  };
  if (n_qubits < 2) fail("n_qubits must be >= 2");
  if (!(t > 0.0) || !std::isfinite(t)) fail("t must be positive and finite");
  if (!(p1 >= 0.0 && p1 < 1.0)) fail("p1 must lie in [0, 1)");
  if (p2_list.empty()) fail("p2_list must be non-empty");
  for (double p2 : p2_list) {
    if (!(p2 > 0.0 && p2 < 1.0)) fail("p2_list values must lie in (0, 1)");
  }
  for (std::size_t i = 0; i < p2_list.size(); ++i) {
    for (std::size_t j = i + 1; j < p2_list.size(); ++j) {
      if (p2_list[i] == p2_list[j]) fail("p2_list values must be distinct");
    }
  }
  if (lambdas.size() != p2_list.size()) {
    fail("lambdas and p2_list must have the same length");
  }
  if (lambdas.empty() || std::abs(lambdas.front() - 1.0) > 1e-12) {
    fail("lambdas must start at 1");
  }
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    if (i > 0 && !(lambdas[i] > lambdas[i - 1])) {
      fail("lambdas must be strictly ascending");
    }
    if (std::abs(p2_list[i] - lambdas[i] * p2_list.front()) >
        1e-12 * p2_list.front()) {
      fail("p2_list must scale as lambda_i * p2_base (p2_list[" +
           std::to_string(i) + "] inconsistent)");
    }
  }
  if (!(c > 0.0)) fail("c must be > 0");
  if (static_cast<int>(observable.size()) != n_qubits) {
    fail("observable must have exactly n_qubits letters");
  }
  for (char l : observable) {
    if (l != 'I' && l != 'X' && l != 'Y' && l != 'Z') {
      fail(std::string("observable letter '") + l + "' is not in {I, X, Y, Z}");
    }
  }
  if (n_sweep.empty()) fail("n_sweep must be non-empty");
  for (std::size_t i = 0; i < n_sweep.size(); ++i) {
    if (n_sweep[i] < 1) fail("n_sweep values must be >= 1");
    if (i > 0 && n_sweep[i] <= n_sweep[i - 1]) {
      fail("n_sweep must be strictly ascending");
    }
  }
  if (trials < 1) fail("trials must be >= 1");
  if (estimators.empty()) fail("estimators must be non-empty");
  std::set<std::string> seen;
  for (const std::string& name : estimators) {
    if (!kKnownEstimators.count(name)) {
      fail("unknown estimator '" + name + "'");
    }
    if (!seen.insert(name).second) fail("duplicate estimator '" + name + "'");
  }
  parsed_layer_order();
  if (grid_p2.size() != grid_m.size()) {
    fail("grid_p2 and grid_m must have the same length");
  }
  for (std::size_t i = 0; i < grid_p2.size(); ++i) {
    if (!(grid_p2[i] > 0.0 && grid_p2[i] < 1.0)) {
      fail("grid_p2 values must lie in (0, 1)");
    }
    if (grid_m[i] < 1) fail("grid_m values must be >= 1");
  }
}

ExperimentConfig load_config(const std::string& path) {
  const ConfigDocument doc = parse_document(path);
  doc.check_no_unknown_keys({"n_qubits", "t", "p1", "p2_list", "c", "lambdas",
                             "observable", "n_sweep", "trials", "master_seed",
                             "estimators", "layer_order", "grid_p2", "grid_m"});
  ExperimentConfig cfg;
  cfg.n_qubits = static_cast<int>(doc.get_int("n_qubits", cfg.n_qubits));
  cfg.t = doc.get_double("t", cfg.t);
  cfg.p1 = doc.get_double("p1", cfg.p1);
  cfg.p2_list = doc.get_double_array("p2_list", cfg.p2_list);
  cfg.c = doc.get_double("c", cfg.c);
  cfg.lambdas = doc.get_double_array("lambdas", cfg.lambdas);
  // The default observable tracks n_qubits when the config overrides one but
  // not the other.
  cfg.observable = doc.get_string(
      "observable",
      "X" + std::string(static_cast<std::size_t>(std::max(0, cfg.n_qubits - 1)),
                        'I'));
  cfg.n_sweep = doc.get_int_array("n_sweep", cfg.n_sweep);
  cfg.trials = static_cast<int>(doc.get_int("trials", cfg.trials));
  cfg.master_seed = doc.get_uint("master_seed", cfg.master_seed);
  cfg.estimators = doc.get_string_array("estimators", cfg.estimators);
  cfg.layer_order = doc.get_string("layer_order", cfg.layer_order);
  cfg.grid_p2 = doc.get_double_array("grid_p2", cfg.grid_p2);
  std::vector<std::int64_t> grid_m_raw;
  for (int m : cfg.grid_m) grid_m_raw.push_back(m);
  grid_m_raw = doc.get_int_array("grid_m", grid_m_raw);
  cfg.grid_m.clear();
  for (std::int64_t m : grid_m_raw) cfg.grid_m.push_back(static_cast<int>(m));
  cfg.validate();
  return cfg;
}

std::string config_to_json(const ExperimentConfig& cfg) {
  nlohmann::json j;
  j["n_qubits"] = cfg.n_qubits;
  j["t"] = cfg.t;
  j["p1"] = cfg.p1;
  j["p2_list"] = cfg.p2_list;
  j["c"] = cfg.c;
  j["lambdas"] = cfg.lambdas;
  j["observable"] = cfg.observable;
  j["n_sweep"] = cfg.n_sweep;
  j["trials"] = cfg.trials;
  j["master_seed"] = cfg.master_seed;
  j["estimators"] = cfg.estimators;
  j["layer_order"] = cfg.layer_order;
  j["grid_p2"] = cfg.grid_p2;
  j["grid_m"] = cfg.grid_m;
  return j.dump(2);
}

}  // namespace qem
