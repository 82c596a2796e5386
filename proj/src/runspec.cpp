// Copyright 2026 The minienv Authors
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

#include "minienv/runspec.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>

#include "minienv/error.hpp"

namespace minienv {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    parts.push_back(trim(s.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

[[noreturn]] void bad_field(std::string_view key, std::string_view value,
                            const std::string &why) {
  fail(ErrorCode::Usage, "field '" + std::string(key) + "': " + why +
                             " (got '" + std::string(value) + "')");
}

double to_double(std::string_view key, std::string_view text) {
  double v = 0.0;
  const char *end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end || !std::isfinite(v))
    bad_field(key, text, "expected a finite number");
  return v;
}

long to_long(std::string_view key, std::string_view text) {
  long v = 0;
  const char *end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end)
    bad_field(key, text, "expected an integer");
  return v;
}

std::vector<double> to_doubles(std::string_view key, std::string_view text) {
  std::vector<double> out;
  for (auto part : split(text)) out.push_back(to_double(key, part));
  return out;
}

std::string join(const std::vector<double> &v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + round_trip(v[i]);
  return s;
}

void require_tol(double tol, const char *key) {
  if (!(tol > 0.0 && tol < 1.0))
    fail(ErrorCode::Usage, std::string("field '") + key + "': must lie in (0, 1)");
}

}  // namespace

std::string round_trip(double v) {
  if (v == 0.0) return "0";
  char buf[48];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

std::string_view engine_name(Engine e) noexcept {
  switch (e) {
    case Engine::Analytic: return "analytic";
    case Engine::BruteForce: return "bruteforce";
    case Engine::Both: return "both";
  }
  return "unknown";
}

std::optional<Engine> parse_engine(std::string_view name) noexcept {
  if (name == "analytic") return Engine::Analytic;
  if (name == "bruteforce" || name == "brute-force") return Engine::BruteForce;
  if (name == "both") return Engine::Both;
  return std::nullopt;
}

void RunSpec::set(std::string_view key, std::string_view value) {
  value = trim(value);
  if (key == "model") {
    models.clear();
    for (auto part : split(value)) {
      const auto m = parse_model(part);
      if (!m) bad_field(key, part, "expected master, amplitude or kerr");
      models.push_back(*m);
    }
  } else if (key == "alpha0") {
    alpha0 = to_doubles(key, value);
  } else if (key == "alpha0_im") {
    alpha0_im = to_double(key, value);
  } else if (key == "nbar") {
    nbar = to_doubles(key, value);
  } else if (key == "rate") {
    rate = to_doubles(key, value);
  } else if (key == "omega") {
    omega = to_double(key, value);
  } else if (key == "tmin") {
    tmin = to_double(key, value);
  } else if (key == "tmax") {
    tmax = to_double(key, value);
  } else if (key == "points") {
    const long n = to_long(key, value);
    if (n < 2) bad_field(key, value, "grid needs at least 2 points");
    points = static_cast<std::size_t>(n);
  } else if (key == "engine") {
    const auto e = parse_engine(value);
    if (!e) bad_field(key, value, "expected analytic, bruteforce or both");
    engine = *e;
  } else if (key == "output") {
    output = std::string(value);
  } else if (key == "dat") {
    dat = std::string(value);
  } else if (key == "cutoff_a" || key == "cutoff_b") {
    const long c = to_long(key, value);
    if (c < 0 || c > 100000) bad_field(key, value, "expected 0 (automatic) or a positive cutoff");
    (key == "cutoff_a" ? cutoff_a : cutoff_b) = static_cast<int>(c);
  } else if (key == "tol_single") {
    tol_single = to_double(key, value);
  } else if (key == "tol_joint") {
    tol_joint = to_double(key, value);
  } else if (key == "tol_zeta3") {
    tol_zeta3 = to_double(key, value);
  } else if (key == "step") {
    step = to_double(key, value);
  } else if (key == "threads") {
    const long n = to_long(key, value);
    if (n < 0 || n > 1024) bad_field(key, value, "expected 0..1024");
    threads = static_cast<int>(n);
  } else if (key == "version" || key == "command" || key.starts_with("info_")) {
    // Written by the parameter echo; informational only.
  } else {
    fail(ErrorCode::Usage, "unknown field '" + std::string(key) + "'");
  }
}

void RunSpec::validate() const {
  if (models.empty()) fail(ErrorCode::Usage, "field 'model': at least one model required");
  for (const auto *list : {&alpha0, &nbar, &rate})
    if (list->empty()) fail(ErrorCode::Usage, "empty parameter list");
  for (double n : nbar)
    if (n < 0.0) fail(ErrorCode::Usage, "field 'nbar': must be >= 0");
  for (double r : rate)
    if (!(r > 0.0)) fail(ErrorCode::Usage, "field 'rate': must be > 0");
  if (omega < 0.0) fail(ErrorCode::Usage, "field 'omega': must be >= 0");
  if (!(tmin >= 0.0)) fail(ErrorCode::Usage, "field 'tmin': must be >= 0");
  if (!(tmax > tmin)) fail(ErrorCode::Usage, "field 'tmax': must exceed tmin");
  if (points < 2) fail(ErrorCode::Usage, "field 'points': at least 2 required");
  if (step < 0.0) fail(ErrorCode::Usage, "field 'step': must be >= 0");
  require_tol(tol_single, "tol_single");
  require_tol(tol_joint, "tol_joint");
  require_tol(tol_zeta3, "tol_zeta3");
}

std::vector<std::pair<std::string, std::string>> RunSpec::echo() const {
  std::string model_list;
  for (std::size_t i = 0; i < models.size(); ++i)
    model_list += (i ? "," : "") + std::string(model_name(models[i]));
  return {
      {"model", model_list},
      {"alpha0", join(alpha0)},
      {"alpha0_im", round_trip(alpha0_im)},
      {"nbar", join(nbar)},
      {"rate", join(rate)},
      {"omega", round_trip(omega)},
      {"tmin", round_trip(tmin)},
      {"tmax", round_trip(tmax)},
      {"points", std::to_string(points)},
      {"engine", std::string(engine_name(engine))},
      {"output", output},
      {"dat", dat},
      {"cutoff_a", std::to_string(cutoff_a)},
      {"cutoff_b", std::to_string(cutoff_b)},
      {"tol_single", round_trip(tol_single)},
      {"tol_joint", round_trip(tol_joint)},
      {"tol_zeta3", round_trip(tol_zeta3)},
      {"step", round_trip(step)},
      {"threads", std::to_string(threads)},
  };
}

ModelParams RunSpec::params(Model m, double alpha, double n, double r) const {
  ModelParams p;
  p.model = m;
  p.alpha0 = Complex(alpha, alpha0_im);
  p.nbar = n;
  p.rate = r;
  p.omega = omega;
  return p;
}

std::vector<double> RunSpec::grid() const { return linear_grid(tmin, tmax, points); }

RunSpec parse_runspec(std::istream &in, const std::string &source) {
  RunSpec spec;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view text(line);
    if (const auto hash = text.find('#'); hash != std::string_view::npos)
      text = text.substr(0, hash);
    text = trim(text);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    const std::string where = source + ":" + std::to_string(lineno) + ": ";
    if (eq == std::string_view::npos)
      fail(ErrorCode::Usage, where + "expected key=value, got '" + std::string(text) + "'");
    try {
      spec.set(trim(text.substr(0, eq)), text.substr(eq + 1));
    } catch (const Error &e) {
      fail(e.code(), where + e.what());
    }
  }
  if (in.bad()) fail(ErrorCode::Io, source + ": read error");
  spec.validate();
  return spec;
}

RunSpec load_runspec(const std::string &path) {
  std::ifstream f(path);
  if (!f) fail(ErrorCode::Io, "cannot open spec file '" + path + "'");
  return parse_runspec(f, path);
}

}  // namespace minienv
