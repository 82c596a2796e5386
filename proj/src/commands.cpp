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

#include "minienv/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>
#include <tuple>

#include "minienv/bruteforce.hpp"
#include "minienv/error.hpp"

#ifndef MINIENV_VERSION
#define MINIENV_VERSION "0.0.0"
#endif

namespace minienv {

namespace {

struct Block {
  std::vector<std::string> names;
  std::vector<std::vector<double>> columns;
  std::vector<std::pair<std::string, std::string>> info;
};

std::string cutoff_text(const BruteForceRun &run) {
  return std::to_string(run.cutoff_a) + "," + std::to_string(run.cutoff_b);
}

Block compute_block(const RunSpec &spec, double alpha, double nbar, double rate,
                    const std::vector<double> &times) {
  Block b;
  BruteForceOptions opts;
  opts.cutoff_a = spec.cutoff_a;
  opts.cutoff_b = spec.cutoff_b;
  opts.single_tol = spec.tol_single;
  opts.joint_tol = spec.tol_joint;
  opts.step = spec.step;
  for (Model m : spec.models) {
    const ModelParams p = spec.params(m, alpha, nbar, rate);
    const std::string name(model_name(m));
    std::vector<double> analytic, brute;
    if (spec.engine != Engine::BruteForce) {
      analytic = analytic_series(p, times, spec.tol_zeta3).zeta;
      b.names.push_back("zeta_" + name + "_analytic");
      b.columns.push_back(analytic);
    }
    if (spec.engine != Engine::Analytic) {
      const BruteForceRun run = bruteforce_series(p, times, opts);
      brute = run.series.zeta;
      b.names.push_back("zeta_" + name + "_bruteforce");
      b.columns.push_back(brute);
      b.info.emplace_back("info_cutoffs_" + name, cutoff_text(run));
    }
    if (spec.engine == Engine::Both) {
      std::vector<double> delta(times.size());
      for (std::size_t i = 0; i < times.size(); ++i) delta[i] = brute[i] - analytic[i];
      b.names.push_back("delta_" + name);
      b.columns.push_back(std::move(delta));
    }
  }
  return b;
}

void echo_spec(Table &t, const char *command, const RunSpec &spec) {
  t.add_meta("command", command);
  t.add_meta("version", std::string(library_version()));
  for (auto &[k, v] : spec.echo()) t.add_meta(k, v);
}

}  // namespace

std::string_view library_version() noexcept { return MINIENV_VERSION; }

FigureParams figure_params(int id) {
  switch (id) {
    case 1: return {1, 5.0, 25.0};
    case 2: return {2, 5.0, 1.0};
    case 3: return {3, 1.0, 25.0};
    case 4: return {4, 1.0, 2.0};
    case 5: return {5, 5.0, 100.0};
  }
  fail(ErrorCode::Usage, "figure id must be 1..5, got " + std::to_string(id));
}

Table figure_table(int id, std::size_t points, double tmax) {
  const FigureParams f = figure_params(id);
  if (points < 2) fail(ErrorCode::Usage, "figure: at least 2 points required");
  if (!(tmax > 0.0) || !std::isfinite(tmax))
    fail(ErrorCode::Usage, "figure: tmax must be > 0");
  const std::vector<double> times = linear_grid(0.0, tmax, points);
  ModelParams p;
  p.alpha0 = f.alpha0;
  p.nbar = f.nbar;
  p.rate = 1.0;
  const auto z1 = analytic_series(p.with_model(Model::MasterEq), times).zeta;
  const auto z2 = analytic_series(p.with_model(Model::Amplitude), times).zeta;
  const auto z3 = analytic_series(p.with_model(Model::PhaseKerr), times).zeta;

  Table t;
  t.add_meta("command", "figure");
  t.add_meta("version", std::string(library_version()));
  t.add_meta("figure", std::to_string(id));
  t.add_meta("alpha0", round_trip(f.alpha0));
  t.add_meta("nbar", round_trip(f.nbar));
  t.add_meta("rate", "1");
  t.add_meta("tmax", round_trip(tmax));
  t.add_meta("points", std::to_string(points));
  t.add_meta("engine", "analytic");
  t.columns = {"gamma_t", "zeta1", "zeta2", "zeta3"};
  t.rows.reserve(points);
  for (std::size_t i = 0; i < points; ++i) t.add_row({times[i], z1[i], z2[i], z3[i]});
  return t;
}

Table simulate_table(const RunSpec &spec) {
  spec.validate();
  if (spec.alpha0.size() != 1 || spec.nbar.size() != 1 || spec.rate.size() != 1)
    fail(ErrorCode::Usage,
         "simulate: alpha0, nbar and rate take single values (use sweep for lists)");
  const std::vector<double> times = spec.grid();
  const Block b = compute_block(spec, spec.alpha0[0], spec.nbar[0], spec.rate[0], times);

  Table t;
  echo_spec(t, "simulate", spec);
  for (const auto &[k, v] : b.info) t.add_meta(k, v);
  t.columns.push_back("t");
  t.columns.insert(t.columns.end(), b.names.begin(), b.names.end());
  t.rows.reserve(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    std::vector<double> row{times[i]};
    for (const auto &c : b.columns) row.push_back(c[i]);
    t.add_row(std::move(row));
  }
  return t;
}

Table sweep_table(const RunSpec &spec) {
  spec.validate();
  std::vector<std::tuple<double, double, double>> tuples;
  for (double a : spec.alpha0)
    for (double n : spec.nbar)
      for (double r : spec.rate) tuples.emplace_back(a, n, r);
  std::sort(tuples.begin(), tuples.end());
  tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());

  const std::vector<double> times = spec.grid();
  std::vector<Block> blocks(tuples.size());
  std::vector<std::exception_ptr> errors(tuples.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tuples.size(); i = next++) {
      try {
        const auto [a, n, r] = tuples[i];
        blocks[i] = compute_block(spec, a, n, r, times);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min<std::size_t>(
      tuples.size(), spec.threads > 0 ? static_cast<unsigned>(spec.threads) : hw);
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  // Report the first failing tuple in output order, whatever thread hit it.
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    if (!errors[i]) continue;
    const auto [a, n, r] = tuples[i];
    try {
      std::rethrow_exception(errors[i]);
    } catch (const Error &e) {
      fail(e.code(), "sweep (alpha0=" + round_trip(a) + ", nbar=" + round_trip(n) +
                         ", rate=" + round_trip(r) + "): " + e.what());
    }
  }

  Table t;
  echo_spec(t, "sweep", spec);
  t.columns = {"alpha0", "nbar", "rate", "t"};
  t.columns.insert(t.columns.end(), blocks[0].names.begin(), blocks[0].names.end());
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    const auto [a, n, r] = tuples[i];
    for (std::size_t k = 0; k < times.size(); ++k) {
      std::vector<double> row{a, n, r, times[k]};
      for (const auto &c : blocks[i].columns) row.push_back(c[k]);
      t.add_row(std::move(row));
    }
  }
  return t;
}

}  // namespace minienv
