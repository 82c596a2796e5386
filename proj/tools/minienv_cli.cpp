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

// Command-line front end. Talks to the library through the C interface only.

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "minienv/minienv.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

int exit_code(minienv_status s) {
  if (s == MINIENV_OK) return kExitOk;
  return s == MINIENV_ERR_USAGE ? kExitUsage : kExitFailure;
}

int report(minienv_status s) {
  if (s != MINIENV_OK) std::cerr << "minienv: " << minienv_last_error() << '\n';
  return exit_code(s);
}

struct SpecDeleter {
  void operator()(minienv_runspec *p) const { minienv_runspec_free(p); }
};
struct TableDeleter {
  void operator()(minienv_table *p) const { minienv_table_free(p); }
};
struct ReportDeleter {
  void operator()(minienv_report *p) const { minienv_report_free(p); }
};
using SpecPtr = std::unique_ptr<minienv_runspec, SpecDeleter>;
using TablePtr = std::unique_ptr<minienv_table, TableDeleter>;
using ReportPtr = std::unique_ptr<minienv_report, ReportDeleter>;

// Writes the CSV (stdout when path is empty) and the optional .dat mirror.
minienv_status emit(const minienv_table *t, const std::string &csv, const std::string &dat) {
  minienv_status s = minienv_table_write_csv(t, csv.empty() ? "-" : csv.c_str());
  if (s == MINIENV_OK && !dat.empty()) s = minienv_table_write_dat(t, dat.c_str());
  return s;
}

// Options shared by simulate and sweep. Every value stays text so the
// library reports malformed input with the field name.
struct SpecOptions {
  std::string spec_path;
  std::vector<std::pair<std::string, std::optional<std::string>>> fields{
      {"model", {}},    {"alpha0", {}},   {"alpha0_im", {}}, {"nbar", {}},
      {"rate", {}},     {"omega", {}},    {"tmin", {}},      {"tmax", {}},
      {"points", {}},   {"engine", {}},   {"output", {}},    {"dat", {}},
      {"cutoff_a", {}}, {"cutoff_b", {}}, {"tol_single", {}}, {"tol_joint", {}},
      {"tol_zeta3", {}}, {"step", {}},    {"threads", {}},
  };
  std::vector<std::string> sets;

  void attach(CLI::App *cmd, bool spec_required) {
    auto *opt = cmd->add_option("--spec", spec_path, "key=value run description");
    if (spec_required) opt->required();
    for (auto &[key, value] : fields) {
      std::string flag = "--" + key;
      for (char &c : flag)
        if (c == '_') c = '-';
      cmd->add_option(flag, value, "overrides '" + key + "'");
    }
    cmd->add_option("--set", sets, "extra key=value, applied last");
  }

  minienv_status build(SpecPtr &out) const {
    minienv_runspec *raw = nullptr;
    minienv_status s = spec_path.empty() ? minienv_runspec_create(&raw)
                                         : minienv_runspec_load(spec_path.c_str(), &raw);
    out.reset(raw);
    if (s != MINIENV_OK) return s;
    for (const auto &[key, value] : fields) {
      if (!value) continue;
      s = minienv_runspec_set(raw, key.c_str(), value->c_str());
      if (s != MINIENV_OK) return s;
    }
    for (const auto &kv : sets) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) {
        std::cerr << "minienv: --set expects key=value, got '" << kv << "'\n";
        return MINIENV_ERR_USAGE;
      }
      s = minienv_runspec_set(raw, kv.substr(0, eq).c_str(), kv.substr(eq + 1).c_str());
      if (s != MINIENV_OK) return s;
    }
    return minienv_runspec_validate(raw);
  }
};

int run_table_command(const SpecOptions &opts, bool sweep) {
  SpecPtr spec;
  if (minienv_status s = opts.build(spec); s != MINIENV_OK) return report(s);
  minienv_table *raw = nullptr;
  const minienv_status s = sweep ? minienv_sweep(spec.get(), &raw)
                                 : minienv_simulate(spec.get(), &raw);
  TablePtr table(raw);
  if (s != MINIENV_OK) return report(s);
  const std::string csv = minienv_runspec_get(spec.get(), "output");
  const std::string dat = minienv_runspec_get(spec.get(), "dat");
  return report(emit(table.get(), csv, dat));
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Decoherence of a coherent oscillator in minimal environments"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(minienv_version()));

  auto *figure = app.add_subcommand("figure", "closed-form curves of figures 1-5");
  int figure_id = 0;
  std::size_t figure_points = 2000;
  double figure_tmax = 3.0;
  std::string figure_out, figure_dat;
  figure->add_option("id", figure_id, "figure number, 1..5")->required();
  figure->add_option("--points", figure_points, "grid size")->capture_default_str();
  figure->add_option("--tmax", figure_tmax, "end of the scaled time axis")->capture_default_str();
  figure->add_option("--output,-o", figure_out, "CSV path (default stdout)");
  figure->add_option("--dat", figure_dat, "space-separated mirror");

  auto *simulate = app.add_subcommand("simulate", "one parameter set, analytic and/or brute force");
  SpecOptions simulate_opts;
  simulate_opts.attach(simulate, false);

  auto *sweep = app.add_subcommand("sweep", "cartesian product over alpha0, nbar and rate lists");
  SpecOptions sweep_opts;
  sweep_opts.attach(sweep, true);

  auto *validate = app.add_subcommand("validate", "cross-engine validation suite");
  int cutoff_override = 0;
  validate->add_option("--cutoff-override", cutoff_override,
                       "force every brute-force check onto this cutoff (failure-path hook)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*figure) {
    if (figure_points < 2 || !(figure_tmax > 0.0)) {
      std::cerr << "minienv: figure needs --points >= 2 and --tmax > 0\n";
      return kExitUsage;
    }
    minienv_table *raw = nullptr;
    const minienv_status s = minienv_figure(figure_id, figure_points, figure_tmax, &raw);
    TablePtr table(raw);
    if (s != MINIENV_OK) return report(s);
    return report(emit(table.get(), figure_out, figure_dat));
  }
  if (*simulate) return run_table_command(simulate_opts, false);
  if (*sweep) return run_table_command(sweep_opts, true);
  if (*validate) {
    minienv_report *raw = nullptr;
    const minienv_status s = minienv_validate(cutoff_override, &raw);
    ReportPtr r(raw);
    if (s != MINIENV_OK) return report(s);
    std::cout << minienv_report_text(r.get()) << std::flush;
    return minienv_report_all_passed(r.get()) ? kExitOk : kExitFailure;
  }
  return kExitUsage;
}
