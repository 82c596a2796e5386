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

#include "minienv/minienv.h"

#include <algorithm>
#include <exception>
#include <fstream>
#include <iostream>
#include <limits>
#include <new>
#include <sstream>
#include <string>

#include "minienv/bruteforce.hpp"
#include "minienv/commands.hpp"
#include "minienv/error.hpp"
#include "minienv/joint.hpp"
#include "minienv/validate.hpp"

struct minienv_runspec {
  minienv::RunSpec spec;
  std::string scratch;  // backs minienv_runspec_get
};

struct minienv_table {
  minienv::Table table;
};

struct minienv_report {
  minienv::ValidationReport report;
  std::string text;
};

namespace {

thread_local std::string last_error;

minienv_status record(minienv_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs f, translating exceptions into status codes.
template <class F>
minienv_status guard(F &&f) noexcept {
  try {
    f();
    return MINIENV_OK;
  } catch (const minienv::Error &e) {
    return record(static_cast<minienv_status>(e.code()),
                  std::string(minienv::error_code_name(e.code())) + ": " + e.what());
  } catch (const std::bad_alloc &) {
    return record(MINIENV_ERR_INTERNAL, "internal: out of memory");
  } catch (const std::exception &e) {
    return record(MINIENV_ERR_INTERNAL, std::string("internal: ") + e.what());
  } catch (...) {
    return record(MINIENV_ERR_INTERNAL, "internal: unknown exception");
  }
}

minienv_status null_argument(const char *what) {
  return record(MINIENV_ERR_INVALID_ARGUMENT,
                std::string("invalid-argument: ") + what + " is NULL");
}

minienv::ModelParams to_params(const minienv_params &p) {
  minienv::ModelParams out;
  switch (p.model) {
    case MINIENV_MODEL_MASTER: out.model = minienv::Model::MasterEq; break;
    case MINIENV_MODEL_AMPLITUDE: out.model = minienv::Model::Amplitude; break;
    case MINIENV_MODEL_KERR: out.model = minienv::Model::PhaseKerr; break;
    default: minienv::fail(minienv::ErrorCode::InvalidArgument, "unknown model");
  }
  out.alpha0 = minienv::Complex(p.alpha0_re, p.alpha0_im);
  out.nbar = p.nbar;
  out.rate = p.rate;
  out.omega = p.omega;
  out.validate();
  return out;
}

template <class Writer>
void write_to(const char *path, const minienv::Table &t, Writer &&writer) {
  if (std::string(path) == "-") {
    writer(std::cout, t);
    std::cout.flush();
    if (!std::cout) minienv::fail(minienv::ErrorCode::Io, "write to standard output failed");
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) minienv::fail(minienv::ErrorCode::Io, std::string("cannot open '") + path + "'");
  writer(f, t);
  f.close();
  if (!f) minienv::fail(minienv::ErrorCode::Io, std::string("write to '") + path + "' failed");
}

}  // namespace

extern "C" {

const char *minienv_version(void) { return minienv::library_version().data(); }

const char *minienv_status_name(minienv_status status) {
  switch (status) {
    case MINIENV_OK: return "ok";
    case MINIENV_ERR_INTERNAL: return "internal";
    default:
      if (status >= MINIENV_ERR_INVALID_ARGUMENT && status <= MINIENV_ERR_IO)
        return minienv::error_code_name(static_cast<minienv::ErrorCode>(status));
      return "unknown";
  }
}

const char *minienv_last_error(void) { return last_error.c_str(); }

int minienv_max_joint_dim(void) { return minienv::max_joint_dim(); }

minienv_status minienv_zeta(const minienv_params *p, double t, double *out) {
  if (!p || !out) return null_argument("argument");
  return guard([&] { *out = minienv::zeta(t, to_params(*p)); });
}

minienv_status minienv_plateau(const minienv_params *p, double *out) {
  if (!p || !out) return null_argument("argument");
  return guard([&] { *out = minienv::analytic_plateau(to_params(*p)); });
}

minienv_status minienv_decoherence_estimate(const minienv_params *p, double *out) {
  if (!p || !out) return null_argument("argument");
  return guard([&] { *out = minienv::decoherence_time_estimate(to_params(*p)); });
}

minienv_status minienv_recurrence_time(const minienv_params *p, double *out,
                                       int *has_recurrence) {
  if (!p || !out || !has_recurrence) return null_argument("argument");
  return guard([&] {
    const auto r = minienv::recurrence_time(to_params(*p));
    *has_recurrence = r.has_value() ? 1 : 0;
    *out = r.value_or(0.0);
  });
}

minienv_status minienv_series(const minienv_params *p, const double *times, size_t count,
                              int bruteforce, double *zeta_out) {
  if (!p || (count > 0 && (!times || !zeta_out))) return null_argument("argument");
  return guard([&] {
    const minienv::ModelParams mp = to_params(*p);
    const std::span<const double> ts(times, count);
    const auto zeta = bruteforce ? minienv::bruteforce_series(mp, ts).series.zeta
                                 : minienv::analytic_series(mp, ts).zeta;
    std::copy(zeta.begin(), zeta.end(), zeta_out);
  });
}

minienv_status minienv_measured_decoherence_time(const minienv_params *p, const double *times,
                                                 const double *zeta, size_t count,
                                                 double *out) {
  if (!p || !out || (count > 0 && (!times || !zeta))) return null_argument("argument");
  return guard([&] {
    minienv::EntropySeries s;
    s.params = to_params(*p);
    s.model = s.params.model;
    s.times.assign(times, times + count);
    s.zeta.assign(zeta, zeta + count);
    *out = minienv::measured_decoherence_time(s);
  });
}

minienv_status minienv_runspec_create(minienv_runspec **out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  return guard([&] { *out = new minienv_runspec{}; });
}

minienv_status minienv_runspec_parse(const char *text, const char *source,
                                     minienv_runspec **out) {
  if (!text || !out) return null_argument("argument");
  *out = nullptr;
  return guard([&] {
    std::istringstream in(text);
    auto spec = minienv::parse_runspec(in, source ? source : "<spec>");
    *out = new minienv_runspec{std::move(spec), {}};
  });
}

minienv_status minienv_runspec_load(const char *path, minienv_runspec **out) {
  if (!path || !out) return null_argument("argument");
  *out = nullptr;
  return guard([&] { *out = new minienv_runspec{minienv::load_runspec(path), {}}; });
}

minienv_status minienv_runspec_set(minienv_runspec *spec, const char *key, const char *value) {
  if (!spec || !key || !value) return null_argument("argument");
  // Keep the old spec if the new value is rejected.
  return guard([&] {
    minienv::RunSpec copy = spec->spec;
    copy.set(key, value);
    spec->spec = std::move(copy);
  });
}

minienv_status minienv_runspec_validate(const minienv_runspec *spec) {
  if (!spec) return null_argument("spec");
  return guard([&] { spec->spec.validate(); });
}

const char *minienv_runspec_get(minienv_runspec *spec, const char *key) {
  if (!spec || !key) {
    null_argument("argument");
    return nullptr;
  }
  for (auto &[k, v] : spec->spec.echo()) {
    if (k == key) {
      spec->scratch = v;
      return spec->scratch.c_str();
    }
  }
  record(MINIENV_ERR_USAGE, std::string("usage: unknown field '") + key + "'");
  return nullptr;
}

void minienv_runspec_free(minienv_runspec *spec) { delete spec; }

minienv_status minienv_figure(int id, size_t points, double tmax, minienv_table **out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  return guard([&] {
    *out = new minienv_table{
        minienv::figure_table(id, points > 0 ? points : 2000, tmax > 0.0 ? tmax : 3.0)};
  });
}

minienv_status minienv_simulate(const minienv_runspec *spec, minienv_table **out) {
  if (!spec || !out) return null_argument("argument");
  *out = nullptr;
  return guard([&] { *out = new minienv_table{minienv::simulate_table(spec->spec)}; });
}

minienv_status minienv_sweep(const minienv_runspec *spec, minienv_table **out) {
  if (!spec || !out) return null_argument("argument");
  *out = nullptr;
  return guard([&] { *out = new minienv_table{minienv::sweep_table(spec->spec)}; });
}

size_t minienv_table_rows(const minienv_table *t) { return t ? t->table.rows.size() : 0; }

size_t minienv_table_columns(const minienv_table *t) {
  return t ? t->table.columns.size() : 0;
}

const char *minienv_table_column_name(const minienv_table *t, size_t column) {
  if (!t || column >= t->table.columns.size()) return nullptr;
  return t->table.columns[column].c_str();
}

double minienv_table_value(const minienv_table *t, size_t row, size_t column) {
  if (!t || row >= t->table.rows.size() || column >= t->table.columns.size())
    return std::numeric_limits<double>::quiet_NaN();
  return t->table.rows[row][column];
}

size_t minienv_table_meta_count(const minienv_table *t) {
  return t ? t->table.metadata.size() : 0;
}

const char *minienv_table_meta_key(const minienv_table *t, size_t i) {
  if (!t || i >= t->table.metadata.size()) return nullptr;
  return t->table.metadata[i].first.c_str();
}

const char *minienv_table_meta_value(const minienv_table *t, size_t i) {
  if (!t || i >= t->table.metadata.size()) return nullptr;
  return t->table.metadata[i].second.c_str();
}

minienv_status minienv_table_write_csv(const minienv_table *t, const char *path) {
  if (!t || !path) return null_argument("argument");
  return guard([&] {
    write_to(path, t->table, [](std::ostream &o, const minienv::Table &x) {
      minienv::write_csv(o, x);
    });
  });
}

minienv_status minienv_table_write_dat(const minienv_table *t, const char *path) {
  if (!t || !path) return null_argument("argument");
  return guard([&] {
    write_to(path, t->table, [](std::ostream &o, const minienv::Table &x) {
      minienv::write_dat(o, x);
    });
  });
}

void minienv_table_free(minienv_table *t) { delete t; }

minienv_status minienv_validate(int cutoff_override, minienv_report **out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  if (cutoff_override < 0)
    return record(MINIENV_ERR_USAGE, "usage: cutoff override must be >= 0");
  return guard([&] {
    minienv::ValidationOptions opts;
    opts.cutoff_override = cutoff_override;
    auto report = minienv::run_validation(opts);
    std::string text = minienv::format_report(report);
    *out = new minienv_report{std::move(report), std::move(text)};
  });
}

int minienv_report_all_passed(const minienv_report *r) {
  return r && r->report.all_passed() ? 1 : 0;
}

size_t minienv_report_count(const minienv_report *r) {
  return r ? r->report.checks.size() : 0;
}

const char *minienv_report_name(const minienv_report *r, size_t i) {
  if (!r || i >= r->report.checks.size()) return nullptr;
  return r->report.checks[i].name.c_str();
}

int minienv_report_status(const minienv_report *r, size_t i) {
  if (!r || i >= r->report.checks.size()) return 0;
  const auto &c = r->report.checks[i];
  return !c.gated ? -1 : (c.passed ? 1 : 0);
}

const char *minienv_report_detail(const minienv_report *r, size_t i) {
  if (!r || i >= r->report.checks.size()) return nullptr;
  return r->report.checks[i].detail.c_str();
}

const char *minienv_report_text(const minienv_report *r) { return r ? r->text.c_str() : ""; }

void minienv_report_free(minienv_report *r) { delete r; }

}  // extern "C"
