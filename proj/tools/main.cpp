// Copyright Contributors to the walshlab Project
// SPDX-License-Identifier: Apache-2.0
//
// walshlab: command-line surface of the dyadic harmonic analysis toolkit.
// Subcommands: transform, kernel, mean, maximal, converge, weights,
// counterexample, selfcheck. Exit codes: 0 ok, 1 failed selfcheck or
// precondition violation, 2 argument errors.

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "walshlab/counterexample.hpp"
#include "walshlab/dyadic.hpp"
#include "walshlab/hardy.hpp"
#include "walshlab/io.hpp"
#include "walshlab/parallel.hpp"
#include "walshlab/selfcheck.hpp"
#include "walshlab/signal.hpp"
#include "walshlab/summability.hpp"
#include "walshlab/systems.hpp"
#include "walshlab/weights.hpp"

namespace {

using walshlab::GridFunction;
using walshlab::MeanFamily;
using walshlab::MeanOrientation;
using walshlab::Monotonicity;
using walshlab::Resolution;
using walshlab::SystemKind;
using walshlab::WeightSequence;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

WeightSequence named_custom_weights(const std::string& name) {
  if (name == "k_plus_1") {
    return WeightSequence([](std::size_t k) { return static_cast<double>(k + 1); },
                          Monotonicity::NonDecreasing, "k_plus_1");
  }
  // anything else is a weights CSV path
  return walshlab::read_weights_csv_file(name);
}

// fejer | riesz | nlog | cesaro:a | u:a | v:a | b:a:b | custom:<name-or-csv>
MeanFamily parse_family(const std::string& text) {
  const auto parts = split(text, ':');
  const std::string& kind = parts[0];
  const auto want = [&](std::size_t n) {
    if (parts.size() != n) {
      throw CLI::ValidationError("--family", "bad family spec '" + text + "'");
    }
  };
  try {
    if (kind == "fejer") { want(1); return MeanFamily::fejer(); }
    if (kind == "riesz") { want(1); return MeanFamily::riesz(); }
    if (kind == "nlog") { want(1); return MeanFamily::norlund_log(); }
    if (kind == "cesaro") { want(2); return MeanFamily::cesaro(std::stod(parts[1])); }
    if (kind == "u") { want(2); return MeanFamily::inverse_cesaro(std::stod(parts[1])); }
    if (kind == "v") { want(2); return MeanFamily::power_v(std::stod(parts[1])); }
    if (kind == "b") { want(3); return MeanFamily::log_b(std::stod(parts[1]), std::stoi(parts[2])); }
    if (kind == "custom") {
      want(2);
      return MeanFamily::custom(named_custom_weights(parts[1]), MeanOrientation::TMean);
    }
  } catch (const CLI::Error&) {
    throw;
  } catch (const std::exception& e) {
    throw CLI::ValidationError("--family", "bad family spec '" + text + "': " + e.what());
  }
  throw CLI::ValidationError("--family", "unknown family '" + kind + "'");
}

struct InputOptions {
  std::string input_path;
  std::string signal_text;
  int resolution = 0;

  void attach(CLI::App* cmd) {
    auto* input = cmd->add_option("--input", input_path, "GridFunction CSV to read");
    auto* signal = cmd->add_option("--signal", signal_text,
                                   "signal generator, e.g. random:42 or walsh:5");
    auto* res = cmd->add_option("--resolution", resolution, "grid resolution N for --signal");
    signal->excludes(input);
    signal->needs(res);
  }

  GridFunction load() const {
    if (!input_path.empty()) return walshlab::read_grid_csv_file(input_path);
    if (!signal_text.empty()) {
      return walshlab::build_signal(walshlab::SignalSpec::parse(signal_text),
                                    Resolution(resolution));
    }
    throw CLI::ValidationError("input", "one of --input or --signal is required");
  }
};

nlohmann::json cell_to_json(const std::string& cell) {
  if (!cell.empty()) {
    std::size_t digits = cell[0] == '-' ? 1 : 0;
    if (digits < cell.size() &&
        cell.find_first_not_of("0123456789", digits) == std::string::npos) {
      return nlohmann::json(std::stoll(cell));
    }
  }
  try {
    std::size_t used = 0;
    const double v = std::stod(cell, &used);
    if (used == cell.size()) return nlohmann::json(v);  // NaN dumps as null
  } catch (const std::exception&) {
  }
  return nlohmann::json(cell);
}

nlohmann::json table_to_json(const walshlab::Table& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json obj;
    for (std::size_t c = 0; c < table.columns.size() && c < row.size(); ++c) {
      obj[table.columns[c]] = cell_to_json(row[c]);
    }
    rows.push_back(std::move(obj));
  }
  return rows;
}

void emit_table(const walshlab::Table& table, const std::string& out_path, bool as_json) {
  if (out_path.empty()) {
    if (as_json) {
      std::cout << table_to_json(table).dump(2) << "\n";
    } else {
      table.write_csv(std::cout);
    }
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open '" + out_path + "' for writing");
  if (as_json) {
    out << table_to_json(table).dump(2) << "\n";
  } else {
    table.write_csv(out);
  }
}

int run(int argc, char** argv) {
  CLI::App app{"walshlab: Walsh / Walsh-Kaczmarz transforms, summability means,\n"
               "maximal operators, Hardy-space diagnostics, divergence experiments"};
  app.require_subcommand(1);

  unsigned threads = 1;
  app.add_option("--threads", threads, "worker threads for parallel sweeps")
      ->envname("WALSHLAB_THREADS")
      ->check(CLI::Range(1u, 256u));
  // subcommand callbacks run once parsing is complete, so `threads` is final
  const auto apply_threads = [&threads] { walshlab::set_thread_count(threads); };

  int exit_code = 0;

  // ---- transform ----------------------------------------------------------
  auto* transform = app.add_subcommand("transform", "Fourier coefficients of a signal");
  struct {
    InputOptions in;
    std::string system = "walsh";
    std::string out;
    bool inverse = false;
  } tr;
  tr.in.attach(transform);
  transform->add_option("--system", tr.system, "walsh|kaczmarz")
      ->check(CLI::IsMember({"walsh", "kaczmarz"}));
  transform->add_option("--out", tr.out, "output CSV")->required();
  transform->add_flag("--inverse", tr.inverse,
                      "treat --input as a SpectralCoeffs CSV and synthesize the signal");
  transform->callback([&] {
    apply_threads();
    if (tr.inverse) {
      if (tr.in.input_path.empty()) {
        throw CLI::ValidationError("--inverse", "needs --input with a coefficients CSV");
      }
      const auto coeffs = walshlab::read_coeffs_csv_file(tr.in.input_path);
      walshlab::write_grid_csv(tr.out, walshlab::synthesize(coeffs));
      return;
    }
    const auto f = tr.in.load();
    walshlab::write_coeffs_csv(tr.out,
                               walshlab::fourier_coeffs(f, walshlab::system_from_string(tr.system)));
  });

  // ---- kernel --------------------------------------------------------------
  auto* kernel = app.add_subcommand("kernel", "Dirichlet / Fejer / T kernels");
  struct {
    std::string type;
    std::size_t n = 0;
    std::string family;
    std::string system = "walsh";
    int resolution = 0;
    std::string out;
  } ke;
  kernel->add_option("--type", ke.type, "dirichlet|fejer|t")
      ->required()
      ->check(CLI::IsMember({"dirichlet", "fejer", "t"}));
  kernel->add_option("--n", ke.n, "kernel order")->required();
  kernel->add_option("--family", ke.family, "weight family for --type t");
  kernel->add_option("--system", ke.system)->check(CLI::IsMember({"walsh", "kaczmarz"}));
  kernel->add_option("--resolution", ke.resolution, "grid resolution N")->required();
  kernel->add_option("--out", ke.out, "output CSV")->required();
  kernel->callback([&] {
    apply_threads();
    const Resolution res(ke.resolution);
    const SystemKind system = walshlab::system_from_string(ke.system);
    GridFunction g = GridFunction::zero(res);
    std::string family_name = ke.type;
    if (ke.type == "dirichlet") {
      g = walshlab::dirichlet_kernel(ke.n, system, res);
    } else if (ke.type == "fejer") {
      g = walshlab::fejer_kernel(ke.n, system, res);
    } else {
      if (ke.family.empty()) throw CLI::ValidationError("--family", "required for --type t");
      const MeanFamily family = parse_family(ke.family);
      g = walshlab::t_kernel(ke.n, family.weights(), system, res);
      family_name = family.name();
    }
    walshlab::write_grid_csv(ke.out, g,
                             {{"family", family_name},
                              {"n", std::to_string(ke.n)},
                              {"system", ke.system}});
  });

  // ---- mean ----------------------------------------------------------------
  auto* mean_cmd = app.add_subcommand("mean", "n-th summability mean of a signal");
  struct {
    InputOptions in;
    std::string family;
    std::size_t n = 0;
    std::string orientation;
    std::string system = "walsh";
    std::string out;
  } me;
  me.in.attach(mean_cmd);
  mean_cmd->add_option("--family", me.family, "fejer|riesz|cesaro:a|u:a|v:a|b:a:b|nlog|custom:<csv>")
      ->required();
  mean_cmd->add_option("--n", me.n, "mean order")->required();
  mean_cmd->add_option("--orientation", me.orientation, "t|norlund (defaults to the family's)")
      ->check(CLI::IsMember({"t", "norlund"}));
  mean_cmd->add_option("--system", me.system)->check(CLI::IsMember({"walsh", "kaczmarz"}));
  mean_cmd->add_option("--out", me.out, "output CSV")->required();
  mean_cmd->callback([&] {
    apply_threads();
    MeanFamily family = parse_family(me.family);
    if (!me.orientation.empty()) {
      family = family.with_orientation(me.orientation == "t" ? MeanOrientation::TMean
                                                             : MeanOrientation::Norlund);
    }
    const auto f = me.in.load();
    const auto result =
        walshlab::mean(f, me.n, family, walshlab::system_from_string(me.system));
    walshlab::write_grid_csv(me.out, result,
                             {{"family", family.name()},
                              {"n", std::to_string(me.n)},
                              {"system", me.system},
                              {"orientation", to_string(family.orientation())}});
  });

  // ---- maximal ---------------------------------------------------------------
  auto* maximal = app.add_subcommand("maximal", "maximal operator sweep sup_n |mean_n f|");
  struct {
    InputOptions in;
    std::string family;
    std::size_t n_max = 0;
    std::string orientation;
    std::string system = "walsh";
    std::string out;
    bool json = false;
  } mx;
  mx.in.attach(maximal);
  maximal->add_option("--family", mx.family)->required();
  maximal->add_option("--nmax", mx.n_max, "sweep n = 1..nmax")->required();
  maximal->add_option("--orientation", mx.orientation, "t|norlund (defaults to the family's)")
      ->check(CLI::IsMember({"t", "norlund"}));
  maximal->add_option("--system", mx.system)->check(CLI::IsMember({"walsh", "kaczmarz"}));
  maximal->add_option("--out", mx.out, "output CSV for the maximal function")->required();
  maximal->add_flag("--json", mx.json, "print the summary as JSON");
  maximal->callback([&] {
    apply_threads();
    MeanFamily family = parse_family(mx.family);
    if (!mx.orientation.empty()) {
      family = family.with_orientation(mx.orientation == "t" ? MeanOrientation::TMean
                                                             : MeanOrientation::Norlund);
    }
    const auto f = mx.in.load();
    const auto m = walshlab::maximal_operator(f, family, mx.n_max,
                                              walshlab::system_from_string(mx.system));
    walshlab::write_grid_csv(mx.out, m,
                             {{"family", family.name()},
                              {"nmax", std::to_string(mx.n_max)},
                              {"system", mx.system}});
    const double sup = walshlab::sup_norm(m);
    if (mx.json) {
      nlohmann::json summary{{"family", family.name()},
                             {"nmax", mx.n_max},
                             {"system", mx.system},
                             {"sup_norm", sup}};
      std::cout << summary.dump(2) << "\n";
    } else {
      std::cout << "sup_norm=" << walshlab::format_double(sup) << "\n";
    }
  });

  // ---- converge ---------------------------------------------------------------
  auto* converge = app.add_subcommand("converge", "per-n approximation errors of a family");
  struct {
    InputOptions in;
    std::string family;
    std::size_t n_max = 0;
    std::string system = "walsh";
    std::string out;
    bool json = false;
  } cv;
  cv.in.attach(converge);
  converge->add_option("--family", cv.family)->required();
  converge->add_option("--nmax", cv.n_max)->required();
  converge->add_option("--system", cv.system)->check(CLI::IsMember({"walsh", "kaczmarz"}));
  converge->add_option("--out", cv.out, "output table (stdout when omitted)");
  converge->add_flag("--json", cv.json, "emit the table as JSON");
  converge->callback([&] {
    apply_threads();
    const MeanFamily family = parse_family(cv.family);
    const auto f = cv.in.load();
    const auto coeffs =
        walshlab::fourier_coeffs(f, walshlab::system_from_string(cv.system));
    walshlab::Table table;
    table.columns = {"n", "sup_error", "l1_error"};
    for (std::size_t n = 1; n <= cv.n_max; ++n) {
      if (!(family.weights().Q(n) > 0.0)) continue;  // mean undefined
      const auto diff = walshlab::mean(coeffs, n, family) - f;
      table.rows.push_back({std::to_string(n),
                            walshlab::format_double(walshlab::sup_norm(diff)),
                            walshlab::format_double(walshlab::lp_norm(diff, 1.0))});
    }
    emit_table(table, cv.out, cv.json);
  });

  // ---- weights ---------------------------------------------------------------
  auto* weights = app.add_subcommand("weights", "weight-sequence diagnostics table");
  struct {
    std::string family;
    std::size_t n_max = 0;
    std::string out;
    bool json = false;
  } wd;
  weights->add_option("--family", wd.family)->required();
  weights->add_option("--nmax", wd.n_max)->required();
  weights->add_option("--out", wd.out, "output table (stdout when omitted)");
  weights->add_flag("--json", wd.json, "emit the table as JSON");
  weights->callback([&] {
    apply_threads();
    const MeanFamily family = parse_family(wd.family);
    const auto diag = walshlab::weight_diagnostics(family.weights(), wd.n_max);
    emit_table(walshlab::to_table(diag), wd.out, wd.json);
    if (!wd.out.empty()) {
      std::cout << "node_sup=" << walshlab::format_double(diag.node_sup)
                << " cond1_inf=" << walshlab::format_double(diag.cond1_inf) << "\n";
    }
  });

  // ---- counterexample ----------------------------------------------------------
  auto* counter = app.add_subcommand("counterexample",
                                     "divergence experiment for the lacunary-atom martingale");
  struct {
    double p = 0.25;
    std::vector<int> alphas;
    std::string weights_spec;
    int resolution = 8;
    std::string out;
    std::string atom_report;
    bool json = false;
  } cx;
  counter->add_option("--p", cx.p, "exponent in (0, 1/2)")->required();
  counter->add_option("--alphas", cx.alphas, "gap sequence, e.g. 1,3,5,7")
      ->required()
      ->delimiter(',');
  counter->add_option("--weights", cx.weights_spec,
                      "family name or custom:<name-or-csv>, e.g. custom:k_plus_1")
      ->required();
  counter->add_option("--resolution", cx.resolution, "grid resolution N")->required();
  counter->add_option("--out", cx.out, "divergence table (stdout when omitted)");
  counter->add_option("--atom-report", cx.atom_report,
                      "write the per-block p-atom certification as a JSON array");
  counter->add_flag("--json", cx.json, "emit the table as JSON");
  counter->callback([&] {
    apply_threads();
    const walshlab::CounterexampleSpec spec{cx.p, cx.alphas};
    const auto parts = split(cx.weights_spec, ':');
    const WeightSequence w = parts[0] == "custom" && parts.size() == 2
                                 ? named_custom_weights(parts[1])
                                 : parse_family(cx.weights_spec).weights();
    const Resolution res(cx.resolution);
    const auto report = walshlab::divergence_experiment(spec, w, res);
    emit_table(walshlab::to_table(report), cx.out, cx.json);
    if (!cx.atom_report.empty()) {
      std::ofstream out(cx.atom_report);
      if (!out) throw std::runtime_error("cannot open '" + cx.atom_report + "' for writing");
      out << "[";
      for (std::size_t k = 0; k < spec.terms(); ++k) {
        const auto atom = walshlab::counterexample_atom(spec, k, res);
        const auto atom_report =
            walshlab::is_p_atom(atom.values, spec.p, atom.support);
        out << (k ? ",\n " : "") << walshlab::atom_report_json(atom_report);
      }
      out << "]\n";
    }
  });

  // ---- selfcheck ----------------------------------------------------------------
  auto* selfcheck = app.add_subcommand("selfcheck", "run the exact-identity suite");
  selfcheck->callback([&] {
    apply_threads();
    bool all_pass = true;
    for (const auto& result : walshlab::run_selfcheck()) {
      std::cout << (result.pass ? "[PASS] " : "[FAIL] ") << result.name << " (" << result.detail
                << ")\n";
      all_pass = all_pass && result.pass;
    }
    if (!all_pass) exit_code = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
