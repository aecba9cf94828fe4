#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "runsrules/calibrate.hpp"
#include "runsrules/chain.hpp"
#include "runsrules/simulate.hpp"
#include "runsrules/tables.hpp"

namespace {

using namespace runsrules;

std::string fmt(const char* pattern, double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot open output file " + out_path);
  }
  file << text;
}

struct CommonOptions {
  std::string format = "text";
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonOptions& options) {
  cmd->add_option("--format", options.format, "Output format: text or csv")
      ->check(CLI::IsMember({"text", "csv"}));
  cmd->add_option("--out", options.out_path,
                  "Write output to this file instead of stdout");
}

std::string run_calibrate(const std::string& scheme_text, double target,
                          double tol, OutputFormat format) {
  const SchemeSpec scheme = parse_scheme(scheme_text);
  const CalibrationResult result = calibrate_limit(scheme, target, tol);
  std::ostringstream out;
  if (format == OutputFormat::csv) {
    out << "scheme,target_arl0,limit,achieved_arl0,iterations,bracket_width\n"
        << scheme.text() << "," << fmt("%.4f", target) << ","
        << fmt("%.6f", result.limit) << "," << fmt("%.4f", result.achieved_arl0)
        << "," << result.iterations << "," << fmt("%.3g", result.bracket_width)
        << "\n";
  } else {
    out << "scheme " << scheme.text() << "  target ARL0 " << fmt("%.4f", target)
        << "\n"
        << "limit " << fmt("%.6f", result.limit) << "\n"
        << "achieved ARL0 " << fmt("%.4f", result.achieved_arl0)
        << "  iterations " << result.iterations << "  bracket width "
        << fmt("%.3g", result.bracket_width) << "\n";
  }
  return out.str();
}

std::string run_simulate(SchemeSpec scheme, double shift, long reps,
                         std::uint64_t seed, int threads, OutputFormat format) {
  const std::vector<double> levels = {0.05, 0.25, 0.50, 0.75, 0.95};
  const SimulationEstimate sim =
      estimate(scheme, shift, reps, seed, levels, threads);
  const RunLengthSummary exact = summarize(scheme, shift, levels);
  const double z = (sim.mean - exact.arl) / sim.standard_error;

  std::ostringstream out;
  const std::string limit_text =
      scheme.kind == SchemeKind::western_electric ? "3"
                                                  : fmt("%.6f", scheme.limit);
  if (format == OutputFormat::csv) {
    out << "scheme,limit,shift,replications,seed,sim_mean,sim_sd,sim_se,"
           "exact_arl,exact_sd,z\n";
    out << scheme.text() << "," << limit_text << "," << fmt("%.2f", shift)
        << "," << reps << "," << seed << "," << fmt("%.4f", sim.mean) << ","
        << fmt("%.4f", sim.sd) << "," << fmt("%.4f", sim.standard_error) << ","
        << fmt("%.4f", exact.arl) << "," << fmt("%.4f", exact.sd) << ","
        << fmt("%.2f", z) << "\n";
  } else {
    out << "scheme " << scheme.text() << "  limit " << limit_text << "  shift "
        << fmt("%.2f", shift) << "\n";
    out << "replications " << reps << "  seed " << seed << "\n";
    out << "simulated mean " << fmt("%.4f", sim.mean) << "  sd "
        << fmt("%.4f", sim.sd) << "  se " << fmt("%.4f", sim.standard_error)
        << "\n";
    out << "exact ARL " << fmt("%.4f", exact.arl) << "  SD "
        << fmt("%.4f", exact.sd) << "\n";
    out << "z-score " << fmt("%.2f", z) << "\n";
    out << "percentiles p5/p25/p50/p75/p95:\n  simulated";
    for (double level : levels) out << " " << sim.percentile_estimates.at(level);
    out << "\n  exact    ";
    for (double level : levels) out << " " << exact.percentiles.at(level);
    out << "\n";
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact run-length analysis for Shewhart charts with runs rules.\n"
      "Schemes: r/m (e.g. 2/3), M-r/m (e.g. M-3/5), C1234."};
  app.require_subcommand(1);

  // calibrate
  auto* cal = app.add_subcommand(
      "calibrate", "Find the control limit for a target in-control ARL");
  std::string cal_scheme;
  double cal_target = 370.4;
  double cal_tol = 1e-6;
  CommonOptions cal_common;
  cal->add_option("--scheme", cal_scheme, "Scheme name, e.g. 2/3 or M-3/5")
      ->required();
  cal->add_option("--arl0", cal_target, "Target in-control ARL")->required();
  cal->add_option("--tol", cal_tol, "Relative ARL tolerance (default 1e-6)");
  add_common(cal, cal_common);

  // evaluate
  auto* eval = app.add_subcommand(
      "evaluate", "Exact run-length statistics over a shift grid");
  std::string eval_scheme;
  double eval_limit = 0.0;
  std::string eval_shifts;
  std::string eval_stats = "arl,sd";
  int eval_we_run = 8;
  CommonOptions eval_common;
  eval->add_option("--scheme", eval_scheme)->required();
  eval->add_option("--limit", eval_limit,
                   "Control limit half-width (basic/modified schemes)");
  eval->add_option("--shifts", eval_shifts,
                   "Shift grid: start:stop:step with optional ,extra values")
      ->required();
  eval->add_option("--stats", eval_stats,
                   "Comma list from arl,sd,percentiles,sir (default arl,sd)");
  eval->add_option("--we-run-length", eval_we_run,
                   "Same-side run length of the fourth WE rule (8 or 9)")
      ->check(CLI::IsMember({8, 9}));
  add_common(eval, eval_common);

  // table
  auto* tab = app.add_subcommand(
      "table", "Recompute one of the five built-in reference tables");
  int table_id = 0;
  int tab_we_run = 8;
  CommonOptions tab_common;
  tab->add_option("id", table_id, "Table number 1..5")
      ->required()
      ->check(CLI::Range(1, 5));
  tab->add_option("--we-run-length", tab_we_run)->check(CLI::IsMember({8, 9}));
  add_common(tab, tab_common);

  // simulate
  auto* sim = app.add_subcommand(
      "simulate", "Monte Carlo estimate with exact-vs-simulated comparison");
  std::string sim_scheme;
  double sim_limit = 0.0;
  double sim_shift = 0.0;
  long sim_reps = 0;
  std::uint64_t sim_seed = 0;
  int sim_threads = 0;
  int sim_we_run = 8;
  CommonOptions sim_common;
  sim->add_option("--scheme", sim_scheme)->required();
  sim->add_option("--limit", sim_limit);
  sim->add_option("--shift", sim_shift)->required();
  sim->add_option("--reps", sim_reps, "Replications (at least 1000)")
      ->required();
  sim->add_option("--seed", sim_seed, "Master seed (default 0)");
  sim->add_option("--threads", sim_threads,
                  "Worker threads; 0 = hardware (result is identical)");
  sim->add_option("--we-run-length", sim_we_run)->check(CLI::IsMember({8, 9}));
  add_common(sim, sim_common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*cal) {
      write_output(run_calibrate(cal_scheme, cal_target, cal_tol,
                                 parse_format(cal_common.format)),
                   cal_common.out_path);
    } else if (*eval) {
      EvaluateRequest request;
      request.scheme = parse_scheme(eval_scheme);
      request.scheme.we_run_length = eval_we_run;
      if (request.scheme.kind == SchemeKind::western_electric) {
        if (eval->count("--limit") > 0) {
          throw std::invalid_argument(
              "C1234 uses fixed 1/2/3-sigma limits; drop --limit");
        }
      } else {
        if (eval->count("--limit") == 0) {
          throw std::invalid_argument("this scheme needs --limit");
        }
        request.scheme.limit = eval_limit;
      }
      request.shifts = parse_shift_grid(eval_shifts);
      std::stringstream stats(eval_stats);
      std::string token;
      while (std::getline(stats, token, ',')) {
        if (token == "arl") {
          request.want_arl = true;
        } else if (token == "sd") {
          request.want_sd = true;
        } else if (token == "percentiles") {
          request.want_percentiles = true;
        } else if (token == "sir") {
          request.want_sir = true;
        } else {
          throw std::invalid_argument("unknown statistic \"" + token + "\"");
        }
      }
      write_output(render_evaluate(request, parse_format(eval_common.format)),
                   eval_common.out_path);
    } else if (*tab) {
      const TableResult table = compute_table(table_id, tab_we_run);
      write_output(render_table(table, parse_format(tab_common.format)),
                   tab_common.out_path);
    } else if (*sim) {
      SchemeSpec scheme = parse_scheme(sim_scheme);
      scheme.we_run_length = sim_we_run;
      if (scheme.kind == SchemeKind::western_electric) {
        if (sim->count("--limit") > 0) {
          throw std::invalid_argument(
              "C1234 uses fixed 1/2/3-sigma limits; drop --limit");
        }
      } else {
        if (sim->count("--limit") == 0) {
          throw std::invalid_argument("this scheme needs --limit");
        }
        scheme.limit = sim_limit;
      }
      write_output(run_simulate(scheme, sim_shift, sim_reps, sim_seed,
                                sim_threads, parse_format(sim_common.format)),
                   sim_common.out_path);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
