#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "runsrules/calibrate.hpp"
#include "runsrules/chain.hpp"

namespace runsrules {

enum class OutputFormat { text, csv };

OutputFormat parse_format(std::string_view text);

/// Expands "start:stop:step" (with optional comma-appended explicit values)
/// or a plain comma list into a finite, strictly increasing shift grid.
std::vector<double> parse_shift_grid(std::string_view text);

struct TableColumn {
  SchemeSpec scheme;  // limit filled in
  CalibrationResult calibration;  // zeroed when the limit was not calibrated
  std::vector<RunLengthSummary> cells;  // one per shift
};

struct TableResult {
  int id = 0;
  double target_arl0 = 0.0;
  std::vector<double> shifts;
  std::vector<TableColumn> columns;
  // flagged[column][shift]: computed cell deviates from the published value
  // beyond tolerance.
  std::vector<std::vector<bool>> flagged;
  std::vector<std::string> notes;
};

/// Recomputes one of the five built-in reference tables from scratch:
/// limits are recalibrated (never copied from the published numbers), the
/// whole grid is evaluated, and any cell deviating from the published value
/// beyond tolerance is flagged with a note. Table 5's Western Electric
/// column footnotes which run-length variant lands closer to the published
/// in-control ARL. Throws std::invalid_argument for ids outside 1..5.
TableResult compute_table(int table_id, int we_run_length = 8);

std::string render_table(const TableResult& table, OutputFormat format);

struct EvaluateRequest {
  SchemeSpec scheme;  // limit set (not needed for Western Electric)
  std::vector<double> shifts;
  bool want_arl = false;
  bool want_sd = false;
  bool want_percentiles = false;
  bool want_sir = false;
};

/// One row per shift. CSV columns follow the fixed order
/// scheme,limit,shift,arl,sd,p5,p25,p50,p75,p95,sir with unrequested
/// statistic columns omitted.
std::string render_evaluate(const EvaluateRequest& request,
                            OutputFormat format);

}  // namespace runsrules
