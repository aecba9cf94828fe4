#pragma once

#include <span>
#include <string>
#include <string_view>

#include "runsrules/normal.hpp"

namespace runsrules {

enum class SchemeKind { basic, modified, western_electric };

// Zone labels for basic/modified schemes, ordered by position on the axis.
inline constexpr int kBeyondLower = 0;  // x <= -L
inline constexpr int kBelowCenter = 1;  // -L < x <= 0
inline constexpr int kAboveCenter = 2;  // 0 < x <= L
inline constexpr int kBeyondUpper = 3;  // x > L

// Western Electric labels, ordered by position on the axis: lower-side
// bands 3,2,1,0 (labels 0..3), then upper-side bands 0,1,2,3 (labels 4..7).
inline constexpr int kWeAlphabet = 8;

/// Band of a Western Electric label: 0 = within 1 sigma of the center line,
/// 1 = (1,2] sigma, 2 = (2,3] sigma, 3 = beyond 3 sigma.
inline int we_band(int label) { return label >= 4 ? label - 4 : 3 - label; }

/// True when the label lies above the center line.
inline bool we_upper(int label) { return label >= 4; }

/// A runs-rule scheme plus its control-limit half-width.
///
/// basic r/m: r of the last m points beyond the same control limit.
/// modified r/m: r points beyond one limit separated only by points between
/// the center line and that limit, at most m - r of them in total.
/// western_electric: the four composite zone tests at fixed 1/2/3 sigma
/// limits; `we_run_length` is the same-side run length of the fourth test.
struct SchemeSpec {
  SchemeKind kind = SchemeKind::basic;
  int r = 1;
  int m = 1;
  int we_run_length = 8;
  double limit = 0.0;  // half-width of symmetric limits; unused for WE

  std::string text() const;  // canonical name: "2/3", "M-3/5", "C1234"
};

/// Parses "r/m", "M-r/m", "C1234" or "WE" (case-sensitive, no whitespace).
/// The control limit is attached separately. Throws std::invalid_argument
/// on malformed text, r > m, r or m < 1, or m > 12.
SchemeSpec parse_scheme(std::string_view text);

/// Number of zone labels the scheme distinguishes (4 or 8).
int alphabet_size(const SchemeSpec& scheme);

/// Number of trailing observations the signal predicate can depend on.
int required_window(const SchemeSpec& scheme);

/// The zone partition induced by the scheme's control limits. Requires a
/// positive limit for basic/modified schemes.
ZonePartition zone_partition(const SchemeSpec& scheme);

/// Out-of-control predicate. `window` holds the zone labels of the most
/// recent min(t, required_window) observations, oldest first; the newest
/// label is the current observation. Throws if the window is longer than
/// required_window.
bool signals(const SchemeSpec& scheme, std::span<const int> window);

// The four Western Electric zone tests, individually. signals() for a
// western_electric scheme is their disjunction; the automaton builder
// evaluates them separately. Each counting test looks at the last
// min(t, span) labels of its window, matching the basic r/m convention for
// short start-up histories.
bool we_two_of_three(std::span<const int> window);   // 2 of 3 beyond 2 sigma
bool we_four_of_five(std::span<const int> window);   // 4 of 5 beyond 1 sigma
bool we_same_side_run(std::span<const int> window, int run_length);

}  // namespace runsrules
