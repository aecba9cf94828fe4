#pragma once

#include <vector>

#include "runsrules/scheme.hpp"

namespace runsrules {

/// Deterministic finite automaton over zone labels. A transition to kSignal
/// is absorbing: the run ends with an out-of-control signal. For every label
/// sequence the automaton signals at exactly the first index where the
/// scheme's windowed predicate holds.
struct LabeledAutomaton {
  static constexpr int kSignal = -1;

  int alphabet = 0;
  int state_count = 0;
  int initial = 0;
  std::vector<int> step_table;  // state_count x alphabet, row-major

  int next(int state, int label) const {
    return step_table[static_cast<std::size_t>(state) * alphabet + label];
  }
};

/// Automaton whose states are the reachable label-history suffixes of length
/// <= m - 1 (shorter during start-up), for basic/modified schemes.
LabeledAutomaton build_window_automaton(const SchemeSpec& scheme);

/// Compressed Western Electric automaton: state = (last <= 4 transient
/// labels, current same-side run length capped at we_run_length - 1).
LabeledAutomaton build_we_automaton(int we_run_length);

/// Behaviorally equivalent automaton with minimal state count (partition
/// refinement with the signal sink as the sole accepting class).
LabeledAutomaton minimize(const LabeledAutomaton& a);

/// Builds and minimizes the automaton for any scheme kind.
LabeledAutomaton compile_scheme(const SchemeSpec& scheme);

}  // namespace runsrules
