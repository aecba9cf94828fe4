#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "runsrules/automaton.hpp"

namespace runsrules {

/// Absorbing Markov chain over the transient states of an automaton whose
/// labels carry the given zone probabilities. Row sums of the transient
/// block plus the absorption probability equal 1 for every state.
struct TransientChain {
  int state_count = 0;
  int initial = 0;
  // rows[i]: (target, probability) with duplicate targets merged.
  std::vector<std::vector<std::pair<int, double>>> rows;
  std::vector<double> absorb;  // probability of signaling on the next step
};

/// Imbeds an automaton into a transient chain. Throws on a dimension
/// mismatch between the automaton alphabet and the probability vector.
TransientChain chain_from(const LabeledAutomaton& a,
                          std::span<const double> zone_probs);

/// Expected run length from the initial state: a[initial] where
/// (I - Q) a = 1. Dense factorization up to 3000 states, stationary
/// iteration above; 1e-6 relative accuracy either way. Throws when the
/// scheme cannot signal under this distribution.
double arl(const TransientChain& chain);

/// Standard deviation of the run length, from the second-moment system
/// (I - Q) s = 1 + 2 Q a.
double sd(const TransientChain& chain);

/// P(N > n), by iterated vector-matrix products.
double survival(const TransientChain& chain, long n);

/// Smallest n >= 1 with P(N <= n) >= level, for 0 < level < 1.
long percentile(const TransientChain& chain, double level);

/// Semi-interquartile range (p75 - p25) / 2.
double sir(const TransientChain& chain);

/// All run-length statistics for one (scheme, limit, shift) triple.
struct RunLengthSummary {
  double arl = 0.0;
  double sd = 0.0;
  std::map<double, long> percentiles;  // level -> value
  double sir = 0.0;
};

/// One-pass orchestration: zones -> automaton -> chain -> statistics.
/// Percentiles are computed for `levels` (quartiles are always included so
/// sir is always available).
RunLengthSummary summarize(const SchemeSpec& scheme, double shift,
                           std::span<const double> levels);

/// Same, reusing an already compiled automaton for the scheme.
RunLengthSummary summarize(const LabeledAutomaton& a, const SchemeSpec& scheme,
                           double shift, std::span<const double> levels);

}  // namespace runsrules
