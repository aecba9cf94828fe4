#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <span>

#include "runsrules/scheme.hpp"

namespace runsrules {

/// Seed of the independent stream used by one replication. Replication i of
/// a run with master seed s draws from mt19937_64 seeded with
/// splitmix64(s + (i + 1) * 0x9E3779B97F4A7C15). This derivation is part of
/// the reproducibility contract: results are bit-identical for a given
/// (seed, replications) pair no matter how replications are scheduled.
std::uint64_t substream_seed(std::uint64_t master_seed,
                             std::uint64_t replication);

/// Standard-normal stream over a dedicated mt19937_64 engine (Marsaglia
/// polar method), fully determined by its seed.
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed) : gen_(seed) {}

  double next();

 private:
  double uniform_pm1() {  // uniform on [-1, 1)
    return static_cast<double>(gen_() >> 11) * 0x1.0p-52 - 1.0;
  }

  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

struct SimulationEstimate {
  double mean = 0.0;
  double sd = 0.0;
  double standard_error = 0.0;  // sd / sqrt(replications)
  std::map<double, long> percentile_estimates;
  long replications = 0;
  std::uint64_t seed = 0;
};

/// One simulated run length: draw shifted normal variates, label them by the
/// scheme's zone partition, and stop at the first observation for which the
/// windowed predicate signals. Evaluates the rule predicate directly, never
/// the compiled automaton, so it is an independent oracle for the exact
/// engine. Throws if no signal occurs within 1e8 observations.
long simulate_run_length(const SchemeSpec& scheme, double shift,
                         NormalStream& stream);

/// Aggregates independent replications (>= 1000). Percentile estimates use
/// the same left-continuous definition as the exact engine. `threads` = 0
/// picks the hardware concurrency; the result does not depend on it.
SimulationEstimate estimate(const SchemeSpec& scheme, double shift,
                            long replications, std::uint64_t seed,
                            std::span<const double> levels, int threads = 0);

}  // namespace runsrules
