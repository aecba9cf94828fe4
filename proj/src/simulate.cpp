#include "runsrules/simulate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace runsrules {

namespace {

constexpr long kObservationCap = 100'000'000;

std::uint64_t splitmix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

long run_once(const SchemeSpec& scheme, const ZonePartition& partition,
              int window_size, double shift, NormalStream& stream) {
  std::array<int, 16> ring{};
  std::array<int, 16> ordered{};
  for (long t = 1; t <= kObservationCap; ++t) {
    const double x = shift + stream.next();
    ring[(t - 1) % window_size] = zone_index(partition, x);
    const long len = std::min<long>(t, window_size);
    for (long k = 0; k < len; ++k) {
      ordered[k] = ring[(t - len + k) % window_size];
    }
    if (signals(scheme, {ordered.data(), static_cast<std::size_t>(len)})) {
      return t;
    }
  }
  throw std::runtime_error("simulated run exceeded the observation cap");
}

}  // namespace

std::uint64_t substream_seed(std::uint64_t master_seed,
                             std::uint64_t replication) {
  return splitmix64(master_seed + (replication + 1) * 0x9E3779B97F4A7C15ULL);
}

double NormalStream::next() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = uniform_pm1();
    v = uniform_pm1();
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double factor = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * factor;
  has_spare_ = true;
  return u * factor;
}

long simulate_run_length(const SchemeSpec& scheme, double shift,
                         NormalStream& stream) {
  return run_once(scheme, zone_partition(scheme), required_window(scheme),
                  shift, stream);
}

SimulationEstimate estimate(const SchemeSpec& scheme, double shift,
                            long replications, std::uint64_t seed,
                            std::span<const double> levels, int threads) {
  if (replications < 1000) {
    throw std::invalid_argument("estimate needs at least 1000 replications");
  }
  for (double level : levels) {
    if (!(level > 0.0 && level < 1.0)) {
      throw std::invalid_argument("percentile level must lie in (0, 1)");
    }
  }
  const ZonePartition partition = zone_partition(scheme);
  const int window_size = required_window(scheme);

  int workers = threads > 0
                    ? threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  workers = static_cast<int>(std::clamp<long>(workers, 1, replications));

  // Replication i is a pure function of (seed, i), so any split into chunks
  // yields the same sample; aggregation below runs in index order.
  std::vector<std::uint32_t> runs(replications);
  const auto worker = [&](long begin, long end) {
    for (long i = begin; i < end; ++i) {
      NormalStream stream(substream_seed(seed, static_cast<std::uint64_t>(i)));
      runs[i] = static_cast<std::uint32_t>(
          run_once(scheme, partition, window_size, shift, stream));
    }
  };
  if (workers == 1) {
    worker(0, replications);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      const long begin = replications * w / workers;
      const long end = replications * (w + 1) / workers;
      pool.emplace_back(worker, begin, end);
    }
    for (auto& t : pool) t.join();
  }

  SimulationEstimate est;
  est.replications = replications;
  est.seed = seed;

  long double sum = 0.0L;
  for (long i = 0; i < replications; ++i) sum += runs[i];
  const long double mean = sum / replications;
  long double sq = 0.0L;
  for (long i = 0; i < replications; ++i) {
    const long double d = runs[i] - mean;
    sq += d * d;
  }
  est.mean = static_cast<double>(mean);
  est.sd = static_cast<double>(std::sqrt(sq / (replications - 1)));
  est.standard_error = est.sd / std::sqrt(static_cast<double>(replications));

  if (!levels.empty()) {
    std::vector<std::uint32_t> sorted(runs);
    std::sort(sorted.begin(), sorted.end());
    for (double level : levels) {
      const long rank = static_cast<long>(
          std::ceil(level * static_cast<double>(replications) - 1e-9));
      est.percentile_estimates[level] =
          sorted[std::clamp<long>(rank, 1, replications) - 1];
    }
  }
  return est;
}

}  // namespace runsrules
