#include "runsrules/normal.hpp"

#include <cmath>
#include <stdexcept>

namespace runsrules {

double normal_cdf(double x) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument("normal_cdf: argument must be finite");
  }
  // Phi(x) = erfc(-x / sqrt(2)) / 2. erfc keeps full relative accuracy in
  // the lower tail and saturates cleanly in the upper one.
  static const double kInvSqrt2 = 0.70710678118654752440;
  return 0.5 * std::erfc(-x * kInvSqrt2);
}

void validate(const ZonePartition& partition) {
  if (partition.cuts.empty()) {
    throw std::invalid_argument("zone partition needs at least one cut");
  }
  for (std::size_t i = 1; i < partition.cuts.size(); ++i) {
    if (!(partition.cuts[i - 1] < partition.cuts[i])) {
      throw std::invalid_argument("zone cuts must be strictly increasing");
    }
  }
  if (!partition.labels.empty() &&
      partition.labels.size() != partition.cuts.size() + 1) {
    throw std::invalid_argument("zone labels must be one per interval");
  }
}

int zone_index(const ZonePartition& partition, double x) {
  // Zone i is (cuts[i-1], cuts[i]], so the index is the number of cuts
  // strictly below x. Linear scan: partitions here have 3 or 7 cuts.
  int idx = 0;
  for (double cut : partition.cuts) {
    if (cut < x) ++idx;
  }
  return idx;
}

std::vector<double> zone_probabilities(const ZonePartition& partition,
                                       const ShiftedProcess& process) {
  validate(partition);
  if (!std::isfinite(process.shift)) {
    throw std::invalid_argument("zone_probabilities: shift must be finite");
  }
  const std::size_t zones = partition.cuts.size() + 1;
  std::vector<double> probs(zones);
  double below = 0.0;  // Phi(cuts[i-1] - shift), 0 at the open lower end
  for (std::size_t i = 0; i < partition.cuts.size(); ++i) {
    const double at_cut = normal_cdf(partition.cuts[i] - process.shift);
    probs[i] = std::max(0.0, at_cut - below);
    below = at_cut;
  }
  probs[zones - 1] = std::max(0.0, 1.0 - below);
  return probs;
}

}  // namespace runsrules
