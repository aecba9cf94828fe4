#pragma once

#include <string>
#include <vector>

namespace runsrules {

/// Standard normal CDF. Absolute error below 1e-12 everywhere; saturates
/// to exactly 0/1 in the far tails.
double normal_cdf(double x);

/// Mean shift of the monitored process in units of its standard deviation
/// (in-control mean 0, sigma fixed at 1).
struct ShiftedProcess {
  double shift = 0.0;
};

/// Ordered cut points dividing the measurement axis into labeled zones.
/// Zone i is the interval (cuts[i-1], cuts[i]]: right-closed, left-open.
/// The first zone extends to -inf, the last to +inf, and a value exactly
/// on a cut belongs to the zone below it.
struct ZonePartition {
  std::vector<double> cuts;            // strictly increasing
  std::vector<std::string> labels;     // one per zone: cuts.size() + 1
};

void validate(const ZonePartition& partition);

/// Index of the zone containing x (tie on a cut resolves downward).
int zone_index(const ZonePartition& partition, double x);

/// Probability of landing in each zone when the process mean is shifted.
/// Entries are nonnegative and sum to 1 within 1e-12.
std::vector<double> zone_probabilities(const ZonePartition& partition,
                                       const ShiftedProcess& process);

}  // namespace runsrules
