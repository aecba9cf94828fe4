#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>
#include <vector>

#include "runsrules/normal.hpp"

using namespace runsrules;

namespace {

// Independent oracle: Phi via the alternating Taylor series of erf in long
// double. Converges to full precision for |x| <= 6.
long double phi_series(long double x) {
  const long double z = x / 1.41421356237309504880168872420969808L;
  long double term = z;
  long double sum = z;
  for (int n = 1; n <= 120; ++n) {
    term *= -z * z / n;
    sum += term / (2 * n + 1);
  }
  const long double erf = sum * 2.0L / 1.77245385090551602729816748334114518L;
  return 0.5L * (1.0L + erf);
}

ZonePartition sym3(double limit) {
  return {{-limit, 0.0, limit}, {"d", "l", "u", "U"}};
}

}  // namespace

TEST_CASE("normal_cdf at the center and the tails") {
  CHECK(normal_cdf(0.0) == 0.5);
  CHECK(std::abs(normal_cdf(3.0) - 0.9986501020) <= 1e-10);
  CHECK(std::abs(normal_cdf(-3.0) - (1.0 - normal_cdf(3.0))) <= 1e-15);
  CHECK(normal_cdf(-40.0) == 0.0);
  CHECK(normal_cdf(40.0) == 1.0);
  CHECK_THROWS_AS(normal_cdf(std::nan("")), std::invalid_argument);
}

TEST_CASE("normal_cdf against the series oracle") {
  for (double x = -6.0; x <= 6.0 + 1e-12; x += 0.0625) {
    const double want = static_cast<double>(phi_series(x));
    CHECK(std::abs(normal_cdf(x) - want) <= 1e-13);
  }
}

TEST_CASE("normal_cdf against brute-force quadrature") {
  // Composite Simpson over [-8, 8], cumulative values checked at 1000 grid
  // points against the closed CDF.
  const int panels_per_point = 64;  // even subdivisions between grid points
  const double lo = -8.0;
  const double hi = 8.0;
  const int points = 1000;
  const auto density = [](double x) {
    return std::exp(-0.5 * x * x) / 2.506628274631000502415765284811045;
  };
  double integral = 0.0;
  double prev = lo;
  double worst = 0.0;
  for (int i = 1; i <= points; ++i) {
    const double x = lo + (hi - lo) * i / points;
    const double h = (x - prev) / panels_per_point;
    for (int k = 0; k < panels_per_point; ++k) {
      const double a = prev + k * h;
      integral += h / 6.0 *
                  (density(a) + 4.0 * density(a + 0.5 * h) + density(a + h));
    }
    worst = std::max(worst, std::abs(normal_cdf(x) - integral));
    prev = x;
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("normal_cdf is monotone on a fine grid") {
  double last = 0.0;
  for (double x = -10.0; x <= 10.0; x += 0.01) {
    const double value = normal_cdf(x);
    CHECK(value >= last);
    last = value;
  }
}

TEST_CASE("zone probabilities for symmetric three-sigma cuts") {
  const auto probs = zone_probabilities(sym3(3.0), ShiftedProcess{0.0});
  REQUIRE(probs.size() == 4);
  CHECK(std::abs(probs[0] - 0.0013499) <= 1e-7);
  CHECK(std::abs(probs[1] - 0.4986501) <= 1e-7);
  CHECK(std::abs(probs[2] - 0.4986501) <= 1e-7);
  CHECK(std::abs(probs[3] - 0.0013499) <= 1e-7);
  CHECK(std::abs(probs[0] + probs[1] + probs[2] + probs[3] - 1.0) <= 1e-12);
  CHECK(std::abs(probs[0] - probs[3]) <= 1e-15);  // palindromic at zero shift
  CHECK(std::abs(probs[1] - probs[2]) <= 1e-15);
}

TEST_CASE("top zone probability under a unit shift") {
  const auto probs = zone_probabilities(sym3(1.781), ShiftedProcess{1.0});
  CHECK(std::abs(probs[3] - (1.0 - normal_cdf(0.781))) <= 1e-12);
  CHECK(std::abs(probs[3] - 0.2174) <= 5e-5);
}

TEST_CASE("zone probability properties on random partitions") {
  std::mt19937 gen(20240817);
  std::uniform_real_distribution<double> cut(-4.0, 4.0);
  std::uniform_real_distribution<double> shift(-3.0, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> cuts = {cut(gen), cut(gen), cut(gen)};
    std::sort(cuts.begin(), cuts.end());
    if (cuts[0] == cuts[1] || cuts[1] == cuts[2]) continue;
    const ZonePartition partition{cuts, {}};
    const double delta = shift(gen);
    const auto probs = zone_probabilities(partition, ShiftedProcess{delta});

    double total = 0.0;
    for (double p : probs) {
      CHECK(p >= 0.0);
      total += p;
    }
    CHECK(std::abs(total - 1.0) <= 1e-12);

    // Mirroring the partition and negating the shift reverses the vector.
    ZonePartition mirrored{{-cuts[2], -cuts[1], -cuts[0]}, {}};
    const auto reversed =
        zone_probabilities(mirrored, ShiftedProcess{-delta});
    for (std::size_t i = 0; i < probs.size(); ++i) {
      CHECK(std::abs(probs[i] - reversed[probs.size() - 1 - i]) <= 1e-15);
    }
  }
}

TEST_CASE("zone index ties resolve to the lower zone") {
  const ZonePartition partition = sym3(2.0);
  CHECK(zone_index(partition, -2.5) == 0);
  CHECK(zone_index(partition, -2.0) == 0);
  CHECK(zone_index(partition, -1.0) == 1);
  CHECK(zone_index(partition, 0.0) == 1);
  CHECK(zone_index(partition, 1e-12) == 2);
  CHECK(zone_index(partition, 2.0) == 2);
  CHECK(zone_index(partition, 2.0000001) == 3);
}

TEST_CASE("invalid partitions are rejected") {
  CHECK_THROWS_AS(zone_probabilities({{1.0, 1.0}, {}}, ShiftedProcess{0.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(zone_probabilities({{2.0, 1.0}, {}}, ShiftedProcess{0.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(zone_probabilities({{}, {}}, ShiftedProcess{0.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      zone_probabilities({{0.0, 1.0}, {"a", "b"}}, ShiftedProcess{0.0}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      zone_probabilities(sym3(1.0), ShiftedProcess{std::nan("")}),
      std::invalid_argument);
}
