#include "runsrules/calibrate.hpp"

#include <cmath>
#include <stdexcept>

#include "runsrules/chain.hpp"

namespace runsrules {

namespace {

double arl0_at(const LabeledAutomaton& a, SchemeSpec scheme, double limit) {
  scheme.limit = limit;
  const auto probs =
      zone_probabilities(zone_partition(scheme), ShiftedProcess{0.0});
  return arl(chain_from(a, probs));
}

}  // namespace

CalibrationResult calibrate_limit(const SchemeSpec& scheme, double target_arl0,
                                  double tol) {
  if (scheme.kind == SchemeKind::western_electric) {
    throw std::invalid_argument(
        "Western Electric limits are fixed sigma multiples; nothing to "
        "calibrate");
  }
  if (!(target_arl0 > 1.0) || !std::isfinite(target_arl0)) {
    throw std::invalid_argument("target in-control ARL must exceed 1");
  }

  // The automaton depends only on the scheme structure; the limit enters
  // through the zone probabilities, so one compilation serves every
  // evaluation.
  const LabeledAutomaton automaton = compile_scheme(scheme);
  int iterations = 0;
  const auto evaluate = [&](double limit) {
    ++iterations;
    return arl0_at(automaton, scheme, limit);
  };

  // In-control ARL is continuous and strictly increasing in the limit.
  double lo = 0.1;
  double hi = 4.0;
  double arl_lo = evaluate(lo);
  double arl_hi = evaluate(hi);
  if (arl_lo > arl_hi) {
    throw std::logic_error("in-control ARL not increasing in the limit");
  }
  while (arl_hi < target_arl0) {
    hi *= 2.0;
    if (hi > 64.0) {
      throw std::runtime_error("target in-control ARL out of reach");
    }
    arl_hi = evaluate(hi);
  }
  while (arl_lo > target_arl0) {
    lo *= 0.5;
    if (lo < 1e-6) {
      throw std::runtime_error(
          "target in-control ARL below the scheme's achievable floor");
    }
    arl_lo = evaluate(lo);
  }

  double mid = 0.5 * (lo + hi);
  double arl_mid = evaluate(mid);
  while (std::abs(arl_mid - target_arl0) > tol * target_arl0 &&
         hi - lo > 1e-9) {
    if (arl_mid < target_arl0) {
      lo = mid;
    } else {
      hi = mid;
    }
    mid = 0.5 * (lo + hi);
    arl_mid = evaluate(mid);
  }

  CalibrationResult result;
  result.limit = mid;
  result.achieved_arl0 = arl_mid;
  result.iterations = iterations;
  result.bracket_width = hi - lo;
  return result;
}

}  // namespace runsrules
