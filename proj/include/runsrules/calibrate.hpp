#pragma once

#include "runsrules/scheme.hpp"

namespace runsrules {

struct CalibrationResult {
  double limit = 0.0;          // calibrated half-width
  double achieved_arl0 = 0.0;  // in-control ARL at that limit
  int iterations = 0;
  double bracket_width = 0.0;
};

/// Finds the control-limit half-width giving the target in-control ARL for
/// a basic/modified scheme. The in-control ARL is continuous and strictly
/// increasing in the limit, so a geometrically expanded bracket followed by
/// bisection converges unconditionally. Success means
/// |achieved - target| / target <= tol or bracket width <= 1e-9.
/// Throws when the target lies below the scheme's achievable floor or the
/// scheme is Western Electric (whose limits are fixed sigma multiples).
CalibrationResult calibrate_limit(const SchemeSpec& scheme, double target_arl0,
                                  double tol = 1e-6);

}  // namespace runsrules
