#pragma once

#include <cmath>
#include <functional>

namespace specincl {

// Root of a continuous f on [lo, hi] with f(lo) and f(hi) of opposite sign
// (or zero). Bisection down to a coarse width, then safeguarded secant steps
// that never leave the current bracket. Returns a point within `tol` of a
// sign change. Throws DomainError if the bracket does not straddle a root.
double find_root_bracketed(const std::function<double(double)>& f, double lo, double hi,
                           double tol = 1e-13);

}  // namespace specincl
