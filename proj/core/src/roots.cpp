#include "specincl/roots.hpp"

#include <cmath>
#include <utility>

#include "specincl/errors.hpp"

namespace specincl {

double find_root_bracketed(const std::function<double(double)>& f, double lo, double hi,
                           double tol) {
  if (lo > hi) std::swap(lo, hi);
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (!std::isfinite(flo) || !std::isfinite(fhi) || std::signbit(flo) == std::signbit(fhi))
    throw DomainError("root bracket does not straddle a sign change");

  // A few plain bisections first: the brackets we get are often wide and the
  // functions oscillatory near their ends.
  for (int i = 0; i < 12 && hi - lo > tol; ++i) {
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    if (fm == 0.0) return mid;
    if (std::signbit(fm) == std::signbit(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }

  bool bisect_next = false;
  for (int iter = 0; iter < 200 && hi - lo > tol; ++iter) {
    double width = hi - lo;
    double x = 0.5 * (lo + hi);
    if (!bisect_next) {
      double s = lo - flo * (hi - lo) / (fhi - flo);
      // keep the secant point strictly inside, away from the ends
      double guard = 0.25 * tol;
      if (std::isfinite(s) && s > lo + guard && s < hi - guard) x = s;
    }
    double fx = f(x);
    if (fx == 0.0) return x;
    if (std::signbit(fx) == std::signbit(flo)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
    bisect_next = (hi - lo) > 0.5 * width;
  }
  return std::abs(flo) <= std::abs(fhi) ? lo : hi;
}

}  // namespace specincl
