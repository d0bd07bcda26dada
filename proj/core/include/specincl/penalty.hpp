#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace specincl {

// Inputs to the truncation penalties: off-diagonal block norms of the
// tridiagonal part, a bound on the remaining part, and the truncation size.
struct PenaltyParams {
  double r_lower = 0.0;
  double r_upper = 0.0;
  double r = 0.0;
  double c_norm = 0.0;
  std::size_t n = 1;

  // r is derived as r_lower + r_upper. Throws DomainError on negative or
  // non-finite input, or n == 0.
  static PenaltyParams make(double r_lower, double r_upper, double c_norm, std::size_t n);
};

// theta_n: the root in [pi/(2n+1), pi/(n+2)] of
//   2 sin(t/2) cos((n+1/2) t) + (r_L r_U / r^2) sin((n-1) t) = 0.
// Throws DegenerateError when r_L + r_U == 0.
double solve_theta(std::size_t n, double r_lower, double r_upper);

// Left-hand side of the theta equation; exposed for residual checks.
double theta_residual(std::size_t n, double r_lower, double r_upper, double t);

// epsilon_n = 2 r sin(theta_n / 2) + ||C||      (square truncations)
double eps_tau(const PenaltyParams& p);
// epsilon'_n = 2 r sin(pi / (2n)) + ||C||      (periodised truncations)
double eps_pi(const PenaltyParams& p);
// epsilon''_n = 2 r sin(pi / (2n + 2)) + ||C|| (one-sided truncations)
double eps_tau1(const PenaltyParams& p);

// Nonzero real weight vector w_1..w_n.
class WeightVector {
 public:
  explicit WeightVector(std::vector<double> w);
  std::size_t size() const { return w_.size(); }
  std::span<const double> values() const { return w_; }
  // Padded accessor: w_0 = w_{n+1} = 0.
  double at(std::ptrdiff_t j) const;

 private:
  std::vector<double> w_;
};

struct WeightFunctionals {
  double s = 0.0;        // sum w_j^2
  double t_minus = 0.0;  // sum (w_{j-1} - w_j)^2
  double t_plus = 0.0;   // sum (w_{j+1} - w_j)^2
  double t_per = 0.0;    // (w_1 + w_n)^2 + sum_{j<n} (w_{j+1} - w_j)^2
  double t = 0.0;        // w_1^2 + w_n^2 + sum_{j<n} (w_{j+1} - w_j)^2
};

WeightFunctionals functionals(const WeightVector& w);

enum class Variant { tau, pi, tau1 };

// Penalty term for a given weight profile:
//   tau:  r_L sqrt(T-/S) + r_U sqrt(T+/S)
//   pi:   r sqrt(Tper/S)
//   tau1: r sqrt(T/S)
double eta(const WeightVector& w, double r_lower, double r_upper, Variant variant);

// Closed-form minimum over w (for tau this is an upper bound on the minimum,
// attained when n == 1 or r_L r_U == 0). No ||C|| term.
double eta_closed_form(std::size_t n, double r_lower, double r_upper, Variant variant);

// Weight profiles at which the closed forms are attained (for tau, reached or
// undercut).
std::vector<WeightVector> analytic_weight_candidates(std::size_t n, double r_lower,
                                                     double r_upper, Variant variant);

}  // namespace specincl
