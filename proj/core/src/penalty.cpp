#include "specincl/penalty.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "specincl/errors.hpp"
#include "specincl/roots.hpp"

namespace specincl {

using std::numbers::pi;

PenaltyParams PenaltyParams::make(double r_lower, double r_upper, double c_norm, std::size_t n) {
  for (double v : {r_lower, r_upper, c_norm})
    if (!std::isfinite(v) || v < 0.0) throw DomainError("penalty inputs must be finite and >= 0");
  if (n == 0) throw DomainError("truncation size n must be >= 1");
  return {r_lower, r_upper, r_lower + r_upper, c_norm, n};
}

double theta_residual(std::size_t n, double r_lower, double r_upper, double t) {
  double r = r_lower + r_upper;
  double rho = r > 0.0 ? r_lower * r_upper / (r * r) : 0.0;
  double nn = static_cast<double>(n);
  return 2.0 * std::sin(t / 2.0) * std::cos((nn + 0.5) * t) + rho * std::sin((nn - 1.0) * t);
}

double solve_theta(std::size_t n, double r_lower, double r_upper) {
  if (n == 0) throw DomainError("truncation size n must be >= 1");
  if (!(r_lower >= 0.0) || !(r_upper >= 0.0)) throw DomainError("r_L and r_U must be >= 0");
  if (r_lower + r_upper == 0.0) throw DegenerateError("r = 0: truncation angle undefined");
  double nn = static_cast<double>(n);
  if (n == 1) return pi / 3.0;
  if (r_lower * r_upper == 0.0) return pi / (2.0 * nn + 1.0);
  return find_root_bracketed([&](double t) { return theta_residual(n, r_lower, r_upper, t); },
                             pi / (2.0 * nn + 1.0), pi / (nn + 2.0), 1e-14);
}

double eps_tau(const PenaltyParams& p) {
  if (p.r == 0.0) return p.c_norm;
  return 2.0 * p.r * std::sin(solve_theta(p.n, p.r_lower, p.r_upper) / 2.0) + p.c_norm;
}

double eps_pi(const PenaltyParams& p) {
  if (p.r == 0.0) return p.c_norm;
  return 2.0 * p.r * std::sin(pi / (2.0 * static_cast<double>(p.n))) + p.c_norm;
}

double eps_tau1(const PenaltyParams& p) {
  if (p.r == 0.0) return p.c_norm;
  return 2.0 * p.r * std::sin(pi / (2.0 * static_cast<double>(p.n) + 2.0)) + p.c_norm;
}

WeightVector::WeightVector(std::vector<double> w) : w_(std::move(w)) {
  if (w_.empty()) throw DomainError("weight vector is empty");
  bool nonzero = false;
  for (double x : w_) {
    if (!std::isfinite(x)) throw DomainError("weight vector has a non-finite entry");
    nonzero = nonzero || x != 0.0;
  }
  if (!nonzero) throw DomainError("weight vector is zero");
}

double WeightVector::at(std::ptrdiff_t j) const {
  if (j < 1 || j > static_cast<std::ptrdiff_t>(w_.size())) return 0.0;
  return w_[static_cast<std::size_t>(j - 1)];
}

WeightFunctionals functionals(const WeightVector& w) {
  auto n = static_cast<std::ptrdiff_t>(w.size());
  WeightFunctionals f;
  double inner = 0.0;  // sum_{j<n} (w_{j+1} - w_j)^2
  for (std::ptrdiff_t j = 1; j <= n; ++j) {
    double wj = w.at(j);
    f.s += wj * wj;
    f.t_minus += (w.at(j - 1) - wj) * (w.at(j - 1) - wj);
    f.t_plus += (w.at(j + 1) - wj) * (w.at(j + 1) - wj);
    if (j < n) inner += (w.at(j + 1) - wj) * (w.at(j + 1) - wj);
  }
  double w1 = w.at(1), wn = w.at(n);
  f.t_per = (w1 + wn) * (w1 + wn) + inner;
  f.t = w1 * w1 + wn * wn + inner;
  return f;
}

double eta(const WeightVector& w, double r_lower, double r_upper, Variant variant) {
  WeightFunctionals f = functionals(w);
  double r = r_lower + r_upper;
  switch (variant) {
    case Variant::tau:
      return r_lower * std::sqrt(f.t_minus / f.s) + r_upper * std::sqrt(f.t_plus / f.s);
    case Variant::pi:
      return r * std::sqrt(f.t_per / f.s);
    case Variant::tau1:
      return r * std::sqrt(f.t / f.s);
  }
  throw DomainError("unknown penalty variant");
}

double eta_closed_form(std::size_t n, double r_lower, double r_upper, Variant variant) {
  PenaltyParams p = PenaltyParams::make(r_lower, r_upper, 0.0, n);
  switch (variant) {
    case Variant::tau:
      return eps_tau(p);
    case Variant::pi:
      return eps_pi(p);
    case Variant::tau1:
      return eps_tau1(p);
  }
  throw DomainError("unknown penalty variant");
}

std::vector<WeightVector> analytic_weight_candidates(std::size_t n, double r_lower,
                                                     double r_upper, Variant variant) {
  if (n == 0) throw DomainError("truncation size n must be >= 1");
  double nn = static_cast<double>(n);
  auto profile = [n](auto&& g) {
    std::vector<double> w(n);
    for (std::size_t j = 1; j <= n; ++j) w[j - 1] = g(static_cast<double>(j));
    return WeightVector(std::move(w));
  };
  std::vector<WeightVector> out;
  switch (variant) {
    case Variant::pi:
      out.push_back(profile([&](double j) { return std::sin((2.0 * j - 1.0) * pi / (2.0 * nn)); }));
      break;
    case Variant::tau1:
      out.push_back(profile([&](double j) { return std::sin(j * pi / (nn + 1.0)); }));
      break;
    case Variant::tau:
      // Lowest eigenvector of r*sum(w_{j+1}-w_j)^2 + r_L w_1^2 + r_U w_n^2:
      // w_j = sin(j theta + phi) with w_0 = (r_U/r) w_1. Its eta is at most
      // 2r sin(theta/2), with equality when r_L r_U = 0.
      if (r_lower + r_upper > 0.0) {
        double th = solve_theta(n, r_lower, r_upper), q = r_upper / (r_lower + r_upper);
        double phi = std::atan2(q * std::sin(th), 1.0 - q * std::cos(th));
        out.push_back(profile([&](double j) { return std::sin(j * th + phi); }));
      }
      out.push_back(profile([&](double j) { return std::sin((nn + 1.0 - j) * pi / (2.0 * nn + 1.0)); }));
      out.push_back(profile([&](double j) { return std::sin(j * pi / (2.0 * nn + 1.0)); }));
      out.push_back(profile([&](double j) { return std::sin(j * pi / (nn + 1.0)); }));
      break;
  }
  return out;
}

}  // namespace specincl
