#include "specincl/toeplitz.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "specincl/errors.hpp"
#include "specincl/linalg.hpp"
#include "specincl/roots.hpp"

namespace specincl {

using std::numbers::pi;

namespace {

bool coefficients_hermitian(const std::map<int, Complex>& c, double tol) {
  for (const auto& [j, a] : c) {
    auto it = c.find(-j);
    Complex mirror = it == c.end() ? Complex{} : it->second;
    if (std::abs(mirror - std::conj(a)) > tol) return false;
  }
  return true;
}

}  // namespace

ToeplitzSpec::ToeplitzSpec(std::map<int, Complex> coeffs, std::size_t bandwidth, bool hermitian,
                           bool wiener_truncated)
    : coeffs_(std::move(coeffs)),
      bandwidth_(bandwidth),
      hermitian_(hermitian),
      wiener_truncated_(wiener_truncated) {
  for (const auto& [j, a] : coeffs_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
      throw DomainError("Toeplitz coefficient a_" + std::to_string(j) + " is not finite");
    if (static_cast<std::size_t>(std::abs(j)) > bandwidth_ && a != Complex{}) {
      if (wiener_truncated_) continue;  // the window, not the band, bounds the support
      throw DomainError("coefficient a_" + std::to_string(j) + " lies outside bandwidth " +
                        std::to_string(bandwidth_));
    }
  }
  if (hermitian_ && !coefficients_hermitian(coeffs_, 1e-14))
    throw DomainError("symbol flagged Hermitian but a_{-j} != conj(a_j)");
}

ToeplitzSpec ToeplitzSpec::from_coefficients(std::map<int, Complex> coeffs) {
  std::size_t w = 0;
  for (const auto& [j, a] : coeffs)
    if (a != Complex{}) w = std::max(w, static_cast<std::size_t>(std::abs(j)));
  bool herm = coefficients_hermitian(coeffs, 1e-14);
  return ToeplitzSpec(std::move(coeffs), w, herm);
}

ToeplitzSpec ToeplitzSpec::jordan() { return ToeplitzSpec({{-1, 1.0}}, 1, false); }

ToeplitzSpec ToeplitzSpec::laplacian() { return ToeplitzSpec({{-1, 1.0}, {1, 1.0}}, 1, true); }

Complex ToeplitzSpec::coeff(int j) const {
  auto it = coeffs_.find(j);
  return it == coeffs_.end() ? Complex{} : it->second;
}

double ToeplitzSpec::wiener_norm() const {
  double s = 0.0;
  for (const auto& [j, a] : coeffs_) s += std::abs(a);
  return s;
}

ComplexMatrix build_toeplitz(const ToeplitzSpec& spec, std::size_t m) {
  if (m < 2) throw DomainError("Toeplitz order must be > 1");
  ComplexMatrix a(m, m);
  for (const auto& [j, c] : spec.coeffs()) {
    if (c == Complex{} || static_cast<std::size_t>(std::abs(j)) >= m) continue;
    // entries with i - col == j
    for (std::size_t col = 0; col < m; ++col) {
      auto i = static_cast<long long>(col) + j;
      if (i >= 0 && i < static_cast<long long>(m)) a(static_cast<std::size_t>(i), col) = c;
    }
  }
  return a;
}

ComplexMatrix jordan_block(std::size_t m) {
  if (m == 0) throw DomainError("Jordan block order must be >= 1");
  ComplexMatrix v(m, m);
  for (std::size_t i = 0; i + 1 < m; ++i) v(i, i + 1) = 1.0;
  return v;
}

ComplexMatrix discrete_laplacian(std::size_t m) {
  if (m == 0) throw DomainError("Laplacian order must be >= 1");
  ComplexMatrix l(m, m);
  for (std::size_t i = 0; i + 1 < m; ++i) l(i, i + 1) = l(i + 1, i) = 1.0;
  return l;
}

BlockPartition banded_partition(std::size_t m, std::size_t w) {
  if (w == 0) throw DomainError("band width must be >= 1");
  if (m < 2 * w)
    throw DomainError("banded partition needs M >= 2w (M=" + std::to_string(m) +
                      ", w=" + std::to_string(w) + ")");
  std::size_t n = m / w, r = m - w * n;
  std::vector<std::size_t> sizes(n, w);
  for (std::size_t i = n - r; i < n; ++i) sizes[i] = w + 1;
  return BlockPartition(std::move(sizes));
}

TailBound wiener_tail(const ToeplitzSpec& spec, std::size_t w) {
  if (w == 0) throw DomainError("tail index w must be >= 1");
  TailBound t;
  for (const auto& [j, a] : spec.coeffs())
    if (static_cast<std::size_t>(std::abs(j)) > w) t.value += std::abs(a);
  t.lower_bound_only = spec.wiener_truncated();
  return t;
}

double jordan_phi(std::size_t n, double s) {
  if (n == 0) throw DomainError("n must be >= 1");
  if (!(s >= 1.0)) throw DomainError("jordan_phi needs s >= 1");
  double nn = static_cast<double>(n);
  if (s == 1.0) return pi / (2.0 * nn + 1.0);
  return find_root_bracketed(
      [&](double t) { return s * std::sin((nn + 1.0) * t) - std::sin(nn * t); },
      pi / (2.0 * nn + 1.0), pi / (nn + 1.0), 1e-14);
}

double jordan_vn(std::size_t n, double s) {
  if (n == 0) throw DomainError("n must be >= 1");
  if (!(s >= 0.0)) throw DomainError("jordan_vn needs s >= 0");
  if (s >= 1.0) {
    double c = std::cos(jordan_phi(n, s));
    return std::sqrt(std::max(0.0, 1.0 + s * s - 2.0 * s * c));
  }
  ComplexMatrix v = jordan_block(n);
  for (std::size_t i = 0; i < n; ++i) v(i, i) -= s;
  return smin(v);
}

double jordan_vn_plus(std::size_t n, double s) {
  if (n == 0) throw DomainError("n must be >= 1");
  double c = std::cos(pi / (static_cast<double>(n) + 1.0));
  return std::sqrt(std::max(0.0, 1.0 + s * s - 2.0 * s * c));
}

double jordan_alpha(std::size_t n, double eps) {
  if (n == 0) throw DomainError("n must be >= 1");
  if (!(eps >= 0.0) || !std::isfinite(eps)) throw DomainError("jordan_alpha needs eps >= 0");
  double en = 2.0 * std::sin(pi / (4.0 * static_cast<double>(n) + 2.0));
  auto f = [&](double s) { return jordan_vn(n, s) - eps; };
  double lo, hi;
  if (eps >= en) {
    double e = eps - en;
    lo = 1.0 + e;
    hi = 1.0 + e + std::min(en, std::sqrt(2.0 * en * e));
  } else {
    if (eps == 0.0) return 0.0;
    lo = 0.0;
    hi = 1.0;
  }
  double flo = f(lo);
  if (flo >= 0.0) return lo;
  double fhi = f(hi);
  if (fhi <= 0.0) return hi;
  return find_root_bracketed(f, lo, hi, 1e-14);
}

std::optional<std::pair<double, double>> jordan_annulus(std::size_t n, double eps) {
  if (n == 0) throw DomainError("n must be >= 1");
  if (!(eps >= 0.0)) throw DomainError("eps must be >= 0");
  double a = pi / (static_cast<double>(n) + 1.0);
  double sn = std::sin(a), cn = std::cos(a);
  if (eps < sn) return std::nullopt;
  double root = std::sqrt(std::max(0.0, eps * eps - sn * sn));
  // below zero the annulus has closed up into a disc
  return std::make_pair(std::max(0.0, cn - root), cn + root);
}

std::vector<double> laplacian_spectrum(std::size_t m) {
  if (m == 0) throw DomainError("Laplacian order must be >= 1");
  std::vector<double> out(m);
  for (std::size_t j = 1; j <= m; ++j)
    out[j - 1] = 2 * j == m + 1 ? 0.0
                                : 2.0 * std::cos(static_cast<double>(j) * pi / (static_cast<double>(m) + 1.0));
  return out;
}

double laplacian_theta(std::size_t n) {
  if (n == 0) throw DomainError("n must be >= 1");
  if (n == 1) return pi / 3.0;
  double nn = static_cast<double>(n);
  return find_root_bracketed(
      [&](double t) { return 2.0 * std::cos((nn + 1.0) * t / 2.0) - std::cos((nn - 1.0) * t / 2.0); },
      pi / (nn + 3.0), pi / (nn + 2.0), 1e-14);
}

}  // namespace specincl
