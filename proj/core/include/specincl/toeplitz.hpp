#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "specincl/block.hpp"
#include "specincl/matrix.hpp"

namespace specincl {

// Toeplitz symbol coefficients a_j on a finite window. `bandwidth` is the
// smallest w with a_j = 0 for |j| > w, or for a truncated Wiener-class symbol
// the truncation window the user declared.
class ToeplitzSpec {
 public:
  // Throws DomainError if a coefficient lies outside the declared bandwidth,
  // or if `hermitian` is set and a_{-j} != conj(a_j) beyond 1e-14.
  ToeplitzSpec(std::map<int, Complex> coeffs, std::size_t bandwidth, bool hermitian,
               bool wiener_truncated = false);

  // Bandwidth and Hermitian flag are inferred.
  static ToeplitzSpec from_coefficients(std::map<int, Complex> coeffs);
  static ToeplitzSpec jordan();     // a_{-1} = 1
  static ToeplitzSpec laplacian();  // a_{-1} = a_1 = 1

  Complex coeff(int j) const;
  const std::map<int, Complex>& coeffs() const { return coeffs_; }
  std::size_t bandwidth() const { return bandwidth_; }
  bool hermitian() const { return hermitian_; }
  bool wiener_truncated() const { return wiener_truncated_; }
  // sum_j |a_j| over the stored window.
  double wiener_norm() const;

 private:
  std::map<int, Complex> coeffs_;
  std::size_t bandwidth_ = 0;
  bool hermitian_ = false;
  bool wiener_truncated_ = false;
};

// A_M with (A_M)_{ij} = a_{i-j}. Requires M > 1.
ComplexMatrix build_toeplitz(const ToeplitzSpec& spec, std::size_t m);

// Jordan block V_M (ones on the superdiagonal) and discrete Laplacian L_M.
// Order 1 gives the zero matrix.
ComplexMatrix jordan_block(std::size_t m);
ComplexMatrix discrete_laplacian(std::size_t m);

// N = floor(M/w) blocks, the last r = M - wN of them of order w+1, the rest
// of order w. Requires M >= 2w, w >= 1.
BlockPartition banded_partition(std::size_t m, std::size_t w);

struct TailBound {
  double value = 0.0;
  // The symbol was declared as a truncation of an infinite series, so the
  // stored-window sum only bounds the true tail from below.
  bool lower_bound_only = false;
};

// a_w = sum_{j > w} (|a_j| + |a_{-j}|), which bounds ||C|| for block splits
// with every block order >= w.
TailBound wiener_tail(const ToeplitzSpec& spec, std::size_t w);

// phi_n(s): the root in [pi/(2n+1), pi/(n+1)) of s sin((n+1)t) = sin(nt).
// Requires s >= 1.
double jordan_phi(std::size_t n, double s);

// v_n(s) = s_min(V_n - s I). Closed form for s >= 1, SVD below.
double jordan_vn(std::size_t n, double s);

// v^+_n(s) = sqrt(1 + s^2 - 2 s cos(pi/(n+1))), the rectangular analogue.
double jordan_vn_plus(std::size_t n, double s);

// alpha_n(eps): the radius with v_n(alpha) = eps, so Spec_eps V_n is the
// closed disc of that radius.
double jordan_alpha(std::size_t n, double eps);

// Inner and outer radii of the annulus Spec_eps V^+_n; nullopt when empty.
std::optional<std::pair<double, double>> jordan_annulus(std::size_t n, double eps);

// 2 cos(j pi/(M+1)), j = 1..M, descending.
std::vector<double> laplacian_spectrum(std::size_t m);

// Root in (pi/(n+3), pi/(n+2)] of 2 cos((n+1)t/2) = cos((n-1)t/2).
double laplacian_theta(std::size_t n);

}  // namespace specincl
