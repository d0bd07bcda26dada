#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "specincl/matrix.hpp"

namespace specincl {

// Singular values in descending order. Requires a nonempty matrix.
std::vector<double> singular_values(const ComplexMatrix& e);

// Smallest singular value; rows >= cols is required (tall or square).
double smin(const ComplexMatrix& e);

// Largest singular value, i.e. the spectral norm. Zero for empty matrices.
double spectral_norm(const ComplexMatrix& e);

// s_min(E - lambda I) for square E, or s_min(E^+ - lambda I^+) when a
// rectangular selector is supplied.
double smin_shifted(const ComplexMatrix& e, Complex lambda,
                    const std::optional<ComplexMatrix>& embed = std::nullopt);

// All eigenvalues of a square matrix (complex Schur based).
std::vector<Complex> eig(const ComplexMatrix& e);

// Real eigenvalues of a Hermitian matrix, ascending.
std::vector<double> eig_hermitian(const ComplexMatrix& e);

// E - lambda J where J(row_offset + i, i) = 1 for i < cols. row_offset = 0 and
// rows == cols is the ordinary square shift.
struct ShiftedMatrix {
  ComplexMatrix base;
  std::size_t row_offset = 0;
};

// Validates that `embed` is a shifted identity selector of the shape of e;
// throws DomainError otherwise.
ShiftedMatrix make_shifted(const ComplexMatrix& e,
                           const std::optional<ComplexMatrix>& embed = std::nullopt);

// Repeated s_min(E - lambda J) evaluations with a reusable LAPACK workspace.
// Hermitian square operators take the eigenvalue distance shortcut:
// s_min(E - lambda I) = min_j |lambda - lambda_j|.
// One instance per thread; not safe for concurrent use.
class SminEvaluator {
 public:
  explicit SminEvaluator(const ShiftedMatrix& op, bool hermitian_shortcut = true);

  double operator()(Complex lambda);
  bool uses_hermitian_shortcut() const { return hermitian_; }
  double operator_norm() const { return norm_; }

 private:
  ShiftedMatrix op_;
  std::vector<Complex> transposed_;  // column-major storage of base^T
  std::vector<Complex> scratch_;
  std::vector<Complex> work_;
  std::vector<double> rwork_;
  std::vector<double> sv_;
  std::vector<double> hermitian_eigs_;
  double norm_ = 0.0;
  bool hermitian_ = false;
};

}  // namespace specincl
