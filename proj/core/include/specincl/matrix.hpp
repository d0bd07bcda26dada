#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace specincl {

using Complex = std::complex<double>;

// Dense complex matrix, row-major. Zero-sized matrices are allowed so that
// empty borders can be represented, but every entry must be finite.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  // Throws DomainError if entries.size() != rows*cols or an entry is NaN/Inf.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }
  bool is_square() const { return rows_ == cols_; }

  Complex operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  std::span<const Complex> entries() const { return data_; }
  std::span<Complex> entries() { return data_; }

  // Copy of rows [r0, r0+nr) x cols [c0, c0+nc). Throws IndexError when out of range.
  ComplexMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const ComplexMatrix& src);
  void add_block(std::size_t r0, std::size_t c0, const ComplexMatrix& src, Complex scale = 1.0);

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;

  bool all_finite() const;
  bool is_zero() const;
  bool is_hermitian(double tol = 0.0) const;

  double frobenius_norm() const;
  // Maximum absolute column sum.
  double norm_1() const;
  // Maximum absolute row sum.
  double norm_inf() const;
  double max_abs() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

// Block diagonal direct sum diag(a, b).
ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace specincl
