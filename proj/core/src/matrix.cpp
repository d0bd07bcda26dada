#include "specincl/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "specincl/errors.hpp"

namespace specincl {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw DomainError("matrix entries: expected " + std::to_string(rows * cols) + ", got " +
                      std::to_string(data_.size()));
  }
  if (!all_finite()) throw DomainError("matrix has a non-finite entry");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows.begin()->size() : 0;
  std::vector<Complex> data;
  data.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw DomainError("from_rows: ragged rows");
    data.insert(data.end(), row.begin(), row.end());
  }
  return ComplexMatrix(r, c, std::move(data));
}

ComplexMatrix ComplexMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                                   std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw IndexError("block out of range");
  ComplexMatrix out(nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    std::copy_n(&data_[(r0 + i) * cols_ + c0], nc, &out.data_[i * nc]);
  }
  return out;
}

void ComplexMatrix::set_block(std::size_t r0, std::size_t c0, const ComplexMatrix& src) {
  if (r0 + src.rows_ > rows_ || c0 + src.cols_ > cols_) throw IndexError("set_block out of range");
  for (std::size_t i = 0; i < src.rows_; ++i) {
    std::copy_n(&src.data_[i * src.cols_], src.cols_, &data_[(r0 + i) * cols_ + c0]);
  }
}

void ComplexMatrix::add_block(std::size_t r0, std::size_t c0, const ComplexMatrix& src,
                              Complex scale) {
  if (r0 + src.rows_ > rows_ || c0 + src.cols_ > cols_) throw IndexError("add_block out of range");
  for (std::size_t i = 0; i < src.rows_; ++i)
    for (std::size_t j = 0; j < src.cols_; ++j) (*this)(r0 + i, c0 + j) += scale * src(i, j);
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool ComplexMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

bool ComplexMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Complex z) { return z == Complex{}; });
}

bool ComplexMatrix::is_hermitian(double tol) const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
  return true;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (Complex z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMatrix::norm_1() const {
  double best = 0.0;
  for (std::size_t j = 0; j < cols_; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) s += std::abs((*this)(i, j));
    best = std::max(best, s);
  }
  return best;
}

double ComplexMatrix::norm_inf() const {
  double best = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) s += std::abs((*this)(i, j));
    best = std::max(best, s);
  }
  return best;
}

double ComplexMatrix::max_abs() const {
  double best = 0.0;
  for (Complex z : data_) best = std::max(best, std::abs(z));
  return best;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DomainError("matrix sum: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DomainError("matrix difference: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (Complex& z : data_) z *= s;
  return *this;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("matmul: inner dimensions differ");
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

}  // namespace specincl
