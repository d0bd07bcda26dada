#include "specincl/linalg.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "specincl/errors.hpp"

extern "C" {
void zgesvd_(const char* jobu, const char* jobvt, const int* m, const int* n,
             std::complex<double>* a, const int* lda, double* s, std::complex<double>* u,
             const int* ldu, std::complex<double>* vt, const int* ldvt,
             std::complex<double>* work, const int* lwork, double* rwork, int* info);
}

namespace specincl {

namespace {

using RowMajorXcd =
    Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const RowMajorXcd> as_eigen(const ComplexMatrix& e) {
  return {e.entries().data(), static_cast<Eigen::Index>(e.rows()),
          static_cast<Eigen::Index>(e.cols())};
}

// Singular values of a column-major m x n buffer (destroyed). The caller owns
// the workspace so repeated calls do not allocate.
struct SvdWorkspace {
  int m = 0;
  int n = 0;
  std::vector<Complex> work;
  std::vector<double> rwork;
  std::vector<double> sv;

  SvdWorkspace(int m_, int n_) : m(m_), n(n_) {
    int k = std::min(m, n);
    sv.resize(std::max(k, 1));
    rwork.resize(std::max(5 * k, 1));
    Complex query;
    int lwork = -1, info = 0, one = 1;
    Complex dummy;
    char job = 'N';
    zgesvd_(&job, &job, &m, &n, &dummy, &m, sv.data(), nullptr, &one, nullptr, &one, &query,
            &lwork, rwork.data(), &info);
    work.resize(std::max<std::size_t>(static_cast<std::size_t>(query.real()), 1));
  }

  void run(Complex* a) {
    int lwork = static_cast<int>(work.size()), info = 0, one = 1;
    char job = 'N';
    zgesvd_(&job, &job, &m, &n, a, &m, sv.data(), nullptr, &one, nullptr, &one, work.data(),
            &lwork, rwork.data(), &info);
    if (info != 0) throw NumericError("zgesvd failed with info " + std::to_string(info));
  }
};

}  // namespace

std::vector<double> singular_values(const ComplexMatrix& e) {
  if (e.empty()) throw DomainError("singular values of an empty matrix");
  // Row-major storage of E is column-major storage of E^T, which has the
  // same singular values.
  std::vector<Complex> buf(e.entries().begin(), e.entries().end());
  SvdWorkspace ws(static_cast<int>(e.cols()), static_cast<int>(e.rows()));
  ws.run(buf.data());
  ws.sv.resize(std::min(e.rows(), e.cols()));
  return ws.sv;
}

double smin(const ComplexMatrix& e) {
  if (e.empty()) throw DomainError("s_min of an empty matrix");
  if (e.rows() < e.cols()) throw DomainError("s_min needs rows >= cols");
  return singular_values(e).back();
}

double spectral_norm(const ComplexMatrix& e) {
  if (e.empty() || e.is_zero()) return 0.0;
  return singular_values(e).front();
}

ShiftedMatrix make_shifted(const ComplexMatrix& e, const std::optional<ComplexMatrix>& embed) {
  if (e.empty()) throw DomainError("shifted operator of an empty matrix");
  if (!embed) {
    if (!e.is_square()) throw DomainError("rectangular matrix needs an embedding selector");
    return {e, 0};
  }
  const ComplexMatrix& j = *embed;
  if (j.rows() != e.rows() || j.cols() != e.cols())
    throw DomainError("embedding selector shape differs from the matrix");
  if (e.rows() < e.cols()) throw DomainError("rectangular pseudospectra need rows >= cols");
  std::size_t offset = e.rows();
  for (std::size_t i = 0; i < j.rows(); ++i)
    if (j(i, 0) != Complex{}) {
      offset = i;
      break;
    }
  if (offset + e.cols() > e.rows()) throw DomainError("embedding is not an identity selector");
  for (std::size_t r = 0; r < j.rows(); ++r)
    for (std::size_t c = 0; c < j.cols(); ++c) {
      Complex want = (r == offset + c) ? Complex{1.0} : Complex{};
      if (j(r, c) != want) throw DomainError("embedding is not an identity selector");
    }
  return {e, offset};
}

double smin_shifted(const ComplexMatrix& e, Complex lambda,
                    const std::optional<ComplexMatrix>& embed) {
  SminEvaluator ev(make_shifted(e, embed), false);
  return ev(lambda);
}

std::vector<Complex> eig(const ComplexMatrix& e) {
  if (!e.is_square()) throw DomainError("eigenvalues of a non-square matrix");
  if (e.empty()) return {};
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(Eigen::MatrixXcd(as_eigen(e)), false);
  if (solver.info() != Eigen::Success) throw NumericError("eigenvalue iteration did not converge");
  auto v = solver.eigenvalues();
  return {v.data(), v.data() + v.size()};
}

std::vector<double> eig_hermitian(const ComplexMatrix& e) {
  if (!e.is_square()) throw DomainError("eigenvalues of a non-square matrix");
  if (e.empty()) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(Eigen::MatrixXcd(as_eigen(e)),
                                                         Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericError("Hermitian eigensolver did not converge");
  auto v = solver.eigenvalues();
  return {v.data(), v.data() + v.size()};
}

SminEvaluator::SminEvaluator(const ShiftedMatrix& op, bool hermitian_shortcut) : op_(op) {
  const ComplexMatrix& b = op_.base;
  if (b.empty()) throw DomainError("shifted operator of an empty matrix");
  if (b.rows() < b.cols() || op_.row_offset + b.cols() > b.rows())
    throw DomainError("shifted operator has an invalid shape");
  norm_ = spectral_norm(b);
  hermitian_ = hermitian_shortcut && b.is_square() && op_.row_offset == 0 &&
               b.is_hermitian(1e-14 * std::max(1.0, b.max_abs()));
  if (hermitian_) {
    hermitian_eigs_ = eig_hermitian(b);
    return;
  }
  transposed_.assign(b.entries().begin(), b.entries().end());
  scratch_.resize(transposed_.size());
  SvdWorkspace ws(static_cast<int>(b.cols()), static_cast<int>(b.rows()));
  work_ = std::move(ws.work);
  rwork_ = std::move(ws.rwork);
  sv_ = std::move(ws.sv);
}

double SminEvaluator::operator()(Complex lambda) {
  if (hermitian_) {
    double best = std::numeric_limits<double>::infinity();
    for (double x : hermitian_eigs_) best = std::min(best, std::abs(lambda - x));
    return best;
  }
  const std::size_t cols = op_.base.cols();
  std::copy(transposed_.begin(), transposed_.end(), scratch_.begin());
  for (std::size_t i = 0; i < cols; ++i) scratch_[(op_.row_offset + i) * cols + i] -= lambda;
  int m = static_cast<int>(cols), n = static_cast<int>(op_.base.rows());
  int lwork = static_cast<int>(work_.size()), info = 0, one = 1;
  char job = 'N';
  zgesvd_(&job, &job, &m, &n, scratch_.data(), &m, sv_.data(), nullptr, &one, nullptr, &one,
          work_.data(), &lwork, rwork_.data(), &info);
  if (info != 0) throw NumericError("zgesvd failed with info " + std::to_string(info));
  return sv_[cols - 1];
}

}  // namespace specincl
