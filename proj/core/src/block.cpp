#include "specincl/block.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "specincl/errors.hpp"
#include "specincl/linalg.hpp"

namespace specincl {

BlockPartition::BlockPartition(std::vector<std::size_t> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.size() < 2) throw PartitionError("a block partition needs at least two blocks");
  for (std::size_t m : sizes_) {
    if (m == 0) throw PartitionError("block sizes must be positive");
    total_ += m;
  }
}

BlockPartition BlockPartition::uniform(std::size_t total, std::size_t m) {
  if (m == 0 || total % m != 0)
    throw PartitionError("uniform:" + std::to_string(m) + " does not divide order " +
                         std::to_string(total));
  return BlockPartition(std::vector<std::size_t>(total / m, m));
}

bool BlockPartition::is_uniform() const {
  return std::all_of(sizes_.begin(), sizes_.end(), [&](std::size_t m) { return m == sizes_[0]; });
}

BlockMatrixView::BlockMatrixView(ComplexMatrix a, BlockPartition p)
    : partition_(std::move(p)) {
  if (!a.is_square()) throw PartitionError("block view needs a square matrix");
  if (partition_.total() != a.rows())
    throw PartitionError("block sizes sum to " + std::to_string(partition_.total()) +
                         " but the matrix has order " + std::to_string(a.rows()));
  matrix_ = std::make_shared<const ComplexMatrix>(std::move(a));
  offsets_.reserve(partition_.count() + 1);
  offsets_.push_back(0);
  for (std::size_t m : partition_.sizes()) offsets_.push_back(offsets_.back() + m);
}

ComplexMatrix BlockMatrixView::block(std::size_t i, std::size_t j) const {
  std::size_t n = block_count();
  if (i < 1 || i > n || j < 1 || j > n) throw IndexError("block index out of range");
  return matrix_->block(offsets_[i - 1], offsets_[j - 1], partition_.size(i), partition_.size(j));
}

ComplexMatrix BlockMatrixView::tridiagonal_block(std::size_t i, std::size_t j) const {
  std::size_t n = block_count();
  bool in_i = i >= 1 && i <= n;
  bool in_j = j >= 1 && j <= n;
  std::size_t rows = in_i ? partition_.size(i) : 0;
  std::size_t cols = in_j ? partition_.size(j) : 0;
  if (!in_i || !in_j) return ComplexMatrix(rows, cols);
  std::size_t d = i > j ? i - j : j - i;
  if (d > 1) return ComplexMatrix(rows, cols);
  return block(i, j);
}

std::size_t BlockMatrixView::span_order(std::size_t n, std::size_t k) const {
  return offsets_[k + n] - offsets_[k];
}

BlockMatrixView make_view(ComplexMatrix a, BlockPartition p) {
  return BlockMatrixView(std::move(a), std::move(p));
}

TridiagonalSplit split_tridiagonal(const BlockMatrixView& view) {
  const ComplexMatrix& a = view.matrix();
  auto off = view.offsets();
  std::size_t nb = view.block_count();
  TridiagonalSplit s{ComplexMatrix(a.rows(), a.cols()), ComplexMatrix(a.rows(), a.cols())};
  for (std::size_t bi = 0; bi < nb; ++bi)
    for (std::size_t bj = 0; bj < nb; ++bj) {
      bool near = (bi > bj ? bi - bj : bj - bi) <= 1;
      ComplexMatrix& dst = near ? s.tridiagonal : s.remaining;
      for (std::size_t i = off[bi]; i < off[bi + 1]; ++i)
        for (std::size_t j = off[bj]; j < off[bj + 1]; ++j) dst(i, j) = a(i, j);
    }
  return s;
}

namespace {

void check_range(const BlockMatrixView& view, std::size_t n, std::size_t k) {
  std::size_t nb = view.block_count();
  if (n < 1 || n > nb || k > nb - n)
    throw IndexError("truncation (n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                     ") outside 1 <= n <= " + std::to_string(nb) + ", 0 <= k <= N-n");
}

}  // namespace

ComplexMatrix submatrix_tau(const BlockMatrixView& view, std::size_t n, std::size_t k) {
  check_range(view, n, k);
  const ComplexMatrix& a = view.matrix();
  auto off = view.offsets();
  std::size_t base = off[k];
  ComplexMatrix out(view.span_order(n, k), view.span_order(n, k));
  for (std::size_t bi = k; bi < k + n; ++bi)
    for (std::size_t bj = (bi > k ? bi - 1 : k); bj <= std::min(bi + 1, k + n - 1); ++bj)
      for (std::size_t i = off[bi]; i < off[bi + 1]; ++i)
        for (std::size_t j = off[bj]; j < off[bj + 1]; ++j) out(i - base, j - base) = a(i, j);
  return out;
}

ComplexMatrix submatrix_pi(const BlockMatrixView& view, std::size_t n, std::size_t k, Complex t) {
  check_range(view, n, k);
  if (!view.partition().is_uniform())
    throw PiMethodUnsupported("periodised truncations need a uniform partition");
  double mod = std::abs(t);
  if (!std::isfinite(mod) || std::abs(mod - 1.0) > 1e-12)
    throw DomainError("periodisation parameter t must have modulus 1");
  t /= mod;

  ComplexMatrix out = submatrix_tau(view, n, k);
  std::size_t m = view.partition().size(1);
  std::size_t nb = view.block_count();
  // 1-based block indices of the original matrix.
  if (k + n + 1 <= nb) out.add_block(0, (n - 1) * m, view.block(k + n + 1, k + n), t);
  if (k >= 1) out.add_block((n - 1) * m, 0, view.block(k, k + 1), std::conj(t));
  return out;
}

RectangularTruncation submatrix_tau1(const BlockMatrixView& view, std::size_t n, std::size_t k) {
  check_range(view, n, k);
  std::size_t nb = view.block_count();
  std::size_t width = view.span_order(n, k);
  std::size_t top = k >= 1 ? view.partition().size(k) : 1;
  std::size_t bottom = k + n + 1 <= nb ? view.partition().size(k + n + 1) : 1;

  RectangularTruncation r{ComplexMatrix(top + width + bottom, width), top, bottom};
  if (k >= 1) r.matrix.set_block(0, 0, view.block(k, k + 1));
  r.matrix.set_block(top, 0, submatrix_tau(view, n, k));
  if (k + n + 1 <= nb) {
    std::size_t last = width - view.partition().size(k + n);
    r.matrix.set_block(top + width, last, view.block(k + n + 1, k + n));
  }
  return r;
}

ComplexMatrix embedding_selector(std::size_t n, std::size_t k, const BlockMatrixView& view) {
  check_range(view, n, k);
  std::size_t nb = view.block_count();
  std::size_t width = view.span_order(n, k);
  std::size_t top = k >= 1 ? view.partition().size(k) : 1;
  std::size_t bottom = k + n + 1 <= nb ? view.partition().size(k + n + 1) : 1;
  ComplexMatrix e(top + width + bottom, width);
  for (std::size_t i = 0; i < width; ++i) e(top + i, i) = 1.0;
  return e;
}

OffdiagNorms offdiag_norms(const BlockMatrixView& view) {
  OffdiagNorms r;
  for (std::size_t i = 1; i < view.block_count(); ++i) {
    r.lower = std::max(r.lower, spectral_norm(view.block(i + 1, i)));
    r.upper = std::max(r.upper, spectral_norm(view.block(i, i + 1)));
  }
  return r;
}

double remaining_norm(const ComplexMatrix& c, NormMode mode) {
  if (c.is_zero()) return 0.0;
  switch (mode) {
    case NormMode::exact:
      return spectral_norm(c);
    case NormMode::frobenius:
      return c.frobenius_norm();
    case NormMode::mixed:
      return std::sqrt(c.norm_1() * c.norm_inf());
  }
  throw DomainError("unknown norm mode");
}

NormMode default_norm_mode(std::size_t order) {
  return order <= 1024 ? NormMode::exact : NormMode::mixed;
}

}  // namespace specincl
