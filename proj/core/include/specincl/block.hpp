#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "specincl/matrix.hpp"

namespace specincl {

// Block sizes m_1..m_N of a partition. Requires N > 1 and every m_i >= 1.
class BlockPartition {
 public:
  explicit BlockPartition(std::vector<std::size_t> sizes);

  // N blocks of order m. Throws PartitionError unless m divides total.
  static BlockPartition uniform(std::size_t total, std::size_t m);

  std::size_t count() const { return sizes_.size(); }
  std::size_t total() const { return total_; }
  std::span<const std::size_t> sizes() const { return sizes_; }
  // 1-based, like the block indices of the view.
  std::size_t size(std::size_t i) const { return sizes_.at(i - 1); }
  bool is_uniform() const;

  friend bool operator==(const BlockPartition&, const BlockPartition&) = default;

 private:
  std::vector<std::size_t> sizes_;
  std::size_t total_ = 0;
};

struct TridiagonalSplit {
  ComplexMatrix tridiagonal;  // B: blocks with |i-j| <= 1
  ComplexMatrix remaining;    // C = A - B
};

// Square truncation B^+_{n,k} with its border heights; the identity selector
// I^+_n sits in rows [top_rows, top_rows + cols).
struct RectangularTruncation {
  ComplexMatrix matrix;
  std::size_t top_rows = 0;
  std::size_t bottom_rows = 0;
};

struct OffdiagNorms {
  double lower = 0.0;  // r_L: max spectral norm over the first block subdiagonal
  double upper = 0.0;  // r_U: max spectral norm over the first block superdiagonal
  double total() const { return lower + upper; }
};

// Read-only block view of a square matrix. Block indices are 1-based
// throughout so that (i, j) matches the usual a_{ij} notation.
class BlockMatrixView {
 public:
  BlockMatrixView(ComplexMatrix a, BlockPartition p);

  const ComplexMatrix& matrix() const { return *matrix_; }
  const BlockPartition& partition() const { return partition_; }
  std::size_t block_count() const { return partition_.count(); }
  std::size_t order() const { return partition_.total(); }
  // offsets()[i] is the first row of block i+1; offsets().back() == order().
  std::span<const std::size_t> offsets() const { return offsets_; }

  ComplexMatrix block(std::size_t i, std::size_t j) const;
  // b_{ij}: a_{ij} when |i-j| <= 1 and both indices lie in 1..N, else zero of
  // the right shape (indices outside 1..N yield an empty 0-row/col matrix).
  ComplexMatrix tridiagonal_block(std::size_t i, std::size_t j) const;

  // Number of scalar rows spanned by blocks k+1..k+n.
  std::size_t span_order(std::size_t n, std::size_t k) const;

 private:
  std::shared_ptr<const ComplexMatrix> matrix_;
  BlockPartition partition_;
  std::vector<std::size_t> offsets_;
};

// Throws PartitionError if a is not square or the sizes do not sum to its order.
BlockMatrixView make_view(ComplexMatrix a, BlockPartition p);

TridiagonalSplit split_tridiagonal(const BlockMatrixView& view);

// B_{n,k}: blocks k+1..k+n of B. Requires 1 <= n <= N and 0 <= k <= N-n.
ComplexMatrix submatrix_tau(const BlockMatrixView& view, std::size_t n, std::size_t k);

// Periodised truncation B^{per,t}_{n,k}. For n <= 2 the corner terms are
// added onto the entries already there.
ComplexMatrix submatrix_pi(const BlockMatrixView& view, std::size_t n, std::size_t k, Complex t);

// One-sided truncation B^+_{n,k}. Missing borders at k = 0 and k = N-n are a
// single zero row.
RectangularTruncation submatrix_tau1(const BlockMatrixView& view, std::size_t n, std::size_t k);

// I^+_n with the same shape as submatrix_tau1(view, n, k).
ComplexMatrix embedding_selector(std::size_t n, std::size_t k, const BlockMatrixView& view);

OffdiagNorms offdiag_norms(const BlockMatrixView& view);

enum class NormMode { exact, frobenius, mixed };

// Spectral norm of c, or one of two cheaper upper bounds for it.
double remaining_norm(const ComplexMatrix& c, NormMode mode);

// exact for order <= 1024, mixed above.
NormMode default_norm_mode(std::size_t order);

}  // namespace specincl
