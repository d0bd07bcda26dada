#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "specincl/linalg.hpp"
#include "specincl/region.hpp"

namespace specincl {

struct EvalOptions {
  std::size_t jobs = 0;  // 0: default_jobs()
  bool hermitian_shortcut = true;
  // Coarsest lattice stride of the multilevel sweep (power of two).
  std::size_t coarse_stride = 16;
};

// The field lambda -> s_min(E - lambda J) over a grid, held as certified
// bounds lo <= s_min <= hi per node. Nodes are evaluated exactly only where
// the bounds cannot decide a requested threshold; elsewhere the bounds come
// from the 1-Lipschitz property of s_min in lambda, propagated from a
// coarse-to-fine lattice.
class SminField {
 public:
  SminField(ShiftedMatrix op, GridSpec grid, EvalOptions options = {});

  // Refine until, for every threshold, each node is known to be <= it or > it.
  void resolve(std::span<const double> thresholds);
  void resolve(double threshold) { resolve(std::span<const double>(&threshold, 1)); }
  // Evaluate every node exactly.
  void resolve_all();

  // Mask {s_min <= threshold}; the threshold must have been resolved.
  Region region(double threshold) const;
  // Exact s_min at one node, evaluating it if needed.
  double exact_value(std::size_t index);

  bool fully_exact() const;
  std::size_t exact_count() const;
  const GridSpec& grid() const { return grid_; }
  const ShiftedMatrix& op() const { return op_; }
  std::span<const double> lower() const { return lo_; }
  std::span<const double> upper() const { return hi_; }

 private:
  void evaluate(std::span<const std::size_t> nodes);
  bool undecided(std::size_t index, std::span<const double> thresholds) const;
  void tighten_from_parents(std::size_t i, std::size_t j, std::size_t parent_stride);

  ShiftedMatrix op_;
  GridSpec grid_;
  EvalOptions options_;
  double op_norm_ = 0.0;
  double slack_ = 0.0;
  std::vector<double> lo_;
  std::vector<double> hi_;
  std::vector<double> val_;  // exact s_min where exact_ is set
  std::vector<std::uint8_t> exact_;
  std::vector<double> resolved_;
};

// Closed eps-pseudospectrum on a grid with the full s_min field attached.
// With an embedding selector the rectangular pseudospectrum is computed.
Region pseudospectrum(const ComplexMatrix& e, double eps, const GridSpec& grid,
                      const std::optional<ComplexMatrix>& embed = std::nullopt,
                      const EvalOptions& options = {});

}  // namespace specincl
