#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "specincl/block.hpp"
#include "specincl/penalty.hpp"
#include "specincl/pseudospectrum.hpp"
#include "specincl/region.hpp"

namespace specincl {

enum class Method { tau, pi, tau1, gersh, block_gersh };

const char* method_name(Method m);
// Throws DomainError for an unknown name.
Method parse_method(const std::string& name);

// Which truncation contributed to an inclusion set.
struct SubmatrixDescriptor {
  std::string type;  // "tau", "pi", "tau1", "block", "full"
  std::size_t n = 0;
  std::size_t k = 0;
  double level = 0.0;  // pseudospectral level the part was thresholded at

  friend bool operator==(const SubmatrixDescriptor&, const SubmatrixDescriptor&) = default;
};

struct MethodReport {
  Method method = Method::tau;
  std::size_t n = 0;
  std::optional<Complex> t;
  double eps = 0.0;
  double penalty = 0.0;  // epsilon_n, epsilon'_n or epsilon''_n actually used
  PenaltyParams params;
  NormMode norm_mode = NormMode::exact;
  double penalty_scale = 1.0;
  std::vector<SubmatrixDescriptor> parts;
  Region region;
  bool clipped = false;  // region touches the grid boundary
};

struct SigmaTauResult {
  Region sigma;
  std::optional<Region> sigma_hat;  // n >= 3 only
  Region big_sigma;                 // sigma, or sigma ∩ sigma_hat for n >= 3
  MethodReport report;
};

struct Tau1Result {
  Region gamma;
  std::optional<Region> outer;  // Spec_{eps + eps''_n + 2||C||} A when requested
  MethodReport report;
};

struct Disc {
  Complex center;
  double radius = 0.0;
};

struct GershgorinResult {
  std::vector<Disc> discs;
  Region region;
};

struct InclusionOptions {
  std::optional<NormMode> norm_mode;  // default_norm_mode(order) when unset
  EvalOptions eval;
  // Multiplies every penalty. Anything below 1 voids the inclusion guarantee;
  // it exists so verification harnesses can run negative controls.
  double penalty_scale = 1.0;
};

// Default grid: bounding box of the classical Gershgorin discs of a, inflated
// by `inflate` plus two grid cells, squared up around its centre.
GridSpec auto_grid(const ComplexMatrix& a, double inflate, std::size_t nodes_per_axis = 256);

// Builds the tau, pi and tau1 inclusion sets of one block matrix on one
// shared grid. Submatrix s_min fields are cached by content, so repeated
// truncations (Toeplitz matrices, several n or eps on one matrix) are
// evaluated once and only refined for new thresholds.
class InclusionEngine {
 public:
  InclusionEngine(BlockMatrixView view, GridSpec grid, InclusionOptions options = {});
  ~InclusionEngine();
  InclusionEngine(const InclusionEngine&) = delete;
  InclusionEngine& operator=(const InclusionEngine&) = delete;

  const BlockMatrixView& view() const { return view_; }
  const GridSpec& grid() const { return grid_; }
  const TridiagonalSplit& split() const { return split_; }
  const OffdiagNorms& offdiag() const { return offdiag_; }
  double c_norm() const { return c_norm_; }
  NormMode norm_mode() const { return norm_mode_; }
  PenaltyParams params(std::size_t n) const;

  // Requires 1 <= n <= N-1 and eps >= 0.
  SigmaTauResult sigma_tau(std::size_t n, double eps);
  // Requires a uniform partition, 1 <= n <= N-1, |t| = 1.
  MethodReport pi_method(std::size_t n, Complex t, double eps);
  Tau1Result tau1_method(std::size_t n, double eps, bool with_outer);
  MethodReport gershgorin_block();

  // Exact s_min(A - lambda I) for the full matrix at one grid node.
  double full_matrix_smin(std::size_t node);
  // {s_min(A - lambda I) <= level} over the grid.
  Region full_pseudospectrum(double level);

  std::size_t cached_field_count() const;

 private:
  struct FieldCache;
  SminField& field_for(const ShiftedMatrix& op);
  Region threshold(const ShiftedMatrix& op, double level);
  void check_n(std::size_t n) const;

  BlockMatrixView view_;
  GridSpec grid_;
  InclusionOptions options_;
  TridiagonalSplit split_;
  OffdiagNorms offdiag_;
  NormMode norm_mode_;
  double c_norm_ = 0.0;
  std::unique_ptr<FieldCache> cache_;
};

// Single-call conveniences over a throwaway engine.
SigmaTauResult sigma_tau(const BlockMatrixView& view, std::size_t n, double eps,
                         const GridSpec& grid, const InclusionOptions& options = {});
MethodReport pi_method(const BlockMatrixView& view, std::size_t n, Complex t, double eps,
                       const GridSpec& grid, const InclusionOptions& options = {});
Tau1Result tau1_method(const BlockMatrixView& view, std::size_t n, double eps,
                       const GridSpec& grid, bool with_outer,
                       const InclusionOptions& options = {});

// Classical Gershgorin discs |lambda - a_kk| <= sum_{j != k} |a_kj|.
GershgorinResult gershgorin(const ComplexMatrix& a, const GridSpec& grid);
// Union over k of Spec_{r_k} a_kk with r_k = sum_{j != k} ||a_kj||.
MethodReport gershgorin_block(const BlockMatrixView& view, const GridSpec& grid,
                              const InclusionOptions& options = {});

}  // namespace specincl
