#include <algorithm>
#include <cmath>
#include <string>

#include "specincl/errors.hpp"
#include "specincl/parallel.hpp"
#include "specincl/pseudospectrum.hpp"

namespace specincl {

namespace {

// Lattice coordinates 0, s, 2s, ... below n, plus n-1 so the far edge is
// always covered.
std::vector<std::size_t> lattice(std::size_t n, std::size_t s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; i += s) out.push_back(i);
  if (out.back() != n - 1) out.push_back(n - 1);
  return out;
}

// Nearest parent-lattice coordinates at or below / at or above i.
std::pair<std::size_t, std::size_t> parents(std::size_t i, std::size_t n, std::size_t ps) {
  std::size_t lo = (i / ps) * ps;
  std::size_t hi = lo == i ? i : std::min(lo + ps, n - 1);
  return {lo, hi};
}

}  // namespace

SminField::SminField(ShiftedMatrix op, GridSpec grid, EvalOptions options)
    : op_(std::move(op)), grid_(grid), options_(options) {
  grid_.validate();
  if (op_.base.empty() || op_.base.rows() < op_.base.cols() ||
      op_.row_offset + op_.base.cols() > op_.base.rows())
    throw DomainError("shifted operator has an invalid shape");
  std::size_t s = 1;
  while (s < std::max<std::size_t>(options_.coarse_stride, 1)) s *= 2;
  options_.coarse_stride = s;

  op_norm_ = spectral_norm(op_.base);
  slack_ = 1e-12 * (1.0 + op_norm_);
  std::size_t count = grid_.node_count();
  lo_.resize(count);
  hi_.resize(count);
  val_.assign(count, 0.0);
  exact_.assign(count, 0);
  // s_min(E - lambda J) is within ||E|| of s_min(lambda J) = |lambda|.
  for (std::size_t idx = 0; idx < count; ++idx) {
    double a = std::abs(grid_.node(idx));
    lo_[idx] = std::max(0.0, a - op_norm_ - slack_);
    hi_[idx] = a + op_norm_ + slack_;
  }
}

void SminField::evaluate(std::span<const std::size_t> nodes) {
  if (nodes.empty()) return;
  std::vector<double> out(nodes.size());
  parallel_for(nodes.size(), options_.jobs, [&](std::size_t begin, std::size_t end) {
    SminEvaluator ev(op_, options_.hermitian_shortcut);
    for (std::size_t k = begin; k < end; ++k) out[k] = ev(grid_.node(nodes[k]));
  });
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    std::size_t idx = nodes[k];
    val_[idx] = out[k];
    exact_[idx] = 1;
    lo_[idx] = std::max(0.0, out[k] - slack_);
    hi_[idx] = out[k] + slack_;
  }
}

bool SminField::undecided(std::size_t index, std::span<const double> thresholds) const {
  if (exact_[index]) return false;
  for (double t : thresholds)
    if (lo_[index] <= t && t < hi_[index]) return true;
  return false;
}

void SminField::tighten_from_parents(std::size_t i, std::size_t j, std::size_t parent_stride) {
  std::size_t idx = j * grid_.nx + i;
  if (exact_[idx]) return;
  auto [i0, i1] = parents(i, grid_.nx, parent_stride);
  auto [j0, j1] = parents(j, grid_.ny, parent_stride);
  Complex z = grid_.node(i, j);
  double lo = lo_[idx], hi = hi_[idx];
  for (std::size_t pj : {j0, j1})
    for (std::size_t pi : {i0, i1}) {
      std::size_t p = pj * grid_.nx + pi;
      if (p == idx) continue;
      // 1-Lipschitz in lambda; slack covers rounding in the distance
      double d = std::abs(z - grid_.node(pi, pj)) + slack_;
      lo = std::max(lo, lo_[p] - d);
      hi = std::min(hi, hi_[p] + d);
    }
  lo_[idx] = std::max(lo, 0.0);
  hi_[idx] = hi;
}

void SminField::resolve(std::span<const double> thresholds) {
  std::vector<double> ts(thresholds.begin(), thresholds.end());
  for (double t : ts)
    if (!std::isfinite(t)) throw DomainError("pseudospectral level must be finite");
  std::sort(ts.begin(), ts.end());

  const std::size_t nx = grid_.nx, ny = grid_.ny;
  std::vector<std::size_t> todo;
  for (std::size_t s = options_.coarse_stride; s >= 1; s /= 2) {
    auto li = lattice(nx, s), lj = lattice(ny, s);
    if (s < options_.coarse_stride)
      for (std::size_t j : lj)
        for (std::size_t i : li) tighten_from_parents(i, j, 2 * s);
    todo.clear();
    for (std::size_t j : lj)
      for (std::size_t i : li)
        if (undecided(j * nx + i, ts)) todo.push_back(j * nx + i);
    evaluate(todo);
  }
  for (double t : ts)
    if (std::find(resolved_.begin(), resolved_.end(), t) == resolved_.end()) resolved_.push_back(t);
}

void SminField::resolve_all() {
  std::vector<std::size_t> todo;
  for (std::size_t idx = 0; idx < exact_.size(); ++idx)
    if (!exact_[idx]) todo.push_back(idx);
  evaluate(todo);
}

Region SminField::region(double threshold) const {
  bool exact = fully_exact();
  if (!exact && std::find(resolved_.begin(), resolved_.end(), threshold) == resolved_.end())
    throw DomainError("level " + std::to_string(threshold) + " was never resolved on this field");
  std::vector<std::uint8_t> mask(exact_.size());
  for (std::size_t idx = 0; idx < mask.size(); ++idx)
    mask[idx] = exact_[idx] ? val_[idx] <= threshold : hi_[idx] <= threshold;
  Region r = exact ? Region(grid_, std::move(mask), val_) : Region(grid_, std::move(mask));
  r.set_level(threshold);
  return r;
}

double SminField::exact_value(std::size_t index) {
  if (index >= exact_.size()) throw IndexError("grid node out of range");
  if (!exact_[index]) {
    std::size_t one[1] = {index};
    evaluate(one);
  }
  return val_[index];
}

bool SminField::fully_exact() const {
  return std::all_of(exact_.begin(), exact_.end(), [](std::uint8_t e) { return e != 0; });
}

std::size_t SminField::exact_count() const {
  return static_cast<std::size_t>(std::count(exact_.begin(), exact_.end(), std::uint8_t{1}));
}

Region pseudospectrum(const ComplexMatrix& e, double eps, const GridSpec& grid,
                      const std::optional<ComplexMatrix>& embed, const EvalOptions& options) {
  if (!(eps >= 0.0)) throw DomainError("eps must be >= 0");
  SminField field(make_shifted(e, embed), grid, options);
  field.resolve_all();
  return field.region(eps);
}

}  // namespace specincl
