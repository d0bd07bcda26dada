#include "specincl/convergence.hpp"

#include <algorithm>
#include <map>

#include "specincl/errors.hpp"
#include "specincl/linalg.hpp"

namespace specincl {

namespace {

double row_penalty(const ToeplitzSpec& spec, const ScheduleRow& row, StudyMethod method,
                   const InclusionOptions& opts) {
  BlockMatrixView view(build_toeplitz(spec, row.m), banded_partition(row.m, row.w));
  OffdiagNorms r = offdiag_norms(view);
  NormMode mode = opts.norm_mode.value_or(default_norm_mode(view.order()));
  double c = remaining_norm(split_tridiagonal(view).remaining, mode);
  PenaltyParams p = PenaltyParams::make(r.lower, r.upper, c, row.n);
  return opts.penalty_scale * (method == StudyMethod::tau ? eps_tau(p) : eps_tau1(p));
}

}  // namespace

StudyResult convergence_study(const ToeplitzSpec& spec, double eps,
                              std::span<const ScheduleRow> schedule, const StudyOptions& options) {
  if (schedule.empty()) throw DomainError("convergence study needs a nonempty schedule");
  if (!(eps >= 0.0)) throw DomainError("eps must be >= 0");
  if (eps == 0.0 && !spec.hermitian())
    throw DomainError("eps = 0 studies need a Hermitian symbol");

  StudyResult out;
  out.method = options.method.value_or(spec.wiener_truncated() ? StudyMethod::tau1 : StudyMethod::tau);

  if (options.grid) {
    out.grid = *options.grid;
  } else {
    std::size_t m_max = 0;
    double pen = 0.0;
    for (const ScheduleRow& row : schedule) {
      m_max = std::max(m_max, row.m);
      pen = std::max(pen, row_penalty(spec, row, out.method, options.inclusion));
    }
    out.grid = auto_grid(build_toeplitz(spec, m_max), eps + pen, options.nodes_per_axis);
  }
  const double cell = out.grid.cell_diagonal();

  // reference sets are shared between rows of equal order
  std::map<std::size_t, Region> reference;
  auto reference_for = [&](InclusionEngine& engine, std::size_t m) -> const Region& {
    auto it = reference.find(m);
    if (it != reference.end()) return it->second;
    Region ref(out.grid);
    if (eps == 0.0) {
      for (double x : eig_hermitian(engine.view().matrix()))
        ref.set_node(out.grid.nearest_node(Complex{x, 0.0}), true);
    } else {
      ref = engine.full_pseudospectrum(eps);
    }
    return reference.emplace(m, std::move(ref)).first->second;
  };

  for (const ScheduleRow& row : schedule) {
    BlockMatrixView view(build_toeplitz(spec, row.m), banded_partition(row.m, row.w));
    InclusionEngine engine(view, out.grid, options.inclusion);
    StudyRow r{row.m, row.n, row.w, eps, 0.0, cell, 0.0, false};
    Region incl;
    if (out.method == StudyMethod::tau) {
      SigmaTauResult s = engine.sigma_tau(row.n, eps);
      r.penalty = s.report.penalty;
      r.clipped = s.report.clipped;
      incl = std::move(s.big_sigma);
    } else {
      Tau1Result g = engine.tau1_method(row.n, eps, false);
      r.penalty = g.report.penalty;
      r.clipped = g.report.clipped;
      incl = std::move(g.gamma);
    }
    r.d_h = hausdorff(incl, reference_for(engine, row.m)).value;
    out.rows.push_back(r);
  }

  for (std::size_t i = 1; i < out.rows.size(); ++i) {
    const StudyRow& a = out.rows[i - 1];
    const StudyRow& b = out.rows[i];
    if (a.n >= options.burn_in_n && b.n >= options.burn_in_n &&
        b.d_h > a.d_h + options.slack_cells * cell)
      out.decrease_within_slack = false;
  }
  return out;
}

}  // namespace specincl
