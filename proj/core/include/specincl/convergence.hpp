#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "specincl/inclusion.hpp"
#include "specincl/region.hpp"
#include "specincl/toeplitz.hpp"

namespace specincl {

struct ScheduleRow {
  std::size_t m = 0;  // matrix order
  std::size_t n = 0;  // truncation size in blocks
  std::size_t w = 1;  // block width for banded_partition
};

enum class StudyMethod { tau, tau1 };

struct StudyOptions {
  // Shared grid for every row; derived from the largest matrix when unset.
  std::optional<GridSpec> grid;
  std::size_t nodes_per_axis = 256;
  // tau by default, tau1 for Wiener-truncated symbols.
  std::optional<StudyMethod> method;
  InclusionOptions inclusion;
  double slack_cells = 2.0;
  std::size_t burn_in_n = 4;
};

struct StudyRow {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t w = 0;
  double eps = 0.0;
  double d_h = 0.0;
  double cell_size = 0.0;  // grid cell diagonal, the d_h uncertainty
  double penalty = 0.0;
  bool clipped = false;  // inclusion set touched the grid boundary
};

struct StudyResult {
  StudyMethod method = StudyMethod::tau;
  GridSpec grid;
  std::vector<StudyRow> rows;
  // d_h never grew by more than slack_cells cell diagonals between
  // consecutive rows with n >= burn_in_n.
  bool decrease_within_slack = true;
};

// Hausdorff distance between the tau (or tau1) inclusion set of A_M and
// Spec_eps A_M for each schedule row. The reference set is the grid s_min
// sublevel set of A_M, or for eps = 0 and a Hermitian symbol the nodes
// nearest the eigenvalues. Throws DomainError for eps < 0, for eps = 0 on a
// non-Hermitian symbol, or for an empty schedule.
StudyResult convergence_study(const ToeplitzSpec& spec, double eps,
                              std::span<const ScheduleRow> schedule,
                              const StudyOptions& options = {});

}  // namespace specincl
