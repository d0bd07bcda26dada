#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "specincl/convergence.hpp"
#include "specincl/inclusion.hpp"
#include "specincl/region.hpp"

namespace specincl {

// Run-length encoding of a mask: alternating run lengths starting with a
// run of zeros (possibly of length 0), in node-index order.
std::vector<std::uint64_t> encode_mask_rle(const Region& region);
Region decode_mask_rle(const GridSpec& grid, const std::vector<std::uint64_t>& runs);

// MethodReport as JSON: method, n, t, eps, penalty, penalty parameters,
// contributing parts, grid, and the run-length encoded mask. Output is
// deterministic for a given report.
std::string report_to_json(const MethodReport& report);
// Rebuilds the report, including its region mask (values are not stored).
MethodReport report_from_json(const std::string& text);

std::string grid_to_json(const GridSpec& grid);

// One line per node: i,j,re,im,inside[,smin].
void write_region_csv(std::ostream& out, const Region& region);

// M,n,w,eps,d_H,cell_size
void write_study_csv(std::ostream& out, const StudyResult& study);

struct SvgLayer {
  const Region* region = nullptr;
  std::string stroke = "#1f77b4";
  std::string fill = "#1f77b4";
  double fill_opacity = 0.15;
  std::string label;
};

struct SvgCircle {
  Complex center;
  double radius = 0.0;
  std::string stroke = "#888888";
  bool dashed = true;
};

struct SvgOptions {
  std::string title;
  std::size_t width_px = 640;
  bool timestamp = true;
};

// Self-contained SVG: the grid box as the viewport, filled contour polygons
// per layer, optional reference circles, and eigenvalues as cross markers.
std::string render_svg(const GridSpec& grid, const std::vector<SvgLayer>& layers,
                       const std::vector<Complex>& markers,
                       const std::vector<SvgCircle>& circles, const SvgOptions& options);

}  // namespace specincl
