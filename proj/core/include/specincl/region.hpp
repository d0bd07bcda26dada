#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "specincl/matrix.hpp"

namespace specincl {

// Axis-aligned box in the complex plane sampled by nx x ny nodes, boundary
// nodes included. Node (i, j) sits at re_min + i*dx + (im_min + j*dy) i and
// has linear index j*nx + i.
struct GridSpec {
  double re_min = -1.0;
  double re_max = 1.0;
  double im_min = -1.0;
  double im_max = 1.0;
  std::size_t nx = 256;
  std::size_t ny = 256;

  // Throws DomainError on an empty box or fewer than 2 nodes per axis.
  void validate() const;

  std::size_t node_count() const { return nx * ny; }
  double dx() const { return (re_max - re_min) / static_cast<double>(nx - 1); }
  double dy() const { return (im_max - im_min) / static_cast<double>(ny - 1); }
  double cell_diagonal() const;
  Complex node(std::size_t i, std::size_t j) const;
  Complex node(std::size_t index) const { return node(index % nx, index / nx); }
  // Nearest node index to z, clamped into the box.
  std::size_t nearest_node(Complex z) const;

  // Square box of half-width `radius` about `center`.
  static GridSpec centered(Complex center, double radius, std::size_t nodes_per_axis = 256);

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

// Discretised subset of C: a boolean per grid node, optionally with the
// s_min field it was thresholded from.
class Region {
 public:
  Region() = default;
  explicit Region(GridSpec grid);  // empty region
  Region(GridSpec grid, std::vector<std::uint8_t> mask);
  Region(GridSpec grid, std::vector<std::uint8_t> mask, std::vector<double> values);

  const GridSpec& grid() const { return grid_; }
  std::span<const std::uint8_t> mask() const { return mask_; }
  bool contains_node(std::size_t index) const { return mask_[index] != 0; }
  void set_node(std::size_t index, bool inside) { mask_[index] = inside ? 1 : 0; }

  bool has_values() const { return values_.has_value(); }
  std::span<const double> values() const;
  void drop_values() { values_.reset(); }

  // Threshold at which the mask was taken from the values field, if any.
  std::optional<double> level() const { return level_; }
  void set_level(double level) { level_ = level; }

  std::size_t count() const;
  bool empty() const { return count() == 0; }
  // Area estimate: masked nodes times dx*dy.
  double area() const;
  // True if some masked node lies within `radius` of z.
  bool has_node_near(Complex z, double radius) const;
  bool touches_boundary() const;
  bool is_subset_of(const Region& other) const;

  friend bool operator==(const Region& a, const Region& b) {
    return a.grid_ == b.grid_ && a.mask_ == b.mask_;
  }

 private:
  GridSpec grid_;
  std::vector<std::uint8_t> mask_;
  std::optional<std::vector<double>> values_;
  std::optional<double> level_;
};

// Pointwise OR. The s_min fields are combined by pointwise min when every
// operand carries one. Throws GridMismatch for differing grids.
Region region_union(std::span<const Region> regions);
// Pointwise AND; fields combined by pointwise max.
Region region_intersect(const Region& a, const Region& b);

struct HausdorffDistance {
  double value = 0.0;
  double uncertainty = 0.0;  // one grid cell diagonal
};

// Hausdorff distance between the masked node sets of two regions on the
// same grid. Throws EmptyRegionError if either mask is empty.
HausdorffDistance hausdorff(const Region& a, const Region& b);

// Directed sup_{x in from} dist(x, to) over node coordinates.
double directed_hausdorff(const Region& from, const Region& to);

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};
using Polyline = std::vector<Point2>;

// Closed boundary loops of the region (last point repeats the first).
// Marching squares over the values field at level() when both are present,
// otherwise over the mask. Outside the grid counts as outside the region.
std::vector<Polyline> contour_extract(const Region& region);

// Signed area enclosed by a closed polyline (positive when counterclockwise).
double signed_area(const Polyline& loop);

}  // namespace specincl
