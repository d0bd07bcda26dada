#include "specincl/region.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "specincl/errors.hpp"

namespace specincl {

void GridSpec::validate() const {
  for (double v : {re_min, re_max, im_min, im_max})
    if (!std::isfinite(v)) throw DomainError("grid bounds must be finite");
  if (!(re_min < re_max) || !(im_min < im_max)) throw DomainError("grid box is empty");
  if (nx < 2 || ny < 2) throw DomainError("grid needs at least 2 nodes per axis");
}

double GridSpec::cell_diagonal() const { return std::hypot(dx(), dy()); }

Complex GridSpec::node(std::size_t i, std::size_t j) const {
  return {re_min + static_cast<double>(i) * dx(), im_min + static_cast<double>(j) * dy()};
}

std::size_t GridSpec::nearest_node(Complex z) const {
  auto snap = [](double v, double lo, double h, std::size_t n) {
    double k = std::round((v - lo) / h);
    k = std::clamp(k, 0.0, static_cast<double>(n - 1));
    return static_cast<std::size_t>(k);
  };
  return snap(z.imag(), im_min, dy(), ny) * nx + snap(z.real(), re_min, dx(), nx);
}

GridSpec GridSpec::centered(Complex center, double radius, std::size_t nodes_per_axis) {
  GridSpec g{center.real() - radius, center.real() + radius, center.imag() - radius,
             center.imag() + radius, nodes_per_axis, nodes_per_axis};
  g.validate();
  return g;
}

Region::Region(GridSpec grid) : grid_(grid) {
  grid_.validate();
  mask_.assign(grid_.node_count(), 0);
}

Region::Region(GridSpec grid, std::vector<std::uint8_t> mask) : grid_(grid), mask_(std::move(mask)) {
  grid_.validate();
  if (mask_.size() != grid_.node_count()) throw DomainError("mask length differs from grid size");
  for (auto& m : mask_) m = m ? 1 : 0;
}

Region::Region(GridSpec grid, std::vector<std::uint8_t> mask, std::vector<double> values)
    : Region(grid, std::move(mask)) {
  if (values.size() != mask_.size()) throw DomainError("values length differs from grid size");
  for (double v : values)
    if (!(v >= 0.0)) throw DomainError("s_min values must be >= 0");
  values_ = std::move(values);
}

std::span<const double> Region::values() const {
  if (!values_) throw DomainError("region carries no s_min values");
  return *values_;
}

std::size_t Region::count() const {
  return static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), std::uint8_t{1}));
}

double Region::area() const { return static_cast<double>(count()) * grid_.dx() * grid_.dy(); }

bool Region::has_node_near(Complex z, double radius) const {
  double dx = grid_.dx(), dy = grid_.dy();
  auto lo_i = static_cast<long>(std::floor((z.real() - radius - grid_.re_min) / dx));
  auto hi_i = static_cast<long>(std::ceil((z.real() + radius - grid_.re_min) / dx));
  auto lo_j = static_cast<long>(std::floor((z.imag() - radius - grid_.im_min) / dy));
  auto hi_j = static_cast<long>(std::ceil((z.imag() + radius - grid_.im_min) / dy));
  lo_i = std::max(lo_i, 0L);
  lo_j = std::max(lo_j, 0L);
  hi_i = std::min(hi_i, static_cast<long>(grid_.nx) - 1);
  hi_j = std::min(hi_j, static_cast<long>(grid_.ny) - 1);
  for (long j = lo_j; j <= hi_j; ++j)
    for (long i = lo_i; i <= hi_i; ++i) {
      auto idx = static_cast<std::size_t>(j) * grid_.nx + static_cast<std::size_t>(i);
      if (mask_[idx] && std::abs(grid_.node(idx) - z) <= radius) return true;
    }
  return false;
}

bool Region::touches_boundary() const {
  std::size_t nx = grid_.nx, ny = grid_.ny;
  for (std::size_t i = 0; i < nx; ++i)
    if (mask_[i] || mask_[(ny - 1) * nx + i]) return true;
  for (std::size_t j = 0; j < ny; ++j)
    if (mask_[j * nx] || mask_[j * nx + nx - 1]) return true;
  return false;
}

bool Region::is_subset_of(const Region& other) const {
  if (!(grid_ == other.grid_)) throw GridMismatch("regions live on different grids");
  for (std::size_t i = 0; i < mask_.size(); ++i)
    if (mask_[i] && !other.mask_[i]) return false;
  return true;
}

Region region_union(std::span<const Region> regions) {
  if (regions.empty()) throw DomainError("union of no regions");
  const GridSpec& g = regions.front().grid();
  bool with_values = true;
  for (const Region& r : regions) {
    if (!(r.grid() == g)) throw GridMismatch("regions live on different grids");
    with_values = with_values && r.has_values();
  }
  std::vector<std::uint8_t> mask(g.node_count(), 0);
  std::vector<double> values;
  if (with_values) values.assign(g.node_count(), std::numeric_limits<double>::infinity());
  for (const Region& r : regions) {
    auto m = r.mask();
    for (std::size_t i = 0; i < mask.size(); ++i) mask[i] |= m[i];
    if (with_values) {
      auto v = r.values();
      for (std::size_t i = 0; i < values.size(); ++i) values[i] = std::min(values[i], v[i]);
    }
  }
  if (with_values) return Region(g, std::move(mask), std::move(values));
  return Region(g, std::move(mask));
}

Region region_intersect(const Region& a, const Region& b) {
  if (!(a.grid() == b.grid())) throw GridMismatch("regions live on different grids");
  std::vector<std::uint8_t> mask(a.grid().node_count());
  auto ma = a.mask(), mb = b.mask();
  for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = ma[i] & mb[i];
  if (a.has_values() && b.has_values()) {
    std::vector<double> values(mask.size());
    auto va = a.values(), vb = b.values();
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = std::max(va[i], vb[i]);
    return Region(a.grid(), std::move(mask), std::move(values));
  }
  return Region(a.grid(), std::move(mask));
}

namespace {

// 1-D squared distance transform (lower envelope of parabolas), unit spacing.
void edt_1d(const double* f, double* d, std::size_t n, std::size_t stride,
            std::vector<std::size_t>& v, std::vector<double>& z, std::vector<double>& tmp) {
  for (std::size_t q = 0; q < n; ++q) tmp[q] = f[q * stride];
  std::size_t k = 0;
  v[0] = 0;
  z[0] = -std::numeric_limits<double>::infinity();
  z[1] = std::numeric_limits<double>::infinity();
  for (std::size_t q = 1; q < n; ++q) {
    auto sect = [&](std::size_t p) {
      double pp = static_cast<double>(p), qq = static_cast<double>(q);
      return ((tmp[q] + qq * qq) - (tmp[p] + pp * pp)) / (2.0 * (qq - pp));
    };
    double s = sect(v[k]);
    while (s <= z[k]) s = sect(v[--k]);
    ++k;
    v[k] = q;
    z[k] = s;
    z[k + 1] = std::numeric_limits<double>::infinity();
  }
  k = 0;
  for (std::size_t q = 0; q < n; ++q) {
    while (z[k + 1] < static_cast<double>(q)) ++k;
    double diff = static_cast<double>(q) - static_cast<double>(v[k]);
    d[q * stride] = diff * diff + tmp[v[k]];
  }
}

// Squared Euclidean distance (in physical units) from every node to the
// nearest masked node of `to`.
std::vector<double> squared_distance_field(const Region& to) {
  const GridSpec& g = to.grid();
  std::size_t nx = g.nx, ny = g.ny;
  double dx = g.dx(), dy = g.dy();
  const double far = 1e30;
  auto m = to.mask();
  std::vector<double> f(nx * ny), d(nx * ny);
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = m[i] ? 0.0 : far;

  std::size_t nmax = std::max(nx, ny);
  std::vector<std::size_t> v(nmax);
  std::vector<double> z(nmax + 1), tmp(nmax);
  // columns (along y), in units of dy
  for (std::size_t i = 0; i < nx; ++i) edt_1d(&f[i], &d[i], ny, nx, v, z, tmp);
  // rescale to units of dx before the row pass
  double ratio = (dy * dy) / (dx * dx);
  for (double& x : d) x = x >= far ? far : x * ratio;
  for (std::size_t j = 0; j < ny; ++j) edt_1d(&d[j * nx], &f[j * nx], nx, 1, v, z, tmp);
  for (double& x : f) x *= dx * dx;
  return f;
}

}  // namespace

double directed_hausdorff(const Region& from, const Region& to) {
  if (!(from.grid() == to.grid())) throw GridMismatch("regions live on different grids");
  if (from.empty() || to.empty()) throw EmptyRegionError("Hausdorff distance of an empty region");
  std::vector<double> dist = squared_distance_field(to);
  auto m = from.mask();
  double best = 0.0;
  for (std::size_t i = 0; i < dist.size(); ++i)
    if (m[i]) best = std::max(best, dist[i]);
  return std::sqrt(best);
}

HausdorffDistance hausdorff(const Region& a, const Region& b) {
  double d = std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
  return {d, a.grid().cell_diagonal()};
}

namespace {

struct Segment {
  std::array<std::size_t, 2> edge;
  std::array<Point2, 2> pt;
};

}  // namespace

std::vector<Polyline> contour_extract(const Region& region) {
  if (region.empty()) throw EmptyRegionError("contour of an empty region");
  const GridSpec& g = region.grid();
  // Padded lattice: one ring of outside nodes around the grid.
  const std::size_t px = g.nx + 2, py = g.ny + 2;
  std::vector<double> f(px * py);
  bool use_values = region.has_values() && region.level().has_value();
  double pad = std::max(g.dx(), g.dy());
  auto mask = region.mask();
  for (std::size_t j = 0; j < g.ny; ++j)
    for (std::size_t i = 0; i < g.nx; ++i) {
      std::size_t idx = j * g.nx + i;
      double v;
      if (use_values) {
        v = region.values()[idx] - *region.level();
        // the mask is authoritative where it disagrees with the field
        if (mask[idx] && v > 0.0) v = 0.0;
        if (!mask[idx] && v <= 0.0) v = 1e-300;
      } else {
        v = mask[idx] ? -1.0 : 1.0;
      }
      f[(j + 1) * px + (i + 1)] = v;
    }
  for (std::size_t j = 0; j < py; ++j)
    for (std::size_t i = 0; i < px; ++i) {
      if (i > 0 && i + 1 < px && j > 0 && j + 1 < py) continue;
      if (!use_values) {
        f[j * px + i] = 1.0;
        continue;
      }
      std::size_t ci = std::clamp<std::size_t>(i, 1, px - 2), cj = std::clamp<std::size_t>(j, 1, py - 2);
      f[j * px + i] = std::max(f[cj * px + ci], 0.0) + pad;
    }

  auto coord = [&](std::size_t i, std::size_t j) {
    return Point2{g.re_min + (static_cast<double>(i) - 1.0) * g.dx(),
                  g.im_min + (static_cast<double>(j) - 1.0) * g.dy()};
  };
  auto inside = [&](std::size_t i, std::size_t j) { return f[j * px + i] <= 0.0; };
  // Edge ids: 2*node for the edge to the right, 2*node+1 for the edge upward.
  auto crossing = [&](std::size_t i0, std::size_t j0, std::size_t i1, std::size_t j1) {
    double f0 = f[j0 * px + i0], f1 = f[j1 * px + i1];
    double t = (f0 == f1) ? 0.5 : std::clamp(f0 / (f0 - f1), 0.0, 1.0);
    Point2 a = coord(i0, j0), b = coord(i1, j1);
    return Point2{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
  };

  std::vector<Segment> segs;
  for (std::size_t j = 0; j + 1 < py; ++j)
    for (std::size_t i = 0; i + 1 < px; ++i) {
      bool c0 = inside(i, j), c1 = inside(i + 1, j), c2 = inside(i + 1, j + 1),
           c3 = inside(i, j + 1);
      int code = c0 | (c1 << 1) | (c2 << 2) | (c3 << 3);
      if (code == 0 || code == 15) continue;
      std::size_t n0 = j * px + i;
      std::array<std::size_t, 4> eid{2 * n0, 2 * (n0 + 1) + 1, 2 * (n0 + px), 2 * n0 + 1};
      auto pt = [&](int e) {
        switch (e) {
          case 0: return crossing(i, j, i + 1, j);
          case 1: return crossing(i + 1, j, i + 1, j + 1);
          case 2: return crossing(i, j + 1, i + 1, j + 1);
          default: return crossing(i, j, i, j + 1);
        }
      };
      auto add = [&](int a, int b) { segs.push_back({{eid[a], eid[b]}, {pt(a), pt(b)}}); };
      if (code == 5 || code == 10) {
        double centre = 0.25 * (f[n0] + f[n0 + 1] + f[n0 + px] + f[n0 + px + 1]);
        bool mid_in = centre <= 0.0;
        if ((code == 5) == mid_in) {
          add(0, 1);
          add(2, 3);
        } else {
          add(0, 3);
          add(1, 2);
        }
        continue;
      }
      std::array<int, 2> hit{};
      int h = 0;
      bool corner[4] = {c0, c1, c2, c3};
      const int ends[4][2] = {{0, 1}, {1, 2}, {3, 2}, {0, 3}};
      for (int e = 0; e < 4; ++e)
        if (corner[ends[e][0]] != corner[ends[e][1]]) hit[h++] = e;
      add(hit[0], hit[1]);
    }

  std::unordered_map<std::size_t, std::array<std::size_t, 2>> by_edge;
  const std::size_t none = std::numeric_limits<std::size_t>::max();
  for (std::size_t s = 0; s < segs.size(); ++s)
    for (std::size_t e : segs[s].edge) {
      auto [it, fresh] = by_edge.try_emplace(e, std::array<std::size_t, 2>{none, none});
      (it->second[0] == none ? it->second[0] : it->second[1]) = s;
    }

  std::vector<std::uint8_t> used(segs.size(), 0);
  std::vector<Polyline> loops;
  for (std::size_t s0 = 0; s0 < segs.size(); ++s0) {
    if (used[s0]) continue;
    Polyline loop;
    std::size_t s = s0;
    std::size_t entry = segs[s0].edge[0];
    loop.push_back(segs[s0].pt[0]);
    while (true) {
      used[s] = 1;
      int out = segs[s].edge[0] == entry ? 1 : 0;
      std::size_t exit_edge = segs[s].edge[out];
      loop.push_back(segs[s].pt[out]);
      const auto& pair = by_edge.at(exit_edge);
      std::size_t next = pair[0] == s ? pair[1] : pair[0];
      if (next == none || used[next]) break;
      s = next;
      entry = exit_edge;
    }
    if (loop.size() >= 2) {
      loop.back() = loop.front();
      loops.push_back(std::move(loop));
    }
  }
  return loops;
}

double signed_area(const Polyline& loop) {
  double a = 0.0;
  for (std::size_t i = 0; i + 1 < loop.size(); ++i)
    a += loop[i].x * loop[i + 1].y - loop[i + 1].x * loop[i].y;
  return 0.5 * a;
}

}  // namespace specincl
