#include "specincl/inclusion.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <functional>
#include <limits>
#include <unordered_map>

#include "specincl/errors.hpp"

namespace specincl {

const char* method_name(Method m) {
  switch (m) {
    case Method::tau: return "tau";
    case Method::pi: return "pi";
    case Method::tau1: return "tau1";
    case Method::gersh: return "gersh";
    case Method::block_gersh: return "block-gersh";
  }
  return "?";
}

Method parse_method(const std::string& name) {
  if (name == "tau") return Method::tau;
  if (name == "pi") return Method::pi;
  if (name == "tau1") return Method::tau1;
  if (name == "gersh") return Method::gersh;
  if (name == "block-gersh") return Method::block_gersh;
  throw DomainError("unknown method '" + name + "'");
}

GridSpec auto_grid(const ComplexMatrix& a, double inflate, std::size_t nodes_per_axis) {
  if (!a.is_square() || a.empty()) throw DomainError("auto_grid needs a nonempty square matrix");
  if (!(inflate >= 0.0) || !std::isfinite(inflate)) throw DomainError("grid inflation must be >= 0");
  if (nodes_per_axis < 8) throw DomainError("auto_grid needs at least 8 nodes per axis");
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (std::size_t k = 0; k < a.rows(); ++k) {
    double r = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (j != k) r += std::abs(a(k, j));
    Complex c = a(k, k);
    x0 = std::min(x0, c.real() - r);
    x1 = std::max(x1, c.real() + r);
    y0 = std::min(y0, c.imag() - r);
    y1 = std::max(y1, c.imag() + r);
  }
  Complex centre{0.5 * (x0 + x1), 0.5 * (y0 + y1)};
  double half = 0.5 * std::max(x1 - x0, y1 - y0) + inflate;
  if (half <= 0.0) half = 1.0;
  // two spare cells on every side
  double n = static_cast<double>(nodes_per_axis);
  half *= (n - 1.0) / (n - 5.0);
  return GridSpec::centered(centre, half, nodes_per_axis);
}

// Fields keyed by operator content, so equal truncations share one field.
struct InclusionEngine::FieldCache {
  std::unordered_map<std::size_t, std::vector<std::unique_ptr<SminField>>> buckets;
  std::size_t size = 0;

  static std::size_t hash(const ShiftedMatrix& op) {
    std::size_t h = std::hash<std::size_t>{}(op.base.rows());
    auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    mix(op.base.cols());
    mix(op.row_offset);
    for (Complex z : op.base.entries()) {
      double parts[2] = {z.real(), z.imag()};
      for (double p : parts) {
        std::uint64_t bits;
        std::memcpy(&bits, &p, sizeof bits);
        mix(static_cast<std::size_t>(bits));
      }
    }
    return h;
  }
};

InclusionEngine::InclusionEngine(BlockMatrixView view, GridSpec grid, InclusionOptions options)
    : view_(std::move(view)),
      grid_(grid),
      options_(options),
      split_(split_tridiagonal(view_)),
      offdiag_(offdiag_norms(view_)),
      norm_mode_(options.norm_mode.value_or(default_norm_mode(view_.order()))),
      cache_(std::make_unique<FieldCache>()) {
  grid_.validate();
  if (!(options_.penalty_scale >= 0.0)) throw DomainError("penalty scale must be >= 0");
  c_norm_ = remaining_norm(split_.remaining, norm_mode_);
}

InclusionEngine::~InclusionEngine() = default;

PenaltyParams InclusionEngine::params(std::size_t n) const {
  return PenaltyParams::make(offdiag_.lower, offdiag_.upper, c_norm_, n);
}

std::size_t InclusionEngine::cached_field_count() const { return cache_->size; }

SminField& InclusionEngine::field_for(const ShiftedMatrix& op) {
  auto& bucket = cache_->buckets[FieldCache::hash(op)];
  for (auto& f : bucket)
    if (f->op().row_offset == op.row_offset && f->op().base == op.base) return *f;
  bucket.push_back(std::make_unique<SminField>(op, grid_, options_.eval));
  ++cache_->size;
  return *bucket.back();
}

Region InclusionEngine::threshold(const ShiftedMatrix& op, double level) {
  SminField& f = field_for(op);
  f.resolve(level);
  return f.region(level);
}

void InclusionEngine::check_n(std::size_t n) const {
  std::size_t nb = view_.block_count();
  if (n < 1 || n > nb - 1)
    throw IndexError("n=" + std::to_string(n) + " outside 1..N-1 (N=" + std::to_string(nb) + ")");
}

namespace {

void check_eps(double eps) {
  if (!(eps >= 0.0) || !std::isfinite(eps)) throw DomainError("eps must be finite and >= 0");
}

}  // namespace

SigmaTauResult InclusionEngine::sigma_tau(std::size_t n, double eps) {
  check_n(n);
  check_eps(eps);
  const std::size_t nb = view_.block_count();
  MethodReport rep;
  rep.method = Method::tau;
  rep.n = n;
  rep.eps = eps;
  rep.params = params(n);
  rep.norm_mode = norm_mode_;
  rep.penalty_scale = options_.penalty_scale;
  rep.penalty = options_.penalty_scale * eps_tau(rep.params);
  const double level = eps + rep.penalty;

  std::vector<Region> parts;
  auto add = [&](std::size_t m, std::size_t k, double lvl) {
    parts.push_back(threshold(make_shifted(submatrix_tau(view_, m, k)), lvl));
    rep.parts.push_back({"tau", m, k, lvl});
  };
  for (std::size_t k = 0; k + n <= nb; ++k) add(n, k, level);
  for (std::size_t m = 1; m < n; ++m) {
    add(m, 0, level);
    add(m, nb - m, level);
  }

  SigmaTauResult out;
  out.sigma = region_union(parts);
  if (n >= 3) {
    double hat_level =
        eps + options_.penalty_scale * eps_tau(PenaltyParams::make(offdiag_.lower, offdiag_.upper,
                                                                   c_norm_, n - 2));
    std::vector<Region> hat;
    for (std::size_t k = 0; k + n <= nb; ++k) {
      hat.push_back(threshold(make_shifted(submatrix_tau(view_, n, k)), hat_level));
      rep.parts.push_back({"tau-hat", n, k, hat_level});
    }
    out.sigma_hat = region_union(hat);
    out.big_sigma = region_intersect(out.sigma, *out.sigma_hat);
  } else {
    out.big_sigma = out.sigma;
  }
  rep.region = out.big_sigma;
  rep.clipped = rep.region.touches_boundary();
  out.report = std::move(rep);
  return out;
}

MethodReport InclusionEngine::pi_method(std::size_t n, Complex t, double eps) {
  if (!view_.partition().is_uniform())
    throw PiMethodUnsupported("the pi method needs a uniform partition");
  check_n(n);
  check_eps(eps);
  if (std::abs(std::abs(t) - 1.0) > 1e-12) throw DomainError("t must have modulus 1");
  t /= std::abs(t);
  const std::size_t nb = view_.block_count();
  MethodReport rep;
  rep.method = Method::pi;
  rep.n = n;
  rep.t = t;
  rep.eps = eps;
  rep.params = params(n);
  rep.norm_mode = norm_mode_;
  rep.penalty_scale = options_.penalty_scale;
  rep.penalty = options_.penalty_scale * eps_pi(rep.params);
  const double level = eps + rep.penalty;

  std::vector<Region> parts;
  for (std::size_t k = 0; k + n <= nb; ++k) {
    parts.push_back(threshold(make_shifted(submatrix_pi(view_, n, k, t)), level));
    rep.parts.push_back({"pi", n, k, level});
  }
  rep.region = region_union(parts);
  rep.clipped = rep.region.touches_boundary();
  return rep;
}

Tau1Result InclusionEngine::tau1_method(std::size_t n, double eps, bool with_outer) {
  check_n(n);
  check_eps(eps);
  const std::size_t nb = view_.block_count();
  MethodReport rep;
  rep.method = Method::tau1;
  rep.n = n;
  rep.eps = eps;
  rep.params = params(n);
  rep.norm_mode = norm_mode_;
  rep.penalty_scale = options_.penalty_scale;
  rep.penalty = options_.penalty_scale * eps_tau1(rep.params);
  const double level = eps + rep.penalty;

  std::vector<Region> parts;
  for (std::size_t k = 0; k + n <= nb; ++k) {
    RectangularTruncation rt = submatrix_tau1(view_, n, k);
    parts.push_back(threshold(ShiftedMatrix{std::move(rt.matrix), rt.top_rows}, level));
    rep.parts.push_back({"tau1", n, k, level});
  }
  Tau1Result out;
  out.gamma = region_union(parts);
  if (with_outer) {
    double outer_level = level + 2.0 * c_norm_;
    out.outer = full_pseudospectrum(outer_level);
    rep.parts.push_back({"full", view_.block_count(), 0, outer_level});
  }
  rep.region = out.gamma;
  rep.clipped = rep.region.touches_boundary();
  out.report = std::move(rep);
  return out;
}

MethodReport InclusionEngine::gershgorin_block() {
  const std::size_t nb = view_.block_count();
  MethodReport rep;
  rep.method = Method::block_gersh;
  rep.n = 1;
  rep.params = params(1);
  rep.norm_mode = norm_mode_;
  std::vector<Region> parts;
  for (std::size_t k = 1; k <= nb; ++k) {
    double r = 0.0;
    for (std::size_t j = 1; j <= nb; ++j)
      if (j != k) r += spectral_norm(view_.block(k, j));
    rep.penalty = std::max(rep.penalty, r);
    parts.push_back(threshold(make_shifted(view_.block(k, k)), r));
    rep.parts.push_back({"block", 1, k - 1, r});
  }
  rep.region = region_union(parts);
  rep.clipped = rep.region.touches_boundary();
  return rep;
}

double InclusionEngine::full_matrix_smin(std::size_t node) {
  return field_for(make_shifted(view_.matrix())).exact_value(node);
}

Region InclusionEngine::full_pseudospectrum(double level) {
  return threshold(make_shifted(view_.matrix()), level);
}

SigmaTauResult sigma_tau(const BlockMatrixView& view, std::size_t n, double eps,
                         const GridSpec& grid, const InclusionOptions& options) {
  InclusionEngine engine(view, grid, options);
  return engine.sigma_tau(n, eps);
}

MethodReport pi_method(const BlockMatrixView& view, std::size_t n, Complex t, double eps,
                       const GridSpec& grid, const InclusionOptions& options) {
  InclusionEngine engine(view, grid, options);
  return engine.pi_method(n, t, eps);
}

Tau1Result tau1_method(const BlockMatrixView& view, std::size_t n, double eps,
                       const GridSpec& grid, bool with_outer, const InclusionOptions& options) {
  InclusionEngine engine(view, grid, options);
  return engine.tau1_method(n, eps, with_outer);
}

GershgorinResult gershgorin(const ComplexMatrix& a, const GridSpec& grid) {
  if (!a.is_square()) throw DomainError("Gershgorin discs need a square matrix");
  grid.validate();
  GershgorinResult out;
  for (std::size_t k = 0; k < a.rows(); ++k) {
    double r = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (j != k) r += std::abs(a(k, j));
    out.discs.push_back({a(k, k), r});
  }
  std::vector<std::uint8_t> mask(grid.node_count(), 0);
  for (std::size_t idx = 0; idx < mask.size(); ++idx) {
    Complex z = grid.node(idx);
    for (const Disc& d : out.discs)
      if (std::abs(z - d.center) <= d.radius * (1.0 + 1e-14)) {
        mask[idx] = 1;
        break;
      }
  }
  out.region = Region(grid, std::move(mask));
  return out;
}

MethodReport gershgorin_block(const BlockMatrixView& view, const GridSpec& grid,
                              const InclusionOptions& options) {
  InclusionEngine engine(view, grid, options);
  return engine.gershgorin_block();
}

}  // namespace specincl
