#include "specincl/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "specincl/errors.hpp"

namespace specincl {

using nlohmann::json;

namespace {

std::string fmt(double v, const char* spec = "%.17g") {
  char buf[48];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

json grid_json(const GridSpec& g) {
  return {{"re_min", g.re_min}, {"re_max", g.re_max}, {"im_min", g.im_min},
          {"im_max", g.im_max}, {"nx", g.nx},         {"ny", g.ny}};
}

GridSpec grid_from(const json& j) {
  GridSpec g{j.at("re_min").get<double>(), j.at("re_max").get<double>(),
             j.at("im_min").get<double>(), j.at("im_max").get<double>(),
             j.at("nx").get<std::size_t>(),  j.at("ny").get<std::size_t>()};
  g.validate();
  return g;
}

const char* norm_mode_name(NormMode m) {
  switch (m) {
    case NormMode::exact: return "exact";
    case NormMode::frobenius: return "frobenius";
    case NormMode::mixed: return "mixed";
  }
  return "?";
}

NormMode norm_mode_from(const std::string& s) {
  if (s == "exact") return NormMode::exact;
  if (s == "frobenius") return NormMode::frobenius;
  if (s == "mixed") return NormMode::mixed;
  throw ParseError("unknown norm mode '" + s + "'");
}

}  // namespace

std::vector<std::uint64_t> encode_mask_rle(const Region& region) {
  std::vector<std::uint64_t> runs;
  std::uint8_t current = 0;
  std::uint64_t len = 0;
  for (std::uint8_t m : region.mask()) {
    if (m == current) {
      ++len;
      continue;
    }
    runs.push_back(len);
    current = m;
    len = 1;
  }
  runs.push_back(len);
  return runs;
}

Region decode_mask_rle(const GridSpec& grid, const std::vector<std::uint64_t>& runs) {
  std::vector<std::uint8_t> mask;
  mask.reserve(grid.node_count());
  std::uint8_t current = 0;
  for (std::uint64_t len : runs) {
    if (mask.size() + len > grid.node_count()) throw ParseError("mask runs overflow the grid");
    mask.insert(mask.end(), len, current);
    current ^= 1;
  }
  if (mask.size() != grid.node_count()) throw ParseError("mask runs do not cover the grid");
  return Region(grid, std::move(mask));
}

std::string grid_to_json(const GridSpec& grid) { return grid_json(grid).dump(); }

std::string report_to_json(const MethodReport& r) {
  json j;
  j["method"] = method_name(r.method);
  j["n"] = r.n;
  j["t"] = r.t ? json::array({r.t->real(), r.t->imag()}) : json(nullptr);
  j["eps"] = r.eps;
  j["penalty"] = r.penalty;
  j["penalty_scale"] = r.penalty_scale;
  j["params"] = {{"r_lower", r.params.r_lower}, {"r_upper", r.params.r_upper},
                 {"r", r.params.r},             {"c_norm", r.params.c_norm},
                 {"n", r.params.n}};
  j["norm_mode"] = norm_mode_name(r.norm_mode);
  j["clipped"] = r.clipped;
  json parts = json::array();
  for (const auto& p : r.parts)
    parts.push_back({{"type", p.type}, {"n", p.n}, {"k", p.k}, {"level", p.level}});
  j["parts"] = std::move(parts);
  j["grid"] = grid_json(r.region.grid());
  j["node_count"] = r.region.count();
  j["mask_rle"] = encode_mask_rle(r.region);
  return j.dump(2);
}

MethodReport report_from_json(const std::string& text) {
  try {
    json j = json::parse(text);
    MethodReport r;
    r.method = parse_method(j.at("method").get<std::string>());
    r.n = j.at("n").get<std::size_t>();
    if (!j.at("t").is_null()) r.t = Complex{j["t"].at(0).get<double>(), j["t"].at(1).get<double>()};
    r.eps = j.at("eps").get<double>();
    r.penalty = j.at("penalty").get<double>();
    r.penalty_scale = j.value("penalty_scale", 1.0);
    const json& p = j.at("params");
    r.params = PenaltyParams::make(p.at("r_lower").get<double>(), p.at("r_upper").get<double>(),
                                   p.at("c_norm").get<double>(), p.at("n").get<std::size_t>());
    r.norm_mode = norm_mode_from(j.at("norm_mode").get<std::string>());
    r.clipped = j.value("clipped", false);
    for (const json& part : j.at("parts"))
      r.parts.push_back({part.at("type").get<std::string>(), part.at("n").get<std::size_t>(),
                         part.at("k").get<std::size_t>(), part.at("level").get<double>()});
    r.region = decode_mask_rle(grid_from(j.at("grid")),
                               j.at("mask_rle").get<std::vector<std::uint64_t>>());
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("method report JSON: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(std::string("method report JSON: ") + e.what());
  }
}

void write_region_csv(std::ostream& out, const Region& region) {
  const GridSpec& g = region.grid();
  bool vals = region.has_values();
  out << "i,j,re,im,inside" << (vals ? ",smin" : "") << '\n';
  for (std::size_t j = 0; j < g.ny; ++j)
    for (std::size_t i = 0; i < g.nx; ++i) {
      std::size_t idx = j * g.nx + i;
      Complex z = g.node(i, j);
      out << i << ',' << j << ',' << fmt(z.real()) << ',' << fmt(z.imag()) << ','
          << (region.contains_node(idx) ? 1 : 0);
      if (vals) out << ',' << fmt(region.values()[idx]);
      out << '\n';
    }
}

void write_study_csv(std::ostream& out, const StudyResult& study) {
  out << "M,n,w,eps,d_H,cell_size\n";
  for (const StudyRow& r : study.rows)
    out << r.m << ',' << r.n << ',' << r.w << ',' << fmt(r.eps) << ',' << fmt(r.d_h) << ','
        << fmt(r.cell_size) << '\n';
}

std::string render_svg(const GridSpec& grid, const std::vector<SvgLayer>& layers,
                       const std::vector<Complex>& markers, const std::vector<SvgCircle>& circles,
                       const SvgOptions& options) {
  const double w = static_cast<double>(options.width_px);
  const double span_x = grid.re_max - grid.re_min, span_y = grid.im_max - grid.im_min;
  const double h = w * span_y / span_x;
  const double top = options.title.empty() ? 0.0 : 24.0;
  auto px = [&](double re) { return (re - grid.re_min) / span_x * w; };
  auto py = [&](double im) { return top + (grid.im_max - im) / span_y * h; };
  auto num = [](double v) { return fmt(v, "%.3f"); };

  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  if (options.timestamp) {
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    s << "<!-- generated " << buf << " -->\n";
  }
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w) << "\" height=\""
    << num(h + top) << "\" viewBox=\"0 0 " << num(w) << ' ' << num(h + top) << "\">\n";
  s << "<rect x=\"0\" y=\"" << num(top) << "\" width=\"" << num(w) << "\" height=\"" << num(h)
    << "\" fill=\"white\" stroke=\"#444\"/>\n";
  if (!options.title.empty())
    s << "<text x=\"6\" y=\"17\" font-family=\"sans-serif\" font-size=\"14\">" << options.title
      << "</text>\n";
  // axes through the origin when visible
  if (grid.re_min < 0.0 && grid.re_max > 0.0)
    s << "<line x1=\"" << num(px(0)) << "\" y1=\"" << num(top) << "\" x2=\"" << num(px(0))
      << "\" y2=\"" << num(top + h) << "\" stroke=\"#bbb\" stroke-width=\"0.5\"/>\n";
  if (grid.im_min < 0.0 && grid.im_max > 0.0)
    s << "<line x1=\"0\" y1=\"" << num(py(0)) << "\" x2=\"" << num(w) << "\" y2=\"" << num(py(0))
      << "\" stroke=\"#bbb\" stroke-width=\"0.5\"/>\n";

  for (const SvgLayer& layer : layers) {
    if (!layer.region || layer.region->empty()) continue;
    if (!(layer.region->grid() == grid)) throw GridMismatch("SVG layer on a different grid");
    s << "<path";
    if (!layer.label.empty()) s << " id=\"" << layer.label << "\"";
    s << " fill=\"" << layer.fill << "\" fill-opacity=\"" << fmt(layer.fill_opacity, "%.2f")
      << "\" fill-rule=\"evenodd\" stroke=\"" << layer.stroke << "\" stroke-width=\"1\" d=\"";
    for (const Polyline& loop : contour_extract(*layer.region)) {
      for (std::size_t i = 0; i + 1 < loop.size(); ++i)
        s << (i == 0 ? 'M' : 'L') << num(px(loop[i].x)) << ',' << num(py(loop[i].y)) << ' ';
      s << "Z ";
    }
    s << "\"/>\n";
  }
  for (const SvgCircle& c : circles) {
    s << "<ellipse cx=\"" << num(px(c.center.real())) << "\" cy=\"" << num(py(c.center.imag()))
      << "\" rx=\"" << num(c.radius / span_x * w) << "\" ry=\"" << num(c.radius / span_y * h)
      << "\" fill=\"none\" stroke=\"" << c.stroke << "\""
      << (c.dashed ? " stroke-dasharray=\"4 3\"" : "") << "/>\n";
  }
  const double arm = 3.0;
  for (Complex z : markers) {
    double x = px(z.real()), y = py(z.imag());
    s << "<path d=\"M" << num(x - arm) << ',' << num(y - arm) << " L" << num(x + arm) << ','
      << num(y + arm) << " M" << num(x - arm) << ',' << num(y + arm) << " L" << num(x + arm)
      << ',' << num(y - arm) << "\" stroke=\"#d62728\" stroke-width=\"1\"/>\n";
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace specincl
