#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "specincl/convergence.hpp"
#include "specincl/errors.hpp"
#include "specincl/inclusion.hpp"
#include "specincl/linalg.hpp"
#include "specincl/matrix_io.hpp"
#include "specincl/report.hpp"
#include "specincl/toeplitz.hpp"

namespace specincl::cli {

namespace fs = std::filesystem;

namespace {

// Thrown for bad flag combinations found after parsing.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

double parse_double(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size() || !std::isfinite(v)) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("bad " + what + " '" + s + "'");
  }
}

std::size_t parse_size(const std::string& s, const std::string& what) {
  double v = parse_double(s, what);
  if (v < 0 || v != std::floor(v)) throw ConfigError("bad " + what + " '" + s + "'");
  return static_cast<std::size_t>(v);
}

std::vector<double> parse_eps_list(const std::string& s) {
  std::vector<double> out;
  for (const std::string& item : split(s, ',')) {
    double v = parse_double(item, "eps");
    if (v < 0) throw ConfigError("eps must be >= 0, got " + item);
    out.push_back(v);
  }
  if (out.empty()) throw ConfigError("--eps needs at least one value");
  return out;
}

// "1", "-1", "i", "-i", "re,im" or "polar:angle".
Complex parse_t(const std::string& s) {
  if (s == "i") return {0.0, 1.0};
  if (s == "-i") return {0.0, -1.0};
  if (s.rfind("polar:", 0) == 0) return std::polar(1.0, parse_double(s.substr(6), "t angle"));
  auto parts = split(s, ',');
  if (parts.size() == 2) return {parse_double(parts[0], "t"), parse_double(parts[1], "t")};
  if (parts.size() == 1) return {parse_double(parts[0], "t"), 0.0};
  throw ConfigError("bad t '" + s + "'");
}

NormMode parse_norm_mode(const std::string& s) {
  if (s == "exact") return NormMode::exact;
  if (s == "frobenius") return NormMode::frobenius;
  if (s == "mixed") return NormMode::mixed;
  throw ConfigError("unknown --cnorm-mode '" + s + "'");
}

// "re_min,re_max,im_min,im_max[,nx[,ny]]"
GridSpec parse_grid(const std::string& s, std::size_t nodes) {
  auto parts = split(s, ',');
  if (parts.size() < 4 || parts.size() > 6) throw ConfigError("bad --grid '" + s + "'");
  GridSpec g{parse_double(parts[0], "grid"), parse_double(parts[1], "grid"),
             parse_double(parts[2], "grid"), parse_double(parts[3], "grid"), nodes, nodes};
  if (parts.size() >= 5) g.nx = g.ny = parse_size(parts[4], "grid nx");
  if (parts.size() == 6) g.ny = parse_size(parts[5], "grid ny");
  try {
    g.validate();
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  return g;
}

std::string eps_tag(double eps) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", eps);
  return buf;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + path.string());
  f << text;
  if (!f) throw ConfigError("write failed for " + path.string());
}

// Shared input flags of include and converge.
struct Source {
  std::string input, builtin, toeplitz;
  std::size_t m = 0;

  void add(CLI::App* app, bool allow_file) {
    if (allow_file) app->add_option("--input", input, "Matrix file (.mtx, .mm or CSV)");
    app->add_option("--builtin", builtin, "Builtin matrix: jordan or laplacian");
    app->add_option("--toeplitz", toeplitz, "Toeplitz symbol JSON file");
    app->add_option("--M", m, "Order of builtin or Toeplitz matrices");
  }

  std::optional<ToeplitzSpec> symbol() const {
    if (!builtin.empty()) {
      if (builtin == "jordan") return ToeplitzSpec::jordan();
      if (builtin == "laplacian") return ToeplitzSpec::laplacian();
      throw ConfigError("unknown builtin '" + builtin + "'");
    }
    if (!toeplitz.empty()) {
      std::ifstream f(toeplitz);
      if (!f) throw ConfigError("cannot open " + toeplitz);
      return read_toeplitz_json(f);
    }
    return std::nullopt;
  }

  void check() const {
    int given = !input.empty() + !builtin.empty() + !toeplitz.empty();
    if (given != 1) throw ConfigError("give exactly one of --input, --builtin, --toeplitz");
  }
};

struct IncludeConfig {
  Source source;
  std::string partition, method = "all", t, eps = "0", grid = "auto", cnorm, out_dir = ".";
  std::optional<std::size_t> n;
  std::size_t nodes = 256, jobs = 0;
  bool no_timestamp = false, outer = false;
};

struct ConvergeConfig {
  Source source;
  std::string schedule, n_list, method, grid = "auto", cnorm, out_dir = ".";
  double eps = 0.0;
  std::size_t w = 1, nodes = 256, jobs = 0;
};

struct VerifyConfig {
  std::string kind = "dense", methods = "all", eps = "0,0.1", out_dir = ".";
  std::uint64_t seed = 1;
  std::size_t count = 20, order = 12, block = 1, nodes = 128, jobs = 0;
  double penalty_scale = 1.0;
};

InclusionOptions inclusion_options(const std::string& cnorm, std::size_t jobs) {
  InclusionOptions o;
  if (!cnorm.empty()) o.norm_mode = parse_norm_mode(cnorm);
  o.eval.jobs = jobs;
  return o;
}

MethodReport gershgorin_report(const ComplexMatrix& a, const GridSpec& grid) {
  MethodReport r;
  r.method = Method::gersh;
  r.region = gershgorin(a, grid).region;
  r.clipped = r.region.touches_boundary();
  return r;
}

std::string summary_line(const MethodReport& r, const std::string& file) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%s n=%zu eps=%g penalty=%.6g nodes=%zu%s -> %s",
                method_name(r.method), r.n, r.eps, r.penalty, r.region.count(),
                r.clipped ? " clipped" : "", file.c_str());
  return buf;
}

int cmd_include(const IncludeConfig& c, std::ostream& out, std::ostream& err) {
  c.source.check();
  std::vector<Method> methods;
  if (c.method == "all") {
    methods = {Method::tau, Method::pi, Method::tau1};
  } else {
    try {
      methods = {parse_method(c.method)};
    } catch (const DomainError& e) {
      throw ConfigError(e.what());
    }
  }
  bool wants_pi = std::find(methods.begin(), methods.end(), Method::pi) != methods.end();
  bool wants_n = std::any_of(methods.begin(), methods.end(), [](Method m) {
    return m == Method::tau || m == Method::pi || m == Method::tau1;
  });
  if (wants_pi && c.t.empty()) throw ConfigError("the pi method needs --t");
  if (!wants_pi && !c.t.empty()) throw ConfigError("--t only applies to the pi method");
  if (wants_n && !c.n) throw ConfigError("--n is required for " + c.method);
  std::vector<double> eps_list = parse_eps_list(c.eps);
  std::optional<Complex> t;
  if (wants_pi) t = parse_t(c.t);

  ComplexMatrix a;
  std::optional<std::size_t> bandwidth;
  std::optional<ToeplitzSpec> symbol = c.source.symbol();
  if (symbol) {
    if (c.source.m < 2) throw ConfigError("--M >= 2 is required with --builtin/--toeplitz");
    a = build_toeplitz(*symbol, c.source.m);
    bandwidth = symbol->bandwidth();
  } else {
    try {
      a = read_matrix_file(c.source.input);
    } catch (const ParseError& e) {
      throw ConfigError(c.source.input + ": " + e.what());
    }
    if (!a.is_square() || a.rows() < 2) throw ConfigError("input matrix must be square of order >= 2");
  }
  std::string directive = c.partition.empty() ? (bandwidth ? "auto-band" : "scalar") : c.partition;
  BlockPartition partition = parse_partition(directive, a.rows(), bandwidth);
  BlockMatrixView view = make_view(a, partition);
  InclusionOptions opts = inclusion_options(c.cnorm, c.jobs);

  GridSpec grid;
  if (c.grid == "auto") {
    double inflate = *std::max_element(eps_list.begin(), eps_list.end());
    if (wants_n) {
      InclusionEngine probe(view, GridSpec::centered(0.0, 1.0, 8), opts);
      PenaltyParams p = probe.params(*c.n);
      inflate += std::max({eps_tau(p), eps_pi(p), eps_tau1(p)}) * opts.penalty_scale;
    }
    grid = auto_grid(a, inflate, c.nodes);
  } else {
    grid = parse_grid(c.grid, c.nodes);
  }

  std::vector<Complex> markers;
  if (a.rows() <= 2000) markers = eig(a);
  std::vector<SvgCircle> circles;
  fs::create_directories(c.out_dir);

  InclusionEngine engine(view, grid, opts);
  for (double eps : eps_list)
    for (Method m : methods) {
      std::vector<SvgLayer> layers;
      MethodReport report;
      std::optional<Region> extra;
      switch (m) {
        case Method::tau: {
          SigmaTauResult s = engine.sigma_tau(*c.n, eps);
          report = std::move(s.report);
          break;
        }
        case Method::pi:
          report = engine.pi_method(*c.n, *t, eps);
          break;
        case Method::tau1: {
          Tau1Result g = engine.tau1_method(*c.n, eps, c.outer);
          report = std::move(g.report);
          extra = std::move(g.outer);
          break;
        }
        case Method::gersh:
          report = gershgorin_report(a, grid);
          report.eps = eps;
          break;
        case Method::block_gersh:
          report = engine.gershgorin_block();
          report.eps = eps;
          break;
      }
      if (report.clipped)
        err << "warning: " << method_name(m) << " region touches the grid boundary\n";
      std::string stem = std::string(method_name(m)) +
                         (wants_n && m != Method::gersh && m != Method::block_gersh
                              ? "_n" + std::to_string(*c.n)
                              : "") +
                         "_eps" + eps_tag(eps);
      write_file(fs::path(c.out_dir) / (stem + ".json"), report_to_json(report));
      std::ostringstream csv;
      write_region_csv(csv, report.region);
      write_file(fs::path(c.out_dir) / (stem + ".csv"), csv.str());
      if (extra) {
        std::ostringstream ocsv;
        write_region_csv(ocsv, *extra);
        write_file(fs::path(c.out_dir) / (stem + "_outer.csv"), ocsv.str());
        layers.push_back(SvgLayer{&*extra, "#999999", "#cccccc", 0.15, "outer"});
      }
      layers.push_back(SvgLayer{&report.region, "#1f77b4", "#1f77b4", 0.25, method_name(m)});
      SvgOptions so;
      so.title = std::string(method_name(m)) + (wants_n ? ", n = " + std::to_string(*c.n) : "") +
                 ", eps = " + eps_tag(eps);
      so.timestamp = !c.no_timestamp;
      if (c.source.builtin == "jordan")
        circles = {SvgCircle{0.0, 1.0 + eps, "#888888", true}};
      write_file(fs::path(c.out_dir) / (stem + ".svg"), render_svg(grid, layers, markers, circles, so));
      out << summary_line(report, (fs::path(c.out_dir) / (stem + ".json")).string()) << "\n";
    }
  return kOk;
}

std::vector<ScheduleRow> parse_schedule(const ConvergeConfig& c) {
  std::vector<ScheduleRow> rows;
  if (!c.schedule.empty()) {
    for (const std::string& item : split(c.schedule, ';')) {
      auto f = split(item, ':');
      if (f.size() != 3) throw ConfigError("schedule rows are M:n:w, got '" + item + "'");
      rows.push_back({parse_size(f[0], "M"), parse_size(f[1], "n"), parse_size(f[2], "w")});
    }
  } else {
    if (!c.n_list.empty() && c.source.m < 2) throw ConfigError("--n needs --M >= 2");
    for (const std::string& item : split(c.n_list, ','))
      rows.push_back({c.source.m, parse_size(item, "n"), c.w});
  }
  if (rows.empty()) throw ConfigError("the schedule is empty");
  return rows;
}

int cmd_converge(const ConvergeConfig& c, std::ostream& out) {
  c.source.check();
  std::optional<ToeplitzSpec> symbol = c.source.symbol();
  std::vector<ScheduleRow> rows = parse_schedule(c);
  StudyOptions o;
  o.nodes_per_axis = c.nodes;
  o.inclusion = inclusion_options(c.cnorm, c.jobs);
  if (c.grid != "auto") o.grid = parse_grid(c.grid, c.nodes);
  if (c.method == "tau") o.method = StudyMethod::tau;
  else if (c.method == "tau1") o.method = StudyMethod::tau1;
  else if (!c.method.empty()) throw ConfigError("converge supports --method tau or tau1");
  StudyResult r = convergence_study(*symbol, c.eps, rows, o);
  fs::create_directories(c.out_dir);
  std::ostringstream csv;
  write_study_csv(csv, r);
  fs::path path = fs::path(c.out_dir) / "study.csv";
  write_file(path, csv.str());
  out << csv.str();
  out << "summary: " << r.rows.size() << " rows, final d_H " << r.rows.back().d_h << ", cell "
      << r.grid.cell_diagonal() << ", decrease within slack: "
      << (r.decrease_within_slack ? "yes" : "no") << " -> " << path.string() << "\n";
  return kOk;
}

ComplexMatrix random_matrix(const std::string& kind, std::size_t m, std::mt19937_64& gen) {
  std::normal_distribution<double> normal(0.0, 1.0);
  auto cn = [&] { return Complex(normal(gen), normal(gen)) / std::sqrt(2.0); };
  ComplexMatrix a(m, m);
  if (kind == "dense") {
    double s = 1.0 / std::sqrt(static_cast<double>(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) a(i, j) = s * cn();
  } else if (kind == "banded") {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if ((i > j ? i - j : j - i) <= 2) a(i, j) = cn();
  } else if (kind == "toeplitz") {
    std::map<int, Complex> coeffs;
    for (int j = -2; j <= 2; ++j) coeffs[j] = cn();
    a = build_toeplitz(ToeplitzSpec::from_coefficients(coeffs), m);
  } else if (kind == "hermitian") {
    double s = 1.0 / std::sqrt(static_cast<double>(m));
    for (std::size_t i = 0; i < m; ++i) {
      a(i, i) = s * normal(gen);
      for (std::size_t j = i + 1; j < m; ++j) {
        a(i, j) = s * cn();
        a(j, i) = std::conj(a(i, j));
      }
    }
  } else {
    throw ConfigError("unknown --kind '" + kind + "'");
  }
  return a;
}

int cmd_verify(const VerifyConfig& c, std::ostream& out) {
  std::vector<double> eps_list = parse_eps_list(c.eps);
  std::vector<std::string> methods =
      c.methods == "all" ? std::vector<std::string>{"tau", "pi", "tau1", "gersh", "block-gersh"}
                         : split(c.methods, ',');
  for (const std::string& m : methods) {
    try {
      parse_method(m);
    } catch (const DomainError& e) {
      throw ConfigError(e.what());
    }
  }
  if (c.order < 2 || c.block == 0 || c.order % c.block != 0 || c.order / c.block < 2)
    throw ConfigError("--order must be a multiple of --block with at least two blocks");
  if (!(c.penalty_scale >= 0.0)) throw ConfigError("--penalty-scale must be >= 0");

  std::mt19937_64 gen(c.seed);
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  std::size_t total = 0, violated = 0;
  for (std::size_t idx = 0; idx < c.count; ++idx) {
    ComplexMatrix a = random_matrix(c.kind, c.order, gen);
    BlockMatrixView view = make_view(a, BlockPartition::uniform(c.order, c.block));
    std::size_t nb = view.block_count();
    InclusionOptions opts;
    opts.eval.jobs = c.jobs;
    opts.penalty_scale = c.penalty_scale;
    double inflate = 0.0;
    {
      InclusionEngine probe(view, GridSpec::centered(0.0, 1.0, 8), opts);
      for (std::size_t n = 1; n < nb; ++n) {
        PenaltyParams p = probe.params(n);
        inflate = std::max({inflate, eps_tau(p), eps_pi(p), eps_tau1(p)});
      }
    }
    GridSpec grid = auto_grid(a, *std::max_element(eps_list.begin(), eps_list.end()) + inflate, c.nodes);
    double cell = grid.cell_diagonal();
    InclusionEngine engine(view, grid, opts);
    std::vector<Complex> ev = eig(a);

    auto record = [&](const std::string& method, std::size_t n, std::optional<Complex> t,
                      double eps, const Region& region) {
      std::size_t missing = 0;
      for (Complex z : ev)
        if (!region.has_node_near(z, cell)) ++missing;
      // Spec_eps A must sit inside the set too, up to one cell
      double spill = 0.0;
      if (eps > 0.0) {
        Region spec = engine.full_pseudospectrum(eps);
        if (!spec.empty()) spill = region.empty() ? INFINITY : directed_hausdorff(spec, region);
      }
      bool ok = missing == 0 && spill <= cell;
      ++total;
      if (!ok) ++violated;
      nlohmann::ordered_json e;
      e["matrix"] = idx;
      e["method"] = method;
      e["n"] = n;
      if (t) e["t"] = {t->real(), t->imag()};
      e["eps"] = eps;
      e["contained"] = ok;
      e["eigenvalues_missing"] = missing;
      e["pseudospectrum_spill"] = std::isfinite(spill) ? nlohmann::ordered_json(spill) : nullptr;
      entries.push_back(std::move(e));
    };

    for (double eps : eps_list)
      for (const std::string& name : methods) {
        Method m = parse_method(name);
        bool baseline = m == Method::gersh || m == Method::block_gersh;
        if (baseline && eps != eps_list.front()) continue;
        if (m == Method::gersh) {
          // classical discs have no penalty to scale; only eigenvalues are checked
          record(name, 0, std::nullopt, 0.0, gershgorin(a, grid).region);
          continue;
        }
        if (m == Method::block_gersh) {
          record(name, 0, std::nullopt, 0.0, engine.gershgorin_block().region);
          continue;
        }
        for (std::size_t n = 1; n < nb; ++n) {
          if (m == Method::tau) record(name, n, std::nullopt, eps, engine.sigma_tau(n, eps).big_sigma);
          if (m == Method::tau1) record(name, n, std::nullopt, eps, engine.tau1_method(n, eps, false).gamma);
          if (m == Method::pi)
            for (Complex t : {Complex(1.0), Complex(-1.0), Complex(0.0, 1.0)})
              record(name, n, t, eps, engine.pi_method(n, t, eps).region);
        }
      }
  }
  nlohmann::ordered_json report;
  report["seed"] = c.seed;
  report["kind"] = c.kind;
  report["count"] = c.count;
  report["order"] = c.order;
  report["block"] = c.block;
  report["penalty_scale"] = c.penalty_scale;
  report["checks"] = total;
  report["violations"] = violated;
  report["results"] = std::move(entries);
  fs::create_directories(c.out_dir);
  fs::path path = fs::path(c.out_dir) / "verify.json";
  write_file(path, report.dump(1) + "\n");
  out << "verify: " << total - violated << "/" << total << " contained, " << violated
      << " violations -> " << path.string() << "\n";
  return violated == 0 ? kOk : kViolations;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Inclusion sets for spectra and pseudospectra of block matrices", "specincl"};
  app.require_subcommand(1);

  IncludeConfig inc;
  CLI::App* include = app.add_subcommand("include", "Compute inclusion sets for one matrix");
  inc.source.add(include, true);
  include->add_option("--partition", inc.partition, "3,3,4 | uniform:m | scalar | auto-band");
  include->add_option("--method", inc.method, "tau, pi, tau1, gersh, block-gersh or all")
      ->capture_default_str();
  include->add_option("--n", inc.n, "Truncation size in blocks");
  include->add_option("--t", inc.t, "Unimodular t for pi: 1, -1, i, -i, re,im or polar:angle");
  include->add_option("--eps", inc.eps, "Comma separated eps values")->capture_default_str();
  include->add_option("--grid", inc.grid, "auto or re_min,re_max,im_min,im_max[,nx[,ny]]")
      ->capture_default_str();
  include->add_option("--nodes", inc.nodes, "Nodes per axis")->capture_default_str();
  include->add_option("--cnorm-mode", inc.cnorm, "exact, frobenius or mixed");
  include->add_option("--jobs", inc.jobs, "Worker threads (0: SPECINCL_JOBS or all cores)");
  include->add_option("--out-dir", inc.out_dir, "Output directory")->capture_default_str();
  include->add_flag("--no-timestamp", inc.no_timestamp, "Omit the SVG timestamp comment");
  include->add_flag("--outer", inc.outer, "Also compute the tau1 outer sandwich set");

  ConvergeConfig conv;
  CLI::App* converge = app.add_subcommand("converge", "Hausdorff convergence study for a symbol");
  conv.source.add(converge, false);
  converge->add_option("--schedule", conv.schedule, "Rows M:n:w separated by ';'");
  converge->add_option("--n", conv.n_list, "Comma separated n values used with --M and --w");
  converge->add_option("--w", conv.w, "Block width")->capture_default_str();
  converge->add_option("--eps", conv.eps, "Pseudospectral level")->capture_default_str();
  converge->add_option("--method", conv.method, "tau or tau1 (default by symbol)");
  converge->add_option("--grid", conv.grid, "auto or re_min,re_max,im_min,im_max[,nx[,ny]]");
  converge->add_option("--nodes", conv.nodes, "Nodes per axis")->capture_default_str();
  converge->add_option("--cnorm-mode", conv.cnorm, "exact, frobenius or mixed");
  converge->add_option("--jobs", conv.jobs, "Worker threads (0: SPECINCL_JOBS or all cores)");
  converge->add_option("--out-dir", conv.out_dir, "Output directory")->capture_default_str();

  VerifyConfig ver;
  CLI::App* verify = app.add_subcommand("verify", "Containment checks on a random corpus");
  verify->add_option("--seed", ver.seed)->capture_default_str();
  verify->add_option("--count", ver.count)->capture_default_str();
  verify->add_option("--order", ver.order)->capture_default_str();
  verify->add_option("--block", ver.block, "Uniform block order")->capture_default_str();
  verify->add_option("--kind", ver.kind, "dense, banded, toeplitz or hermitian")->capture_default_str();
  verify->add_option("--methods", ver.methods, "all or a comma separated list")->capture_default_str();
  verify->add_option("--eps", ver.eps)->capture_default_str();
  verify->add_option("--nodes", ver.nodes)->capture_default_str();
  verify->add_option("--penalty-scale", ver.penalty_scale,
                     "Multiply every penalty; below 1 is a negative control")
      ->capture_default_str();
  verify->add_option("--jobs", ver.jobs);
  verify->add_option("--out-dir", ver.out_dir)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "specincl: " << e.what() << "\n";
    return kConfigError;
  }

  try {
    if (*include) return cmd_include(inc, out, err);
    if (*converge) return cmd_converge(conv, out);
    return cmd_verify(ver, out);
  } catch (const ConfigError& e) {
    err << "specincl: " << e.what() << "\n";
    return kConfigError;
  } catch (const NumericError& e) {
    err << "specincl: numeric failure: " << e.what() << "\n";
    return kNumericError;
  } catch (const DegenerateError& e) {
    err << "specincl: numeric failure: " << e.what() << "\n";
    return kNumericError;
  } catch (const Error& e) {
    err << "specincl: " << e.what() << "\n";
    return kConfigError;
  } catch (const fs::filesystem_error& e) {
    err << "specincl: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    err << "specincl: numeric failure: " << e.what() << "\n";
    return kNumericError;
  }
}

}  // namespace specincl::cli
