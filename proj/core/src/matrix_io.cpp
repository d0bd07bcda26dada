#include "specincl/matrix_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "specincl/errors.hpp"

namespace specincl {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

double to_double(const std::string& tok, std::size_t line) {
  try {
    std::size_t used = 0;
    double v = std::stod(tok, &used);
    if (used != tok.size()) fail(line, "bad number '" + tok + "'");
    return v;
  } catch (const std::logic_error&) {
    fail(line, "bad number '" + tok + "'");
  }
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

ComplexMatrix read_matrix_market(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line)) throw ParseError("empty Matrix Market stream");
  ++lineno;
  std::istringstream hs(line);
  std::string banner, object, format, field, symmetry;
  hs >> banner >> object >> format >> field >> symmetry;
  if (banner != "%%MatrixMarket" || lower(object) != "matrix")
    fail(lineno, "missing %%MatrixMarket matrix banner");
  format = lower(format);
  field = lower(field);
  symmetry = lower(symmetry);
  if (format != "coordinate" && format != "array") fail(lineno, "unknown format '" + format + "'");
  if (field == "pattern") fail(lineno, "pattern matrices carry no values");
  if (field != "real" && field != "complex" && field != "integer" && field != "double")
    fail(lineno, "unknown field '" + field + "'");
  if (symmetry != "general" && symmetry != "symmetric" && symmetry != "hermitian" &&
      symmetry != "skew-symmetric")
    fail(lineno, "unknown symmetry '" + symmetry + "'");
  const bool cplx = field == "complex";

  // next non-comment line holds the sizes
  auto next_data_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      ++lineno;
      std::string t = trim(out);
      if (t.empty() || t[0] == '%') continue;
      out = t;
      return true;
    }
    return false;
  };
  if (!next_data_line(line)) fail(lineno, "missing size line");
  std::istringstream ss(line);
  long long rows = -1, cols = -1, nnz = -1;
  ss >> rows >> cols;
  if (format == "coordinate") ss >> nnz;
  if (!ss || rows < 0 || cols < 0 || (format == "coordinate" && nnz < 0))
    fail(lineno, "malformed size line");

  ComplexMatrix a(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  auto read_value = [&](std::istringstream& s) {
    std::string re, im;
    if (!(s >> re)) fail(lineno, "missing value");
    double x = to_double(re, lineno), y = 0.0;
    if (cplx) {
      if (!(s >> im)) fail(lineno, "missing imaginary part");
      y = to_double(im, lineno);
    }
    return Complex{x, y};
  };
  auto place = [&](std::size_t i, std::size_t j, Complex v, bool accumulate) {
    if (accumulate) a(i, j) += v; else a(i, j) = v;
    if (i == j) return;
    if (symmetry == "symmetric") {
      if (accumulate) a(j, i) += v; else a(j, i) = v;
    } else if (symmetry == "hermitian") {
      if (accumulate) a(j, i) += std::conj(v); else a(j, i) = std::conj(v);
    } else if (symmetry == "skew-symmetric") {
      if (accumulate) a(j, i) -= v; else a(j, i) = -v;
    }
  };

  if (format == "coordinate") {
    for (long long e = 0; e < nnz; ++e) {
      if (!next_data_line(line)) fail(lineno, "expected " + std::to_string(nnz) + " entries");
      std::istringstream es(line);
      long long i = 0, j = 0;
      if (!(es >> i >> j)) fail(lineno, "malformed entry");
      if (i < 1 || j < 1 || i > rows || j > cols) fail(lineno, "entry index out of range");
      place(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1), read_value(es), true);
    }
  } else {
    bool packed = symmetry != "general";
    for (long long j = 0; j < cols; ++j)
      for (long long i = packed ? j : 0; i < rows; ++i) {
        if (symmetry == "skew-symmetric" && i == j) continue;
        if (!next_data_line(line)) fail(lineno, "array data ends early");
        std::istringstream es(line);
        place(static_cast<std::size_t>(i), static_cast<std::size_t>(j), read_value(es), false);
      }
  }
  if (!a.all_finite()) throw ParseError("matrix has a non-finite entry");
  return a;
}

void write_matrix_market(std::ostream& out, const ComplexMatrix& a) {
  out << "%%MatrixMarket matrix array complex general\n";
  out << a.rows() << ' ' << a.cols() << '\n';
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i)
      out << fmt(a(i, j).real()) << ' ' << fmt(a(i, j).imag()) << '\n';
}

ComplexMatrix read_csv_matrix(std::istream& in) {
  std::string line;
  std::size_t lineno = 0, cols = 0;
  std::vector<Complex> data;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    t.erase(std::remove(t.begin(), t.end(), '"'), t.end());
    std::vector<double> nums;
    std::stringstream ss(t);
    std::string tok;
    while (std::getline(ss, tok, ',')) nums.push_back(to_double(trim(tok), lineno));
    if (nums.empty() || nums.size() % 2 != 0)
      fail(lineno, "expected re,im pairs, got " + std::to_string(nums.size()) + " numbers");
    std::size_t c = nums.size() / 2;
    if (rows == 0) cols = c;
    else if (c != cols) fail(lineno, "row has " + std::to_string(c) + " cells, expected " + std::to_string(cols));
    for (std::size_t k = 0; k < c; ++k) data.emplace_back(nums[2 * k], nums[2 * k + 1]);
    ++rows;
  }
  if (rows == 0) throw ParseError("CSV matrix has no rows");
  try {
    return ComplexMatrix(rows, cols, std::move(data));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

void write_csv_matrix(std::ostream& out, const ComplexMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) out << ',';
      out << fmt(a(i, j).real()) << ',' << fmt(a(i, j).imag());
    }
    out << '\n';
  }
}

ComplexMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::string ext = lower(path.extension().string());
  if (ext == ".mtx" || ext == ".mm") return read_matrix_market(in);
  return read_csv_matrix(in);
}

BlockPartition parse_partition(const std::string& directive, std::size_t order,
                               std::optional<std::size_t> bandwidth) {
  std::string d = trim(directive);
  auto number = [&](const std::string& s) {
    std::string t = trim(s);
    if (t.empty() || !std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw PartitionError("bad block size '" + s + "' in partition '" + directive + "'");
    return static_cast<std::size_t>(std::stoull(t));
  };
  if (d == "scalar") return BlockPartition(std::vector<std::size_t>(order, 1));
  if (d.rfind("uniform:", 0) == 0) return BlockPartition::uniform(order, number(d.substr(8)));
  if (d == "auto-band") {
    if (!bandwidth || *bandwidth == 0)
      throw PartitionError("auto-band needs a Toeplitz input with a known bandwidth");
    try {
      return banded_partition(order, *bandwidth);
    } catch (const DomainError& e) {
      throw PartitionError(e.what());
    }
  }
  std::vector<std::size_t> sizes;
  std::stringstream ss(d);
  std::string tok;
  while (std::getline(ss, tok, ',')) sizes.push_back(number(tok));
  BlockPartition p(std::move(sizes));
  if (p.total() != order)
    throw PartitionError("partition sums to " + std::to_string(p.total()) + ", matrix order is " +
                         std::to_string(order));
  return p;
}

ToeplitzSpec parse_toeplitz_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("Toeplitz JSON: ") + e.what());
  }
  try {
    std::map<int, Complex> coeffs;
    for (const auto& c : j.at("coeffs")) {
      if (!c.is_array() || c.size() < 2 || c.size() > 3)
        throw ParseError("each coefficient must be [j, re] or [j, re, im]");
      int idx = c.at(0).get<int>();
      Complex v{c.at(1).get<double>(), c.size() == 3 ? c.at(2).get<double>() : 0.0};
      coeffs[idx] += v;
    }
    ToeplitzSpec inferred = ToeplitzSpec::from_coefficients(coeffs);
    std::size_t w = j.contains("bandwidth") ? j["bandwidth"].get<std::size_t>() : inferred.bandwidth();
    bool herm = j.contains("hermitian") ? j["hermitian"].get<bool>() : inferred.hermitian();
    bool wiener = j.value("wiener_truncated", false);
    return ToeplitzSpec(std::move(coeffs), w, herm, wiener);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("Toeplitz JSON: ") + e.what());
  }
}

ToeplitzSpec read_toeplitz_json(std::istream& in) {
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_toeplitz_json(ss.str());
}

std::string toeplitz_to_json(const ToeplitzSpec& spec) {
  nlohmann::json j;
  j["coeffs"] = nlohmann::json::array();
  for (const auto& [idx, v] : spec.coeffs()) j["coeffs"].push_back({idx, v.real(), v.imag()});
  j["bandwidth"] = spec.bandwidth();
  j["hermitian"] = spec.hermitian();
  j["wiener_truncated"] = spec.wiener_truncated();
  return j.dump(2);
}

}  // namespace specincl
