#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "specincl/block.hpp"
#include "specincl/matrix.hpp"
#include "specincl/toeplitz.hpp"

namespace specincl {

// Matrix Market: coordinate or array storage, real/integer/complex fields,
// general/symmetric/hermitian/skew-symmetric symmetry. Pattern matrices are
// rejected. Throws ParseError with the offending line number.
ComplexMatrix read_matrix_market(std::istream& in);
// Writes "array complex general", 17 significant digits.
void write_matrix_market(std::ostream& out, const ComplexMatrix& a);

// Dense CSV, one matrix row per line. Each cell is a real part and an
// imaginary part, so a row of c cells holds 2c comma-separated numbers;
// a quoted cell "re,im" is accepted too. Blank lines and lines starting with
// '#' are skipped.
ComplexMatrix read_csv_matrix(std::istream& in);
void write_csv_matrix(std::ostream& out, const ComplexMatrix& a);

// Dispatch on extension: .mtx / .mm for Matrix Market, anything else CSV.
ComplexMatrix read_matrix_file(const std::filesystem::path& path);

// Partition directives:
//   "3,3,4"      explicit sizes
//   "uniform:m"  blocks of order m
//   "scalar"     blocks of order 1
//   "auto-band"  banded_partition(order, bandwidth); needs the bandwidth
// Throws PartitionError on a malformed directive or a size mismatch.
BlockPartition parse_partition(const std::string& directive, std::size_t order,
                               std::optional<std::size_t> bandwidth = std::nullopt);

// Toeplitz symbol JSON:
//   {"coeffs": [[j, re, im], ...], "bandwidth": w, "hermitian": bool,
//    "wiener_truncated": bool}
// bandwidth and hermitian are inferred when absent.
ToeplitzSpec read_toeplitz_json(std::istream& in);
ToeplitzSpec parse_toeplitz_json(const std::string& text);
std::string toeplitz_to_json(const ToeplitzSpec& spec);

}  // namespace specincl
