#pragma once

// Plain-text density matrix files: four non-comment lines of four tokens.
// A token is <float>, <float>+<float>i or <float>-<float>i with no internal
// whitespace. '#' starts a comment that runs to the end of the line.
//
//   # Bell-like state
//   0.5 0 0 0.5
//   0   0 0 0
//   0   0 0 0
//   0.5 0 0 0.5

#include <filesystem>
#include <string>
#include <string_view>

#include "quditx/core.hpp"

namespace quditx::cli {

// Throws ParseError carrying the 1-based line and column of the problem.
Complex parse_complex_token(std::string_view token, int line, int column);

DensityMatrix4 parse_matrix_text(std::string_view text);

// Throws Error{IoError} when the file cannot be read.
DensityMatrix4 read_matrix_file(const std::filesystem::path& path);

// Writes the matrix with 17 significant digits so it re-parses exactly.
std::string format_matrix_file(const DensityMatrix4& m);

std::string format_complex_token(Complex z);

}  // namespace quditx::cli
