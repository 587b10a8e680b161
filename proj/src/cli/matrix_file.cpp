#include "quditx/cli/matrix_file.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "quditx/cli/csv.hpp"
#include "quditx/error.hpp"

namespace quditx::cli {

namespace {

struct Token {
  std::string_view text;
  int column = 0;
};

bool is_space(char ch) {
  return ch == ' ' || ch == '\t' || ch == '\r' || ch == '\v' || ch == '\f';
}

std::vector<Token> split_tokens(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

// Parses one float starting at text[pos]. A leading sign is rejected so that
// "1+-2i" does not slip through.
double parse_float(std::string_view text, std::size_t& pos, int line,
                   int column) {
  const char* first = text.data() + pos;
  const char* last = text.data() + text.size();
  if (first != last && (*first == '+' || (*first == '-' && pos != 0))) {
    throw ParseError(line, column + static_cast<int>(pos),
                     "unexpected sign in number");
  }
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range) {
    throw ParseError(line, column + static_cast<int>(pos), "number out of range");
  }
  if (ec != std::errc{}) {
    throw ParseError(line, column + static_cast<int>(pos), "expected a number");
  }
  if (!std::isfinite(value)) {
    throw ParseError(line, column + static_cast<int>(pos),
                     "number must be finite");
  }
  pos = static_cast<std::size_t>(ptr - text.data());
  return value;
}

}  // namespace

Complex parse_complex_token(std::string_view token, int line, int column) {
  std::size_t pos = 0;
  const double re = parse_float(token, pos, line, column);
  if (pos == token.size()) return {re, 0.0};

  const char sign = token[pos];
  if (sign != '+' && sign != '-') {
    throw ParseError(line, column + static_cast<int>(pos),
                     "unexpected character '" + std::string(1, sign) + "'");
  }
  ++pos;
  if (pos == token.size()) {
    throw ParseError(line, column + static_cast<int>(pos),
                     "missing imaginary part");
  }
  // parse_float rejects a sign at pos != 0, which is what we want here.
  const double im = parse_float(token, pos, line, column);
  if (pos == token.size() || token[pos] != 'i') {
    throw ParseError(line, column + static_cast<int>(pos),
                     "imaginary part must end with 'i'");
  }
  if (pos + 1 != token.size()) {
    throw ParseError(line, column + static_cast<int>(pos) + 1,
                     "trailing characters after 'i'");
  }
  return {re, sign == '-' ? -im : im};
}

DensityMatrix4 parse_matrix_text(std::string_view text) {
  DensityMatrix4 m;
  int rows = 0;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;

    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    const std::vector<Token> tokens = split_tokens(line);
    if (tokens.empty()) continue;

    if (rows == 4) {
      throw ParseError(line_no, tokens.front().column,
                       "more than 4 matrix rows");
    }
    if (tokens.size() != 4) {
      const int column = tokens.size() > 4
                             ? tokens[4].column
                             : static_cast<int>(line.size()) + 1;
      throw ParseError(line_no, column,
                       "expected 4 entries, found " +
                           std::to_string(tokens.size()));
    }
    ++rows;
    for (int col = 0; col < 4; ++col) {
      const Token& t = tokens[col];
      m.set(rows, col + 1, parse_complex_token(t.text, line_no, t.column));
    }
  }
  if (rows != 4) {
    throw ParseError(line_no, 1,
                     "expected 4 matrix rows, found " + std::to_string(rows));
  }
  return m;
}

DensityMatrix4 read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::IoError, "cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw Error(ErrorKind::IoError, "cannot read " + path.string());
  }
  return parse_matrix_text(buffer.str());
}

std::string format_complex_token(Complex z) {
  std::string out = format_number(z.real());
  if (z.imag() != 0.0) {
    out += z.imag() < 0.0 ? '-' : '+';
    out += format_number(std::abs(z.imag()));
    out += 'i';
  }
  return out;
}

std::string format_matrix_file(const DensityMatrix4& m) {
  std::string out;
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      if (j > 1) out += ' ';
      out += format_complex_token(m.at(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace quditx::cli
