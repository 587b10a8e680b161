#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace quditx {

enum class ErrorKind {
  NonFinite,
  NegativeDiagonal,
  TraceNotOne,
  BlockPositivityViolated,
  NotXShaped,
  InvalidDensityMatrix,
  NotHermitian,
  NoConvergence,
  BadParameter,
  NotDistribution,
  OutOfRegion,
  BadGrid,
  BadRule,
  BadRange,
  ParseError,
  BadFlags,
  IoError,
};

const char* to_string(ErrorKind kind) noexcept;

// Base of every error raised by the library. The kind names the violated
// check so callers (the CLI in particular) can map it to an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

enum class Block { Outer, Inner };

inline const char* to_string(Block b) noexcept {
  return b == Block::Outer ? "outer" : "inner";
}

class BlockPositivityError : public Error {
 public:
  BlockPositivityError(Block block, const std::string& what)
      : Error(ErrorKind::BlockPositivityViolated, what), block_(block) {}

  Block block() const noexcept { return block_; }

 private:
  Block block_;
};

// 1-based (row, column) pairs.
using IndexPair = std::pair<int, int>;

class NotXShapedError : public Error {
 public:
  NotXShapedError(std::vector<IndexPair> offending, const std::string& what)
      : Error(ErrorKind::NotXShaped, what), offending_(std::move(offending)) {}

  const std::vector<IndexPair>& offending() const noexcept {
    return offending_;
  }

 private:
  std::vector<IndexPair> offending_;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error(ErrorKind::ParseError,
              "line " + std::to_string(line) + ", column " +
                  std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace quditx
