#ifndef SPINFER_ERRORS_HPP
#define SPINFER_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spinfer {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed text input. `column` is a 1-based token index, 0 when the
/// whole line is at fault.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg)
      : Error("parse error at line " + std::to_string(line) +
              (column ? ", column " + std::to_string(column) : "") + ": " + msg),
        line(line),
        column(column) {}
  std::size_t line;
  std::size_t column;
};

class EmptyInputError : public Error {
 public:
  explicit EmptyInputError(const std::string& msg) : Error(msg) {}
};

class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& msg) : Error(msg) {}
};

class IndexError : public Error {
 public:
  explicit IndexError(const std::string& msg) : Error(msg) {}
};

/// The adjacency diagonal is immutable; flipping (i,i) is rejected.
class SelfLoopError : public Error {
 public:
  explicit SelfLoopError(const std::string& msg) : Error(msg) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

/// Temporal monotonicity M_t <= M_{t+1} violated; indices of the first
/// offending cell are recorded.
class MonotonicityError : public Error {
 public:
  MonotonicityError(std::size_t t, std::size_t i, std::size_t u)
      : Error("monotonicity violated at (t=" + std::to_string(t) +
              ", i=" + std::to_string(i) + ", u=" + std::to_string(u) + ")"),
        t(t),
        i(i),
        u(u) {}
  std::size_t t;
  std::size_t i;
  std::size_t u;
};

class StartStateError : public Error {
 public:
  explicit StartStateError(const std::string& msg) : Error(msg) {}
};

class ModeError : public Error {
 public:
  explicit ModeError(const std::string& msg) : Error(msg) {}
};

/// A snapshot with zero variance cannot enter a Pearson correlation.
class DegenerateSnapshotError : public Error {
 public:
  explicit DegenerateSnapshotError(std::size_t block)
      : Error("snapshot block " + std::to_string(block) +
              " has zero variance over included cells"),
        block(block) {}
  std::size_t block;
};

class CacheCorruptionError : public Error {
 public:
  explicit CacheCorruptionError(const std::string& msg) : Error(msg) {}
};

}  // namespace spinfer

#endif  // SPINFER_ERRORS_HPP
