#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace shchain {

/// An argument lies outside the operation's domain (bad chain size, index
/// out of range, mismatched table sizes).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition of the callee does not hold for the input.
class PreconditionViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A brute-force request exceeds the configured cap.
class ResourceLimitError : public std::runtime_error {
 public:
  ResourceLimitError(const std::string& what, std::string search_space)
      : std::runtime_error(what), search_space_(std::move(search_space)) {}

  /// Decimal estimate of the number of candidates the request would visit.
  const std::string& search_space() const noexcept { return search_space_; }

 private:
  std::string search_space_;
};

/// Syntactically malformed table document. Line and column are 1-based;
/// for JSON input the line is 0 and the column is the byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed document describing an impossible table (non-square,
/// entry index >= n, ...). Row/column name the offending cell when known.
class ValidationError : public std::runtime_error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  explicit ValidationError(const std::string& what, std::size_t row = npos,
                           std::size_t column = npos)
      : std::runtime_error(what), row_(row), column_(column) {}

  std::size_t row() const noexcept { return row_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t row_;
  std::size_t column_;
};

}  // namespace shchain
