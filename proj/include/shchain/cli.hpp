#pragma once

// Command implementations behind the `shchain` executable. Each returns the
// process exit status: 0 success, 1 semantic failure (axiom violation,
// cross-check mismatch), 2 input error.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shchain/bigcount.hpp"
#include "shchain/io.hpp"

namespace shchain::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInputError = 2;

struct Caps {
  std::size_t max_pure = 3;
  std::size_t max_forced = 5;
  std::size_t max_construct = 6;
  std::size_t max_formula = 200;
};

enum class CountMethod { Recursive, Product, Construct, OraclePure, OracleForced };

/// Accepts recursive, product, construct, oracle-pure, oracle-forced.
std::optional<CountMethod> parse_count_method(std::string_view name);

int cmd_count(std::size_t n, CountMethod method, const Caps& caps, std::ostream& out,
              std::ostream& err);

/// Writes every n-table in canonical order: text documents separated by a
/// blank line, or one JSON document per line. `destination` "-" is `out`.
int cmd_enumerate(std::size_t n, Format format, const std::string& destination,
                  std::optional<std::uint64_t> limit, std::ostream& out, std::ostream& err);

/// Parses the file at `path` and reports "VALID heyting=yes|no" or the
/// first violated axiom with its witness.
int cmd_verify(const std::string& path, Format format, std::ostream& out, std::ostream& err);

/// Functions under test in the cross-check; replaceable to confirm that a
/// broken implementation is caught.
struct CrosscheckHooks {
  std::function<BigCount(std::size_t)> first_row_count;
  std::function<BigCount(std::size_t)> count_product;

  static CrosscheckHooks defaults();
};

struct ComparisonResult {
  std::string name;
  bool passed;
  std::string detail;
};

/// Runs the full agreement matrix and returns every comparison in order.
std::vector<ComparisonResult> run_crosscheck(const Caps& caps,
                                             const CrosscheckHooks& hooks = CrosscheckHooks::defaults());

int cmd_crosscheck(const Caps& caps, std::ostream& out, std::ostream& err,
                   const CrosscheckHooks& hooks = CrosscheckHooks::defaults());

}  // namespace shchain::cli
