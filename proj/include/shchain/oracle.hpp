#pragma once

// Brute-force ground truth: scan candidate tables and keep those satisfying
// SH2, SH3 and SH4. Shares nothing with the recursive constructor.

#include <cstddef>
#include <string>
#include <vector>

#include "shchain/bigcount.hpp"
#include "shchain/core.hpp"
#include "shchain/cursor_range.hpp"

namespace shchain {

enum class OracleMode {
  Pure,    // every cell free: n^(n*n) candidates
  Forced,  // diagonal and below-diagonal fixed: n^(n(n-1)/2) candidates
};

std::string to_string(OracleMode mode);

struct OracleLimits {
  std::size_t max_pure = 3;
  std::size_t max_forced = 5;
};

/// Number of candidate tables the search visits.
BigCount search_space_size(std::size_t n, OracleMode mode);

/// Odometer over the free cells, first free cell (row-major) most
/// significant; yields the accepted tables in that order.
class OracleCursor {
 public:
  /// Throws DomainError if n == 0 and ResourceLimitError if n exceeds the
  /// cap for the mode.
  OracleCursor(std::size_t n, OracleMode mode, OracleLimits limits = {});

  bool valid() const noexcept { return valid_; }
  const ImplicationTable& get() const noexcept { return table_; }
  void next();

 private:
  bool step();
  void seek();

  ImplicationTable table_;
  std::vector<std::size_t> free_;
  bool valid_ = true;
};

CursorRange<OracleCursor> oracle_enumerate(std::size_t n, OracleMode mode,
                                           OracleLimits limits = {});

BigCount oracle_count(std::size_t n, OracleMode mode, OracleLimits limits = {});

}  // namespace shchain
