#include "shchain/oracle.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace shchain {

std::string to_string(OracleMode mode) {
  return mode == OracleMode::Pure ? "pure" : "forced";
}

BigCount search_space_size(std::size_t n, OracleMode mode) {
  const std::size_t free_cells = mode == OracleMode::Pure ? n * n : n * (n - 1) / 2;
  return boost::multiprecision::pow(BigCount(n), static_cast<unsigned>(free_cells));
}

OracleCursor::OracleCursor(std::size_t n, OracleMode mode, OracleLimits limits)
    : table_(n) {
  const std::size_t cap = mode == OracleMode::Pure ? limits.max_pure : limits.max_forced;
  if (n > cap) {
    const auto space = search_space_size(n, mode).str();
    throw ResourceLimitError("oracle (" + to_string(mode) + ") is capped at n <= " +
                                 std::to_string(cap) + "; n=" + std::to_string(n) +
                                 " would scan " + space + " candidate tables",
                             space);
  }

  Element* cells = TableBuilder::data(table_);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (mode == OracleMode::Forced && k <= i) {
        cells[i * n + k] = k == i ? static_cast<Element>(n - 1) : static_cast<Element>(k);
      } else {
        free_.push_back(i * n + k);
      }
    }
  }
  seek();
}

// Advances the odometer by one candidate; false once it wraps around.
bool OracleCursor::step() {
  Element* cells = TableBuilder::data(table_);
  const Element top = table_.top();
  for (std::size_t p = free_.size(); p-- > 0;) {
    Element& cell = cells[free_[p]];
    if (cell < top) {
      ++cell;
      return true;
    }
    cell = 0;
  }
  return false;
}

void OracleCursor::seek() {
  while (!satisfies_axioms(table_)) {
    if (!step()) {
      valid_ = false;
      return;
    }
  }
}

void OracleCursor::next() {
  if (!valid_) return;
  if (!step()) {
    valid_ = false;
    return;
  }
  seek();
}

CursorRange<OracleCursor> oracle_enumerate(std::size_t n, OracleMode mode,
                                           OracleLimits limits) {
  return CursorRange<OracleCursor>(OracleCursor(n, mode, limits));
}

BigCount oracle_count(std::size_t n, OracleMode mode, OracleLimits limits) {
  OracleCursor cursor(n, mode, limits);
  std::size_t count = 0;
  for (; cursor.valid(); cursor.next()) ++count;
  return count;
}

}  // namespace shchain
