#pragma once

// Recursive construction of every semi-Heyting implication on the n-chain.
//
// A valid n-table is an (n-1)-table living on a_1 < ... < a_{n-1} (every
// entry shifted up by one) plus a forced column 0 and a new row 0. The
// admissible rows 0 are parameterized by j, the value of 0 -> top, and a
// choice i(h) in [h, n-1] for each 1 <= h <= j; positions past j take the
// value j.

#include <cstddef>
#include <optional>
#include <vector>

#include "shchain/bigcount.hpp"
#include "shchain/core.hpp"
#include "shchain/cursor_range.hpp"

namespace shchain {

class FirstRowSpec {
 public:
  /// Throws DomainError unless n >= 1, j < n, choices.size() == j and
  /// h <= choices[h-1] < n for every h.
  FirstRowSpec(std::size_t n, Element j, std::vector<Element> choices);

  std::size_t size() const noexcept { return n_; }
  Element j() const noexcept { return j_; }
  const std::vector<Element>& choices() const noexcept { return choices_; }

  /// The row 0 -> a_k for k = 0..n-1.
  std::vector<Element> induced_row() const;
  /// Writes induced_row() into out[0..n), offset by `shift`.
  void write_row(Element* out, Element shift = 0) const noexcept;

  friend bool operator==(const FirstRowSpec&, const FirstRowSpec&) = default;

 private:
  friend class FirstRowCursor;
  FirstRowSpec() = default;

  std::size_t n_ = 0;
  Element j_ = 0;
  std::vector<Element> choices_;
};

/// Sequential access to first_rows(n): j ascending, then choices in
/// lexicographic order.
class FirstRowCursor {
 public:
  explicit FirstRowCursor(std::size_t n);

  bool valid() const noexcept { return valid_; }
  const FirstRowSpec& get() const noexcept { return spec_; }
  void next();
  void reset();

 private:
  FirstRowSpec spec_;
  bool valid_ = true;
};

/// Every admissible row 0 for the n-chain, streamed. Throws DomainError if
/// n < 2.
CursorRange<FirstRowCursor> first_rows(std::size_t n);

/// Sum over i in [0, n) of (n-1)!/i!, exactly. Throws DomainError if n == 0.
BigCount first_row_count(std::size_t n);

/// An n x n table in which some cells are undetermined.
class PartialTable {
 public:
  explicit PartialTable(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  bool is_free(std::size_t row, std::size_t col) const { return !cell(row, col); }
  const std::optional<Element>& cell(std::size_t row, std::size_t col) const;
  void fix(std::size_t row, std::size_t col, Element value);
  std::size_t free_count() const noexcept;

 private:
  std::size_t n_;
  std::vector<std::optional<Element>> cells_;
};

/// Diagonal = top and a_i -> a_j = a_j for j < i; every cell above the
/// diagonal is free. Throws DomainError if n == 0.
PartialTable forced_skeleton(std::size_t n);

/// Embeds `sub` (size n-1) on a_1..a_{n-1} and adds the row induced by
/// `row` (size n). Throws DomainError on mismatched sizes or if `sub` is not
/// a valid table.
ImplicationTable extend(const ImplicationTable& sub, const FirstRowSpec& row);

/// Drops row and column 0 and shifts the remaining entries down by one.
/// Throws DomainError if the table has fewer than 2 elements and
/// PreconditionViolation if it is not valid.
ImplicationTable restrict(const ImplicationTable& table);

/// Depth-first stream of every valid n-table. The stream keeps one n x n
/// buffer plus one first-row cursor per chain size 2..n; get() refers to
/// that buffer and is overwritten by next().
///
/// Order: the table obtained from the k-th (n-1)-table and the r-th first
/// row comes before the one from (k, r+1), and all of k before any of k+1.
class TableStream {
 public:
  /// Throws DomainError if n == 0.
  explicit TableStream(std::size_t n);

  bool valid() const noexcept { return valid_; }
  const ImplicationTable& get() const noexcept { return table_; }
  void next();

 private:
  // cursors_[m - 2] drives the row contributed at chain size m, which sits at
  // table row n - m.
  void write_level(std::size_t m);

  std::size_t n_;
  ImplicationTable table_;
  std::vector<FirstRowCursor> cursors_;
  bool valid_ = true;
};

/// Every valid n-table, streamed lazily in canonical order.
CursorRange<TableStream> enumerate(std::size_t n);

}  // namespace shchain
