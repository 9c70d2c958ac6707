#include "shchain/construct.hpp"

#include <algorithm>
#include <string>

namespace shchain {

FirstRowSpec::FirstRowSpec(std::size_t n, Element j, std::vector<Element> choices)
    : n_(n), j_(j), choices_(std::move(choices)) {
  if (n == 0) throw DomainError("chain size must be positive");
  if (j >= n) throw DomainError("j must be below the chain size");
  if (choices_.size() != j) {
    throw DomainError("expected " + std::to_string(j) + " choices, got " +
                      std::to_string(choices_.size()));
  }
  for (std::size_t h = 1; h <= j; ++h) {
    const Element c = choices_[h - 1];
    if (c < h || c >= n) {
      throw DomainError("choice for position " + std::to_string(h) + " must lie in [" +
                        std::to_string(h) + ", " + std::to_string(n - 1) + "]");
    }
  }
}

std::vector<Element> FirstRowSpec::induced_row() const {
  std::vector<Element> row(n_);
  write_row(row.data());
  return row;
}

void FirstRowSpec::write_row(Element* out, Element shift) const noexcept {
  out[0] = static_cast<Element>(n_ - 1) + shift;
  for (std::size_t h = 1; h < n_; ++h)
    out[h] = (h <= j_ ? choices_[h - 1] : j_) + shift;
}

FirstRowCursor::FirstRowCursor(std::size_t n) {
  if (n < 2) throw DomainError("first rows are defined for chains of size >= 2");
  spec_.n_ = n;
  reset();
}

void FirstRowCursor::reset() {
  spec_.j_ = 0;
  spec_.choices_.clear();
  valid_ = true;
}

void FirstRowCursor::next() {
  if (!valid_) return;
  auto& choices = spec_.choices_;
  const auto top = static_cast<Element>(spec_.n_ - 1);
  // Odometer over choices[p] in [p+1, top], last position fastest.
  for (std::size_t p = choices.size(); p-- > 0;) {
    if (choices[p] < top) {
      ++choices[p];
      for (std::size_t q = p + 1; q < choices.size(); ++q)
        choices[q] = static_cast<Element>(q + 1);
      return;
    }
  }
  if (spec_.j_ == top) {
    valid_ = false;
    return;
  }
  ++spec_.j_;
  choices.resize(spec_.j_);
  for (std::size_t q = 0; q < choices.size(); ++q) choices[q] = static_cast<Element>(q + 1);
}

CursorRange<FirstRowCursor> first_rows(std::size_t n) {
  return CursorRange<FirstRowCursor>(FirstRowCursor(n));
}

BigCount first_row_count(std::size_t n) {
  if (n == 0) throw DomainError("chain size must be positive");
  // term_i = (n-1)!/i! = (n-1)(n-2)...(i+1), accumulated from i = n-1 down.
  BigCount term = 1;
  BigCount total = 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    term *= i + 1;
    total += term;
  }
  return total;
}

PartialTable::PartialTable(std::size_t n) : n_(n), cells_(n * n) {
  if (n == 0) throw DomainError("chain size must be positive");
}

const std::optional<Element>& PartialTable::cell(std::size_t row, std::size_t col) const {
  if (row >= n_ || col >= n_) throw DomainError("cell outside the table");
  return cells_[row * n_ + col];
}

void PartialTable::fix(std::size_t row, std::size_t col, Element value) {
  if (row >= n_ || col >= n_) throw DomainError("cell outside the table");
  if (value >= n_) throw DomainError("element outside the chain");
  cells_[row * n_ + col] = value;
}

std::size_t PartialTable::free_count() const noexcept {
  return static_cast<std::size_t>(
      std::ranges::count_if(cells_, [](const auto& c) { return !c.has_value(); }));
}

PartialTable forced_skeleton(std::size_t n) {
  PartialTable skeleton(n);
  for (std::size_t i = 0; i < n; ++i) {
    skeleton.fix(i, i, static_cast<Element>(n - 1));
    for (std::size_t j = 0; j < i; ++j) skeleton.fix(i, j, static_cast<Element>(j));
  }
  return skeleton;
}

ImplicationTable extend(const ImplicationTable& sub, const FirstRowSpec& row) {
  const std::size_t n = row.size();
  if (sub.size() + 1 != n) {
    throw DomainError("cannot extend a table of size " + std::to_string(sub.size()) +
                      " with a first row of size " + std::to_string(n));
  }
  if (!is_valid(sub)) throw DomainError("the table being extended is not valid");

  ImplicationTable out(n);
  Element* cells = TableBuilder::data(out);
  row.write_row(cells);
  for (std::size_t i = 1; i < n; ++i) {
    cells[i * n] = 0;
    for (std::size_t k = 1; k < n; ++k) cells[i * n + k] = sub(i - 1, k - 1) + 1;
  }
  return out;
}

ImplicationTable restrict(const ImplicationTable& table) {
  const std::size_t n = table.size();
  if (n < 2) throw DomainError("restriction needs a chain with at least 2 elements");
  if (!is_valid(table)) throw PreconditionViolation("restrict requires a valid table");

  ImplicationTable out(n - 1);
  Element* cells = TableBuilder::data(out);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t k = 1; k < n; ++k)
      cells[(i - 1) * (n - 1) + (k - 1)] = table(i, k) - 1;
  return out;
}

TableStream::TableStream(std::size_t n) : n_(n), table_(n) {
  Element* cells = TableBuilder::data(table_);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      cells[i * n + j] = i == j ? static_cast<Element>(n - 1) : static_cast<Element>(j);

  cursors_.reserve(n > 1 ? n - 1 : 0);
  for (std::size_t m = 2; m <= n; ++m) {
    cursors_.emplace_back(m);
    write_level(m);
  }
}

void TableStream::write_level(std::size_t m) {
  const std::size_t r = n_ - m;
  Element* cells = TableBuilder::data(table_);
  cursors_[m - 2].get().write_row(cells + r * n_ + r, static_cast<Element>(r));
}

void TableStream::next() {
  if (!valid_) return;
  // The row contributed at size n (table row 0) is the fastest digit.
  for (std::size_t m = n_; m >= 2; --m) {
    auto& cursor = cursors_[m - 2];
    cursor.next();
    if (cursor.valid()) {
      write_level(m);
      return;
    }
    cursor.reset();
    write_level(m);
  }
  valid_ = false;
}

CursorRange<TableStream> enumerate(std::size_t n) {
  return CursorRange<TableStream>(TableStream(n));
}

}  // namespace shchain
