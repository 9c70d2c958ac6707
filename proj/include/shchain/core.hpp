#pragma once

// Chain arithmetic, the implication-table value type, and checkers for the
// semi-Heyting identities on a finite chain.
//
// Elements of the n-element chain are 0-based indices: 0 is the bottom and
// n-1 the top. A table stores a_i -> a_k at row i, column k (row = left
// argument).

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "shchain/errors.hpp"

namespace shchain {

using Element = std::uint32_t;

struct MeetJoin {
  Element meet;
  Element join;
  friend bool operator==(const MeetJoin&, const MeetJoin&) = default;
};

/// Meet and join on the n-element chain. Throws DomainError if either
/// argument is not below n.
MeetJoin lattice_ops(Element x, Element y, std::size_t n);

class ImplicationTable {
 public:
  /// The n x n table with every cell 0. Throws DomainError if n == 0.
  explicit ImplicationTable(std::size_t n);

  /// Builds from rows; throws DomainError when rows are not square or an
  /// entry is >= n.
  explicit ImplicationTable(const std::vector<std::vector<Element>>& rows);
  ImplicationTable(std::initializer_list<std::initializer_list<Element>> rows);

  std::size_t size() const noexcept { return n_; }
  Element top() const noexcept { return static_cast<Element>(n_ - 1); }

  Element operator()(std::size_t row, std::size_t col) const noexcept {
    return cells_[row * n_ + col];
  }
  /// Bounds- and range-checked read.
  Element at(std::size_t row, std::size_t col) const;
  /// Range-checked write; throws DomainError if value >= n.
  void set(std::size_t row, std::size_t col, Element value);

  std::span<const Element> row(std::size_t i) const noexcept {
    return {cells_.data() + i * n_, n_};
  }
  std::span<const Element> cells() const noexcept { return cells_; }
  std::vector<std::vector<Element>> rows() const;

  friend bool operator==(const ImplicationTable&, const ImplicationTable&) = default;
  friend std::strong_ordering operator<=>(const ImplicationTable& a,
                                          const ImplicationTable& b);

 private:
  friend class TableBuilder;
  std::size_t n_;
  std::vector<Element> cells_;
};

struct ImplicationTableHash {
  std::size_t operator()(const ImplicationTable& t) const noexcept;
};

/// Unchecked cell access for hot loops that maintain the range invariant
/// themselves (enumeration and brute-force search).
class TableBuilder {
 public:
  static Element* data(ImplicationTable& t) noexcept { return t.cells_.data(); }
};

/// The Goedel implication: top when x <= y, else y.
ImplicationTable heyting_table(std::size_t n);

enum class Axiom { SH2, SH3, SH4, Structural };

std::string to_string(Axiom axiom);

/// The tuple at which an identity fails: (x), (x, y) or (x, y, z).
struct Witness {
  std::array<Element, 3> values{};
  std::size_t arity = 0;

  std::span<const Element> tuple() const noexcept { return {values.data(), arity}; }
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Violation {
  Axiom axiom;
  Witness witness;
  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Result of an axiom check. No violation means the identity held at every
/// tuple; otherwise the violation carries the lexicographically least
/// failing tuple.
struct AxiomReport {
  std::optional<Violation> violation;

  bool passed() const noexcept { return !violation.has_value(); }
  explicit operator bool() const noexcept { return passed(); }
};

/// x & (x -> y) == x & y
AxiomReport check_sh2(const ImplicationTable& t);
/// x & (y -> z) == x & ((x & y) -> (x & z))
AxiomReport check_sh3(const ImplicationTable& t);
/// x -> x == top
AxiomReport check_sh4(const ImplicationTable& t);
/// a_i -> a_j == a_j whenever j < i. Witness is (i, j).
AxiomReport check_structural(const ImplicationTable& t);

/// Evaluates the named identity at a single tuple. Throws DomainError if the
/// arity does not match the axiom or an element is out of range.
bool identity_holds(const ImplicationTable& t, Axiom axiom, const Witness& w);

/// All of SH2, SH3, SH4 and the structural check pass.
bool is_valid(const ImplicationTable& t);

/// SH2, SH3 and SH4 only; makes no structural assumption about the table.
bool satisfies_axioms(const ImplicationTable& t);

/// The table is the Goedel (relative pseudocomplement) implication.
bool is_heyting(const ImplicationTable& t);

/// If 0 -> a == 0 for some a > 0 then 0 -> b == 0 for every b > 0.
bool check_lemma_zero(const ImplicationTable& t);

/// For every a < top with b = a -> top and every c > a: a -> c == b when
/// b < c, and a -> c >= c otherwise.
bool check_lemma_implication(const ImplicationTable& t);

}  // namespace shchain
