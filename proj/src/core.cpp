#include "shchain/core.hpp"

#include <algorithm>

namespace shchain {

namespace {

void require_in_chain(Element x, std::size_t n) {
  if (x >= n) {
    throw DomainError("element index " + std::to_string(x) +
                      " is outside the chain of size " + std::to_string(n));
  }
}

AxiomReport fail(Axiom axiom, std::initializer_list<Element> tuple) {
  Witness w;
  std::copy(tuple.begin(), tuple.end(), w.values.begin());
  w.arity = tuple.size();
  return AxiomReport{Violation{axiom, w}};
}

bool sh2_at(const ImplicationTable& t, Element x, Element y) {
  return std::min(x, t(x, y)) == std::min(x, y);
}

bool sh3_at(const ImplicationTable& t, Element x, Element y, Element z) {
  return std::min(x, t(y, z)) == std::min(x, t(std::min(x, y), std::min(x, z)));
}

}  // namespace

MeetJoin lattice_ops(Element x, Element y, std::size_t n) {
  require_in_chain(x, n);
  require_in_chain(y, n);
  return {std::min(x, y), std::max(x, y)};
}

ImplicationTable::ImplicationTable(std::size_t n) : n_(n), cells_(n * n, 0) {
  if (n == 0) throw DomainError("chain size must be positive");
}

ImplicationTable::ImplicationTable(const std::vector<std::vector<Element>>& rows)
    : n_(rows.size()) {
  if (n_ == 0) throw DomainError("chain size must be positive");
  cells_.reserve(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (rows[i].size() != n_) {
      throw DomainError("row " + std::to_string(i) + " has " +
                        std::to_string(rows[i].size()) + " entries, expected " +
                        std::to_string(n_));
    }
    for (Element v : rows[i]) {
      require_in_chain(v, n_);
      cells_.push_back(v);
    }
  }
}

ImplicationTable::ImplicationTable(
    std::initializer_list<std::initializer_list<Element>> rows)
    : ImplicationTable(std::vector<std::vector<Element>>(rows.begin(), rows.end())) {}

Element ImplicationTable::at(std::size_t row, std::size_t col) const {
  if (row >= n_ || col >= n_) throw DomainError("cell outside the table");
  return (*this)(row, col);
}

void ImplicationTable::set(std::size_t row, std::size_t col, Element value) {
  if (row >= n_ || col >= n_) throw DomainError("cell outside the table");
  require_in_chain(value, n_);
  cells_[row * n_ + col] = value;
}

std::vector<std::vector<Element>> ImplicationTable::rows() const {
  std::vector<std::vector<Element>> out;
  out.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    auto r = row(i);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

std::strong_ordering operator<=>(const ImplicationTable& a, const ImplicationTable& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.cells_.begin(), a.cells_.end(),
                                                b.cells_.begin(), b.cells_.end());
}

std::size_t ImplicationTableHash::operator()(const ImplicationTable& t) const noexcept {
  // FNV-1a over the cell values.
  std::uint64_t h = 1469598103934665603ull ^ t.size();
  for (Element v : t.cells()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

ImplicationTable heyting_table(std::size_t n) {
  ImplicationTable t(n);
  Element* cells = TableBuilder::data(t);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      cells[i * n + k] = i <= k ? t.top() : static_cast<Element>(k);
  return t;
}

std::string to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::SH2: return "SH2";
    case Axiom::SH3: return "SH3";
    case Axiom::SH4: return "SH4";
    case Axiom::Structural: return "STRUCTURAL";
  }
  return "?";
}

AxiomReport check_sh2(const ImplicationTable& t) {
  const auto n = static_cast<Element>(t.size());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (!sh2_at(t, x, y)) return fail(Axiom::SH2, {x, y});
  return {};
}

AxiomReport check_sh3(const ImplicationTable& t) {
  const auto n = static_cast<Element>(t.size());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (!sh3_at(t, x, y, z)) return fail(Axiom::SH3, {x, y, z});
  return {};
}

AxiomReport check_sh4(const ImplicationTable& t) {
  const auto n = static_cast<Element>(t.size());
  for (Element x = 0; x < n; ++x)
    if (t(x, x) != t.top()) return fail(Axiom::SH4, {x});
  return {};
}

AxiomReport check_structural(const ImplicationTable& t) {
  const auto n = static_cast<Element>(t.size());
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < i; ++j)
      if (t(i, j) != j) return fail(Axiom::Structural, {i, j});
  return {};
}

bool identity_holds(const ImplicationTable& t, Axiom axiom, const Witness& w) {
  for (Element v : w.tuple()) require_in_chain(v, t.size());
  const auto& v = w.values;
  switch (axiom) {
    case Axiom::SH2:
      if (w.arity != 2) break;
      return sh2_at(t, v[0], v[1]);
    case Axiom::SH3:
      if (w.arity != 3) break;
      return sh3_at(t, v[0], v[1], v[2]);
    case Axiom::SH4:
      if (w.arity != 1) break;
      return t(v[0], v[0]) == t.top();
    case Axiom::Structural:
      if (w.arity != 2) break;
      return v[1] >= v[0] || t(v[0], v[1]) == v[1];
  }
  throw DomainError("witness arity " + std::to_string(w.arity) + " does not match " +
                    to_string(axiom));
}

bool satisfies_axioms(const ImplicationTable& t) {
  return check_sh4(t) && check_sh2(t) && check_sh3(t);
}

bool is_valid(const ImplicationTable& t) {
  return check_sh2(t) && check_sh3(t) && check_sh4(t) && check_structural(t);
}

bool is_heyting(const ImplicationTable& t) {
  const std::size_t n = t.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (t(i, k) != (i <= k ? t.top() : static_cast<Element>(k))) return false;
  return true;
}

bool check_lemma_zero(const ImplicationTable& t) {
  auto first = t.row(0).subspan(1);
  const bool some_zero = std::ranges::any_of(first, [](Element v) { return v == 0; });
  return !some_zero || std::ranges::all_of(first, [](Element v) { return v == 0; });
}

bool check_lemma_implication(const ImplicationTable& t) {
  const std::size_t n = t.size();
  for (std::size_t a = 0; a + 1 < n; ++a) {
    const Element b = t(a, n - 1);
    for (std::size_t c = a + 1; c < n; ++c) {
      const Element image = t(a, c);
      if (b < c ? image != b : image < c) return false;
    }
  }
  return true;
}

}  // namespace shchain
