#pragma once

// Test-only brute-force helpers. Nothing here calls the constructor; the
// sweeps re-state each identity directly so they can serve as oracles.

#include <algorithm>
#include <random>
#include <vector>

#include "shchain/core.hpp"

namespace shchain::test {

inline Witness witness(std::initializer_list<Element> values) {
  Witness w;
  std::copy(values.begin(), values.end(), w.values.begin());
  w.arity = values.size();
  return w;
}

/// Calls f on each of the n^(n*n) tables, in lexicographic order.
template <class F>
void for_each_table(std::size_t n, F&& f) {
  std::vector<std::vector<Element>> rows(n, std::vector<Element>(n, 0));
  const auto top = static_cast<Element>(n - 1);
  while (true) {
    f(ImplicationTable(rows));
    std::size_t cell = n * n;
    while (cell-- > 0) {
      auto& v = rows[cell / n][cell % n];
      if (v < top) {
        ++v;
        break;
      }
      v = 0;
    }
    if (cell == static_cast<std::size_t>(-1)) return;
  }
}

inline bool matches_skeleton(const ImplicationTable& t) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t(i, i) != t.top()) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (t(i, j) != j) return false;
  }
  return true;
}

/// Random table; with `skeleton` the forced cells are fixed so that more
/// candidates come close to satisfying the axioms.
inline ImplicationTable random_table(std::size_t n, std::mt19937& rng, bool skeleton) {
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
  std::vector<std::vector<Element>> rows(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      rows[i][k] = skeleton && k <= i ? (k == i ? static_cast<Element>(n - 1)
                                                : static_cast<Element>(k))
                                      : pick(rng);
  return ImplicationTable(rows);
}

/// Every tuple at which the identity fails, in lexicographic order.
inline std::vector<Witness> failing_tuples(const ImplicationTable& t, Axiom axiom) {
  const auto n = static_cast<Element>(t.size());
  const Element top = n - 1;
  auto imp = [&](Element a, Element b) { return t(a, b); };
  auto meet = [](Element a, Element b) { return a < b ? a : b; };
  std::vector<Witness> out;
  for (Element x = 0; x < n; ++x) {
    if (axiom == Axiom::SH4 && imp(x, x) != top) out.push_back(witness({x}));
    for (Element y = 0; y < n; ++y) {
      if (axiom == Axiom::SH2 && meet(x, imp(x, y)) != meet(x, y))
        out.push_back(witness({x, y}));
      if (axiom == Axiom::Structural && y < x && imp(x, y) != y)
        out.push_back(witness({x, y}));
      for (Element z = 0; z < n; ++z) {
        if (axiom == Axiom::SH3 &&
            meet(x, imp(y, z)) != meet(x, imp(meet(x, y), meet(x, z))))
          out.push_back(witness({x, y, z}));
      }
    }
  }
  return out;
}

}  // namespace shchain::test
