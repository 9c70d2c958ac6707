#pragma once

// Exact evaluation of the two closed counting formulas for semi-Heyting
// implications on the n-chain. Every factorial ratio is formed as a
// falling product of integers.

#include <cstddef>
#include <functional>

#include "shchain/bigcount.hpp"

namespace shchain {

/// N(1) = 1 and N(n) = first_row_count(n) * N(n-1). Throws DomainError if
/// n == 0.
BigCount count_recursive(std::size_t n);

/// The same recursion with a caller-supplied multiplier in place of
/// first_row_count; used to mutation-test the cross-check harness.
BigCount count_recursive(std::size_t n,
                         const std::function<BigCount(std::size_t)>& multiplier);

/// Product over i in [0, n-2] of 1 + sum_{j=i+1}^{n-1} (n-i-1)!/(n-j-1)!.
/// count_product(1) is 1 (empty product). Throws DomainError if n == 0.
BigCount count_product(std::size_t n);

struct CountSplit {
  BigCount first;  // the i = 0 bracket
  BigCount rest;   // product of the brackets i = 1..n-2
};

/// Peels the i = 0 factor off count_product(n). Throws DomainError if n < 2.
CountSplit count_split(std::size_t n);

}  // namespace shchain
