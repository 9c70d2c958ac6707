#include "shchain/count.hpp"

#include "shchain/construct.hpp"
#include "shchain/errors.hpp"

namespace shchain {

namespace {

// 1 + sum_{j=i+1}^{n-1} (n-i-1)!/(n-j-1)!, where each ratio is the falling
// product (n-i-1)(n-i-2)...(n-j).
BigCount product_bracket(std::size_t n, std::size_t i) {
  BigCount bracket = 1;
  BigCount ratio = 1;
  for (std::size_t j = i + 1; j <= n - 1; ++j) {
    ratio *= n - j;
    bracket += ratio;
  }
  return bracket;
}

}  // namespace

BigCount count_recursive(std::size_t n) {
  return count_recursive(n, [](std::size_t m) { return first_row_count(m); });
}

BigCount count_recursive(std::size_t n,
                         const std::function<BigCount(std::size_t)>& multiplier) {
  if (n == 0) throw DomainError("chain size must be positive");
  BigCount total = 1;
  for (std::size_t m = 2; m <= n; ++m) total *= multiplier(m);
  return total;
}

BigCount count_product(std::size_t n) {
  if (n == 0) throw DomainError("chain size must be positive");
  BigCount total = 1;
  for (std::size_t i = 0; i + 2 <= n; ++i) total *= product_bracket(n, i);
  return total;
}

CountSplit count_split(std::size_t n) {
  if (n < 2) throw DomainError("count_split needs a chain with at least 2 elements");
  CountSplit split{product_bracket(n, 0), 1};
  for (std::size_t i = 1; i + 2 <= n; ++i) split.rest *= product_bracket(n, i);
  return split;
}

}  // namespace shchain
