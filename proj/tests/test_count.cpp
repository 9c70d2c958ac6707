#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include "shchain/construct.hpp"
#include "shchain/count.hpp"

using namespace shchain;
using boost::multiprecision::cpp_rational;

namespace {

BigCount factorial(std::size_t k) {
  BigCount f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return f;
}

// The product formula read literally: (n-i-1)! times a sum of reciprocal
// factorials, evaluated over the rationals.
BigCount product_over_rationals(std::size_t n) {
  cpp_rational total = 1;
  for (std::size_t i = 0; i + 2 <= n; ++i) {
    cpp_rational sum = 0;
    for (std::size_t j = i + 1; j <= n - 1; ++j) sum += cpp_rational(1, factorial(n - j - 1));
    total *= 1 + cpp_rational(factorial(n - i - 1)) * sum;
  }
  REQUIRE(denominator(total) == 1);
  return numerator(total);
}

const char* const kGolden[] = {"1", "2", "10", "160", "10400", "3390400", "6635012800"};

}  // namespace

TEST_CASE("count_recursive golden values") {
  for (std::size_t n = 1; n <= 7; ++n) CHECK(count_recursive(n).str() == kGolden[n - 1]);
  CHECK(count_recursive(2) == first_row_count(2) * count_recursive(1));
  CHECK_THROWS_AS(count_recursive(0), DomainError);
}

TEST_CASE("count_product golden values") {
  for (std::size_t n = 1; n <= 7; ++n) CHECK(count_product(n).str() == kGolden[n - 1]);
  CHECK(count_product(2) == 2);
  CHECK_THROWS_AS(count_product(0), DomainError);
}

TEST_CASE("count_product matches a rational evaluation of the formula") {
  for (std::size_t n = 1; n <= 30; ++n) CHECK(count_product(n) == product_over_rationals(n));
}

TEST_CASE("n = 20") {
  const BigCount expected(
      "6179408053053385920200221455341388609833941823520358099316264020268652243351574292"
      "3360200274577239302662410650533953000350673684605030400000000000");
  CHECK(count_recursive(20) == expected);
  CHECK(count_product(20) == expected);
}

TEST_CASE("count_split") {
  auto three = count_split(3);
  CHECK(three.first == 5);
  CHECK(three.rest == 2);
  auto four = count_split(4);
  CHECK(four.first == 16);
  CHECK(four.rest == 10);
  auto seven = count_split(7);
  CHECK(seven.first == 1957);
  CHECK(seven.rest == 3390400);
  auto two = count_split(2);
  CHECK(two.first == 2);
  CHECK(two.rest == 1);
  CHECK_THROWS_AS(count_split(1), DomainError);
}

TEST_CASE("formula identities up to n = 200") {
  BigCount previous = 0;
  for (std::size_t n = 1; n <= 200; ++n) {
    const auto recursive = count_recursive(n);
    CHECK(recursive == count_product(n));
    CHECK(recursive > previous);
    if (n >= 2) {
      CHECK(recursive % 2 == 0);
      const auto split = count_split(n);
      CHECK(split.first == first_row_count(n));
      CHECK(split.rest == count_product(n - 1));
      CHECK(split.first * split.rest == recursive);
    }
    previous = recursive;
  }
}

TEST_CASE("count_recursive accepts a replacement multiplier") {
  auto off_by_one = [](std::size_t m) { return first_row_count(m) + 1; };
  CHECK(count_recursive(1, off_by_one) == 1);
  CHECK(count_recursive(2, off_by_one) == 3);
}
