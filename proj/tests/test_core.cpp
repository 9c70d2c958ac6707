#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "shchain/construct.hpp"
#include "shchain/core.hpp"
#include "test_support.hpp"

using namespace shchain;

namespace {

const ImplicationTable kGodel3{{2, 2, 2}, {0, 2, 2}, {0, 1, 2}};

ImplicationTable godel3_with_row0(std::initializer_list<Element> row0) {
  auto t = kGodel3;
  std::size_t k = 0;
  for (Element v : row0) t.set(0, k++, v);
  return t;
}

}  // namespace

TEST_CASE("lattice_ops is min/max on the chain") {
  CHECK(lattice_ops(1, 2, 3) == MeetJoin{1, 2});
  CHECK(lattice_ops(0, 4, 5) == MeetJoin{0, 4});
  for (Element x = 0; x < 4; ++x) CHECK(lattice_ops(x, x, 4) == MeetJoin{x, x});
  CHECK_THROWS_AS(lattice_ops(3, 0, 3), DomainError);
  CHECK_THROWS_AS(lattice_ops(0, 7, 3), DomainError);
}

TEST_CASE("ImplicationTable rejects malformed input") {
  CHECK_THROWS_AS(ImplicationTable(0), DomainError);
  CHECK_THROWS_AS((ImplicationTable{{1, 1}, {0}}), DomainError);
  CHECK_THROWS_AS((ImplicationTable{{1, 2}, {0, 1}}), DomainError);
  auto t = heyting_table(2);
  CHECK_THROWS_AS(t.set(0, 0, 2), DomainError);
  CHECK_THROWS_AS(t.at(2, 0), DomainError);
  CHECK(t == ImplicationTable{{1, 1}, {0, 1}});
}

TEST_CASE("check_sh2") {
  CHECK(check_sh2(ImplicationTable{{1, 1}, {0, 1}}).passed());

  auto report = check_sh2(ImplicationTable{{1, 1}, {1, 1}});
  REQUIRE_FALSE(report.passed());
  CHECK(report.violation->axiom == Axiom::SH2);
  CHECK(report.violation->witness == test::witness({1, 0}));

  for (const auto& t : enumerate(3)) CHECK(check_sh2(t).passed());
}

TEST_CASE("check_sh3") {
  CHECK(check_sh3(kGodel3).passed());

  auto report = check_sh3(godel3_with_row0({2, 0, 1}));
  REQUIRE_FALSE(report.passed());
  CHECK(report.violation->axiom == Axiom::SH3);
  CHECK_FALSE(identity_holds(godel3_with_row0({2, 0, 1}), Axiom::SH3,
                             report.violation->witness));
}

TEST_CASE("check_sh4") {
  CHECK(check_sh4(kGodel3).passed());
  CHECK(check_sh4(ImplicationTable{{1, 0}, {0, 1}}).passed());

  auto report = check_sh4(ImplicationTable{{0, 1}, {0, 1}});
  REQUIRE_FALSE(report.passed());
  CHECK(report.violation->witness == test::witness({0}));
}

TEST_CASE("check_structural") {
  CHECK(check_structural(kGodel3).passed());
  CHECK(check_structural(ImplicationTable{{0}}).passed());

  auto t = kGodel3;
  t.set(2, 1, 2);
  auto report = check_structural(t);
  REQUIRE_FALSE(report.passed());
  CHECK(report.violation->axiom == Axiom::Structural);
  CHECK(report.violation->witness == test::witness({2, 1}));
}

TEST_CASE("is_valid over every table of small chains") {
  std::size_t valid2 = 0;
  test::for_each_table(2, [&](const ImplicationTable& t) { valid2 += is_valid(t); });
  CHECK(valid2 == 2);

  std::size_t valid3 = 0, total3 = 0;
  test::for_each_table(3, [&](const ImplicationTable& t) {
    ++total3;
    valid3 += is_valid(t);
  });
  CHECK(total3 == 19683);
  CHECK(valid3 == 10);

  CHECK(is_valid(godel3_with_row0({2, 2, 1})));
}

TEST_CASE("is_heyting") {
  CHECK(is_heyting(kGodel3));
  CHECK_FALSE(is_heyting(ImplicationTable{{1, 0}, {0, 1}}));

  std::size_t heyting = 0;
  for (const auto& t : enumerate(3)) heyting += is_heyting(t);
  CHECK(heyting == 1);

  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(is_heyting(heyting_table(n)));
    CHECK(is_valid(heyting_table(n)));
  }
}

TEST_CASE("check_lemma_zero") {
  CHECK(check_lemma_zero(godel3_with_row0({2, 0, 0})));
  CHECK_FALSE(check_lemma_zero(godel3_with_row0({2, 0, 1})));
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& t : enumerate(n)) CHECK(check_lemma_zero(t));
}

TEST_CASE("check_lemma_implication") {
  CHECK(check_lemma_implication(kGodel3));
  CHECK(check_lemma_implication(godel3_with_row0({2, 1, 1})));
  // 0 -> top = 1 < 2 = c but 0 -> a_2 != 1.
  CHECK_FALSE(check_lemma_implication(
      ImplicationTable{{3, 1, 2, 1}, {0, 3, 3, 3}, {0, 1, 3, 3}, {0, 1, 2, 3}}));
  for (std::size_t n = 1; n <= 3; ++n) {
    test::for_each_table(n, [](const ImplicationTable& t) {
      if (satisfies_axioms(t)) CHECK(check_lemma_implication(t));
    });
  }
}

TEST_CASE("axioms alone force the structural skeleton on small chains") {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::set<ImplicationTable> all, skeleton;
    test::for_each_table(n, [&](const ImplicationTable& t) {
      if (!satisfies_axioms(t)) return;
      all.insert(t);
      CHECK(check_structural(t).passed());
      if (test::matches_skeleton(t)) skeleton.insert(t);
    });
    CHECK(all == skeleton);
  }
}

TEST_CASE("reported witnesses are the least failing tuples") {
  std::mt19937 rng(20261016);
  for (int round = 0; round < 400; ++round) {
    const std::size_t n = 2 + rng() % 3;
    auto t = test::random_table(n, rng, round % 2 == 0);
    for (auto [axiom, check] : {std::pair{Axiom::SH2, &check_sh2},
                                std::pair{Axiom::SH3, &check_sh3},
                                std::pair{Axiom::SH4, &check_sh4},
                                std::pair{Axiom::Structural, &check_structural}}) {
      auto report = check(t);
      auto failing = test::failing_tuples(t, axiom);
      CHECK(report.passed() == failing.empty());
      if (!report.passed()) {
        CHECK(report.violation->axiom == axiom);
        CHECK_FALSE(identity_holds(t, axiom, report.violation->witness));
        CHECK(report.violation->witness == failing.front());
      }
    }
  }
}

TEST_CASE("identity_holds validates its witness") {
  CHECK_THROWS_AS(identity_holds(kGodel3, Axiom::SH3, test::witness({0, 1})), DomainError);
  CHECK_THROWS_AS(identity_holds(kGodel3, Axiom::SH4, test::witness({3})), DomainError);
}
