#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jmexpand/dyck.hpp"
#include "jmexpand/errors.hpp"
#include "jmexpand/recurrence.hpp"
#include "jmexpand/series.hpp"

using namespace jmexpand;

namespace {
CoefficientEngine& engine() {
  static CoefficientEngine instance;
  return instance;
}
}  // namespace

TEST_CASE("Catalan numbers") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(5) == 42);
  for (int k = 0; k <= 10; ++k) {
    CHECK(dyck_path_count_bruteforce(k) == catalan(k));
  }
}

TEST_CASE("total Dyck areas") {
  CHECK(dyck_area_closed(0) == 0);
  CHECK(dyck_area_closed(1) == 1);
  CHECK(dyck_area_closed(2) == 6);
  for (int k = 0; k <= 10; ++k) {
    CHECK(dyck_area_closed(k) == dyck_area_bruteforce(k));
  }
  CHECK_THROWS_AS(dyck_area_bruteforce(15), ResourceGuardError);
}

TEST_CASE("areas of concatenated paths") {
  for (int k = 0; k <= 10; ++k) {
    CHECK(composition_area(WeakComposition({k})) == dyck_area_closed(k));
  }
  CHECK(composition_area(WeakComposition({1, 1})) == 2);
  CHECK(composition_area(WeakComposition({0, 0, 0})) == 0);
  // brute-force cross-check on two-block compositions
  for (int i = 0; i <= 5; ++i) {
    for (int j = 0; j <= 5; ++j) {
      Int expected = dyck_area_bruteforce(i) * catalan(j) +
                     catalan(i) * dyck_area_bruteforce(j);
      CHECK(composition_area(WeakComposition({i, j})) == expected);
    }
  }
}

TEST_CASE("first-return identity for areas") {
  for (int m = 1; m <= 10; ++m) {
    CHECK(lemma_area_check(m));
  }
}

TEST_CASE("extreme coset-type coefficients") {
  CHECK(leading_b(Partition({3, 2})) == 2);
  CHECK(subleading_b(Partition({2})) == 1);
  CHECK(subleading_b(Partition({1})) == 0);
  CHECK(subleading_b(Partition({3, 1})) == 6);
  for (int n = 1; n <= 6; ++n) {
    for (const Partition& mu : partitions_of(n)) {
      int defect = mu.sum() - mu.length();
      CHECK(leading_b(mu) == engine().b(defect, mu));
      CHECK(subleading_b(mu) == engine().b(defect + 1, mu));
    }
  }
}

TEST_CASE("series expansion machinery") {
  // 1/(1-z) is the all-ones series
  TruncatedSeries geo = RationalFunctionZ({Int(1)}, {Int(1), Int(-1)}).expand(6);
  for (int i = 0; i <= 6; ++i) CHECK(geo[i] == 1);
  CHECK_THROWS_AS(RationalFunctionZ({Int(1)}, {Int(0), Int(1)}),
                  InvalidInputError);
  TruncatedSeries product = geo * geo;
  for (int i = 0; i <= 6; ++i) CHECK(product[i] == i + 1);
  CHECK(series_to_text(product.shifted(5)) == "1*z^5 + 2*z^6");
}

TEST_CASE("cycle series") {
  TruncatedSeries s2 = cycle_series(2, 5);
  for (int k = 0; k <= 5; ++k) {
    CHECK(s2[k] == (k % 2 == 1 ? 1 : 0));
  }
  CHECK(cycle_series(4, 3)[3] == 5);
  CHECK(cycle_series(3, 2)[2] == 2);
  CHECK_THROWS_AS(cycle_series(1, 4), InvalidInputError);
  for (int n = 2; n <= 5; ++n) {
    TruncatedSeries s = cycle_series(n, 10);
    for (int k = 0; k <= 10; ++k) {
      CHECK(s[k] == Rat(engine().a(k, Partition({n}))));
      if ((k - (n - 1)) % 2 != 0) CHECK(s[k] == 0);
    }
  }
}

TEST_CASE("hook series") {
  TruncatedSeries s3 = hook_series(3, 8);
  CHECK(s3[1] == 1);
  CHECK(s3[3] == 5);
  CHECK(s3[5] == 21);
  for (int n = 3; n <= 5; ++n) {
    TruncatedSeries s = hook_series(n, 10);
    Partition hook = Partition({n - 1, 1});
    for (int k = 0; k <= 10; ++k) {
      CHECK(s[k] == Rat(engine().a(k, hook)));
    }
  }
  for (int n = 2; n <= 5; ++n) {
    TruncatedSeries s = hook_c_series(n, 10);
    Partition hook = Partition({n - 1, 1});
    for (int k = 0; k <= 10; ++k) {
      CHECK(s[k] == Rat(engine().c(k, hook)));
    }
  }
}

TEST_CASE("solved series for the shapes (n-2,1,1) and (n-2,2)") {
  for (int n = 4; n <= 6; ++n) {
    TruncatedSeries f211 = solved_F_series(SolvedShape::CycleOneOne, n, 8);
    TruncatedSeries f22 = solved_F_series(SolvedShape::CycleTwo, n, 8);
    Partition p211 = Partition({n - 2, 1, 1});
    Partition p22 = Partition::from_unsorted({n - 2, 2});
    for (int k = 0; k <= 8; ++k) {
      CHECK(f211[k] == Rat(engine().c(k, p211)));
      CHECK(f22[k] == Rat(engine().c(k, p22)));
    }
  }
  CHECK(solved_F_series(SolvedShape::CycleOneOne, 4, 5)[3] == 1);
  CHECK(solved_F_series(SolvedShape::CycleTwo, 4, 5)[2] == 1);
  CHECK(solved_F_series(SolvedShape::CycleTwo, 5, 5)[3] == 2);
  CHECK_THROWS_AS(solved_F_series(SolvedShape::CycleTwo, 3, 5),
                  InvalidInputError);
}
