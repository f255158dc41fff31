#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jmexpand/errors.hpp"
#include "jmexpand/group_algebra.hpp"

using namespace jmexpand;

TEST_CASE("Jucys-Murphy elements") {
  CHECK(jm_element(1, 5).is_zero());
  GroupAlgebraElement j2 = jm_element(2, 3);
  CHECK(j2.term_count() == 1);
  CHECK(j2.coefficient(Permutation::transposition(3, 0, 1)) == 1);
  GroupAlgebraElement j3 = jm_element(3, 3);
  CHECK(j3.term_count() == 2);
  CHECK(j3.coefficient(Permutation::transposition(3, 0, 2)) == 1);
  CHECK(j3.coefficient(Permutation::transposition(3, 1, 2)) == 1);
  CHECK_THROWS_AS(jm_element(4, 3), IndexOutOfRangeError);
  CHECK_THROWS_AS(jm_element(0, 3), IndexOutOfRangeError);
}

TEST_CASE("degree-two complete expansion in S_3") {
  ClassExpansion e =
      class_expansion(evaluate_in_jm(SymFamily::Complete, 2, 3));
  CHECK(e.at(Partition({1, 1, 1})) == 3);
  CHECK(e.at(Partition({2, 1})) == 0);
  CHECK(e.at(Partition({3})) == 2);
}

TEST_CASE("degree bounds of the expansion") {
  // h_0 is the unit; e_1 is the sum of all transpositions
  CHECK(evaluate_in_jm(SymFamily::Complete, 0, 4) ==
        GroupAlgebraElement::unit(4));
  GroupAlgebraElement e1 = evaluate_in_jm(SymFamily::Elementary, 1, 4);
  GroupAlgebraElement transpositions(4);
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      transpositions.add(Permutation::transposition(4, a, b), 1);
    }
  }
  CHECK(e1 == transpositions);
  CHECK(e1 == evaluate_in_jm(SymFamily::Complete, 1, 4));
  CHECK(e1 == evaluate_in_jm(SymFamily::PowerSum, 1, 4));
}

TEST_CASE("class expansion error paths") {
  GroupAlgebraElement zero(4);
  ClassExpansion e = class_expansion(zero);
  for (const auto& [lambda, coeff] : e.coefficients()) CHECK(coeff == 0);

  GroupAlgebraElement lone(3);
  lone.add(Permutation::transposition(3, 0, 1), 1);
  CHECK_THROWS_AS(class_expansion(lone), NotCentralError);

  GroupAlgebraElement skewed(3);
  skewed.add(Permutation::transposition(3, 0, 1), 1);
  skewed.add(Permutation::transposition(3, 0, 2), 1);
  skewed.add(Permutation::transposition(3, 1, 2), 2);
  CHECK_THROWS_AS(class_expansion(skewed), NotCentralError);
}

TEST_CASE("class sizes") {
  CHECK(conjugacy_class_size(Partition({3})) == 2);
  CHECK(conjugacy_class_size(Partition({2, 1})) == 3);
  CHECK(conjugacy_class_size(Partition({1, 1, 1})) == 1);
  for (int n = 0; n <= 6; ++n) {
    Int total = 0;
    for (const Partition& lambda : partitions_of(n)) {
      total += conjugacy_class_size(lambda);
    }
    CHECK(total == factorial(n));
  }
}

TEST_CASE("symmetric functions in the J_i are central") {
  for (int n = 1; n <= 5; ++n) {
    for (int k = 0; k <= 4; ++k) {
      for (SymFamily family : {SymFamily::Complete, SymFamily::Elementary,
                               SymFamily::PowerSum}) {
        if (family == SymFamily::PowerSum && k == 0) continue;
        CHECK_NOTHROW(class_expansion(evaluate_in_jm(family, k, n)));
      }
    }
  }
}

TEST_CASE("the J_i commute") {
  for (int n = 2; n <= 6; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        GroupAlgebraElement ji = jm_element(i, n);
        GroupAlgebraElement jj = jm_element(j, n);
        CHECK(ji * jj == jj * ji);
      }
    }
  }
}

TEST_CASE("elementary expansion counts cycles") {
  CHECK(jucys_ek_check(0, 3));
  CHECK(jucys_ek_check(1, 4));
  CHECK(jucys_ek_check(2, 4));
  for (int n = 0; n <= 5; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(jucys_ek_check(k, n));
    }
  }
}

TEST_CASE("parity of the class coefficients (observed)") {
  // nonzero coefficients only occur when |lambda| - l(lambda) and k have the
  // same parity; checked against the expansion, not assumed anywhere
  for (int n = 1; n <= 5; ++n) {
    for (int k = 0; k <= 5; ++k) {
      ClassExpansion e =
          class_expansion(evaluate_in_jm(SymFamily::Complete, k, n));
      for (const auto& [lambda, coeff] : e.coefficients()) {
        if ((lambda.sum() - lambda.length()) % 2 != k % 2) {
          CHECK(coeff == 0);
        }
      }
    }
  }
}

TEST_CASE("resource guard") {
  CHECK_THROWS_AS(evaluate_in_jm(SymFamily::Complete, 2, 9),
                  ResourceGuardError);
  CHECK_THROWS_AS(evaluate_in_jm(SymFamily::Complete, 9, 3),
                  ResourceGuardError);
  OracleLimits raised;
  raised.max_symmetric_n = 9;
  CHECK_NOTHROW(evaluate_in_jm(SymFamily::Complete, 1, 9, raised));
}
