#include <doctest.h>

#include "oracles.hpp"
#include "shirshov/enumeration.hpp"

using namespace shirshov;

TEST_CASE("xi: pinned values and Catalan identity") {
  CHECK(xi(3, 3) == 5);
  CHECK(xi(4, 3) == 14);
  for (int k = 1; k <= 8; k++) CHECK(xi(k, 2) == 1);

  const long long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
  for (int k = 0; k <= 9; k++) CHECK(xi(k, 3) == catalan[k]);

  CHECK_THROWS_AS(xi(12, 3), BudgetError);
  CHECK_THROWS_AS(xi(3, 1), UsageError);
}

TEST_CASE("xi matches the next_permutation oracle and saturates at k!") {
  for (int k = 0; k <= 7; k++)
    for (int n = 2; n <= 5; n++) CHECK(xi(k, n) == oracle::xi_naive(k, n));
  // nondecreasing in n, equal to k! once n > k
  for (int k = 1; k <= 7; k++) {
    long long factorial = 1;
    for (int i = 2; i <= k; i++) factorial *= i;
    long long prev = 0;
    for (int n = 2; n <= k + 2; n++) {
      long long value = xi(k, n);
      CHECK(value >= prev);
      prev = value;
    }
    CHECK(xi(k, k + 1) == factorial);
  }
}

TEST_CASE("latyshev estimate holds across the small grid") {
  for (int k = 1; k <= 8; k++)
    for (int n = 2; n <= 4; n++) CHECK(latyshev_check(k, n).holds);
  auto check = latyshev_check(3, 3);
  CHECK(check.xi_value == 5);
  CHECK(check.bound == "64");
}

TEST_CASE("longest avoider: pinned searches") {
  SearchParams square_free;
  square_free.l = 2;
  square_free.n = std::nullopt;  // divisibility disabled
  square_free.d = 2;
  auto aba = longest_avoider(square_free);
  CHECK(aba.max_length == 3);
  CHECK(aba.witness.str() == "aba");
  CHECK(aba.exhausted);

  SearchParams unary;
  unary.l = 1;
  unary.n = 2;
  unary.d = 3;
  auto aa = longest_avoider(unary);
  CHECK(aa.max_length == 2);
  CHECK(aa.witness.str() == "aa");
  CHECK(aa.exhausted);
}

TEST_CASE("ordinary-sense avoider witnesses re-validate") {
  SearchParams params;
  params.l = 2;
  params.n = 2;
  params.d = 3;
  params.sense = Sense::Ordinary;
  auto result = longest_avoider(params);
  CHECK(result.exhausted);
  CHECK(result.max_length == result.witness.size());
  CHECK(max_ordinary_divisibility(result.witness).n_max < 2);
  CHECK_FALSE(find_power(result.witness, 3).has_value());
  // the tree was really closed: every extension violates the predicate
  for (Letter x = 0; x < 2; x++) {
    Word extended = result.witness.append(x);
    bool bad = find_power(extended, 3).has_value() ||
               max_ordinary_divisibility(extended).n_max >= 2;
    CHECK(bad);
  }
}

TEST_CASE("symmetry pruning does not change the maximum") {
  for (int d = 2; d <= 3; d++) {
    SearchParams with;
    with.l = 2;
    with.n = 3;
    with.d = d;
    with.sense = Sense::Tail;
    with.cap = 40;
    SearchParams without = with;
    without.fix_first_letter = false;
    auto a = longest_avoider(with);
    auto b = longest_avoider(without);
    CHECK(a.max_length == b.max_length);
    CHECK(a.exhausted == b.exhausted);
  }
}

TEST_CASE("cap cuts the frontier open") {
  SearchParams params;
  params.l = 2;
  params.n = std::nullopt;
  params.d = 3;  // cube-free binary words are unbounded
  params.cap = 8;
  auto result = longest_avoider(params);
  CHECK(result.max_length == 8);
  CHECK_FALSE(result.exhausted);
}

TEST_CASE("checkpointed search resumes to the same answer") {
  SearchParams params;
  params.l = 2;
  params.n = 2;
  params.d = 3;
  params.sense = Sense::Ordinary;
  auto full = longest_avoider(params);

  std::optional<SearchCheckpoint> cp;
  int rounds = 0;
  do {
    cp = longest_avoider_step(params, cp, 3);
    rounds++;
    REQUIRE(rounds < 1000);
  } while (!cp->done);
  auto resumed = result_from_checkpoint(*cp);
  CHECK(resumed.max_length == full.max_length);
  CHECK(resumed.exhausted == full.exhausted);
  CHECK(resumed.witness == full.witness);
  CHECK(resumed.nodes_explored == full.nodes_explored);
}

TEST_CASE("finiteness verification compares against both evaluations") {
  auto unary = verify_finiteness(1, 2, 3, Sense::Tail, 32);
  CHECK(unary.search.max_length == 2);
  CHECK(unary.within_psi3);
  CHECK(unary.within_psi2);

  auto binary = verify_finiteness(2, 2, 3, Sense::Tail, 48);
  CHECK(binary.search.exhausted);
  CHECK(binary.within_psi3);
  CHECK(binary.within_psi2);

  // cube-free binary words never exhaust: refusal
  CHECK_THROWS_AS(verify_finiteness(2, 50, 3, Sense::Tail, 10), BudgetError);
}

TEST_CASE("search witnesses re-validate against the detectors") {
  for (int d : {2, 3}) {
    SearchParams params;
    params.l = 2;
    params.n = 2;
    params.d = d;
    params.sense = Sense::Tail;
    auto result = longest_avoider(params);
    CHECK(result.exhausted);
    CHECK_FALSE(find_power(result.witness, d).has_value());
    CHECK(max_tail_divisibility(result.witness).m < 2);
  }
}
