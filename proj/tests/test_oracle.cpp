#include "doctest.h"

#include <random>

#include "partsat/generate.hpp"
#include "partsat/oracle.hpp"

#include "test_util.hpp"

using namespace partsat;
using partsat::testing::assignment;
using partsat::testing::make_formula;
using partsat::testing::random_formula;

TEST_CASE("brute partition search on the paper instances") {
  Formula ex6 = fixture("example6");
  OracleResult r = brute_partsat(ex6, make_partition(ex6, {0, 6, 0, 0, 0}));
  CHECK(r.enumerated == 32);
  REQUIRE(r.witnesses.size() == 1);
  CHECK(r.witnesses[0] == assignment({-1, 1, 1, -1, -1}));

  Formula f1 = fixture("F1");
  CHECK(brute_partsat(f1, make_partition(f1, {0, 5, 0, 0, 0})).witnesses.empty());

  Formula single = make_formula(1, {{1}});
  OracleResult rs = brute_partsat(single, make_partition(single, {0, 1}));
  REQUIRE(rs.witnesses.size() == 1);
  CHECK(rs.witnesses[0] == Assignment::all_true(1));
}

TEST_CASE("brute extremes") {
  Formula f1 = fixture("F1");
  BruteExtremes b = brute_extremes(f1);
  CHECK(b.sigma_min == 5);
  CHECK(b.sigma_max == 10);
  REQUIRE(b.min_achievers.size() == 1);
  CHECK(b.min_achievers[0] == assignment({-1, 1, 1, -1, -1}));

  Formula empty = make_formula(2, {});
  BruteExtremes be = brute_extremes(empty);
  CHECK(be.sigma_min == 0);
  CHECK(be.sigma_max == 0);
  CHECK(be.min_achievers.size() == 4);
  CHECK(be.max_achievers.size() == 4);
}

TEST_CASE("brute extremes agree with sigma_extremes and achievers") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 60; ++i) {
    Formula f = random_formula(rng, 11);
    BruteExtremes b = brute_extremes(f);
    SigmaExtremes ex = sigma_extremes(f);
    CHECK(b.sigma_min == ex.sigma_min);
    CHECK(b.sigma_max == ex.sigma_max);
    CHECK(b.min_achievers == achievers(f, Extreme::Min).to_vector());
    CHECK(b.max_achievers == achievers(f, Extreme::Max).to_vector());
    CHECK(b.min_achievers.size() == (std::uint64_t{1} << f.stats().n_eq));
  }
}

TEST_CASE("brute NAE search") {
  Formula f3 = fixture("F3");
  OracleResult r = brute_nae(f3);
  bool has_all_false = false, has_all_true = false;
  for (const Assignment& x : r.witnesses) {
    has_all_false = has_all_false || x == Assignment::all_false(8);
    has_all_true = has_all_true || x == Assignment::all_true(8);
  }
  CHECK(has_all_false);
  CHECK(has_all_true);

  Formula triple = make_formula(3, {{1, 2, 3}});
  CHECK(brute_nae(triple).witnesses.size() == 6); // 2^3 minus all-true, all-false

  CHECK_THROWS_AS(brute_nae(fixture("example6")), std::invalid_argument);
}

TEST_CASE("enumeration limits") {
  Formula f = gen_random_cnf(4, 12, 3, 1);
  CHECK_THROWS_AS(brute_partsat(f, make_partition(f, {4, 0, 0, 0}), 11), LimitExceeded);
  CHECK_THROWS_AS(brute_extremes(f, 11), LimitExceeded);
  CHECK_THROWS_AS(brute_nae(f, 11), LimitExceeded);
  CHECK_NOTHROW(brute_extremes(f, 12));
}

TEST_CASE("witnesses come back in ascending encoding order") {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 20; ++i) {
    Formula f = random_formula(rng, 9, 10);
    Partition p = make_partition(
        f, [&] {
          std::vector<std::int64_t> mu(
              static_cast<std::size_t>(f.stats().max_width()) + 1, 0);
          mu[0] = f.clause_count();
          return mu;
        }());
    OracleResult r = brute_partsat(f, p);
    for (std::size_t j = 1; j < r.witnesses.size(); ++j)
      REQUIRE(encoding_less(r.witnesses[j - 1], r.witnesses[j]));
  }
}
