#include "doctest.h"

#include <random>

#include "partsat/generate.hpp"
#include "partsat/nae.hpp"
#include "partsat/oracle.hpp"
#include "partsat/report.hpp"

#include "test_util.hpp"

using namespace partsat;
using partsat::testing::make_formula;
using partsat::testing::random_exact_kcnf;

TEST_CASE("mu matrix entries") {
  // opposite polarities cancel
  Formula cancel = make_formula(2, {{1, 2}, {1, -2}});
  MuMatrix mu = mu_matrix(cancel);
  CHECK(mu.value(1, 2) == 0);
  CHECK(mu.entries.empty());

  Formula triple = make_formula(3, {{1, 2, 3}});
  MuMatrix mt = mu_matrix(triple);
  CHECK(mt.value(1, 2) == 1);
  CHECK(mt.value(1, 3) == 1);
  CHECK(mt.value(2, 3) == 1);
  CHECK(mt.value(3, 2) == 1); // symmetric lookup

  // brute recount over all clause pairs
  Formula f3 = fixture("F3");
  MuMatrix m3 = mu_matrix(f3);
  for (std::int32_t s = 1; s <= 8; ++s)
    for (std::int32_t t = s + 1; t <= 8; ++t) {
      std::int32_t expected = 0;
      for (const Clause& c : f3.clauses()) {
        std::int32_t fs = 0, ft = 0;
        for (Lit l : c) {
          if (var_of(l) == s)
            fs = is_pos(l) ? 1 : -1;
          if (var_of(l) == t)
            ft = is_pos(l) ? 1 : -1;
        }
        expected += fs * ft;
      }
      CHECK(m3.value(s, t) == expected);
    }

  CHECK_THROWS_AS(mu_matrix(make_formula(2, {{1, -1}})), std::invalid_argument);
}

TEST_CASE("mu matrix CSV export") {
  Formula triple = make_formula(3, {{1, -2, 3}});
  std::string csv = mu_matrix_csv(mu_matrix(triple));
  CHECK(csv == "s,t,value\n1,2,-1\n1,3,1\n2,3,-1\n");
}

TEST_CASE("nae condition on fixtures") {
  Formula f3 = fixture("F3");
  CHECK(nae_condition(f3, Assignment::all_false(8)));
  CHECK(nae_condition(f3, Assignment::all_true(8)));

  // an all-true clause breaks the condition
  Formula allpos = make_formula(3, {{1, 2, 3}});
  CHECK_FALSE(nae_condition(allpos, Assignment::all_true(3)));

  CHECK_THROWS_AS(nae_condition(fixture("example6"), Assignment::all_false(5)),
                  std::invalid_argument);
  CHECK_THROWS_AS(nae_condition(f3, Assignment::all_false(7)),
                  std::invalid_argument);
}

TEST_CASE("quadratic form equals the profile characterization") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 40; ++i) {
    std::int32_t n = 4 + static_cast<std::int32_t>(rng() % 6);
    Formula f = random_exact_kcnf(rng, n, 3 + static_cast<std::int32_t>(rng() % 10), 3);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      Assignment x = Assignment::from_bits(bits, n);
      bool profile_nae = true;
      for (std::int32_t c : sigma_per_clause(f, x))
        profile_nae = profile_nae && (c == 1 || c == 2);
      REQUIRE(nae_condition(f, x) == profile_nae);
    }
  }
}

TEST_CASE("filter keeps exactly the condition holders") {
  Formula f3 = fixture("F3");
  auto minimizers = achievers(f3, Extreme::Min).to_vector();
  CHECK(nae_filter_candidates(f3, minimizers).size() == 1);

  Formula allpos = make_formula(3, {{1, 2, 3}});
  CHECK(nae_filter_candidates(allpos, {Assignment::all_true(3)}).empty());

  // containment: every brute-force NAE witness passes the filter
  std::mt19937_64 rng(22);
  for (int i = 0; i < 20; ++i) {
    std::int32_t n = 4 + static_cast<std::int32_t>(rng() % 5);
    Formula f = random_exact_kcnf(rng, n, 4 + static_cast<std::int32_t>(rng() % 8), 3);
    OracleResult truth = brute_nae(f);
    auto kept = nae_filter_candidates(f, truth.witnesses);
    CHECK(kept == truth.witnesses);
  }
}
