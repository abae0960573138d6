#include "doctest.h"

#include <random>

#include "partsat/formula.hpp"
#include "partsat/generate.hpp"
#include "partsat/sigma.hpp"

#include "test_util.hpp"

using namespace partsat;
using partsat::testing::make_formula;
using partsat::testing::random_formula;

TEST_CASE("clause validation") {
  CHECK_THROWS_AS(make_formula(1, {{}}), std::invalid_argument);
  CHECK_THROWS_AS(make_formula(1, {{2}}), std::invalid_argument);
  CHECK_THROWS_AS(make_formula(1, {{-2}}), std::invalid_argument);
  CHECK_THROWS_AS(make_formula(1, {{0}}), std::invalid_argument);
  CHECK_THROWS_AS(make_formula(-1, {}), std::invalid_argument);

  // duplicate identical literal rejected by default, kept in permissive mode
  CHECK_THROWS_AS(make_formula(1, {{1, 1}}), std::invalid_argument);
  Formula dup = make_formula(1, {{1, 1}}, BuildOptions{true});
  CHECK(dup.stats().pos[0] == 2);
  CHECK(dup.stats().widths[0] == 2);

  // complementary pair is legal and counted literally
  Formula taut = make_formula(1, {{1, -1}});
  CHECK(taut.stats().pos[0] == 1);
  CHECK(taut.stats().neg[0] == 1);
  CHECK(classify(taut).has_tautological_clause);
}

TEST_CASE("stats of the six-clause instance") {
  Formula f = fixture("example6");
  const OccurrenceStats& st = f.stats();
  CHECK(st.clause_count == 6);
  CHECK(st.var_count == 5);
  CHECK(st.widths == std::vector<std::int32_t>{2, 4, 3, 3, 3, 2});
  CHECK(st.pos == std::vector<std::int32_t>{2, 2, 1, 2, 3});
  CHECK(st.neg == std::vector<std::int32_t>{1, 3, 1, 1, 1});
  CHECK(st.total_literals == 17);
  CHECK(st.positive_literals == 10);
  CHECK(st.negative_literals == 7);
  CHECK(st.n_eq == 1);  // variable c
  CHECK(st.n_pure == 0);
  CHECK(st.width_hist == std::vector<std::int64_t>{0, 0, 2, 3, 1});

  ClassFlags flags = classify(f);
  CHECK_FALSE(flags.exact_k.has_value());
  CHECK(flags.read_p == 5); // variable b: 2 positive + 3 negative occurrences
  CHECK_FALSE(flags.exact_read_p.has_value());
  CHECK(flags.completely_mixed);
  CHECK_FALSE(flags.square);
}

TEST_CASE("stats of an empty formula") {
  Formula none = make_formula(0, {});
  CHECK(none.stats().clause_count == 0);
  CHECK(none.stats().total_literals == 0);
  CHECK(none.stats().width_hist.empty());
  CHECK(none.stats().degree_hist.empty());

  // unused variables are degenerate and show up as degree 0
  Formula unused = make_formula(3, {});
  CHECK(unused.stats().n_eq == 3);
  CHECK(unused.stats().degree_hist == std::vector<std::int64_t>{3});
  CHECK(unused.stats().n_pure == 0);
}

TEST_CASE("classify flags") {
  Formula f3 = fixture("F3");
  ClassFlags flags = classify(f3);
  CHECK(flags.exact_k == 3);
  CHECK(flags.exact_read_p == 3);
  CHECK(flags.read_p == 3);
  CHECK(flags.completely_mixed);
  CHECK(flags.square);
  CHECK(flags.trivially_satisfiable_r_le_r);
  CHECK_FALSE(flags.has_tautological_clause);

  Formula single = make_formula(1, {{1}});
  ClassFlags sf = classify(single);
  CHECK(sf.exact_k == 1);
  CHECK_FALSE(sf.completely_mixed); // x1 is pure
  CHECK(sf.trivially_satisfiable_r_le_r);

  // unused variable breaks exact_read_p but not read_p
  Formula gap = make_formula(3, {{1, 2}});
  CHECK(classify(gap).read_p == 1);
  CHECK_FALSE(classify(gap).exact_read_p.has_value());
}

TEST_CASE("F1 is completely mixed with no degenerate variables") {
  Formula f1 = fixture("F1");
  const OccurrenceStats& st = f1.stats();
  CHECK(st.n_pure == 0);
  CHECK(st.n_eq == 0);
  for (std::int32_t s = 1; s <= 5; ++s)
    CHECK(st.degree(s) == 3);
}

TEST_CASE("counting identities hold for random formulas") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 200; ++i) {
    Formula f = random_formula(rng);
    OccurrenceStats st = compute_stats(f);
    st.verify();
    CHECK(st == f.stats());
  }
}

TEST_CASE("completely_mixed means no pure variable with occurrences") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 100; ++i) {
    Formula f = random_formula(rng);
    const OccurrenceStats& st = f.stats();
    bool any_pure = false;
    for (std::int32_t s = 1; s <= f.var_count(); ++s) {
      std::int32_t p = st.pos[s - 1], q = st.neg[s - 1];
      any_pure = any_pure || (p + q > 0 && p * q == 0);
    }
    CHECK(classify(f).completely_mixed == !any_pure);
    CHECK(classify(f).square == (f.clause_count() == f.var_count()));
  }
}

TEST_CASE("r-le-r flagged formulas are satisfiable") {
  // validated against exhaustive search at small n
  auto brute_satisfiable = [](const Formula& f) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << f.var_count()); ++bits) {
      Assignment x = Assignment::from_bits(bits, f.var_count());
      bool sat = true;
      for (std::int32_t c : sigma_per_clause(f, x))
        sat = sat && c > 0;
      if (sat)
        return true;
    }
    return false;
  };

  CHECK(classify(fixture("F3")).trivially_satisfiable_r_le_r);
  CHECK(brute_satisfiable(fixture("F3")));
  CHECK(brute_satisfiable(make_formula(1, {{1}})));
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    Formula f = gen_square_mixed_read3(10, seed);
    REQUIRE(classify(f).trivially_satisfiable_r_le_r);
    CHECK(brute_satisfiable(f));
  }
  // {2,<=2}: a chain of implications
  Formula chain = make_formula(4, {{1, -2}, {2, -3}, {3, -4}});
  CHECK(classify(chain).trivially_satisfiable_r_le_r);
  CHECK(brute_satisfiable(chain));
}
