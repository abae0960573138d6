#include "partsat/generate.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "partsat/dimacs.hpp"

namespace partsat {

namespace {

constexpr int kRetryBound = 1000;

// The reference instances, stored in the matrix-grid format: one row per
// clause, one column per variable, + / - / 0 cells.

constexpr std::string_view kExample6 = // (a,c)(a,b,-c,e)(-a,-b,e)(-b,-d,e)(-b,d,-e)(b,d)
    "+ 0 + 0 0\n"
    "+ + - 0 +\n"
    "- - 0 0 +\n"
    "0 - 0 - +\n"
    "0 - 0 + -\n"
    "0 + 0 + 0\n";

constexpr std::string_view kF1 = // 5x5 square, every degree 3, widths 2..4
    "+ 0 + 0 0\n"
    "+ 0 - + +\n"
    "- - - + 0\n"
    "0 - 0 - -\n"
    "0 + 0 0 +\n";

constexpr std::string_view kF2 = // 8x8 square completely mixed {3,3}
    "+ 0 0 - + 0 0 0\n"
    "+ 0 0 0 + 0 0 +\n"
    "- + 0 0 - 0 0 0\n"
    "0 + 0 0 0 + 0 -\n"
    "0 - + 0 0 + 0 0\n"
    "0 0 + 0 0 - + 0\n"
    "0 0 - + 0 0 + 0\n"
    "0 0 0 + 0 0 - +\n";

constexpr std::string_view kF3 = // 8x8 square completely mixed {3,3}
    "+ 0 - 0 0 + 0 0\n"
    "+ 0 0 + 0 - 0 0\n"
    "- 0 0 + 0 0 + 0\n"
    "0 + 0 - 0 0 + 0\n"
    "0 + 0 0 + 0 - 0\n"
    "0 - 0 0 + 0 0 +\n"
    "0 0 + 0 - 0 0 +\n"
    "0 0 + 0 0 + 0 -\n";

constexpr std::string_view kLopsided5x4 = // exact 3-CNF, sum |pos-neg| = m = 5
    "+ - 0 -\n"
    "+ + 0 -\n"
    "0 - + +\n"
    "- 0 - +\n"
    "0 - + -\n";

// The 2/2/4 grids as printed in the source material; their row count and
// widths are inconsistent with the surrounding description, so they are
// kept for inspection only and excluded from strict checks.
constexpr std::string_view kTwoTwoFourA =
    "+ 0 + +\n"
    "+ + + 0\n"
    "+ + 0 +\n"
    "0 + + +\n";

constexpr std::string_view kTwoTwoFourB =
    "- 0 + -\n"
    "+ 0 - +\n"
    "+ - 0 +\n"
    "0 + + 0\n";

struct Fixture {
  std::string_view name;
  std::string_view grid;
};

constexpr Fixture kFixtures[] = {
    {"example6", kExample6},
    {"F1", kF1},
    {"F2", kF2},
    {"F3", kF3},
    {"lopsided5x4", kLopsided5x4},
    {"two_two_four_a", kTwoTwoFourA},
    {"two_two_four_b", kTwoTwoFourB},
};

// Bounded draws on top of mt19937_64 so output is identical across standard
// library implementations.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // uniform in [0, bound)
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t threshold = -bound % bound; // multiples of bound below 2^64
    for (;;) {
      std::uint64_t r = engine_();
      if (r >= threshold)
        return r % bound;
    }
  }

  bool coin() { return (engine_() & 1) != 0; }

  template <class T> void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[below(i)]);
  }

private:
  std::mt19937_64 engine_;
};

} // namespace

std::vector<std::string_view> fixture_names() {
  std::vector<std::string_view> names;
  for (const Fixture& fx : kFixtures)
    names.push_back(fx.name);
  return names;
}

Formula fixture(std::string_view name) {
  for (const Fixture& fx : kFixtures)
    if (fx.name == name)
      return parse_matrix(fx.grid);
  throw std::invalid_argument("unknown fixture '" + std::string(name) + "'");
}

Formula gen_square_mixed_read3(std::int32_t n, std::uint64_t seed) {
  if (n < 4)
    throw std::invalid_argument("square mixed READ-3 generation needs n >= 4");
  Rng rng(seed);

  // Configuration model: 3 stubs per clause and per variable, matched by a
  // random permutation, rejecting matchings that repeat a variable within a
  // clause.
  std::vector<std::int32_t> stubs;
  stubs.reserve(static_cast<std::size_t>(n) * 3);
  for (std::int32_t s = 1; s <= n; ++s)
    for (int i = 0; i < 3; ++i)
      stubs.push_back(s);

  for (int attempt = 0; attempt < kRetryBound; ++attempt) {
    rng.shuffle(stubs);
    std::vector<Clause> clauses(static_cast<std::size_t>(n));
    bool ok = true;
    for (std::int32_t j = 0; j < n && ok; ++j) {
      std::int32_t a = stubs[static_cast<std::size_t>(3 * j)];
      std::int32_t b = stubs[static_cast<std::size_t>(3 * j) + 1];
      std::int32_t c = stubs[static_cast<std::size_t>(3 * j) + 2];
      if (a == b || a == c || b == c) {
        ok = false;
        break;
      }
      clauses[static_cast<std::size_t>(j)] = {a, b, c};
    }
    if (!ok)
      continue;

    // Per-variable polarity split: one minority occurrence, majority sign
    // chosen by coin, minority position uniform among the three.
    std::vector<std::int8_t> majority(static_cast<std::size_t>(n));
    std::vector<std::uint64_t> minority_pick(static_cast<std::size_t>(n));
    for (std::int32_t s = 0; s < n; ++s) {
      majority[static_cast<std::size_t>(s)] = rng.coin() ? 1 : -1;
      minority_pick[static_cast<std::size_t>(s)] = rng.below(3);
    }
    std::vector<std::uint64_t> seen(static_cast<std::size_t>(n), 0);
    for (Clause& c : clauses)
      for (Lit& l : c) {
        std::size_t s = static_cast<std::size_t>(l) - 1;
        std::int8_t sign = majority[s];
        if (seen[s]++ == minority_pick[s])
          sign = static_cast<std::int8_t>(-sign);
        l = sign > 0 ? l : -l;
      }
    return Formula(n, std::move(clauses));
  }
  throw GenerationError("square mixed READ-3 generation failed after " +
                        std::to_string(kRetryBound) + " attempts (n = " +
                        std::to_string(n) + ")");
}

Formula gen_random_cnf(std::int64_t m, std::int32_t n, std::int32_t k,
                       std::uint64_t seed) {
  if (m < 0 || n < 0 || k < 1 || k > n)
    throw std::invalid_argument("need m >= 0 and 1 <= k <= n");
  Rng rng(seed);
  std::vector<Clause> clauses;
  clauses.reserve(static_cast<std::size_t>(m));
  std::vector<bool> picked(static_cast<std::size_t>(n), false);
  for (std::int64_t j = 0; j < m; ++j) {
    Clause c;
    c.reserve(static_cast<std::size_t>(k));
    while (static_cast<std::int32_t>(c.size()) < k) {
      std::int32_t v = static_cast<std::int32_t>(rng.below(static_cast<std::uint64_t>(n))) + 1;
      if (picked[static_cast<std::size_t>(v) - 1])
        continue;
      picked[static_cast<std::size_t>(v) - 1] = true;
      c.push_back(rng.coin() ? v : -v);
    }
    for (Lit l : c)
      picked[static_cast<std::size_t>(var_of(l)) - 1] = false;
    clauses.push_back(std::move(c));
  }
  return Formula(n, std::move(clauses));
}

Formula gen_random_class(std::int64_t m, std::int32_t n, std::int32_t k_max,
                         std::int32_t p_max, std::uint64_t seed) {
  if (m < 0 || n < 0 || k_max < 1 || k_max > n || p_max < 1)
    throw std::invalid_argument("need m >= 0, 1 <= k_max <= n, p_max >= 1");
  Rng rng(seed);
  for (int attempt = 0; attempt < kRetryBound; ++attempt) {
    std::vector<std::int32_t> capacity(static_cast<std::size_t>(n), p_max);
    std::vector<std::int32_t> open; // variables with remaining capacity
    open.reserve(static_cast<std::size_t>(n));
    for (std::int32_t s = 1; s <= n; ++s)
      open.push_back(s);

    std::vector<Clause> clauses;
    clauses.reserve(static_cast<std::size_t>(m));
    bool ok = true;
    for (std::int64_t j = 0; j < m && ok; ++j) {
      std::int32_t width =
          static_cast<std::int32_t>(rng.below(static_cast<std::uint64_t>(k_max))) + 1;
      if (static_cast<std::size_t>(width) > open.size()) {
        ok = false;
        break;
      }
      // draw `width` distinct variables from the open list
      Clause c;
      for (std::int32_t i = 0; i < width; ++i) {
        std::size_t pick = i + static_cast<std::size_t>(rng.below(open.size() - i));
        std::swap(open[static_cast<std::size_t>(i)], open[pick]);
        std::int32_t v = open[static_cast<std::size_t>(i)];
        c.push_back(rng.coin() ? v : -v);
      }
      for (Lit l : c) {
        std::size_t s = static_cast<std::size_t>(var_of(l)) - 1;
        --capacity[s];
      }
      open.erase(std::remove_if(open.begin(), open.end(),
                                [&](std::int32_t v) {
                                  return capacity[static_cast<std::size_t>(v) - 1] == 0;
                                }),
                 open.end());
      clauses.push_back(std::move(c));
    }
    if (ok)
      return Formula(n, std::move(clauses));
  }
  throw GenerationError("degree-capped generation failed after " +
                        std::to_string(kRetryBound) + " attempts (m = " +
                        std::to_string(m) + ", n = " + std::to_string(n) +
                        ", k_max = " + std::to_string(k_max) + ", p_max = " +
                        std::to_string(p_max) + ")");
}

} // namespace partsat
