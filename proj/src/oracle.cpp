#include "partsat/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace partsat {

namespace {

void check_limit(const Formula& f, std::int32_t max_vars, const char* what) {
  if (f.var_count() > max_vars || f.var_count() > 63)
    throw LimitExceeded(std::string(what) + " over " +
                        std::to_string(f.var_count()) +
                        " variables exceeds the enumeration limit " +
                        std::to_string(std::min(max_vars, 63)));
}

// Bitmask form of the clauses for O(popcount) true-literal counts.
struct ClauseMasks {
  std::vector<std::uint64_t> pos, neg;
  std::uint64_t all;

  explicit ClauseMasks(const Formula& f) {
    pos.reserve(f.clauses().size());
    neg.reserve(f.clauses().size());
    all = f.var_count() == 64 ? ~std::uint64_t{0}
                              : (std::uint64_t{1} << f.var_count()) - 1;
    for (const Clause& c : f.clauses()) {
      std::uint64_t p = 0, q = 0;
      for (Lit l : c) {
        std::uint64_t bit = std::uint64_t{1} << (var_of(l) - 1);
        if (is_pos(l))
          p |= bit;
        else
          q |= bit;
      }
      pos.push_back(p);
      neg.push_back(q);
    }
  }

  std::int32_t true_literals(std::size_t j, std::uint64_t bits) const {
    return std::popcount(pos[j] & bits) + std::popcount(neg[j] & ~bits & all);
  }
};

} // namespace

OracleResult brute_partsat(const Formula& f, const Partition& p, std::int32_t max_vars) {
  check_limit(f, max_vars, "brute-force partition search");
  std::size_t expected = static_cast<std::size_t>(f.stats().max_width()) + 1;
  if (p.mu.size() != expected)
    throw std::invalid_argument("partition not normalized for this formula");

  auto start = std::chrono::steady_clock::now();
  ClauseMasks masks(f);
  OracleResult result;
  result.enumerated = std::uint64_t{1} << f.var_count();

  std::vector<std::int64_t> nu(expected);
  for (std::uint64_t bits = 0; bits < result.enumerated; ++bits) {
    std::fill(nu.begin(), nu.end(), 0);
    for (std::size_t j = 0; j < masks.pos.size(); ++j)
      ++nu[static_cast<std::size_t>(masks.true_literals(j, bits))];
    if (nu == p.mu)
      result.witnesses.push_back(Assignment::from_bits(bits, f.var_count()));
  }
  result.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - start);
  return result;
}

BruteExtremes brute_extremes(const Formula& f, std::int32_t max_vars) {
  check_limit(f, max_vars, "brute-force extremes");
  ClauseMasks masks(f);
  BruteExtremes result;
  result.enumerated = std::uint64_t{1} << f.var_count();

  bool first = true;
  for (std::uint64_t bits = 0; bits < result.enumerated; ++bits) {
    std::int64_t value = 0;
    for (std::size_t j = 0; j < masks.pos.size(); ++j)
      value += masks.true_literals(j, bits);
    if (first || value < result.sigma_min) {
      result.sigma_min = value;
      result.min_achievers.clear();
    }
    if (first || value > result.sigma_max) {
      result.sigma_max = value;
      result.max_achievers.clear();
    }
    if (value == result.sigma_min)
      result.min_achievers.push_back(Assignment::from_bits(bits, f.var_count()));
    if (value == result.sigma_max)
      result.max_achievers.push_back(Assignment::from_bits(bits, f.var_count()));
    first = false;
  }
  return result;
}

OracleResult brute_nae(const Formula& f, std::int32_t max_vars) {
  for (std::int32_t w : f.stats().widths)
    if (w != 3)
      throw std::invalid_argument("NAE oracle requires an exact 3-CNF");
  check_limit(f, max_vars, "brute-force NAE search");

  auto start = std::chrono::steady_clock::now();
  ClauseMasks masks(f);
  OracleResult result;
  result.enumerated = std::uint64_t{1} << f.var_count();

  for (std::uint64_t bits = 0; bits < result.enumerated; ++bits) {
    bool nae = true;
    for (std::size_t j = 0; j < masks.pos.size() && nae; ++j) {
      std::int32_t t = masks.true_literals(j, bits);
      nae = t == 1 || t == 2;
    }
    if (nae)
      result.witnesses.push_back(Assignment::from_bits(bits, f.var_count()));
  }
  result.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - start);
  return result;
}

} // namespace partsat
