#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "partsat/decide.hpp"
#include "partsat/formula.hpp"
#include "partsat/sigma.hpp"

// Ground truth by full 2^n enumeration. Deliberately free of pruning: these
// routines exist to validate the fast paths, so they must stay trivially
// correct. All witness lists come back in ascending encoding order
// (variable 1 = least significant bit, false = 0).

namespace partsat {

struct OracleResult {
  std::vector<Assignment> witnesses;
  std::uint64_t enumerated = 0; // 2^n
  std::chrono::microseconds elapsed{0};
};

/// All assignments whose clause profile equals the partition.
OracleResult brute_partsat(const Formula& f, const Partition& p,
                           std::int32_t max_vars = kDefaultEnumLimit);

struct BruteExtremes {
  std::int64_t sigma_min = 0;
  std::int64_t sigma_max = 0;
  std::vector<Assignment> min_achievers;
  std::vector<Assignment> max_achievers;
  std::uint64_t enumerated = 0;
};

/// Exact sigma extremes and their full achiever sets.
BruteExtremes brute_extremes(const Formula& f, std::int32_t max_vars = kDefaultEnumLimit);

/// All not-all-equal assignments of an exact 3-CNF (every clause with one or
/// two true literals).
OracleResult brute_nae(const Formula& f, std::int32_t max_vars = kDefaultEnumLimit);

} // namespace partsat
