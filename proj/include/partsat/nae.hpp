#pragma once

#include <cstdint>
#include <vector>

#include "partsat/formula.hpp"
#include "partsat/sigma.hpp"

namespace partsat {

/// Variable-pair couplings mu[s][t] = sum_j f_js * f_jt over the clause-by-
/// variable adjacency entries f in {+1,-1,0}. Only nonzero upper-triangle
/// entries (s < t) are stored.
struct MuMatrix {
  struct Entry {
    std::int32_t s = 0; // 1-based, s < t
    std::int32_t t = 0;
    std::int32_t value = 0;
  };
  std::int32_t n = 0;
  std::vector<Entry> entries; // sorted by (s, t)

  std::int32_t value(std::int32_t s, std::int32_t t) const;
};

/// Computes the coupling matrix. Rejects clauses that mention a variable
/// twice (in either polarity), since the adjacency entry would be ambiguous.
MuMatrix mu_matrix(const Formula& f);

/// Necessary condition for x to be a not-all-equal assignment of an exact
/// 3-CNF with simple clauses: m + sum_{s<t} mu[s][t] * x_s * x_t == 0.
bool nae_condition(const Formula& f, const Assignment& x);

/// Keeps exactly the assignments that satisfy nae_condition.
std::vector<Assignment> nae_filter_candidates(const Formula& f,
                                              const std::vector<Assignment>& xs);

} // namespace partsat
