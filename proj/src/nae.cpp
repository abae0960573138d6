#include "partsat/nae.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace partsat {

namespace {

void require_simple_clauses(const Formula& f) {
  for (std::size_t j = 0; j < f.clauses().size(); ++j) {
    const Clause& c = f.clauses()[j];
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t k = i + 1; k < c.size(); ++k)
        if (var_of(c[i]) == var_of(c[k]))
          throw std::invalid_argument("clause " + std::to_string(j + 1) +
                                      " mentions variable " +
                                      std::to_string(var_of(c[i])) + " twice");
  }
}

void require_exact_3cnf(const Formula& f) {
  for (std::int32_t w : f.stats().widths)
    if (w != 3)
      throw std::invalid_argument("operation requires an exact 3-CNF");
}

bool condition_holds(const Formula& f, const MuMatrix& mu, const Assignment& x) {
  if (x.size() != f.var_count())
    throw std::invalid_argument("assignment length mismatch");
  std::int64_t quadratic = f.clause_count();
  for (const MuMatrix::Entry& e : mu.entries)
    quadratic += static_cast<std::int64_t>(e.value) * x.sign(e.s) * x.sign(e.t);
  bool holds = quadratic == 0;

#ifndef NDEBUG
  // same condition via per-clause true-literal counts
  std::int64_t sum = 0, sum_sq = 0;
  for (std::int32_t c : sigma_per_clause(f, x)) {
    sum += c;
    sum_sq += static_cast<std::int64_t>(c) * c;
  }
  assert(holds == (3 * sum - sum_sq == 2 * f.clause_count()));
#endif
  return holds;
}

} // namespace

std::int32_t MuMatrix::value(std::int32_t s, std::int32_t t) const {
  if (s > t)
    std::swap(s, t);
  auto it = std::lower_bound(
      entries.begin(), entries.end(), std::make_pair(s, t),
      [](const Entry& e, const std::pair<std::int32_t, std::int32_t>& key) {
        return std::make_pair(e.s, e.t) < key;
      });
  if (it != entries.end() && it->s == s && it->t == t)
    return it->value;
  return 0;
}

MuMatrix mu_matrix(const Formula& f) {
  require_simple_clauses(f);
  std::map<std::pair<std::int32_t, std::int32_t>, std::int32_t> acc;
  for (const Clause& c : f.clauses()) {
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t k = i + 1; k < c.size(); ++k) {
        std::int32_t s = var_of(c[i]), t = var_of(c[k]);
        std::int32_t product = (is_pos(c[i]) ? 1 : -1) * (is_pos(c[k]) ? 1 : -1);
        if (s > t)
          std::swap(s, t);
        acc[{s, t}] += product;
      }
  }
  MuMatrix mu;
  mu.n = f.var_count();
  mu.entries.reserve(acc.size());
  for (const auto& [key, value] : acc)
    if (value != 0)
      mu.entries.push_back({key.first, key.second, value});
  return mu;
}

bool nae_condition(const Formula& f, const Assignment& x) {
  require_exact_3cnf(f);
  MuMatrix mu = mu_matrix(f); // also enforces simple clauses
  return condition_holds(f, mu, x);
}

std::vector<Assignment> nae_filter_candidates(const Formula& f,
                                              const std::vector<Assignment>& xs) {
  require_exact_3cnf(f);
  MuMatrix mu = mu_matrix(f);
  std::vector<Assignment> kept;
  for (const Assignment& x : xs)
    if (condition_holds(f, mu, x))
      kept.push_back(x);
  return kept;
}

} // namespace partsat
