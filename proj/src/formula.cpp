#include "partsat/formula.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace partsat {

namespace {

// Duplicate identical literal (same variable, same polarity) within one
// clause. Sort-based so pathologically wide clauses stay cheap.
bool has_duplicate_literal(const Clause& c) {
  if (c.size() < 2)
    return false;
  Clause sorted = c;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

void validate_clause(std::int32_t n, const Clause& c, std::size_t index,
                     const BuildOptions& opts) {
  if (c.empty())
    throw std::invalid_argument("clause " + std::to_string(index + 1) + " is empty");
  for (Lit l : c) {
    std::int32_t v = var_of(l);
    if (l == 0 || v > n)
      throw std::invalid_argument("clause " + std::to_string(index + 1) +
                                  " has literal " + std::to_string(l) +
                                  " outside variables 1.." + std::to_string(n));
  }
  if (!opts.allow_duplicate_literals && has_duplicate_literal(c))
    throw std::invalid_argument("clause " + std::to_string(index + 1) +
                                " repeats an identical literal");
}

} // namespace

std::int32_t OccurrenceStats::max_width() const {
  return width_hist.empty() ? 0 : static_cast<std::int32_t>(width_hist.size()) - 1;
}

std::int32_t OccurrenceStats::max_degree() const {
  return degree_hist.empty() ? 0 : static_cast<std::int32_t>(degree_hist.size()) - 1;
}

void OccurrenceStats::verify() const {
  auto fail = [](const char* what) { throw Error(std::string("stats invariant failed: ") + what); };

  if (static_cast<std::int64_t>(widths.size()) != clause_count)
    fail("widths.size() == m");
  if (static_cast<std::int32_t>(pos.size()) != var_count ||
      static_cast<std::int32_t>(neg.size()) != var_count)
    fail("pos/neg sized n");

  std::int64_t sum_pos = 0, sum_neg = 0;
  for (std::int32_t s = 0; s < var_count; ++s) {
    sum_pos += pos[s];
    sum_neg += neg[s];
  }
  if (sum_pos != positive_literals || sum_neg != negative_literals)
    fail("N+ / N- match per-variable counts");
  if (total_literals != positive_literals + negative_literals)
    fail("N == N+ + N-");

  std::int64_t sum_widths = 0;
  for (std::int32_t w : widths)
    sum_widths += w;
  if (sum_widths != total_literals)
    fail("sum of clause widths == N");

  std::int64_t clauses_binned = 0, width_weighted = 0;
  for (std::size_t a = 0; a < width_hist.size(); ++a) {
    clauses_binned += width_hist[a];
    width_weighted += static_cast<std::int64_t>(a) * width_hist[a];
  }
  if (clauses_binned != clause_count)
    fail("sum_a m_alpha == m");
  if (width_weighted != total_literals)
    fail("sum_a a*m_alpha == N");

  std::int64_t vars_binned = 0, degree_weighted = 0;
  for (std::size_t b = 0; b < degree_hist.size(); ++b) {
    vars_binned += degree_hist[b];
    degree_weighted += static_cast<std::int64_t>(b) * degree_hist[b];
  }
  if (vars_binned != var_count)
    fail("sum_b n_beta == n");
  if (degree_weighted != total_literals)
    fail("sum_b b*n_beta == N");
}

OccurrenceStats compute_stats(std::int32_t n, const std::vector<Clause>& clauses) {
  OccurrenceStats st;
  st.clause_count = static_cast<std::int64_t>(clauses.size());
  st.var_count = n;
  st.pos.assign(static_cast<std::size_t>(n), 0);
  st.neg.assign(static_cast<std::size_t>(n), 0);
  st.widths.reserve(clauses.size());

  std::int32_t max_w = 0;
  for (const Clause& c : clauses) {
    std::int32_t w = static_cast<std::int32_t>(c.size());
    st.widths.push_back(w);
    max_w = std::max(max_w, w);
    for (Lit l : c) {
      if (is_pos(l)) {
        ++st.pos[static_cast<std::size_t>(var_of(l)) - 1];
        ++st.positive_literals;
      } else {
        ++st.neg[static_cast<std::size_t>(var_of(l)) - 1];
        ++st.negative_literals;
      }
    }
  }
  st.total_literals = st.positive_literals + st.negative_literals;

  if (!clauses.empty()) {
    st.width_hist.assign(static_cast<std::size_t>(max_w) + 1, 0);
    for (std::int32_t w : st.widths)
      ++st.width_hist[static_cast<std::size_t>(w)];
  }

  std::int32_t max_d = 0;
  for (std::int32_t s = 0; s < n; ++s)
    max_d = std::max(max_d, st.pos[s] + st.neg[s]);
  st.degree_hist.assign(n > 0 ? static_cast<std::size_t>(max_d) + 1 : 0, 0);
  for (std::int32_t s = 0; s < n; ++s) {
    std::int32_t p = st.pos[s], q = st.neg[s];
    ++st.degree_hist[static_cast<std::size_t>(p + q)];
    if (p + q > 0 && (p == 0 || q == 0))
      ++st.n_pure;
    if (p == q)
      ++st.n_eq;
  }
  return st;
}

Formula::Formula(std::int32_t n, std::vector<Clause> clauses, BuildOptions opts)
    : n_(n), clauses_(std::move(clauses)) {
  if (n < 0)
    throw std::invalid_argument("negative variable count");
  for (std::size_t j = 0; j < clauses_.size(); ++j)
    validate_clause(n_, clauses_[j], j, opts);
  stats_ = compute_stats(n_, clauses_);
  stats_.verify();
}

ClassFlags classify(const Formula& f) {
  const OccurrenceStats& st = f.stats();
  ClassFlags flags;

  if (st.clause_count > 0) {
    std::int32_t k = st.widths.front();
    bool uniform = std::all_of(st.widths.begin(), st.widths.end(),
                               [k](std::int32_t w) { return w == k; });
    if (uniform)
      flags.exact_k = k;
  }

  flags.read_p = st.max_degree();
  if (st.var_count > 0) {
    std::int32_t d0 = st.degree(1);
    bool uniform = true;
    for (std::int32_t s = 2; s <= st.var_count && uniform; ++s)
      uniform = st.degree(s) == d0;
    if (uniform)
      flags.exact_read_p = d0;
  }

  flags.completely_mixed = true;
  for (std::int32_t s = 0; s < st.var_count; ++s) {
    std::int32_t p = st.pos[s], q = st.neg[s];
    if (p + q > 0 && (p == 0 || q == 0)) {
      flags.completely_mixed = false;
      break;
    }
  }

  flags.square = st.clause_count == st.var_count;
  flags.trivially_satisfiable_r_le_r =
      flags.exact_k.has_value() && flags.read_p <= *flags.exact_k;

  for (const Clause& c : f.clauses()) {
    for (std::size_t i = 0; i < c.size() && !flags.has_tautological_clause; ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j)
        if (c[i] == -c[j]) {
          flags.has_tautological_clause = true;
          break;
        }
    if (flags.has_tautological_clause)
      break;
  }
  return flags;
}

} // namespace partsat
