#include "partsat/decide.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

namespace partsat {

Partition make_partition(const Formula& f, std::vector<std::int64_t> mu) {
  std::size_t width = static_cast<std::size_t>(f.stats().max_width()) + 1;
  for (std::size_t a = 0; a < mu.size(); ++a) {
    if (mu[a] < 0)
      throw std::invalid_argument("partition entry mu[" + std::to_string(a) +
                                  "] is negative");
    if (a >= width && mu[a] != 0)
      throw std::invalid_argument("partition requires clauses with " +
                                  std::to_string(a) + " true literals but the "
                                  "maximum clause width is " +
                                  std::to_string(width - 1));
  }
  std::int64_t sum = 0;
  for (std::int64_t v : mu)
    sum += v;
  if (sum != f.clause_count())
    throw std::invalid_argument("partition entries sum to " + std::to_string(sum) +
                                ", formula has " + std::to_string(f.clause_count()) +
                                " clauses");
  mu.resize(width, 0);
  return Partition{std::move(mu)};
}

Partition l_in_k_partition(const Formula& f, std::int32_t l) {
  const OccurrenceStats& st = f.stats();
  if (l < 0 || l > st.max_width())
    throw std::invalid_argument("l = " + std::to_string(l) +
                                " is outside 0..max clause width");
  for (std::int32_t w : st.widths)
    if (w < l)
      throw std::invalid_argument("formula has a clause of width " + std::to_string(w) +
                                  " < l = " + std::to_string(l));
  std::vector<std::int64_t> mu(static_cast<std::size_t>(st.max_width()) + 1, 0);
  mu[static_cast<std::size_t>(l)] = f.clause_count();
  return Partition{std::move(mu)};
}

std::int64_t target_total(const Partition& p) {
  std::int64_t total = 0;
  for (std::size_t a = 1; a < p.mu.size(); ++a)
    total += static_cast<std::int64_t>(a) * p.mu[a];
  return total;
}

ClauseProfile clause_profile(const Formula& f, const Assignment& x) {
  ClauseProfile profile;
  profile.nu.assign(static_cast<std::size_t>(f.stats().max_width()) + 1, 0);
  for (std::int32_t count : sigma_per_clause(f, x))
    ++profile.nu[static_cast<std::size_t>(count)];
  return profile;
}

Decision decide(const Formula& f, const Partition& p, std::uint64_t budget) {
  if (budget < 1)
    throw std::invalid_argument("budget must be at least 1");
  std::size_t expected = static_cast<std::size_t>(f.stats().max_width()) + 1;
  if (p.mu.size() != expected)
    throw std::invalid_argument("partition not normalized for this formula "
                                "(use make_partition)");
  std::int64_t sum = 0;
  for (std::int64_t v : p.mu)
    sum += v;
  if (sum != f.clause_count())
    throw std::invalid_argument("partition does not sum to the clause count");

  SigmaExtremes ex = sigma_extremes(f);
  Decision d;
  d.target = target_total(p);
  d.sigma_min = ex.sigma_min;
  d.sigma_max = ex.sigma_max;
  d.n_eq = ex.n_eq();

  if (d.target < ex.sigma_min) {
    d.verdict = Verdict::No;
    d.reason = NoReason::TargetBelowMin;
    return d;
  }
  if (d.target > ex.sigma_max) {
    d.verdict = Verdict::No;
    d.reason = NoReason::TargetAboveMax;
    return d;
  }
  if (d.target != ex.sigma_min && d.target != ex.sigma_max) {
    d.verdict = Verdict::Inapplicable;
    return d;
  }

  // Target sits on an extreme: only the 2^n_eq achievers can realize it.
  AchieverSet candidates = achievers(f, d.target == ex.sigma_min ? Extreme::Min
                                                                 : Extreme::Max);
  if (candidates.count_exceeds(budget))
    throw BudgetExceeded(candidates.n_eq(), budget);

  candidates.for_each([&](const Assignment& x) {
    ++d.candidates_checked;
    if (clause_profile(f, x).nu == p.mu)
      d.witnesses.push_back(x);
  });
  assert(d.candidates_checked == candidates.count());
  assert(std::is_sorted(d.witnesses.begin(), d.witnesses.end(), encoding_less));

  if (d.witnesses.empty()) {
    d.verdict = Verdict::No;
    d.reason = NoReason::AllCandidatesFail;
  } else {
    d.verdict = Verdict::Yes;
  }
  return d;
}

Decision decide_l_in_k(const Formula& f, std::int32_t l, std::uint64_t budget) {
  return decide(f, l_in_k_partition(f, l), budget);
}

NaeSweepReport nae_sweep(const Formula& f, std::uint64_t budget) {
  ClassFlags flags = classify(f);
  if (!flags.exact_k || *flags.exact_k != 3)
    throw std::invalid_argument("NAE sweep requires an exact 3-CNF");

  const std::int64_t m = f.clause_count();
  NaeSweepReport report;
  report.entries.reserve(static_cast<std::size_t>(m) + 1);

  bool any_yes = false;
  bool all_no = true;
  for (std::int64_t mu = 0; mu <= m; ++mu) {
    NaeSweepEntry entry;
    entry.mu = mu;
    entry.target = 2 * m - mu;
    Partition p = make_partition(f, {0, mu, m - mu, 0});
    try {
      Decision d = decide(f, p, budget);
      switch (d.verdict) {
      case Verdict::Yes:
        entry.status = NaeSweepEntry::Status::Yes;
        any_yes = true;
        all_no = false;
        entry.decision = std::move(d);
        break;
      case Verdict::No:
        entry.status = NaeSweepEntry::Status::No;
        entry.decision = std::move(d);
        break;
      case Verdict::Inapplicable:
        entry.status = NaeSweepEntry::Status::Inapplicable;
        all_no = false;
        break;
      }
    } catch (const BudgetExceeded&) {
      entry.status = NaeSweepEntry::Status::BudgetExceeded;
      all_no = false;
    }
    report.entries.push_back(std::move(entry));
  }

  report.nae_decided = any_yes || all_no;
  if (report.nae_decided)
    report.nae_satisfiable = any_yes;
  return report;
}

} // namespace partsat
