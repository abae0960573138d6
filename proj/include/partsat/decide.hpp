#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "partsat/formula.hpp"
#include "partsat/sigma.hpp"

namespace partsat {

/// Default cap on the number of candidate assignments decide() will check;
/// 2^n_eq above this raises BudgetExceeded instead of enumerating.
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 20;

/// Requested clause counts per true-literal count: mu[a] clauses must contain
/// exactly a true literals. Entries sum to the clause count m.
struct Partition {
  std::vector<std::int64_t> mu;
};

/// Validates and normalizes a partition for f: entries must be nonnegative
/// and sum to m; shorter vectors are zero-padded to max clause width + 1,
/// longer ones may only carry trailing zeros. Throws std::invalid_argument.
Partition make_partition(const Formula& f, std::vector<std::int64_t> mu);

/// Partition requiring exactly l true literals in every clause.
Partition l_in_k_partition(const Formula& f, std::int32_t l);

/// Total number of true literals any matching assignment must produce:
/// sum_a a * mu[a].
std::int64_t target_total(const Partition& p);

/// nu[a] = number of clauses with exactly a true literals under one
/// assignment; sums to m, and sum_a a*nu[a] equals sigma.
struct ClauseProfile {
  std::vector<std::int64_t> nu;
  bool operator==(const ClauseProfile&) const = default;
};

ClauseProfile clause_profile(const Formula& f, const Assignment& x);

enum class Verdict { Yes, No, Inapplicable };
enum class NoReason { TargetBelowMin, TargetAboveMax, AllCandidatesFail };

struct Decision {
  Verdict verdict = Verdict::Inapplicable;
  std::optional<NoReason> reason;        // set for No
  std::vector<Assignment> witnesses;     // all matching candidates, ascending encoding
  std::int64_t target = 0;
  std::int64_t sigma_min = 0;
  std::int64_t sigma_max = 0;
  std::int64_t n_eq = 0;
  std::uint64_t candidates_checked = 0;  // 2^n_eq when enumeration ran, else 0
};

/// Decides whether some assignment realizes the partition, for the cases the
/// sum-satisfiability criterion covers:
///   - target outside [sigma_min, sigma_max]  -> No (nothing attains it)
///   - target at an extreme                    -> check the 2^n_eq achievers
///   - otherwise                               -> Inapplicable
/// Throws BudgetExceeded when 2^n_eq > budget.
Decision decide(const Formula& f, const Partition& p,
                std::uint64_t budget = kDefaultBudget);

/// decide() on the partition with mu[l] = m: exactly l true literals in
/// every clause (l = 1 is 1-in-k SAT). Requires 0 <= l <= every clause width.
Decision decide_l_in_k(const Formula& f, std::int32_t l,
                       std::uint64_t budget = kDefaultBudget);

/// One entry of the NAE sweep: deciding {0, mu, m-mu, 0} for a fixed mu.
struct NaeSweepEntry {
  enum class Status { Yes, No, Inapplicable, BudgetExceeded };
  std::int64_t mu = 0;        // clauses required to have exactly one true literal
  std::int64_t target = 0;    // 2m - mu
  Status status = Status::Inapplicable;
  std::optional<Decision> decision; // present for Yes/No
};

struct NaeSweepReport {
  std::vector<NaeSweepEntry> entries; // mu = 0..m in order
  /// True when some mu yielded Yes, or every mu yielded a definitive No.
  bool nae_decided = false;
  std::optional<bool> nae_satisfiable; // set when nae_decided
};

/// Runs decide on {0, mu, m-mu, 0} for every mu in 0..m. NAE satisfiability
/// of an exact 3-CNF is equivalent to some such partition being realizable.
NaeSweepReport nae_sweep(const Formula& f, std::uint64_t budget = kDefaultBudget);

} // namespace partsat
