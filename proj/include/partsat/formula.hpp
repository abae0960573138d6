#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "partsat/errors.hpp"

namespace partsat {

/// A literal in DIMACS encoding: +v is the positive literal of variable v,
/// -v the negative one. Variables are numbered 1..n.
using Lit = std::int32_t;

inline std::int32_t var_of(Lit l) { return l < 0 ? -l : l; }
inline bool is_pos(Lit l) { return l > 0; }

using Clause = std::vector<Lit>;

struct BuildOptions {
  /// Keep clauses that contain the same literal twice instead of rejecting
  /// them. Duplicates are then counted literally in all statistics.
  bool allow_duplicate_literals = false;
};

/// Occurrence statistics of a formula. Everything here is recomputable from
/// the clause list; verify() checks the counting identities
///   N = N+ + N- = sum_s (pos+neg) = sum_j width_j
///     = sum_a a*width_hist[a] = sum_b b*degree_hist[b].
struct OccurrenceStats {
  std::int64_t clause_count = 0;            // m
  std::int32_t var_count = 0;               // n
  std::vector<std::int32_t> pos;            // pos[s-1] = positive occurrences of variable s
  std::vector<std::int32_t> neg;            // neg[s-1] = negative occurrences
  std::vector<std::int32_t> widths;         // widths[j] = literal count of clause j
  std::int64_t total_literals = 0;          // N
  std::int64_t positive_literals = 0;       // N+
  std::int64_t negative_literals = 0;       // N-
  std::vector<std::int64_t> width_hist;     // width_hist[a] = number of clauses of width a
  std::vector<std::int64_t> degree_hist;    // degree_hist[b] = number of variables of degree b
  std::int64_t n_pure = 0;                  // variables with degree > 0 and a single polarity
  std::int64_t n_eq = 0;                    // variables with pos == neg (unused ones included)

  std::int32_t degree(std::int32_t s) const { return pos[s - 1] + neg[s - 1]; }
  std::int32_t max_width() const;
  std::int32_t max_degree() const;

  /// Throws Error if any counting identity fails.
  void verify() const;

  bool operator==(const OccurrenceStats&) const = default;
};

/// Syntactic class predicates.
struct ClassFlags {
  std::optional<std::int32_t> exact_k;       // set when all clause widths are equal
  std::int32_t read_p = 0;                   // maximum variable degree
  std::optional<std::int32_t> exact_read_p;  // set when all variable degrees are equal
  bool completely_mixed = false;             // no variable with degree > 0 is pure
  bool square = false;                       // m == n
  bool trivially_satisfiable_r_le_r = false; // exact width r and all degrees <= r
  bool has_tautological_clause = false;      // some clause contains both x and -x

  bool operator==(const ClassFlags&) const = default;
};

/// An immutable CNF formula with cached occurrence statistics. Safe to share
/// across threads after construction.
class Formula {
public:
  /// Validates every clause (nonempty, variables within 1..n, no duplicate
  /// identical literal unless opts allow it) and computes the statistics.
  /// Throws std::invalid_argument on violation.
  Formula(std::int32_t n, std::vector<Clause> clauses, BuildOptions opts = {});

  std::int32_t var_count() const { return n_; }
  std::int64_t clause_count() const { return static_cast<std::int64_t>(clauses_.size()); }
  const std::vector<Clause>& clauses() const { return clauses_; }
  const OccurrenceStats& stats() const { return stats_; }

private:
  std::int32_t n_;
  std::vector<Clause> clauses_;
  OccurrenceStats stats_;
};

/// Recomputes occurrence statistics from scratch (the cached copy inside
/// Formula was produced by this same function).
OccurrenceStats compute_stats(std::int32_t n, const std::vector<Clause>& clauses);
inline OccurrenceStats compute_stats(const Formula& f) {
  return compute_stats(f.var_count(), f.clauses());
}

ClassFlags classify(const Formula& f);

} // namespace partsat
