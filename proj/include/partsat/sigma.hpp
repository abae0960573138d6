#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "partsat/formula.hpp"

namespace partsat {

/// Number of variables beyond which exhaustive enumeration refuses to run
/// unless the caller raises the limit.
inline constexpr std::int32_t kDefaultEnumLimit = 20;

/// A complete truth assignment, stored as one sign per variable:
/// +1 means true, -1 means false.
class Assignment {
public:
  Assignment() = default;
  explicit Assignment(std::vector<std::int8_t> signs);

  static Assignment all_true(std::int32_t n);
  static Assignment all_false(std::int32_t n);
  /// Bit s-1 of `bits` gives the sign of variable s (set bit = true).
  static Assignment from_bits(std::uint64_t bits, std::int32_t n);
  /// Accepts "all-true", "all-false", or comma-separated signs "-1,1,...".
  static Assignment parse(std::string_view text, std::int32_t n);

  std::int32_t size() const { return static_cast<std::int32_t>(signs_.size()); }
  std::int8_t sign(std::int32_t s) const { return signs_[static_cast<std::size_t>(s) - 1]; }
  bool is_true(std::int32_t s) const { return sign(s) > 0; }
  void set_sign(std::int32_t s, std::int8_t sign);
  const std::vector<std::int8_t>& signs() const { return signs_; }

  /// Binary encoding with variable 1 as the least significant bit; requires
  /// size() <= 64.
  std::uint64_t encoding() const;
  Assignment negated() const;
  std::string to_string() const; // "-1,1,..."

  bool operator==(const Assignment&) const = default;

private:
  std::vector<std::int8_t> signs_;
};

/// Orders assignments by their binary encoding (works for any size).
bool encoding_less(const Assignment& a, const Assignment& b);

/// Total number of true literals under x; computed variable-wise from the
/// occurrence counts in one linear pass.
std::int64_t sigma(const Formula& f, const Assignment& x);

/// Per-clause true-literal counts; their sum equals sigma(f, x).
std::vector<std::int32_t> sigma_per_clause(const Formula& f, const Assignment& x);

/// Extremes of sigma over all assignments, with the canonical base
/// assignments (degenerate variables, pos == neg, forced to -1).
struct SigmaExtremes {
  std::int64_t sigma_min = 0;
  std::int64_t sigma_max = 0;
  Assignment x_min_base;
  Assignment x_max_base;
  std::vector<std::int32_t> degenerate_vars; // ascending, 1-based
  std::int64_t n_eq() const { return static_cast<std::int64_t>(degenerate_vars.size()); }
};

SigmaExtremes sigma_extremes(const Formula& f);

enum class Extreme { Min, Max };

/// The complete set of assignments attaining one sigma extreme: the base
/// extremal assignment combined with every sign choice on the degenerate
/// variables. Exactly 2^n_eq assignments, visited in ascending encoding
/// order. Callers must bound n_eq before materializing.
class AchieverSet {
public:
  AchieverSet(const Formula& f, Extreme which);

  std::int64_t n_eq() const { return static_cast<std::int64_t>(degenerate_.size()); }
  bool count_exceeds(std::uint64_t limit) const;
  /// 2^n_eq; throws Error if that does not fit in 64 bits.
  std::uint64_t count() const;

  template <class Fn> void for_each(Fn&& fn) const {
    Assignment x = base_;
    std::uint64_t total = count();
    for (std::uint64_t d = 0;; ++d) {
      for (std::size_t t = 0; t < degenerate_.size(); ++t)
        x.set_sign(degenerate_[t], (d >> t) & 1 ? std::int8_t{1} : std::int8_t{-1});
      fn(static_cast<const Assignment&>(x));
      if (d + 1 == total)
        break;
    }
  }

  std::vector<Assignment> to_vector() const;

private:
  Assignment base_;
  std::vector<std::int32_t> degenerate_;
};

inline AchieverSet achievers(const Formula& f, Extreme which) { return AchieverSet(f, which); }

/// Normalized exponential moment 2^-n * sum_x e^(a*sigma(x)), evaluated in
/// closed product form over the per-variable occurrence counts. Throws
/// std::range_error when the result overflows double.
double char_function(const Formula& f, double a);

/// Simplified form valid for exact READ-3 formulas (every degree exactly 3):
/// e^(a*n) * ((e^a + 1)/2)^n * (2*cosh(a) - 1)^n_pure.
/// Throws std::invalid_argument when the formula is not exact READ-3.
double char_function_read3(const Formula& f, double a);

/// Count of assignments per sigma value over all 2^n assignments.
using SigmaHistogram = std::map<std::int64_t, std::uint64_t>;
SigmaHistogram sigma_histogram(const Formula& f, std::int32_t max_vars = kDefaultEnumLimit);

} // namespace partsat
