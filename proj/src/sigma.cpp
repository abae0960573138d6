#include "partsat/sigma.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "partsat/kernels.hpp"

namespace partsat {

namespace {

void check_length(const Formula& f, const Assignment& x) {
  if (x.size() != f.var_count())
    throw std::invalid_argument("assignment has " + std::to_string(x.size()) +
                                " entries, formula has " +
                                std::to_string(f.var_count()) + " variables");
}

double logaddexp(double u, double v) {
  double hi = std::max(u, v);
  double lo = std::min(u, v);
  return hi + std::log1p(std::exp(lo - hi));
}

bool is_exact_read3(const OccurrenceStats& st) {
  for (std::int32_t s = 1; s <= st.var_count; ++s)
    if (st.degree(s) != 3)
      return false;
  return true;
}

double exp_checked(double log_value) {
  if (log_value >= std::log(std::numeric_limits<double>::max()))
    throw std::range_error("characteristic function overflows double (log value " +
                           std::to_string(log_value) + ")");
  return std::exp(log_value);
}

} // namespace

Assignment::Assignment(std::vector<std::int8_t> signs) : signs_(std::move(signs)) {
  for (std::int8_t s : signs_)
    if (s != 1 && s != -1)
      throw std::invalid_argument("assignment signs must be +1 or -1");
}

Assignment Assignment::all_true(std::int32_t n) {
  return Assignment(std::vector<std::int8_t>(static_cast<std::size_t>(n), 1));
}

Assignment Assignment::all_false(std::int32_t n) {
  return Assignment(std::vector<std::int8_t>(static_cast<std::size_t>(n), -1));
}

Assignment Assignment::from_bits(std::uint64_t bits, std::int32_t n) {
  std::vector<std::int8_t> signs(static_cast<std::size_t>(n));
  for (std::int32_t s = 0; s < n; ++s)
    signs[static_cast<std::size_t>(s)] = (bits >> s) & 1 ? 1 : -1;
  return Assignment(std::move(signs));
}

Assignment Assignment::parse(std::string_view text, std::int32_t n) {
  if (text == "all-true")
    return all_true(n);
  if (text == "all-false")
    return all_false(n);
  std::vector<std::int8_t> signs;
  std::size_t at = 0;
  while (at <= text.size()) {
    std::size_t comma = text.find(',', at);
    std::string_view tok = text.substr(at, comma == std::string_view::npos
                                               ? std::string_view::npos
                                               : comma - at);
    if (tok == "1" || tok == "+1")
      signs.push_back(1);
    else if (tok == "-1")
      signs.push_back(-1);
    else
      throw std::invalid_argument("bad assignment entry '" + std::string(tok) +
                                  "', expected +1 or -1");
    if (comma == std::string_view::npos)
      break;
    at = comma + 1;
  }
  if (static_cast<std::int32_t>(signs.size()) != n)
    throw std::invalid_argument("assignment has " + std::to_string(signs.size()) +
                                " entries, formula has " + std::to_string(n) +
                                " variables");
  return Assignment(std::move(signs));
}

void Assignment::set_sign(std::int32_t s, std::int8_t sign) {
  signs_[static_cast<std::size_t>(s) - 1] = sign;
}

std::uint64_t Assignment::encoding() const {
  if (signs_.size() > 64)
    throw Error("assignment too wide for a 64-bit encoding");
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < signs_.size(); ++i)
    if (signs_[i] > 0)
      bits |= std::uint64_t{1} << i;
  return bits;
}

Assignment Assignment::negated() const {
  std::vector<std::int8_t> signs(signs_.size());
  for (std::size_t i = 0; i < signs_.size(); ++i)
    signs[i] = static_cast<std::int8_t>(-signs_[i]);
  return Assignment(std::move(signs));
}

std::string Assignment::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < signs_.size(); ++i) {
    if (i > 0)
      out += ',';
    out += signs_[i] > 0 ? "1" : "-1";
  }
  return out;
}

bool encoding_less(const Assignment& a, const Assignment& b) {
  // compare as binary numbers, variable 1 least significant
  if (a.size() != b.size())
    return a.size() < b.size();
  for (std::int32_t s = a.size(); s >= 1; --s)
    if (a.sign(s) != b.sign(s))
      return a.sign(s) < b.sign(s);
  return false;
}

std::int64_t sigma(const Formula& f, const Assignment& x) {
  check_length(f, x);
  const OccurrenceStats& st = f.stats();
  std::uint64_t total = kernels::select_sum(st.pos.data(), st.neg.data(),
                                            x.signs().data(), st.pos.size());
#ifndef NDEBUG
  auto per_clause = sigma_per_clause(f, x);
  assert(std::accumulate(per_clause.begin(), per_clause.end(), std::int64_t{0}) ==
         static_cast<std::int64_t>(total));
#endif
  return static_cast<std::int64_t>(total);
}

std::vector<std::int32_t> sigma_per_clause(const Formula& f, const Assignment& x) {
  check_length(f, x);
  std::vector<std::int32_t> counts;
  counts.reserve(f.clauses().size());
  for (const Clause& c : f.clauses()) {
    std::int32_t true_lits = 0;
    for (Lit l : c)
      true_lits += is_pos(l) == x.is_true(var_of(l)) ? 1 : 0;
    counts.push_back(true_lits);
  }
  return counts;
}

SigmaExtremes sigma_extremes(const Formula& f) {
  const OccurrenceStats& st = f.stats();
  std::size_t n = st.pos.size();
  SigmaExtremes ex;
  ex.sigma_min = static_cast<std::int64_t>(
      kernels::sum_min(st.pos.data(), st.neg.data(), n));
  ex.sigma_max = static_cast<std::int64_t>(
      kernels::sum_max(st.pos.data(), st.neg.data(), n));

  std::vector<std::int8_t> xmin(n), xmax(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::int32_t p = st.pos[s], q = st.neg[s];
    if (p > q) {
      xmin[s] = -1;
      xmax[s] = 1;
    } else if (p < q) {
      xmin[s] = 1;
      xmax[s] = -1;
    } else {
      xmin[s] = -1;
      xmax[s] = -1;
      ex.degenerate_vars.push_back(static_cast<std::int32_t>(s) + 1);
    }
  }
  ex.x_min_base = Assignment(std::move(xmin));
  ex.x_max_base = Assignment(std::move(xmax));

  assert(ex.sigma_min + ex.sigma_max == st.total_literals);
  assert(2 * ex.sigma_min ==
         st.total_literals - static_cast<std::int64_t>(kernels::sum_absdiff(
                                 st.pos.data(), st.neg.data(), n)));
  return ex;
}

AchieverSet::AchieverSet(const Formula& f, Extreme which) {
  SigmaExtremes ex = sigma_extremes(f);
  base_ = which == Extreme::Min ? std::move(ex.x_min_base) : std::move(ex.x_max_base);
  degenerate_ = std::move(ex.degenerate_vars);
}

bool AchieverSet::count_exceeds(std::uint64_t limit) const {
  if (degenerate_.size() >= 64)
    return true;
  return (std::uint64_t{1} << degenerate_.size()) > limit;
}

std::uint64_t AchieverSet::count() const {
  if (degenerate_.size() >= 64)
    throw Error("achiever count 2^" + std::to_string(degenerate_.size()) +
                " exceeds 64 bits");
  return std::uint64_t{1} << degenerate_.size();
}

std::vector<Assignment> AchieverSet::to_vector() const {
  std::vector<Assignment> out;
  out.reserve(static_cast<std::size_t>(count()));
  for_each([&](const Assignment& x) { out.push_back(x); });
  return out;
}

double char_function(const Formula& f, double a) {
  if (!std::isfinite(a))
    throw std::invalid_argument("characteristic function needs a finite argument");
  const OccurrenceStats& st = f.stats();
  double log_chi = 0.0;
  for (std::int32_t s = 0; s < st.var_count; ++s)
    log_chi += logaddexp(a * st.pos[s], a * st.neg[s]);
  log_chi -= st.var_count * std::log(2.0);
  double value = exp_checked(log_chi);
#ifndef NDEBUG
  if (is_exact_read3(st)) {
    double simplified = char_function_read3(f, a);
    assert(std::abs(value - simplified) <= 1e-12 * std::max(value, simplified));
  }
#endif
  return value;
}

double char_function_read3(const Formula& f, double a) {
  if (!std::isfinite(a))
    throw std::invalid_argument("characteristic function needs a finite argument");
  const OccurrenceStats& st = f.stats();
  if (!is_exact_read3(st))
    throw std::invalid_argument("simplified characteristic function requires every "
                                "variable degree to be exactly 3");
  // log(2cosh(a) - 1), stable for large |a|
  double m = std::abs(a);
  double log_cosh_term = m + std::log1p(std::exp(-2.0 * m) - std::exp(-m));
  double log_chi = st.var_count * (a + logaddexp(a, 0.0) - std::log(2.0)) +
                   static_cast<double>(st.n_pure) * log_cosh_term;
  return exp_checked(log_chi);
}

SigmaHistogram sigma_histogram(const Formula& f, std::int32_t max_vars) {
  std::int32_t n = f.var_count();
  if (n > max_vars || n > 63)
    throw LimitExceeded("sigma histogram over " + std::to_string(n) +
                        " variables exceeds the enumeration limit " +
                        std::to_string(std::min(max_vars, 63)));
  const OccurrenceStats& st = f.stats();

  SigmaExtremes ex = sigma_extremes(f);
  std::vector<std::uint64_t> counts(
      static_cast<std::size_t>(ex.sigma_max - ex.sigma_min + 1), 0);

  // Gray-code walk: one variable flip per step keeps the update O(1).
  std::uint64_t true_bits = 0;
  std::int64_t value = st.negative_literals; // sigma of all-false
  ++counts[static_cast<std::size_t>(value - ex.sigma_min)];
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t i = 1; i < total; ++i) {
    int s = __builtin_ctzll(i);
    true_bits ^= std::uint64_t{1} << s;
    bool now_true = (true_bits >> s) & 1;
    std::int64_t delta = st.pos[static_cast<std::size_t>(s)] -
                         st.neg[static_cast<std::size_t>(s)];
    value += now_true ? delta : -delta;
    ++counts[static_cast<std::size_t>(value - ex.sigma_min)];
  }

  SigmaHistogram hist;
  for (std::size_t i = 0; i < counts.size(); ++i)
    if (counts[i] > 0)
      hist[ex.sigma_min + static_cast<std::int64_t>(i)] = counts[i];
  return hist;
}

} // namespace partsat
