#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "partsat/decide.hpp"
#include "partsat/formula.hpp"
#include "partsat/report.hpp"

namespace partsat {

/// A partition request that is resolved against each formula: either an
/// explicit mu vector (entries may be the token "m", the clause count of the
/// target formula) or l-in-k for a fixed l.
struct PartitionSpec {
  std::vector<std::string> mu_tokens; // used when l < 0
  std::int32_t l = -1;

  static PartitionSpec one_in_k() { return l_in_k(1); }
  static PartitionSpec l_in_k(std::int32_t l);
  /// Parses "0,m,0,0"-style text. Throws std::invalid_argument.
  static PartitionSpec parse_mu(std::string_view text);

  Partition resolve(const Formula& f) const;
  std::string describe() const;
};

/// Where the partition's target total lands relative to the sigma range.
enum class Applicability { AtMin, AtMax, OutOfRange, Between };
const char* applicability_name(Applicability a);

/// One row of a corpus-screening report.
struct ScreenRecord {
  std::string path;
  std::string error; // nonempty when the file could not be fully processed
  bool parsed = false; // stats fields are meaningful (error may still be set)
  std::int64_t m = 0;
  std::int32_t n = 0;
  ClassFlags flags;
  std::int64_t sigma_min = 0;
  std::int64_t sigma_max = 0;
  std::int64_t n_eq = 0;
  std::int64_t target = 0;
  std::optional<Applicability> applicability;
  std::optional<Verdict> verdict;
  std::uint64_t candidates_checked = 0;
  double elapsed_ms = 0.0;
};

struct ScreenSummary {
  std::int64_t total = 0;
  std::int64_t at_min = 0;
  std::int64_t at_max = 0;
  std::int64_t out_of_range = 0;
  std::int64_t between = 0;
  std::int64_t errors = 0;
};

/// Screens the given files (kept in input order) with a worker pool of
/// `jobs` threads. Per-file failures land in the record's error field.
std::vector<ScreenRecord> screen_files(const std::vector<std::string>& paths,
                                       const PartitionSpec& spec, int jobs,
                                       std::uint64_t budget = kDefaultBudget);

ScreenSummary summarize(const std::vector<ScreenRecord>& records);

/// CSV schema. include_times=false blanks the elapsed_ms column so that
/// repeated runs compare byte-identical.
std::string screen_csv_header();
std::string screen_csv_row(const ScreenRecord& r, bool include_times);
json to_json(const ScreenRecord& r, bool include_times);
json to_json(const ScreenSummary& s);

} // namespace partsat
