#include "partsat/screen.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "partsat/dimacs.hpp"
#include "partsat/sigma.hpp"

namespace partsat {

PartitionSpec PartitionSpec::l_in_k(std::int32_t l) {
  if (l < 0)
    throw std::invalid_argument("l must be nonnegative");
  PartitionSpec spec;
  spec.l = l;
  return spec;
}

PartitionSpec PartitionSpec::parse_mu(std::string_view text) {
  PartitionSpec spec;
  std::size_t at = 0;
  while (at <= text.size()) {
    std::size_t comma = text.find(',', at);
    std::string_view tok = text.substr(at, comma == std::string_view::npos
                                               ? std::string_view::npos
                                               : comma - at);
    if (tok.empty())
      throw std::invalid_argument("empty partition entry");
    if (tok != "m") {
      std::int64_t value{};
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0)
        throw std::invalid_argument("bad partition entry '" + std::string(tok) +
                                    "', expected a nonnegative integer or 'm'");
    }
    spec.mu_tokens.emplace_back(tok);
    if (comma == std::string_view::npos)
      break;
    at = comma + 1;
  }
  if (spec.mu_tokens.empty())
    throw std::invalid_argument("empty partition");
  return spec;
}

Partition PartitionSpec::resolve(const Formula& f) const {
  if (l >= 0)
    return l_in_k_partition(f, l);
  std::vector<std::int64_t> mu;
  mu.reserve(mu_tokens.size());
  for (const std::string& tok : mu_tokens) {
    if (tok == "m") {
      mu.push_back(f.clause_count());
    } else {
      std::int64_t value{};
      std::from_chars(tok.data(), tok.data() + tok.size(), value);
      mu.push_back(value);
    }
  }
  return make_partition(f, std::move(mu));
}

std::string PartitionSpec::describe() const {
  if (l >= 0)
    return std::to_string(l) + "-in-k";
  std::string out = "mu=";
  for (std::size_t i = 0; i < mu_tokens.size(); ++i) {
    if (i > 0)
      out += ',';
    out += mu_tokens[i];
  }
  return out;
}

const char* applicability_name(Applicability a) {
  switch (a) {
  case Applicability::AtMin:
    return "at_min";
  case Applicability::AtMax:
    return "at_max";
  case Applicability::OutOfRange:
    return "out_of_range";
  case Applicability::Between:
    return "between";
  }
  return "?";
}

namespace {

ScreenRecord screen_one(const std::string& path, const PartitionSpec& spec,
                        std::uint64_t budget) {
  ScreenRecord rec;
  rec.path = path;
  auto start = std::chrono::steady_clock::now();
  try {
    Formula f = parse_file(path);
    rec.m = f.clause_count();
    rec.n = f.var_count();
    rec.flags = classify(f);
    SigmaExtremes ex = sigma_extremes(f);
    rec.sigma_min = ex.sigma_min;
    rec.sigma_max = ex.sigma_max;
    rec.n_eq = ex.n_eq();
    rec.parsed = true;

    Partition p = spec.resolve(f);
    rec.target = target_total(p);
    if (rec.target == ex.sigma_min)
      rec.applicability = Applicability::AtMin;
    else if (rec.target == ex.sigma_max)
      rec.applicability = Applicability::AtMax;
    else if (rec.target < ex.sigma_min || rec.target > ex.sigma_max)
      rec.applicability = Applicability::OutOfRange;
    else
      rec.applicability = Applicability::Between;

    try {
      Decision d = decide(f, p, budget);
      rec.verdict = d.verdict;
      rec.candidates_checked = d.candidates_checked;
    } catch (const BudgetExceeded& e) {
      rec.error = e.what();
    }
  } catch (const std::exception& e) {
    rec.error = e.what();
  }
  rec.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return rec;
}

} // namespace

std::vector<ScreenRecord> screen_files(const std::vector<std::string>& paths,
                                       const PartitionSpec& spec, int jobs,
                                       std::uint64_t budget) {
  std::vector<ScreenRecord> records(paths.size());
  if (jobs <= 1 || paths.size() <= 1) {
    for (std::size_t i = 0; i < paths.size(); ++i)
      records[i] = screen_one(paths[i], spec, budget);
    return records;
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= paths.size())
        return;
      records[i] = screen_one(paths[i], spec, budget);
    }
  };
  std::vector<std::thread> pool;
  std::size_t thread_count = std::min<std::size_t>(static_cast<std::size_t>(jobs),
                                                   paths.size());
  pool.reserve(thread_count);
  for (std::size_t t = 0; t < thread_count; ++t)
    pool.emplace_back(worker);
  for (std::thread& t : pool)
    t.join();
  return records;
}

ScreenSummary summarize(const std::vector<ScreenRecord>& records) {
  ScreenSummary s;
  s.total = static_cast<std::int64_t>(records.size());
  for (const ScreenRecord& r : records) {
    if (!r.error.empty())
      ++s.errors;
    if (!r.applicability)
      continue;
    switch (*r.applicability) {
    case Applicability::AtMin:
      ++s.at_min;
      break;
    case Applicability::AtMax:
      ++s.at_max;
      break;
    case Applicability::OutOfRange:
      ++s.out_of_range;
      break;
    case Applicability::Between:
      ++s.between;
      break;
    }
  }
  return s;
}

std::string screen_csv_header() {
  return "path,m,n,exact_k,read_p,exact_read_p,completely_mixed,square,"
         "trivially_satisfiable_r_le_r,has_tautological_clause,sigma_min,"
         "sigma_max,n_eq,target,applicability,verdict,candidates_checked,"
         "elapsed_ms,error\n";
}

std::string screen_csv_row(const ScreenRecord& r, bool include_times) {
  std::string out = csv_quote(r.path);
  auto add = [&out](const std::string& field) {
    out += ',';
    out += field;
  };
  if (r.parsed) {
    add(std::to_string(r.m));
    add(std::to_string(r.n));
    add(r.flags.exact_k ? std::to_string(*r.flags.exact_k) : "");
    add(std::to_string(r.flags.read_p));
    add(r.flags.exact_read_p ? std::to_string(*r.flags.exact_read_p) : "");
    add(r.flags.completely_mixed ? "true" : "false");
    add(r.flags.square ? "true" : "false");
    add(r.flags.trivially_satisfiable_r_le_r ? "true" : "false");
    add(r.flags.has_tautological_clause ? "true" : "false");
    add(std::to_string(r.sigma_min));
    add(std::to_string(r.sigma_max));
    add(std::to_string(r.n_eq));
    add(r.applicability ? std::to_string(r.target) : "");
    add(r.applicability ? applicability_name(*r.applicability) : "");
    add(r.verdict ? verdict_name(*r.verdict) : "");
    add(std::to_string(r.candidates_checked));
  } else {
    for (int i = 0; i < 16; ++i)
      add("");
  }
  add(include_times ? std::to_string(r.elapsed_ms) : "");
  add(csv_quote(r.error));
  out += '\n';
  return out;
}

json to_json(const ScreenRecord& r, bool include_times) {
  json out{{"path", r.path}};
  if (!r.error.empty()) {
    out["error"] = r.error;
  } else {
    out["m"] = r.m;
    out["n"] = r.n;
    out["class"] = to_json(r.flags);
    out["sigma_min"] = r.sigma_min;
    out["sigma_max"] = r.sigma_max;
    out["n_eq"] = r.n_eq;
    out["target"] = r.target;
    if (r.applicability)
      out["applicability"] = applicability_name(*r.applicability);
    if (r.verdict)
      out["verdict"] = verdict_name(*r.verdict);
    out["candidates_checked"] = r.candidates_checked;
  }
  if (include_times)
    out["elapsed_ms"] = r.elapsed_ms;
  return out;
}

json to_json(const ScreenSummary& s) {
  return json{{"total", s.total},         {"at_min", s.at_min},
              {"at_max", s.at_max},       {"out_of_range", s.out_of_range},
              {"between", s.between},     {"errors", s.errors}};
}

} // namespace partsat
