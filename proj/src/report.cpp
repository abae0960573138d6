#include "partsat/report.hpp"

namespace partsat {

json to_json(const Assignment& x) {
  json out = json::array();
  for (std::int8_t s : x.signs())
    out.push_back(static_cast<int>(s));
  return out;
}

json to_json(const OccurrenceStats& st) {
  json width_hist = json::object();
  for (std::size_t a = 0; a < st.width_hist.size(); ++a)
    if (st.width_hist[a] > 0)
      width_hist[std::to_string(a)] = st.width_hist[a];
  json degree_hist = json::object();
  for (std::size_t b = 0; b < st.degree_hist.size(); ++b)
    if (st.degree_hist[b] > 0)
      degree_hist[std::to_string(b)] = st.degree_hist[b];
  json out{{"m", st.clause_count},
           {"n", st.var_count},
           {"N", st.total_literals},
           {"N_plus", st.positive_literals},
           {"N_minus", st.negative_literals},
           {"m_alpha", std::move(width_hist)},
           {"n_beta", std::move(degree_hist)},
           {"n_pure", st.n_pure},
           {"n_eq", st.n_eq}};
  // per-variable and per-clause vectors only at inspectable sizes
  if (st.var_count <= 1000) {
    out["pos"] = st.pos;
    out["neg"] = st.neg;
  }
  if (st.clause_count <= 1000)
    out["widths"] = st.widths;
  return out;
}

json to_json(const ClassFlags& flags) {
  json out{{"read_p", flags.read_p},
           {"completely_mixed", flags.completely_mixed},
           {"square", flags.square},
           {"trivially_satisfiable_r_le_r", flags.trivially_satisfiable_r_le_r},
           {"has_tautological_clause", flags.has_tautological_clause}};
  out["exact_k"] = flags.exact_k ? json(*flags.exact_k) : json(nullptr);
  out["exact_read_p"] = flags.exact_read_p ? json(*flags.exact_read_p) : json(nullptr);
  return out;
}

json to_json(const SigmaExtremes& ex) {
  return json{{"sigma_min", ex.sigma_min},
              {"sigma_max", ex.sigma_max},
              {"n_eq", ex.n_eq()},
              {"degenerate_vars", ex.degenerate_vars},
              {"x_min_base", to_json(ex.x_min_base)},
              {"x_max_base", to_json(ex.x_max_base)}};
}

const char* verdict_name(Verdict v) {
  switch (v) {
  case Verdict::Yes:
    return "yes";
  case Verdict::No:
    return "no";
  case Verdict::Inapplicable:
    return "inapplicable";
  }
  return "?";
}

const char* reason_name(NoReason r) {
  switch (r) {
  case NoReason::TargetBelowMin:
    return "target_below_min";
  case NoReason::TargetAboveMax:
    return "target_above_max";
  case NoReason::AllCandidatesFail:
    return "all_candidates_fail";
  }
  return "?";
}

json to_json(const Decision& d) {
  json witnesses = json::array();
  for (const Assignment& x : d.witnesses)
    witnesses.push_back(to_json(x));
  json out{{"verdict", verdict_name(d.verdict)},
           {"target", d.target},
           {"sigma_min", d.sigma_min},
           {"sigma_max", d.sigma_max},
           {"n_eq", d.n_eq},
           {"witnesses", std::move(witnesses)},
           {"candidates_checked", d.candidates_checked}};
  if (d.reason)
    out["reason"] = reason_name(*d.reason);
  return out;
}

json to_json(const NaeSweepReport& report) {
  json entries = json::array();
  for (const NaeSweepEntry& e : report.entries) {
    const char* status = "?";
    switch (e.status) {
    case NaeSweepEntry::Status::Yes:
      status = "yes";
      break;
    case NaeSweepEntry::Status::No:
      status = "no";
      break;
    case NaeSweepEntry::Status::Inapplicable:
      status = "inapplicable";
      break;
    case NaeSweepEntry::Status::BudgetExceeded:
      status = "budget_exceeded";
      break;
    }
    json entry{{"mu", e.mu}, {"target", e.target}, {"status", status}};
    if (e.decision)
      entry["decision"] = to_json(*e.decision);
    entries.push_back(std::move(entry));
  }
  json out{{"entries", std::move(entries)}, {"nae_decided", report.nae_decided}};
  out["nae_satisfiable"] =
      report.nae_satisfiable ? json(*report.nae_satisfiable) : json(nullptr);
  return out;
}

json to_json(const OracleResult& result) {
  json witnesses = json::array();
  for (const Assignment& x : result.witnesses)
    witnesses.push_back(to_json(x));
  return json{{"witnesses", std::move(witnesses)},
              {"enumerated", result.enumerated},
              {"elapsed_us", result.elapsed.count()}};
}

std::string histogram_csv(const SigmaHistogram& hist) {
  std::string out = "sigma,count\n";
  for (const auto& [value, count] : hist) {
    out += std::to_string(value);
    out += ',';
    out += std::to_string(count);
    out += '\n';
  }
  return out;
}

json histogram_json(const SigmaHistogram& hist) {
  json out = json::object();
  for (const auto& [value, count] : hist)
    out[std::to_string(value)] = count;
  return out;
}

std::string mu_matrix_csv(const MuMatrix& mu) {
  std::string out = "s,t,value\n";
  for (const MuMatrix::Entry& e : mu.entries) {
    out += std::to_string(e.s);
    out += ',';
    out += std::to_string(e.t);
    out += ',';
    out += std::to_string(e.value);
    out += '\n';
  }
  return out;
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos)
    return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"')
      out += '"';
    out += c;
  }
  out += '"';
  return out;
}

} // namespace partsat
