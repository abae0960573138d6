#pragma once

#include <string>

#include "json.hpp"

#include "partsat/decide.hpp"
#include "partsat/formula.hpp"
#include "partsat/nae.hpp"
#include "partsat/oracle.hpp"
#include "partsat/sigma.hpp"

// Machine-readable views of the core types. JSON is the primary output
// format of the CLI; CSV covers the tabular exports.

namespace partsat {

using json = nlohmann::json;

json to_json(const Assignment& x);
json to_json(const OccurrenceStats& st);
json to_json(const ClassFlags& flags);
json to_json(const SigmaExtremes& ex);
json to_json(const Decision& d);
json to_json(const NaeSweepReport& report);
json to_json(const OracleResult& result);

const char* verdict_name(Verdict v);
const char* reason_name(NoReason r);

/// "sigma,count" rows.
std::string histogram_csv(const SigmaHistogram& hist);
json histogram_json(const SigmaHistogram& hist);

/// "s,t,value" rows for the nonzero upper-triangle couplings.
std::string mu_matrix_csv(const MuMatrix& mu);

/// RFC 4180 quoting (applied only when the field needs it).
std::string csv_quote(const std::string& field);

} // namespace partsat
