#pragma once

#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "pss/enumerator.hpp"

namespace pss {

enum class OutputFormat { Table, Json, Csv };

std::string render_value(const ReportValue& value);

// Counts serialize as decimal strings, sets as arrays of canonical
// permutation strings.  Elapsed time is deliberately not part of any
// machine-readable form so output does not depend on the run.
nlohmann::json to_json(const ReportValue& value);
nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(std::span<const VerificationReport> reports);

/// Header claim,n,param,expected,observed,pass followed by one line per row.
std::string to_csv(std::span<const VerificationReport> reports);
std::string to_table(std::span<const VerificationReport> reports);

}  // namespace pss
