#pragma once

#include <string>

#include "json.hpp"
#include "lefschetz/wlp.hpp"

namespace lefschetz {

enum class OutputFormat { text, csv, json, coo };
OutputFormat parse_format(const std::string& name);

inline constexpr const char* kVerdictCsvHeader = "alpha,beta,gamma,p,holds,method,witness";

nlohmann::ordered_json verdict_json(const WlpVerdict& v);
std::string verdict_csv_row(const WlpVerdict& v);
std::string verdict_text(const WlpVerdict& v);

// Write to a temporary file in the same directory, then rename into place,
// so readers never observe a partial report.
void write_report_atomic(const std::string& path, const std::string& content);

}  // namespace lefschetz
