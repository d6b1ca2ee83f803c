#include "lefschetz/report.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lefschetz {

OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::text;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  if (name == "coo") return OutputFormat::coo;
  throw std::invalid_argument("unknown format: " + name);
}

namespace {

nlohmann::ordered_json witness_json(const Witness& w) {
  nlohmann::ordered_json j;
  switch (w.kind) {
    case Witness::Kind::rank:
      j["kind"] = "rank";
      j["rank"] = w.rank;
      j["expected"] = w.expected;
      break;
    case Witness::Kind::divisor: {
      j["kind"] = "divisor";
      nlohmann::ordered_json terms = nlohmann::ordered_json::array();
      for (const auto& [quantity, valuation] : w.valuations) {
        terms.push_back({{"quantity", quantity}, {"valuation", valuation}});
      }
      j["terms"] = std::move(terms);
      break;
    }
    case Witness::Kind::trivial_region:
      j["kind"] = "trivial-region";
      break;
    case Witness::Kind::prime_power:
      j["kind"] = "prime-power";
      j["prime"] = w.pp.p;
      j["exponent"] = w.pp.n;
      j["value"] = w.pp.value;
      break;
    case Witness::Kind::nonzero_determinant:
      j["kind"] = "nonzero-determinant";
      break;
  }
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  quoted += '"';
  return quoted;
}

}  // namespace

nlohmann::ordered_json verdict_json(const WlpVerdict& v) {
  nlohmann::ordered_json j;
  j["alpha"] = v.params.alpha();
  j["beta"] = v.params.beta();
  j["gamma"] = v.params.gamma();
  j["p"] = v.characteristic;
  j["holds"] = v.holds;
  j["method"] = to_string(v.method);
  j["witness"] = witness_json(v.witness);
  return j;
}

std::string verdict_csv_row(const WlpVerdict& v) {
  std::ostringstream os;
  os << v.params.alpha() << "," << v.params.beta() << "," << v.params.gamma() << ","
     << v.characteristic << "," << (v.holds ? "true" : "false") << "," << to_string(v.method) << ","
     << csv_field(v.witness.flat(v.characteristic));
  return os.str();
}

std::string verdict_text(const WlpVerdict& v) {
  std::ostringstream os;
  os << "alpha=" << v.params.alpha() << " beta=" << v.params.beta() << " gamma=" << v.params.gamma()
     << " p=" << v.characteristic << " holds=" << (v.holds ? "true" : "false")
     << " method=" << to_string(v.method) << " witness=" << v.witness.flat(v.characteristic);
  return os.str();
}

void write_report_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("failed writing " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace lefschetz
