#include "opturan/report.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "opturan/version.hpp"

namespace opturan {

namespace {

using nlohmann::json;
constexpr int kSchemaVersion = 1;

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (const auto& part : parts) {
    if (!out.empty()) out.push_back(sep);
    out += part;
  }
  return out;
}

std::string bound_text(const TuranBound& bound) {
  switch (bound.kind) {
    case TuranBound::Kind::kExact:
      return std::to_string(bound.value);
    case TuranBound::Kind::kLowerBound:
      return ">=" + std::to_string(bound.value);
    case TuranBound::Kind::kUnknown:
      return "-";
  }
  return "-";
}

const char* bound_kind_name(const TuranBound& bound) {
  switch (bound.kind) {
    case TuranBound::Kind::kExact:
      return "exact";
    case TuranBound::Kind::kLowerBound:
      return "lower_bound";
    case TuranBound::Kind::kUnknown:
      return "unknown";
  }
  return "unknown";
}

json report_header(const char* kind) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = kind;
  j["code_version"] = kCodeVersion;
  return j;
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "table") return OutputFormat::kTable;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  throw std::invalid_argument("format must be table, csv or json, got '" +
                              name + "'");
}

std::string ex_status(const ExtremalResult& result, const TuranBound& bound) {
  switch (bound.kind) {
    case TuranBound::Kind::kExact:
      return result.value == bound.value ? "MATCH" : "MISMATCH";
    case TuranBound::Kind::kLowerBound:
      return result.value >= bound.value ? "NA" : "MISMATCH";
    case TuranBound::Kind::kUnknown:
      return "NA";
  }
  return "NA";
}

std::string render_ex_report(const ExtremalResult& result,
                             const TuranBound& bound, OutputFormat format) {
  const std::string status = ex_status(result, bound);
  if (format == OutputFormat::kJson) {
    json j = report_header("ex");
    j["n"] = result.n;
    j["p"] = result.p;
    j["q"] = result.q;
    j["mode"] = mode_name(result.mode);
    j["value"] = result.value;
    j["predicted"] = {{"kind", bound_kind_name(bound)},
                      {"value", bound.value},
                      {"rule", bound.rule}};
    j["status"] = status;
    j["witnesses"] = result.witnesses;
    j["mop_count"] = result.mop_count;
    return j.dump(2) + "\n";
  }
  if (format == OutputFormat::kCsv) {
    std::ostringstream out;
    out << "n,p,q,mode,value,predicted,status,mop_count,witnesses\n";
    out << result.n << ',' << result.p << ',' << result.q << ','
        << mode_name(result.mode) << ',' << result.value << ','
        << bound_text(bound) << ',' << status << ',' << result.mop_count
        << ',' << join(result.witnesses, ';') << '\n';
    return out.str();
  }
  std::ostringstream out;
  out << std::setw(3) << "n" << std::setw(3) << "p" << std::setw(3) << "q"
      << std::setw(11) << "mode" << std::setw(7) << "value" << std::setw(11)
      << "predicted" << std::setw(10) << "status" << "  witness\n";
  out << std::setw(3) << result.n << std::setw(3) << result.p << std::setw(3)
      << result.q << std::setw(11) << mode_name(result.mode) << std::setw(7)
      << result.value << std::setw(11) << bound_text(bound) << std::setw(10)
      << status << "  "
      << (result.witnesses.empty() ? "-" : result.witnesses.front()) << '\n';
  out << "# rule: " << bound.rule << '\n';
  return out.str();
}

std::string render_verify_report(const VerifyReport& report,
                                 OutputFormat format) {
  if (format == OutputFormat::kJson) {
    json j = report_header("verify");
    j["n_max"] = report.n_max;
    j["all_match"] = report.all_match;
    j["rows"] = json::array();
    for (const auto& row : report.rows)
      j["rows"].push_back({{"n", row.n},
                           {"p", row.p},
                           {"q", row.q},
                           {"mode", mode_name(row.mode)},
                           {"predicted", row.predicted},
                           {"computed", row.computed},
                           {"status", row.match ? "MATCH" : "MISMATCH"},
                           {"rule", row.rule}});
    return j.dump(2) + "\n";
  }
  if (format == OutputFormat::kCsv) {
    std::ostringstream out;
    out << "n,p,q,mode,predicted,computed,status\n";
    for (const auto& row : report.rows)
      out << row.n << ',' << row.p << ',' << row.q << ','
          << mode_name(row.mode) << ',' << row.predicted << ','
          << row.computed << ',' << (row.match ? "MATCH" : "MISMATCH")
          << '\n';
    return out.str();
  }
  std::ostringstream out;
  out << std::setw(3) << "n" << std::setw(3) << "p" << std::setw(3) << "q"
      << std::setw(11) << "mode" << std::setw(11) << "predicted"
      << std::setw(10) << "computed" << std::setw(10) << "status"
      << "  rule\n";
  for (const auto& row : report.rows)
    out << std::setw(3) << row.n << std::setw(3) << row.p << std::setw(3)
        << row.q << std::setw(11) << mode_name(row.mode) << std::setw(11)
        << row.predicted << std::setw(10) << row.computed << std::setw(10)
        << (row.match ? "MATCH" : "MISMATCH") << "  " << row.rule << '\n';
  out << (report.all_match ? "all rows match\n" : "MISMATCH DETECTED\n");
  return out.str();
}

std::string render_probe_report(const ProbeReport& report,
                                OutputFormat format) {
  if (format == OutputFormat::kJson) {
    json j = report_header("probe");
    j["lower_bounds_ok"] = report.lower_bounds_ok;
    j["rows"] = json::array();
    for (const auto& row : report.rows)
      j["rows"].push_back({{"n", row.n},
                           {"connected", row.connected_value},
                           {"general", row.general_value},
                           {"formula", row.formula_value},
                           {"meets_lower_bound", row.meets_lower_bound},
                           {"modes_equal", row.modes_equal},
                           {"matches_formula", row.matches_formula},
                           {"witness_connected", row.witness_connected},
                           {"witness_general", row.witness_general}});
    return j.dump(2) + "\n";
  }
  if (format == OutputFormat::kCsv) {
    std::ostringstream out;
    out << "n,connected,general,formula,meets_lower_bound,modes_equal,"
           "matches_formula,witness_connected,witness_general\n";
    for (const auto& row : report.rows)
      out << row.n << ',' << row.connected_value << ',' << row.general_value
          << ',' << row.formula_value << ','
          << (row.meets_lower_bound ? "yes" : "NO") << ','
          << (row.modes_equal ? "yes" : "no") << ','
          << (row.matches_formula ? "yes" : "no") << ','
          << row.witness_connected << ',' << row.witness_general << '\n';
    return out.str();
  }
  std::ostringstream out;
  out << std::setw(3) << "n" << std::setw(10) << "connected" << std::setw(9)
      << "general" << std::setw(9) << "formula" << std::setw(9) << "bound"
      << std::setw(7) << "equal" << std::setw(9) << "formula?"
      << "  witness\n";
  for (const auto& row : report.rows)
    out << std::setw(3) << row.n << std::setw(10) << row.connected_value
        << std::setw(9) << row.general_value << std::setw(9)
        << row.formula_value << std::setw(9)
        << (row.meets_lower_bound ? "ok" : "VIOLATED") << std::setw(7)
        << (row.modes_equal ? "yes" : "no") << std::setw(9)
        << (row.matches_formula ? "yes" : "no") << "  "
        << row.witness_general << '\n';
  return out.str();
}

}  // namespace opturan
