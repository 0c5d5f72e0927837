#ifndef OPTURAN_REPORT_HPP
#define OPTURAN_REPORT_HPP

#include <string>

#include "opturan/constructions.hpp"
#include "opturan/search.hpp"

namespace opturan {

enum class OutputFormat { kTable, kCsv, kJson };

OutputFormat parse_format(const std::string& name);

/// MATCH / MISMATCH / NA. Exact predictions must agree; a lower bound
/// below the computed value is fine, above it is a MISMATCH.
std::string ex_status(const ExtremalResult& result, const TuranBound& bound);

/// Renderings carry only reproducible values (no timings), so equal
/// inputs give byte-equal output.
std::string render_ex_report(const ExtremalResult& result,
                             const TuranBound& bound, OutputFormat format);
std::string render_verify_report(const VerifyReport& report,
                                 OutputFormat format);
std::string render_probe_report(const ProbeReport& report,
                                OutputFormat format);

}  // namespace opturan

#endif
