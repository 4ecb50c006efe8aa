#pragma once

#include <json.hpp>
#include <string>

#include "tsecon/pipeline.hpp"

namespace tsecon {

// Machine-readable results. Numeric values are rounded to 12 significant
// digits before storage so serialized output is stable; the text report is
// rendered from this document, which keeps every printed cell consistent
// with its JSON counterpart.
nlohmann::ordered_json results_json(const ReportBundle& bundle);

// Run metadata: config echo, tool version, seed, synthetic-data note.
nlohmann::ordered_json run_meta_json(const ReportBundle& bundle);

// Plain-text report with the six tables, rendered from results_json output.
std::string render_report_text(const nlohmann::ordered_json& results);

// Writes report.txt, results.json, roots.svg and run_meta.json into
// `out_dir` (created if absent). Rewrites are byte-identical for identical
// bundles.
void emit_report(const ReportBundle& bundle, const std::string& out_dir);

}  // namespace tsecon
