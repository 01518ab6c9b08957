#pragma once

#include <json.hpp>

#include "qident/verify.hpp"

namespace qident {

/// JSON document for one aggregate run:
/// { "config": {...}, "reports": [...], "summary": {...} }.
/// Deterministic for a fixed configuration except for the per-report "elapsed_ms".
nlohmann::ordered_json report_to_json(const AggregateReport& agg);

/// Plain-text rendering: one line per report plus a summary footer.
std::string report_to_text(const AggregateReport& agg);

}  // namespace qident
