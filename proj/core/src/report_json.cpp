#include "qident/report_json.hpp"

#include <sstream>

namespace qident {

nlohmann::ordered_json report_to_json(const AggregateReport& agg) {
    nlohmann::ordered_json doc;
    doc["config"] = {
        {"id_filter", agg.id_filter},
        {"seed", agg.config.seed},
        {"max_n", agg.config.max_n},
        {"trials", agg.config.trials},
        {"precision_bits", agg.config.ctx.precision_bits},
        {"tolerance_exp", agg.config.ctx.tolerance_exp},
        {"max_terms", agg.config.ctx.max_terms},
        {"max_product_factors", agg.config.ctx.max_product_factors},
    };
    auto reports = nlohmann::ordered_json::array();
    for (const auto& r : agg.reports) {
        nlohmann::ordered_json jr = {
            {"id", r.id},
            {"status", std::string(to_string(r.status))},
            {"points_tested", r.points_tested},
            {"residual_exact_zero", r.residual_exact_zero},
            {"max_residual", r.max_residual},
            {"terms_used", r.terms_used},
            {"seed", r.seed},
            {"probabilistic_fallback", r.probabilistic_fallback},
            {"elapsed_ms", r.elapsed_ms},
        };
        if (!r.witness.empty()) jr["witness"] = r.witness;
        if (!r.note.empty()) jr["note"] = r.note;
        reports.push_back(std::move(jr));
    }
    doc["reports"] = std::move(reports);
    doc["summary"] = {
        {"total", agg.total},
        {"proved_exact", agg.proved_exact},
        {"passed_numeric", agg.passed_numeric},
        {"failed", agg.failed},
        {"skipped", agg.skipped},
    };
    return doc;
}

std::string report_to_text(const AggregateReport& agg) {
    std::ostringstream os;
    for (const auto& r : agg.reports) {
        os << r.id << "  " << to_string(r.status) << "  points=" << r.points_tested;
        if (r.terms_used > 0) os << " terms=" << r.terms_used;
        if (!r.max_residual.empty()) os << " residual=" << r.max_residual;
        if (r.probabilistic_fallback) os << " [probabilistic]";
        if (!r.witness.empty()) os << "\n    witness: " << r.witness;
        os << "\n";
    }
    os << "summary: total=" << agg.total << " proved_exact=" << agg.proved_exact
       << " passed_numeric=" << agg.passed_numeric << " failed=" << agg.failed
       << " skipped=" << agg.skipped << "\n";
    return os.str();
}

}  // namespace qident
