#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "qident/evalexpr.hpp"
#include "qident/report_json.hpp"
#include "qident/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailedIdentity = 1;
constexpr int kExitUsage = 2;

const char* kind_name(qident::RecordKind k) {
    return k == qident::RecordKind::exact_polynomial ? "exact_polynomial" : "numeric_series";
}

int cmd_list(const std::string& filter) {
    for (const auto& rec : qident::catalog()) {
        if (rec.id.compare(0, filter.size(), filter) != 0) continue;
        std::cout << rec.id << "  [" << kind_name(rec.kind) << "]  anchor=" << rec.anchor;
        if (rec.kind == qident::RecordKind::exact_polynomial && rec.exact) {
            std::cout << "  vars:";
            for (const auto& v : rec.exact->vars) std::cout << " " << v.name << "(" << v.domain << ")";
        } else if (rec.series) {
            std::cout << "  params:";
            for (const auto& n : rec.series->param_names) std::cout << " " << n;
        }
        if (rec.negative_control) std::cout << "  [negative control]";
        std::cout << "\n    " << rec.display << "\n";
    }
    return kExitOk;
}

int cmd_verify(const std::string& filter, const qident::VerifyConfig& cfg, bool strict,
               const std::string& format, const std::string& output) {
    const auto agg = qident::verify_all(filter, cfg);
    if (strict && agg.total == 0) {
        std::cerr << "no matching identities\n";
        return kExitUsage;
    }
    std::string body = format == "json" ? qident::report_to_json(agg).dump(2) + "\n"
                                        : qident::report_to_text(agg);
    if (output.empty() || output == "-") {
        std::cout << body;
    } else {
        std::ofstream out(output);
        if (!out) {
            std::cerr << "cannot open output file: " << output << "\n";
            return kExitUsage;
        }
        out << body;
    }
    return agg.all_passed() ? kExitOk : kExitFailedIdentity;
}

int cmd_eval(const std::string& expr, const qident::PrecisionContext& ctx) {
    try {
        std::cout << qident::eval_expression(expr, ctx).rendered << "\n";
        return kExitOk;
    } catch (const qident::EvalError& e) {
        std::cerr << "parse error at offset " << e.offset << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "evaluation error: " << e.what() << "\n";
        return kExitFailedIdentity;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qident: exact and arbitrary-precision verification of the Pochhammer /"
                 " q-Pochhammer identity catalog"};
    app.require_subcommand(1);

    std::string filter;
    std::string format = "text";
    std::string output;
    std::string expr;
    bool strict = false;
    qident::VerifyConfig cfg;
    long precision_bits = 256, tolerance_exp = -80;
    int max_terms = 200, max_product_factors = 400;

    auto* list = app.add_subcommand("list", "print the identity catalog");
    list->add_option("--id-filter", filter, "id prefix filter");

    auto* verify = app.add_subcommand("verify", "run the verification engines");
    verify->add_option("--id-filter", filter, "id prefix filter");
    verify->add_option("--seed", cfg.seed, "sampler seed (default 42)");
    verify->add_option("--max-n", cfg.max_n, "override every record's level range (0 = per-record)");
    verify->add_option("--trials", cfg.trials, "joint samples per level for >=3 free variables");
    verify->add_option("--precision-bits", precision_bits, "working precision (default 256)");
    verify->add_option("--tolerance-exp", tolerance_exp, "tolerance = 2^exp (default -80)");
    verify->add_option("--max-terms", max_terms, "series term budget (default 200)");
    verify->add_option("--max-product-factors", max_product_factors, "infinite-product budget");
    verify->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--output", output, "write the report to a file instead of stdout");
    verify->add_flag("--strict", strict, "exit 2 when the filter matches nothing");

    auto* eval = app.add_subcommand("eval", "evaluate one operation, e.g. \"rising(1/2,3)\"");
    eval->add_option("expression", expr, "flat call expression")->required();
    eval->add_option("--precision-bits", precision_bits, "working precision for numeric results");
    eval->add_option("--tolerance-exp", tolerance_exp, "tolerance = 2^exp for truncations");
    eval->add_option("--max-product-factors", max_product_factors, "infinite-product budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        cfg.ctx = qident::PrecisionContext(precision_bits, tolerance_exp, max_terms, max_product_factors);
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return kExitUsage;
    }

    if (list->parsed()) return cmd_list(filter);
    if (verify->parsed()) return cmd_verify(filter, cfg, strict, format, output);
    if (eval->parsed()) return cmd_eval(expr, cfg.ctx);
    return kExitUsage;
}
