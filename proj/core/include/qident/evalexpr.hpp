#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "qident/rational.hpp"
#include "qident/real.hpp"

namespace qident {

/// Parse/lookup failure; `offset` is 1-based into the expression text.
struct EvalError : std::runtime_error {
    EvalError(const std::string& msg, std::size_t offset_)
        : std::runtime_error(msg), offset(offset_) {}
    std::size_t offset;
};

struct EvalResult {
    bool exact = true;
    Rational rational;           // exact path
    Real real{64};               // numeric path
    std::string rendered;        // ready-to-print form
};

/// Flat call syntax: name(positional, ... ; key=value, ...). Values are integers,
/// p/q rationals, or plain decimals (parsed exactly). No nesting.
/// Examples: "rising(1/2,3)", "qbinom(4,2,2)", "jacobi(3, 1/4; a=1, b=2)".
EvalResult eval_expression(const std::string& expr, const PrecisionContext& ctx);

}  // namespace qident
