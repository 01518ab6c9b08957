#include <doctest.h>

#include "qident/evalexpr.hpp"

using namespace qident;

TEST_CASE("eval grammar: exact path") {
    PrecisionContext ctx;
    CHECK(eval_expression("rising(1/2,3)", ctx).rendered == "15/8");
    CHECK(eval_expression("qbinom(4,2,2)", ctx).rendered == "35");
    CHECK(eval_expression("rat(6,4)", ctx).rendered == "3/2");
    CHECK(eval_expression("falling(3,2)", ctx).rendered == "6");
    CHECK(eval_expression("binomial(5,2)", ctx).rendered == "10");
    CHECK(eval_expression("stirling1(3,1)", ctx).rendered == "2");
    CHECK(eval_expression("stirling2(3,2)", ctx).rendered == "3");
    CHECK(eval_expression("qpoch(1/2,1/3,2)", ctx).rendered == "5/12");
    CHECK(eval_expression("kl(1, 2/3)", ctx).rendered == "1/9");
    CHECK(eval_expression("chebt(2, 3/4)", ctx).rendered == "1/8");
    CHECK(eval_expression("qhermite(2, 0, 3/5)", ctx).rendered == "-2/5");
    // named arguments after the semicolon
    CHECK(eval_expression("jacobi(1, 1/4; a=1, b=1)", ctx).rendered == "1/4");
    CHECK(eval_expression("jacobi(1, 1/4; b=1, a=1)", ctx).rendered == "1/4");
    // decimals parse exactly
    CHECK(eval_expression("rising(0.5, 3)", ctx).rendered == "15/8");
}

TEST_CASE("eval grammar: numeric path") {
    PrecisionContext ctx;
    const auto r = eval_expression("qpochinf(1/3, 1/2)", ctx);
    CHECK(!r.exact);
    CHECK(r.rendered.find("e-") != std::string::npos);
    CHECK(r.rendered.find("~2^") != std::string::npos);
    const auto fh = eval_expression("fh(0, 0)", ctx);
    CHECK(!fh.exact);
    // 2/pi
    CHECK((fh.real - Real(2, 256) / Real::pi(256)).abs() < Real::pow2(-200, 256));
}

TEST_CASE("eval grammar: errors carry 1-based offsets") {
    PrecisionContext ctx;
    try {
        eval_expression("rising(1/2,)", ctx);
        FAIL("expected EvalError");
    } catch (const EvalError& e) {
        CHECK(e.offset == 12);
    }
    CHECK_THROWS_AS(eval_expression("nosuchfn(1)", ctx), EvalError);
    CHECK_THROWS_AS(eval_expression("rising(1/2", ctx), EvalError);
    CHECK_THROWS_AS(eval_expression("rising(1/2,3) junk", ctx), EvalError);
    CHECK_THROWS_AS(eval_expression("(1,2)", ctx), EvalError);
    // wrong argument kinds are invalid_argument, not parse errors
    CHECK_THROWS_AS(eval_expression("rising(1/2, 1/3)", ctx), std::invalid_argument);
    CHECK_THROWS_AS(eval_expression("jacobi(1, 1/4; a=1)", ctx), std::invalid_argument);
}
