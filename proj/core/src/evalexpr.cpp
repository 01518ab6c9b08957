#include "qident/evalexpr.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <sstream>
#include <vector>

#include "qident/families.hpp"
#include "qident/jacobi.hpp"
#include "qident/pochhammer.hpp"
#include "qident/qseries.hpp"

namespace qident {
namespace {

struct Parser {
    const std::string& s;
    std::size_t i = 0;

    [[noreturn]] void fail(const std::string& msg, std::size_t at) const { throw EvalError(msg, at + 1); }

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool at_end() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    void expect(char c) {
        skip_ws();
        if (i >= s.size() || s[i] != c) fail(std::string("expected '") + c + "'", i);
        ++i;
    }
    std::string ident() {
        skip_ws();
        const std::size_t start = i;
        while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
        if (i == start) fail("expected identifier", start);
        return s.substr(start, i - start);
    }
    Rational value() {
        skip_ws();
        const std::size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        bool digits = false;
        while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.' || s[i] == '/')) {
            digits = true;
            ++i;
        }
        if (!digits) fail("expected value", start);
        try {
            return Rational::parse(s.substr(start, i - start));
        } catch (const std::exception&) {
            fail("malformed number", start);
        }
    }
};

struct Call {
    std::string name;
    std::size_t name_at = 0;
    std::vector<Rational> pos;
    std::map<std::string, Rational> named;
};

Call parse_call(const std::string& text) {
    Parser p{text};
    Call c;
    p.skip_ws();
    c.name_at = p.i;
    c.name = p.ident();
    p.expect('(');
    if (p.peek() != ')') {
        c.pos.push_back(p.value());
        while (p.peek() == ',') {
            p.expect(',');
            c.pos.push_back(p.value());
        }
        if (p.peek() == ';') {
            p.expect(';');
            while (true) {
                const std::string key = p.ident();
                p.expect('=');
                c.named[key] = p.value();
                if (p.peek() != ',') break;
                p.expect(',');
            }
        }
    }
    p.expect(')');
    if (!p.at_end()) p.fail("trailing input", p.i);
    return c;
}

long as_int(const Rational& v, const char* what) {
    if (!v.is_integer() || !v.num().fits_slong_p())
        throw std::invalid_argument(std::string("argument must be an integer: ") + what);
    return v.num().get_si();
}

std::string render_exact(const Rational& v) { return v.str(); }

std::string render_real(const Real& v, const PrecisionContext& ctx) {
    const int digits = static_cast<int>(static_cast<double>(ctx.precision_bits) * 0.30103) - 2;
    std::string out = v.str(std::max(10, std::min(digits, 48)));
    if (!v.is_zero()) {
        std::ostringstream os;
        os << out << " (~2^" << v.exp2_floor() << ")";
        return os.str();
    }
    return out;
}

EvalResult exact_result(Rational v) {
    EvalResult r;
    r.exact = true;
    r.rendered = render_exact(v);
    r.rational = std::move(v);
    return r;
}

EvalResult real_result(Real v, const PrecisionContext& ctx) {
    EvalResult r;
    r.exact = false;
    r.rendered = render_real(v, ctx);
    r.real = std::move(v);
    return r;
}

// pull named-or-positional arguments: positional fill the declared order, named override
Rational arg(const Call& c, std::size_t pos_index, const char* name) {
    const auto it = c.named.find(name);
    if (it != c.named.end()) return it->second;
    if (pos_index < c.pos.size()) return c.pos[pos_index];
    throw std::invalid_argument(std::string("missing argument: ") + name);
}

}  // namespace

EvalResult eval_expression(const std::string& expr, const PrecisionContext& ctx) {
    const Call c = parse_call(expr);
    using JP = JacobiParams<Rational>;
    const auto& A = [&](std::size_t i, const char* n) { return arg(c, i, n); };

    if (c.name == "rat") return exact_result(rat(as_int(A(0, "n"), "n"), as_int(A(1, "d"), "d")));
    if (c.name == "rising") return exact_result(rising(A(0, "x"), static_cast<int>(as_int(A(1, "n"), "n"))));
    if (c.name == "falling") return exact_result(falling(A(0, "x"), static_cast<int>(as_int(A(1, "n"), "n"))));
    if (c.name == "binomial")
        return exact_result(Rational(binomial(as_int(A(0, "n"), "n"), as_int(A(1, "k"), "k"))));
    if (c.name == "stirling1" || c.name == "stirling2") {
        const int n = static_cast<int>(as_int(A(0, "n"), "n")), j = static_cast<int>(as_int(A(1, "j"), "j"));
        if (n < 0 || j < 0 || j > n) return exact_result(Rational(0));
        const auto t = stirling_table(
            c.name == "stirling1" ? StirlingKind::first_unsigned : StirlingKind::second, n);
        return exact_result(Rational(t.value(n, j)));
    }
    if (c.name == "qnum") return exact_result(q_number(static_cast<int>(as_int(A(0, "n"), "n")), A(1, "q")));
    if (c.name == "qfact")
        return exact_result(q_factorial(static_cast<int>(as_int(A(0, "n"), "n")), A(1, "q")));
    if (c.name == "qbinom")
        return exact_result(q_binomial(static_cast<int>(as_int(A(0, "n"), "n")),
                                       static_cast<int>(as_int(A(1, "k"), "k")), A(2, "q")));
    if (c.name == "qpoch")
        return exact_result(q_poch(A(0, "a"), A(1, "q"), static_cast<int>(as_int(A(2, "n"), "n"))));
    if (c.name == "qpochinf")
        return real_result(q_poch_inf(Real(A(0, "a"), ctx.precision_bits),
                                      Real(A(1, "q"), ctx.precision_bits), ctx),
                           ctx);
    if (c.name == "kv") return exact_result(kernel_v(A(0, "x"), A(1, "a")));
    if (c.name == "kl") return exact_result(kernel_l(A(0, "x"), A(1, "a")));
    if (c.name == "kw") return exact_result(kernel_w(A(0, "x"), A(1, "y"), A(2, "a")));
    if (c.name == "jacobi")
        return exact_result(jacobi_eval(static_cast<int>(as_int(A(0, "n"), "n")), A(1, "x"),
                                        JP{A(2, "a"), A(3, "b")}));
    if (c.name == "jacobishift")
        return exact_result(jacobi_shifted_eval(static_cast<int>(as_int(A(0, "n"), "n")), A(1, "x"),
                                                JP{A(2, "a"), A(3, "b")}));
    if (c.name == "ecoeff")
        return exact_result(e_coeff(static_cast<int>(as_int(A(0, "n"), "n")),
                                    static_cast<int>(as_int(A(1, "m"), "m")), JP{A(2, "a"), A(3, "b")}));
    if (c.name == "etilde")
        return exact_result(etilde_coeff(static_cast<int>(as_int(A(0, "n"), "n")),
                                         static_cast<int>(as_int(A(1, "m"), "m")),
                                         JP{A(2, "a"), A(3, "b")}));
    if (c.name == "conn")
        return exact_result(conn_coeff(static_cast<int>(as_int(A(0, "n"), "n")),
                                       static_cast<int>(as_int(A(1, "j"), "j")),
                                       JP{A(2, "a"), A(3, "b")}, JP{A(4, "c"), A(5, "d")}));
    if (c.name == "betamoment")
        return exact_result(beta_moment(static_cast<int>(as_int(A(0, "k"), "k")), JP{A(1, "a"), A(2, "b")}));
    if (c.name == "jacobinorm")
        return exact_result(jacobi_norm(static_cast<int>(as_int(A(0, "n"), "n")), JP{A(1, "a"), A(2, "b")}));
    if (c.name == "chebt")
        return exact_result(chebyshev_T(static_cast<int>(as_int(A(0, "n"), "n")), A(1, "x")));
    if (c.name == "chebu")
        return exact_result(chebyshev_U(static_cast<int>(as_int(A(0, "n"), "n")), A(1, "x")));
    if (c.name == "qhermite")
        return exact_result(qhermite_eval(static_cast<int>(as_int(A(0, "n"), "n")), A(1, "x"), A(2, "q")));
    if (c.name == "bpoly")
        return exact_result(bpoly_eval(static_cast<int>(as_int(A(0, "n"), "n")), A(1, "x"), A(2, "q")));
    if (c.name == "rogers")
        return exact_result(rogers_eval(static_cast<int>(as_int(A(0, "n"), "n")), A(1, "x"), A(2, "beta"),
                                        A(3, "q")));
    if (c.name == "asc")
        return exact_result(asc_eval(static_cast<int>(as_int(A(0, "n"), "n")), A(1, "x"), A(2, "y"),
                                     A(3, "rho"), A(4, "q")));
    if (c.name == "gpoly")
        return exact_result(g_eval(static_cast<int>(as_int(A(0, "n"), "n")), A(1, "x"), A(2, "y"),
                                   A(3, "rho"), A(4, "q")));
    if (c.name == "awalpha")
        return exact_result(aw_alpha_eval(static_cast<int>(as_int(A(0, "n"), "n")), A(1, "x"), A(2, "y"),
                                          A(3, "rho1"), A(4, "z"), A(5, "rho2"), A(6, "q")));
    if (c.name == "fh") {
        DensitySpec spec{DensityFamily::f_h, {A(1, "q")}, ctx};
        const Rational pt[] = {A(0, "x")};
        return real_result(density_eval(spec, pt), ctx);
    }
    if (c.name == "fc") {
        DensitySpec spec{DensityFamily::f_c, {A(1, "beta"), A(2, "q")}, ctx};
        const Rational pt[] = {A(0, "x")};
        return real_result(density_eval(spec, pt), ctx);
    }
    if (c.name == "fcn") {
        DensitySpec spec{DensityFamily::f_cn, {A(2, "rho"), A(3, "q")}, ctx};
        const Rational pt[] = {A(0, "x"), A(1, "y")};
        return real_result(density_eval(spec, pt), ctx);
    }
    if (c.name == "fc2n") {
        DensitySpec spec{DensityFamily::f_c2n, {A(3, "rho1"), A(4, "rho2"), A(5, "q")}, ctx};
        const Rational pt[] = {A(0, "x"), A(1, "y"), A(2, "z")};
        return real_result(density_eval(spec, pt), ctx);
    }
    throw EvalError("unknown function: " + c.name, c.name_at + 1);
}

}  // namespace qident
