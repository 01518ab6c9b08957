#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "qident/pochhammer.hpp"
#include "qident/qseries.hpp"

namespace qident {

template <Scalar S>
struct JacobiParams {
    S a, b;
};

/// J_n(x|a,b) = (1/n!) sum_m C(n,m) (a+b+n-1)^(m) (b+m)^(n-m) (x-1)^m / 2^m,
/// orthogonal on [-1,1] against the shifted beta density h(x|a,b).
template <Scalar S>
S jacobi_eval(int n, const S& x, const JacobiParams<S>& p) {
    const S one = make_like(x, 1);
    const S abn = p.a + p.b + make_like(x, n - 1);
    S sum = make_like(x, 0);
    S shifted = one;  // ((x-1)/2)^m
    const S step = (x - one) / make_like(x, 2);
    for (int m = 0; m <= n; ++m) {
        sum = sum + make_like(x, binomial(n, m)) * rising(abn, m) * rising(p.b + make_like(x, m), n - m) * shifted;
        shifted = shifted * step;
    }
    return sum / make_like(x, factorial(n));
}

/// K_n(x|a,b): the same sum without the 2^m divisor; orthogonal on [0,1].
/// Equivalently K_n(x|a,b) = J_n(2x-1|a,b).
template <Scalar S>
S jacobi_shifted_eval(int n, const S& x, const JacobiParams<S>& p) {
    const S one = make_like(x, 1);
    const S abn = p.a + p.b + make_like(x, n - 1);
    S sum = make_like(x, 0);
    S shifted = one;  // (x-1)^m
    for (int m = 0; m <= n; ++m) {
        sum = sum + make_like(x, binomial(n, m)) * rising(abn, m) * rising(p.b + make_like(x, m), n - m) * shifted;
        shifted = shifted * (x - one);
    }
    return sum / make_like(x, factorial(n));
}

/// e_{n,m}(a,b) = C(n,m) (a+b+n-1)^(m) (b+m)^(n-m) / n!  -- the (x-1)-basis coefficients of J_n.
template <Scalar S>
S e_coeff(int n, int m, const JacobiParams<S>& p) {
    if (m < 0 || m > n) throw std::invalid_argument("e_coeff: need 0 <= m <= n");
    const S mm = make_like(p.a, m);
    return make_like(p.a, binomial(n, m)) * rising(p.a + p.b + make_like(p.a, n - 1), m) *
           rising(p.b + mm, n - m) / make_like(p.a, factorial(n));
}

/// etilde_{n,m}(a,b) = (-1)^{n-m} n! (b+m)^(n-m) / ((n-m)! (a+b+m-1)^(m) (a+b+2m)^(n-m)).
/// Inverse-triangle partner of e_coeff; throws on a vanishing denominator.
template <Scalar S>
S etilde_coeff(int n, int m, const JacobiParams<S>& p) {
    if (m < 0 || m > n) throw std::invalid_argument("etilde_coeff: need 0 <= m <= n");
    const S mm = make_like(p.a, m);
    const S den = rising(p.a + p.b + mm - make_like(p.a, 1), m) * rising(p.a + p.b + mm + mm, n - m);
    if (scalar_is_zero(den)) throw std::domain_error("singular parameters");
    const S num = make_like(p.a, factorial(n)) * rising(p.b + mm, n - m) / make_like(p.a, factorial(n - m));
    const S v = num / den;
    return (n - m) % 2 == 0 ? v : -v;
}

/// Same value through the single-Pochhammer denominator (a+b+m-1)^(n+1); larger pole set,
/// kept as a cross-check route.
template <Scalar S>
S etilde_coeff_alt(int n, int m, const JacobiParams<S>& p) {
    if (m < 0 || m > n) throw std::invalid_argument("etilde_coeff_alt: need 0 <= m <= n");
    const S mm = make_like(p.a, m);
    const S den = rising(p.a + p.b + mm - make_like(p.a, 1), n + 1);
    if (scalar_is_zero(den)) throw std::domain_error("singular parameters");
    const S num = make_like(p.a, factorial(n)) * rising(p.b + mm, n - m) *
                  (p.a + p.b + mm + mm - make_like(p.a, 1)) / make_like(p.a, factorial(n - m));
    const S v = num / den;
    return (n - m) % 2 == 0 ? v : -v;
}

/// c_{n,j}(source; target) = sum_{k=j}^{n} e_{n,k}(source) etilde_{k,j}(target):
/// J_n(x|source) = sum_j c_{n,j} J_j(x|target).
template <Scalar S>
S conn_coeff(int n, int j, const JacobiParams<S>& source, const JacobiParams<S>& target) {
    if (j < 0 || j > n) throw std::invalid_argument("conn_coeff: need 0 <= j <= n");
    S sum = make_like(source.a, 0);
    for (int k = j; k <= n; ++k) sum = sum + e_coeff(n, k, source) * etilde_coeff(k, j, target);
    return sum;
}

/// Row n of the e-triangle, O(n^2).
template <Scalar S>
std::vector<S> e_row(int n, const JacobiParams<S>& p) {
    std::vector<S> row;
    row.reserve(n + 1);
    for (int k = 0; k <= n; ++k) row.push_back(e_coeff(n, k, p));
    return row;
}

/// Lower triangle etilde_{k,j} for 0 <= j <= k <= N in O(N^2), using the column
/// recurrence etilde_{k+1,j} = etilde_{k,j} * -(k+1)(b+k) / ((k-j+1)(a+b+j+k)).
template <Scalar S>
std::vector<std::vector<S>> etilde_table(int N, const JacobiParams<S>& p) {
    std::vector<std::vector<S>> t(N + 1);
    for (int k = 0; k <= N; ++k) t[k].assign(k + 1, make_like(p.a, 0));
    for (int j = 0; j <= N; ++j) {
        // diagonal entry j!/((a+b+j-1)^(j))
        const S den = rising(p.a + p.b + make_like(p.a, j - 1), j);
        if (scalar_is_zero(den)) throw std::domain_error("singular parameters");
        t[j][j] = make_like(p.a, factorial(j)) / den;
        for (int k = j; k < N; ++k) {
            const S step_den =
                make_like(p.a, k - j + 1) * (p.a + p.b + make_like(p.a, j + k));
            if (scalar_is_zero(step_den)) throw std::domain_error("singular parameters");
            t[k + 1][j] = t[k][j] * (make_like(p.a, -(k + 1)) * (p.b + make_like(p.a, k))) / step_den;
        }
    }
    return t;
}

/// All c_{n,j}, j = 0..n, in O(n^2).
template <Scalar S>
std::vector<S> conn_row(int n, const JacobiParams<S>& source, const JacobiParams<S>& target) {
    const auto e = e_row(n, source);
    const auto et = etilde_table(n, target);
    std::vector<S> row;
    row.reserve(n + 1);
    for (int j = 0; j <= n; ++j) {
        S sum = make_like(source.a, 0);
        for (int k = j; k <= n; ++k) sum = sum + e[k] * et[k][j];
        row.push_back(std::move(sum));
    }
    return row;
}

/// Full lower triangle of connection coefficients up to row N.
template <Scalar S>
std::vector<std::vector<S>> conn_triangle(int N, const JacobiParams<S>& source,
                                          const JacobiParams<S>& target) {
    std::vector<std::vector<S>> rows;
    rows.reserve(N + 1);
    const auto et = etilde_table(N, target);
    for (int n = 0; n <= N; ++n) {
        const auto e = e_row(n, source);
        std::vector<S> row;
        row.reserve(n + 1);
        for (int j = 0; j <= n; ++j) {
            S sum = make_like(source.a, 0);
            for (int k = j; k <= n; ++k) sum = sum + e[k] * et[k][j];
            row.push_back(std::move(sum));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Lower-triangular table of connection coefficients up to degree N.
class ConnectionMatrix {
public:
    static ConnectionMatrix build(int N, const JacobiParams<Rational>& source,
                                  const JacobiParams<Rational>& target);

    int size() const { return static_cast<int>(rows_.size()); }  // N+1
    const Rational& at(int n, int j) const { return rows_.at(n).at(j); }

    /// Triangular product: (this * other)_{n,j} = sum_k this_{n,k} other_{k,j}.
    ConnectionMatrix multiply(const ConnectionMatrix& other) const {
        if (size() != other.size()) throw std::invalid_argument("size mismatch");
        ConnectionMatrix r;
        r.rows_.resize(rows_.size());
        for (int n = 0; n < size(); ++n) {
            for (int j = 0; j <= n; ++j) {
                Rational s = 0;
                for (int k = j; k <= n; ++k) s += rows_[n][k] * other.rows_[k][j];
                r.rows_[n].push_back(s);
            }
        }
        return r;
    }

    bool is_identity() const {
        for (int n = 0; n < size(); ++n)
            for (int j = 0; j <= n; ++j)
                if (rows_[n][j] != Rational(n == j ? 1 : 0)) return false;
        return true;
    }

    bool operator==(const ConnectionMatrix& other) const { return rows_ == other.rows_; }

private:
    std::vector<std::vector<Rational>> rows_;
};

inline ConnectionMatrix conn_matrix(int N, const JacobiParams<Rational>& source,
                                    const JacobiParams<Rational>& target) {
    return ConnectionMatrix::build(N, source, target);
}

/// The closed connection-coefficient forms for the special parameter patterns.
enum class CconCase { ebb, oebb, ea12, oea12, ea32, oea32, a12, a32, ab, ba, aabb };

Rational ccon_closed(CconCase c, int n, int j, const Rational& a, const Rational& b);

/// k-th moment of h(x|a,b) on [-1,1]; exact via B(a+j,b)/B(a,b) = (a)^(j)/(a+b)^(j).
Rational beta_moment(int k, const JacobiParams<Rational>& p);

/// Squared L2 norm of J_n against h(x|a,b); 1 at n = 0.
template <Scalar S>
S jacobi_norm(int n, const JacobiParams<S>& p) {
    if (n == 0) return make_like(p.a, 1);
    const S den = make_like(p.a, factorial(n)) * (p.a + p.b + make_like(p.a, 2 * n - 1)) *
                  rising(p.a + p.b, n - 1);
    if (scalar_is_zero(den)) throw std::domain_error("singular parameters");
    return rising(p.a, n) * rising(p.b, n) / den;
}

template <Scalar S>
S chebyshev_T(int n, const S& x) {
    S t0 = make_like(x, 1), t1 = x;
    if (n == 0) return t0;
    for (int m = 1; m < n; ++m) {
        S t2 = make_like(x, 2) * x * t1 - t0;
        t0 = t1;
        t1 = t2;
    }
    return t1;
}

template <Scalar S>
S chebyshev_U(int n, const S& x) {
    S u0 = make_like(x, 1), u1 = make_like(x, 2) * x;
    if (n == 0) return u0;
    for (int m = 1; m < n; ++m) {
        S u2 = make_like(x, 2) * x * u1 - u0;
        u0 = u1;
        u1 = u2;
    }
    return u1;
}

/// Result of expanding h(x|c,d)/h(x|a,b) in the J_n(x|a,b) basis, for integer
/// offsets c-a, d-b (the ratio is then a polynomial and the expansion terminates).
/// Both coefficient-argument orders are evaluated; `order` names the convergent one.
struct DensityExpansionResult {
    enum class Order { ab_cd, cd_ab };
    bool converged = false;
    Order order = Order::ab_cd;
    int terms_used = 0;
    Real residual;
    Real residual_other;  // the losing convention's residual after max_terms
};

DensityExpansionResult density_ratio_expansion_check(const JacobiParams<Rational>& source,
                                                     const JacobiParams<Rational>& target,
                                                     const Rational& x, const PrecisionContext& ctx);

/// Exact h(x|c,d)/h(x|a,b) for integer offsets; errors otherwise.
Rational density_ratio_exact(const JacobiParams<Rational>& source, const JacobiParams<Rational>& target,
                             const Rational& x);

}  // namespace qident
