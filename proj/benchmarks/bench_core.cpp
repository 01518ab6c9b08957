// Microbenchmarks for the evaluation-strategy choices: recurrence vs quotient
// forms, per-coefficient vs per-row connection-coefficient construction, and the
// exact vs arbitrary-precision scalar paths.

#include <benchmark/benchmark.h>

#include "qident/families.hpp"
#include "qident/jacobi.hpp"
#include "qident/qseries.hpp"

using namespace qident;

namespace {

const Rational kQ(3, 5);
const Rational kX(3, 10);

void BM_rising_rational(benchmark::State& state) {
    const Rational x(7, 5);
    for (auto _ : state) benchmark::DoNotOptimize(rising(x, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_rising_rational)->Arg(16)->Arg(64);

void BM_qbinomial_row(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(q_binomial_row(n, kQ));
}
BENCHMARK(BM_qbinomial_row)->Arg(8)->Arg(16)->Arg(32);

void BM_qbinomial_factorial_quotient(benchmark::State& state) {
    // the textbook quotient; valid off the q-factorial zero set only
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Rational acc = 0;
        for (int k = 0; k <= n; ++k)
            acc += q_factorial(n, kQ) / (q_factorial(k, kQ) * q_factorial(n - k, kQ));
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_qbinomial_factorial_quotient)->Arg(8)->Arg(16)->Arg(32);

void BM_jacobi_eval_rational(benchmark::State& state) {
    const JacobiParams<Rational> p{Rational(3, 2), Rational(5, 4)};
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(jacobi_eval(n, kX, p));
}
BENCHMARK(BM_jacobi_eval_rational)->Arg(8)->Arg(16);

void BM_jacobi_eval_real(benchmark::State& state) {
    const JacobiParams<Real> p{Real(Rational(3, 2), 256), Real(Rational(5, 4), 256)};
    const Real x(kX, 256);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(jacobi_eval(n, x, p));
}
BENCHMARK(BM_jacobi_eval_real)->Arg(8)->Arg(16);

void BM_conn_coeff_single(benchmark::State& state) {
    const JacobiParams<Rational> ab{Rational(1, 3), Rational(7, 5)}, cd{Rational(9, 4), Rational(1, 2)};
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Rational acc = 0;
        for (int j = 0; j <= n; ++j) acc += conn_coeff(n, j, ab, cd);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_conn_coeff_single)->Arg(8)->Arg(12);

void BM_conn_row(benchmark::State& state) {
    const JacobiParams<Rational> ab{Rational(1, 3), Rational(7, 5)}, cd{Rational(9, 4), Rational(1, 2)};
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(conn_row(n, ab, cd));
}
BENCHMARK(BM_conn_row)->Arg(8)->Arg(12);

void BM_qhermite_rational(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(qhermite_eval(n, kX, kQ));
}
BENCHMARK(BM_qhermite_rational)->Arg(32)->Arg(128);

void BM_qhermite_real(benchmark::State& state) {
    const Real x(kX, 256), q(kQ, 256);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(qhermite_eval(n, x, q));
}
BENCHMARK(BM_qhermite_real)->Arg(32)->Arg(128);

void BM_q_poch_inf(benchmark::State& state) {
    PrecisionContext ctx;
    const Real a(Rational(1, 3), 256), q(Rational(1, 2), 256);
    for (auto _ : state) benchmark::DoNotOptimize(q_poch_inf(a, q, ctx));
}
BENCHMARK(BM_q_poch_inf);

void BM_kernel_w_product(benchmark::State& state) {
    PrecisionContext ctx;
    const Real x(Rational(3, 10), 256), y(Rational(1, 5), 256), a(Rational(2, 5), 256),
        q(Rational(1, 2), 256);
    for (auto _ : state) benchmark::DoNotOptimize(kernel_w_product(x, y, a, q, ctx));
}
BENCHMARK(BM_kernel_w_product);

void BM_aw_alpha(benchmark::State& state) {
    const Rational x(1, 10), y(2, 10), z(3, 10), r1(4, 10), r2(5, 10), q(6, 10);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(aw_alpha_eval(n, x, y, r1, z, r2, q));
}
BENCHMARK(BM_aw_alpha)->Arg(6)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
