#include <benchmark/benchmark.h>

#include "hla/deriv.hpp"
#include "hla/dghla.hpp"
#include "hla/fixtures.hpp"
#include "hla/rep.hpp"

namespace {

using namespace hla;

Matrix random_square(std::size_t n, fixtures::RationalStream& rs) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rs.next();
    return m;
}

void BM_rref(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    fixtures::RationalStream rs(1);
    const Matrix m = random_square(n, rs);
    for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_rref)->Arg(4)->Arg(8)->Arg(16);

void BM_verify_sl2_twist(benchmark::State& state) {
    const HomLieAlgebra alg =
        yau_twist(fixtures::sl2(), fixtures::sl2_diag_automorphism(Rational(7, 3)));
    for (auto _ : state) benchmark::DoNotOptimize(verify(alg).all_pass());
}
BENCHMARK(BM_verify_sl2_twist);

void BM_derivation_space(benchmark::State& state) {
    const HomLieAlgebra alg = fixtures::heisenberg3();
    for (auto _ : state) benchmark::DoNotOptimize(derivation_space(alg).space.dim());
}
BENCHMARK(BM_derivation_space);

void BM_coboundary_matrix_deg2(benchmark::State& state) {
    const Representation ad = adjoint(fixtures::sl2());
    for (auto _ : state) benchmark::DoNotOptimize(coboundary_matrix(ad, 2));
}
BENCHMARK(BM_coboundary_matrix_deg2);

void BM_build_der2(benchmark::State& state) {
    const HomLieAlgebra alg = fixtures::heisenberg3();
    for (auto _ : state) benchmark::DoNotOptimize(check_homlie2(build_der2(alg)).all_pass());
}
BENCHMARK(BM_build_der2);

void BM_mc_check(benchmark::State& state) {
    CocyclePair c;
    c.g = fixtures::sl2();
    c.h = fixtures::abelian(2);
    c.rho.assign(3, Matrix(2, 2));
    c.rho[0] = Matrix::diagonal({Rational(1), Rational(-1)});
    c.rho[1](0, 1) = 1;
    c.rho[2](1, 0) = 1;
    c.omega = Cochain(2, 3, 2);
    const DghlaContext ctx = DghlaContext::direct_sum(c.g, c.h);
    const GradedCochain alpha = pack_cocycle(c);
    for (auto _ : state) benchmark::DoNotOptimize(mc_check(ctx, alpha).all_pass());
}
BENCHMARK(BM_mc_check);

void BM_circle_product(benchmark::State& state) {
    const DghlaContext ctx = DghlaContext::direct_sum(fixtures::sl2(), fixtures::heisenberg3());
    fixtures::RationalStream rs(2);
    GradedCochain p(2, 6, 6);
    for (const Tuple& t : increasing_tuples(6, 2)) {
        Vec v(6);
        for (auto& x : v) x = rs.next();
        p.set(t, v);
    }
    for (auto _ : state) benchmark::DoNotOptimize(circle(ctx, p, p));
}
BENCHMARK(BM_circle_product);

}  // namespace

BENCHMARK_MAIN();
