// Microbenchmarks for the hot paths: polynomial arithmetic, gcd, exact
// determinants, and the minor-gcd scan.

#include <benchmark/benchmark.h>

#include "talex/invariant.hpp"
#include "talex/parse.hpp"

using namespace talex;

namespace {

const VarSet TZ = VarSet::of({kVarT, kVarZ});

LaurentPoly dense_poly(int degree) {
    std::vector<LaurentPoly::Term> terms;
    for (int i = 0; i <= degree; ++i)
        for (int j = 0; j <= degree; ++j) {
            Monomial m;
            m.exp[kVarT] = i;
            m.exp[kVarZ] = j;
            terms.push_back(LaurentPoly::Term{m, mpz_class((i * 7 + j * 3) % 5 - 2)});
        }
    return LaurentPoly::from_terms(TZ, std::move(terms));
}

void BM_poly_mul(benchmark::State& state) {
    LaurentPoly p = dense_poly(static_cast<int>(state.range(0)));
    LaurentPoly q = dense_poly(static_cast<int>(state.range(0)) + 1);
    for (auto _ : state) benchmark::DoNotOptimize(p * q);
}
BENCHMARK(BM_poly_mul)->Arg(4)->Arg(8)->Arg(12);

void BM_poly_gcd(benchmark::State& state) {
    LaurentPoly common = parse_poly("(1-z)^2*(1-t*z^2)", TZ);
    LaurentPoly p = common * parse_poly("1 - t*z^2 + 2*t*z^3 - t*z^4", TZ);
    LaurentPoly q = common * parse_poly("(1+t*z^3)^2*(1-z+z^2)^2", TZ);
    for (auto _ : state) benchmark::DoNotOptimize(gcd(p, q));
}
BENCHMARK(BM_poly_gcd);

void BM_det_printed_minor(benchmark::State& state) {
    AlexanderMatrix am = alexander_matrix(braid_group(4), tym(4));
    PolyMatrix m3 = am.without_column(2);
    std::vector<int> rows{0, 1, 4, 5, 6, 7, 10, 11};
    std::vector<int> cols{0, 1, 2, 3, 4, 5, 6, 7};
    PolyMatrix minor = minor_matrix(m3, rows, cols);
    for (auto _ : state) benchmark::DoNotOptimize(det(minor));
}
BENCHMARK(BM_det_printed_minor);

void BM_alexander_assembly(benchmark::State& state) {
    Presentation p = braid_group(static_cast<int>(state.range(0)));
    MatrixRep rep = tym(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(AlexanderMatrix(p, rep));
}
BENCHMARK(BM_alexander_assembly)->Arg(4)->Arg(6);

void BM_minor_gcd_b4(benchmark::State& state) {
    AlexanderMatrix am = alexander_matrix(braid_group(4), tym(4));
    PolyMatrix m3 = am.without_column(2);
    GcdStrategy strategy = GcdStrategy::exhaustive_scan(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(minor_gcd(m3, strategy));
}
BENCHMARK(BM_minor_gcd_b4)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
