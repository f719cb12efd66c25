#include <benchmark/benchmark.h>

#include <vector>

#include "nullflat/curve_spec.hpp"
#include "nullflat/flat_maps.hpp"
#include "nullflat/oracle.hpp"
#include "nullflat/planner.hpp"
#include "nullflat/rat_poly.hpp"

using namespace nullflat;

static void BM_jet_eval(benchmark::State& state) {
    const CurveSpec spec = CurveSpec::parse("poly:0,0,0,1,1+sin:0.3,2+exp:0.2,0.5");
    double tau = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(spec.eval_jet(tau, kDefaultJetOrder));
        tau += 1e-6;
    }
}
BENCHMARK(BM_jet_eval);

static void BM_jet_compose(benchmark::State& state) {
    const CurveSpec sigma = CurveSpec::parse("poly:0.1,1.2,0,0.05");
    const CurveSpec f = CurveSpec::parse("poly:0,0,0,1,1");
    const Jet sjet = sigma.eval_jet(0.4, kDefaultJetOrder);
    const Jet fjet = f.eval_jet(sjet.value(), kDefaultJetOrder);
    for (auto _ : state) benchmark::DoNotOptimize(compose(fjet, sjet));
}
BENCHMARK(BM_jet_compose);

static void BM_r2n_germ(benchmark::State& state) {
    FlatInputR21 input;
    input.f = CurveSpec::parse("poly:0,0,0,1,1");
    input.extras = {CurveSpec::parse("poly:0,2"), CurveSpec::parse("poly:0,1.5"),
                    CurveSpec::parse("sin:0.2,1+poly:0,3")};
    input.sigma = CurveSpec::parse("poly:0,1.1,0,0.02");
    double tau = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(r2n_map(input, tau, 3));
        tau += 1e-6;
    }
}
BENCHMARK(BM_r2n_germ);

static void BM_invert(benchmark::State& state) {
    FlatInputR21 input;
    input.f = CurveSpec::parse("poly:0,0,0,1,1");
    const VecJet germ = r2n_map(input, 0.7, 1);
    for (auto _ : state) benchmark::DoNotOptimize(invert_r21(germ, 0.0));
}
BENCHMARK(BM_invert);

static void BM_oracle_expand_deg10(benchmark::State& state) {
    using namespace nullflat::exact;
    std::vector<Rational> coeffs;
    for (int i = 0; i <= 10; ++i) coeffs.emplace_back(i - 5, i + 1);
    const RatPoly f(coeffs);
    for (auto _ : state) {
        const PolyCurve curve = poly_expand_r21(f);
        benchmark::DoNotOptimize(poly_null_residual(curve));
    }
}
BENCHMARK(BM_oracle_expand_deg10);

static void BM_plan_r21(benchmark::State& state) {
    BoundaryProblem problem;
    problem.space = SpaceTag::R21;
    problem.from = PseudoVec{{0, 0, 0}, sig_r2n(1)};
    problem.to = PseudoVec{{-2, 5, 2}, sig_r2n(1)};
    problem.t0 = 0.0;
    problem.t1 = 1.0;
    for (auto _ : state) benchmark::DoNotOptimize(plan(problem, 11));
}
BENCHMARK(BM_plan_r21);

BENCHMARK_MAIN();
