#include <benchmark/benchmark.h>

#include "diffalg/classify.hpp"
#include "diffalg/derivation.hpp"
#include "diffalg/frobenius.hpp"
#include "diffalg/kaehler.hpp"
#include "diffalg/scenario.hpp"

using namespace diffalg;

namespace {

Polynomial var(const RingPtr& r, std::size_t i) { return Polynomial::variable(r, i); }

RingPtr weighted_ring() { return make_ring(Field::prime(2), {"X", "Y", "Z"}, {4, 5, 6}); }

std::vector<Polynomial> semigroup_ideal(const RingPtr& r) {
    return {var(r, 0) * var(r, 2) - var(r, 1).pow(2), var(r, 0).pow(3) - var(r, 2).pow(2)};
}

QRPtr square_zero() {
    auto r = make_ring(Field::prime(2), {"X", "Y"});
    return QuotientRing::make(r, {var(r, 0).pow(2), var(r, 1).pow(2)});
}

void BM_Buchberger(benchmark::State& state) {
    auto r = weighted_ring();
    auto gens = semigroup_ideal(r);
    for (auto _ : state) {
        auto gb = GroebnerBasis::compute(IdealBasis(r, gens), r->default_order());
        benchmark::DoNotOptimize(gb.elements().size());
    }
}
BENCHMARK(BM_Buchberger);

void BM_NormalForm(benchmark::State& state) {
    auto r = weighted_ring();
    auto gb = GroebnerBasis::compute(IdealBasis(r, semigroup_ideal(r)), r->default_order());
    Polynomial f = (var(r, 0) + var(r, 1) + var(r, 2)).pow(4);
    for (auto _ : state) {
        Polynomial nf = gb.normal_form(f);
        benchmark::DoNotOptimize(nf.term_count());
    }
}
BENCHMARK(BM_NormalForm);

void BM_StaircaseSlices(benchmark::State& state) {
    auto r = weighted_ring();
    auto gb = GroebnerBasis::compute(IdealBasis(r, semigroup_ideal(r)), r->default_order());
    for (auto _ : state) {
        long total = 0;
        for (long d = 0; d <= 72; ++d) total += static_cast<long>(staircase_of_degree(gb, d).size());
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_StaircaseSlices);

void BM_ResolutionOfB(benchmark::State& state) {
    QRPtr q = square_zero();
    auto r = q->poly_ring();
    for (auto _ : state) {
        PresentedModule b = ideal_module(q, {var(r, 0), var(r, 1)}, 1 << 20);
        FreeResolution res(b, 1 << 20);
        res.extend_to(static_cast<std::size_t>(state.range(0)));
        benchmark::DoNotOptimize(res.rank(static_cast<std::size_t>(state.range(0))));
    }
}
BENCHMARK(BM_ResolutionOfB)->Arg(4)->Arg(8)->Arg(11);

void BM_TotallyReflexiveCheck(benchmark::State& state) {
    QRPtr q = square_zero();
    auto r = q->poly_ring();
    PresentedModule b = ideal_module(q, {var(r, 0), var(r, 1)}, 1 << 20);
    for (auto _ : state) {
        TRCertificate cert = totally_reflexive_check(b, static_cast<int>(state.range(0)), 1 << 20);
        benchmark::DoNotOptimize(cert.pass);
    }
}
BENCHMARK(BM_TotallyReflexiveCheck)->Arg(5)->Arg(10);

void BM_DerModule(benchmark::State& state) {
    auto r = make_ring(Field::prime(2), {"X", "Y"});
    QRPtr q = QuotientRing::make(
        r, {var(r, 0).pow(4), var(r, 0).pow(2) * var(r, 1).pow(2), var(r, 1).pow(4)});
    for (auto _ : state) {
        DerModule d = der_module(q, 1 << 20);
        benchmark::DoNotOptimize(d.routes_agree);
    }
}
BENCHMARK(BM_DerModule);

void BM_FrobeniusTwist(benchmark::State& state) {
    QRPtr q = square_zero();
    auto r = q->poly_ring();
    PresentedModule b = ideal_module(q, {var(r, 0), var(r, 1)}, 1 << 20);
    PresentedComplex c;
    c.ring = q;
    c.modules = {b, b};
    std::vector<long> tw(b.gen_degrees().begin(), b.gen_degrees().end());
    c.maps = {ModuleMap::identity(q, tw)};
    for (auto _ : state) {
        FrobeniusReport report = frobenius_acyclicity(c, 3, 1 << 20);
        benchmark::DoNotOptimize(report.acyclic());
    }
}
BENCHMARK(BM_FrobeniusTwist);

void BM_FixpointB(benchmark::State& state) {
    QRPtr q = square_zero();
    auto r = q->poly_ring();
    auto check = WellDefinedCheck::run(q, {var(r, 0), Polynomial::constant(r, r->field().one())});
    for (auto _ : state) {
        MaxDiffResult b = maximally_differential_ideal(q, {*check.derivation},
                                                       MaxDiffMode::fixpoint);
        benchmark::DoNotOptimize(b.generators.size());
    }
}
BENCHMARK(BM_FixpointB);

void BM_ScenarioSquareZero(benchmark::State& state) {
    const char* text = R"(
[ring]
field = F2
variables = X, Y
ideal = "X^2", "Y^2"

[derivation D]
X = "X"
Y = "Y"

[task 1]
kind = maximally_differential
derivations = D
expect_generators = "X", "Y"

[task 2]
kind = totally_reflexive
module = ideal
gens = "X", "Y"
expect = PASS
)";
    Scenario s = parse_scenario_text(text, "bench");
    for (auto _ : state) {
        Report report = run_scenario(s);
        benchmark::DoNotOptimize(report.all_pass());
    }
}
BENCHMARK(BM_ScenarioSquareZero);

}  // namespace

BENCHMARK_MAIN();
