#include <doctest.h>

#include "diffalg/derivation.hpp"
#include "support.hpp"

using namespace diffalg;
using testsupport::Rng;
using testsupport::random_poly;

namespace {

Polynomial var(const RingPtr& r, std::size_t i) { return Polynomial::variable(r, i); }

QRPtr ring_3_1() {
    auto r = make_ring(Field::prime(2), {"X", "Y"});
    return QuotientRing::make(r, {var(r, 0).pow(2), var(r, 1).pow(2)});
}

QRPtr ring_3_6() {
    auto r = make_ring(Field::prime(2), {"X", "Y", "Z"}, {4, 5, 6});
    return QuotientRing::make(r,
                              {var(r, 0) * var(r, 2) - var(r, 1).pow(2),
                               var(r, 0).pow(3) - var(r, 2).pow(2)},
                              {}, /*domain=*/true);
}

Derivation euler_derivation(const QRPtr& q) {
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < q->nvars(); ++i) images.push_back(var(q->poly_ring(), i));
    auto check = WellDefinedCheck::run(q, images, "euler");
    REQUIRE(check.ok());
    return *check.derivation;
}

}  // namespace

TEST_CASE("derivations act through the Leibniz extension") {
    auto q = ring_3_1();
    auto r = q->poly_ring();
    Derivation d = euler_derivation(q);
    CHECK(d.apply(var(r, 0)) == var(r, 0));
    CHECK(d.apply(var(r, 1)) == var(r, 1));
    CHECK(d.apply(Polynomial::constant(r, r->field().one())).is_zero());

    auto q6 = ring_3_6();
    auto r6 = q6->poly_ring();
    auto dy = WellDefinedCheck::run(q6, {Polynomial::zero(r6),
                                         Polynomial::constant(r6, r6->field().one()),
                                         Polynomial::zero(r6)},
                                    "d/dy");
    REQUIRE(dy.ok());
    CHECK(dy.derivation->apply(var(r6, 1)) == Polynomial::constant(r6, r6->field().one()));
    CHECK(dy.derivation->apply(var(r6, 0)).is_zero());
}

TEST_CASE("well-definedness depends on the characteristic") {
    // d/dX on k[X]/(X^2): fails over Q (2X not in the ideal), passes over F2
    auto rq = make_ring(Field::rationals(), {"X"});
    QRPtr qq = QuotientRing::make(rq, {var(rq, 0).pow(2)});
    auto bad = WellDefinedCheck::run(qq, {Polynomial::constant(rq, rq->field().one())});
    CHECK_FALSE(bad.ok());
    CHECK(bad.failing_generator == 0);
    REQUIRE(bad.residue.has_value());
    CHECK(*bad.residue == var(rq, 0).scaled(rq->field().from_int(2)));

    auto r2 = make_ring(Field::prime(2), {"X"});
    QRPtr q2 = QuotientRing::make(r2, {var(r2, 0).pow(2)});
    CHECK(WellDefinedCheck::run(q2, {Polynomial::constant(r2, r2->field().one())}).ok());

    // Y d/dY on the weighted semigroup ring
    auto q6 = ring_3_6();
    auto r6 = q6->poly_ring();
    CHECK(WellDefinedCheck::run(q6, {Polynomial::zero(r6), var(r6, 1), Polynomial::zero(r6)}).ok());
}

TEST_CASE("differential ideal membership tests") {
    auto q = ring_3_1();
    auto r = q->poly_ring();
    Derivation d = euler_derivation(q);
    CHECK(is_differential_ideal(q, {var(r, 0), var(r, 1)}, {d}));

    auto q6 = ring_3_6();
    auto r6 = q6->poly_ring();
    auto dy = WellDefinedCheck::run(q6, {Polynomial::zero(r6),
                                         Polynomial::constant(r6, r6->field().one()),
                                         Polynomial::zero(r6)});
    REQUIRE(dy.ok());
    CHECK(is_differential_ideal(q6, {var(r6, 0), var(r6, 2)}, {*dy.derivation}));

    auto dprime = WellDefinedCheck::run(q, {var(r, 0),
                                            Polynomial::constant(r, r->field().one())});
    REQUIRE(dprime.ok());
    CHECK_FALSE(is_differential_ideal(q, {var(r, 0), var(r, 1)}, {*dprime.derivation}));
}

TEST_CASE("maximally differential ideals: shortcut, fixpoint, verify") {
    auto q = ring_3_1();
    auto r = q->poly_ring();
    Derivation d = euler_derivation(q);

    MaxDiffResult shortcut = maximally_differential_ideal(q, {d}, MaxDiffMode::automatic);
    CHECK(shortcut.mode_used == MaxDiffMode::shortcut);
    CHECK(same_r_ideal(q, shortcut.generators, {var(r, 0), var(r, 1)}));

    // shortcut and fixpoint agree when both apply
    MaxDiffResult fixed = maximally_differential_ideal(q, {d}, MaxDiffMode::fixpoint);
    CHECK(same_r_ideal(q, fixed.generators, shortcut.generators));

    // D' = x d/dx + d/dy stabilizes (x)
    auto dprime = WellDefinedCheck::run(q, {var(r, 0),
                                            Polynomial::constant(r, r->field().one())});
    REQUIRE(dprime.ok());
    MaxDiffResult bprime = maximally_differential_ideal(q, {*dprime.derivation},
                                                        MaxDiffMode::automatic);
    CHECK(bprime.mode_used == MaxDiffMode::fixpoint);
    CHECK(same_r_ideal(q, bprime.generators, {var(r, 0)}));
    // monotone descending trace, stabilizing within dim_k m steps
    for (std::size_t i = 1; i < bprime.fixpoint_trace.size(); ++i)
        CHECK(bprime.fixpoint_trace[i] <= bprime.fixpoint_trace[i - 1]);
    CHECK(bprime.fixpoint_trace.size() <= 4);

    // verify mode on the weighted semigroup ring certifies (x, z)
    auto q6 = ring_3_6();
    auto r6 = q6->poly_ring();
    auto dy = WellDefinedCheck::run(q6, {Polynomial::zero(r6),
                                         Polynomial::constant(r6, r6->field().one()),
                                         Polynomial::zero(r6)});
    REQUIRE(dy.ok());
    std::vector<Polynomial> candidate = {var(r6, 0), var(r6, 2)};
    MaxDiffResult verified = maximally_differential_ideal(q6, {*dy.derivation},
                                                          MaxDiffMode::verify, &candidate);
    CHECK(verified.certified);
    CHECK(verified.quotient_length == 2);

    // a non-differential candidate is rejected
    std::vector<Polynomial> bad_candidate = {var(r6, 0), var(r6, 1)};
    CHECK_THROWS_AS((void)maximally_differential_ideal(q6, {*dy.derivation}, MaxDiffMode::verify,
                                                       &bad_candidate),
                    algebra_error);
}

TEST_CASE("Leibniz law holds on the quotient for random elements") {
    auto q = ring_3_1();
    auto r = q->poly_ring();
    Derivation d = euler_derivation(q);
    Rng rng(17);
    for (int i = 0; i < 1000; ++i) {
        Polynomial f = random_poly(rng, r, 3, 2);
        Polynomial g = random_poly(rng, r, 3, 2);
        Polynomial lhs = q->nf(d.apply(q->nf(f * g)));
        Polynomial rhs = q->nf(f * d.apply(g) + g * d.apply(f));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("the computed B is itself a proper differential ideal") {
    auto q = ring_3_1();
    auto r = q->poly_ring();
    auto dprime = WellDefinedCheck::run(q, {var(r, 0),
                                            Polynomial::constant(r, r->field().one())});
    REQUIRE(dprime.ok());
    MaxDiffResult b = maximally_differential_ideal(q, {*dprime.derivation}, MaxDiffMode::fixpoint);
    CHECK(is_differential_ideal(q, b.generators, {*dprime.derivation}));
    CHECK(proper_r_ideal(q, b.generators));
}

TEST_CASE("fixpoint result contains every differential monomial ideal") {
    auto q = ring_3_1();
    auto r = q->poly_ring();
    auto dprime = WellDefinedCheck::run(q, {var(r, 0),
                                            Polynomial::constant(r, r->field().one())});
    REQUIRE(dprime.ok());
    MaxDiffResult b = maximally_differential_ideal(q, {*dprime.derivation}, MaxDiffMode::fixpoint);
    // enumerate ideals generated by subsets of {x, y, xy}
    std::vector<Polynomial> monos = {var(r, 0), var(r, 1), var(r, 0) * var(r, 1)};
    for (unsigned mask = 1; mask < 8; ++mask) {
        std::vector<Polynomial> gens;
        for (int i = 0; i < 3; ++i)
            if (mask & (1u << i)) gens.push_back(monos[i]);
        if (!proper_r_ideal(q, gens)) continue;
        if (!is_differential_ideal(q, gens, {*dprime.derivation})) continue;
        for (const auto& g : gens) CHECK(in_r_ideal(q, b.generators, g));
    }
}

TEST_CASE("the square-zero ring is differentially simple for the full linear family") {
    auto q = ring_3_1();
    auto r = q->poly_ring();
    // every F2-linear derivation is a combination of the eight basis ones
    // (variable image a single monomial, the other zero); all are well
    // defined in characteristic 2, and together they stabilize no nonzero
    // proper ideal. Constant images matter: without d/dx and d/dy the socle
    // (xy) would survive.
    std::vector<Polynomial> monos = {Polynomial::constant(r, r->field().one()), var(r, 0),
                                     var(r, 1), var(r, 0) * var(r, 1)};
    std::vector<Derivation> all;
    for (const auto& image : monos) {
        auto dx = WellDefinedCheck::run(q, {image, Polynomial::zero(r)});
        auto dy = WellDefinedCheck::run(q, {Polynomial::zero(r), image});
        REQUIRE(dx.ok());
        REQUIRE(dy.ok());
        all.push_back(*dx.derivation);
        all.push_back(*dy.derivation);
    }
    MaxDiffResult b = maximally_differential_ideal(q, all, MaxDiffMode::fixpoint);
    CHECK(b.generators.empty());

    // restricted to derivations mapping m into m, the socle survives
    std::vector<Derivation> into_m;
    for (const auto& d : all) {
        bool ok = true;
        for (const auto& im : d.images())
            if (!q->nf(im).constant_coefficient().is_zero()) ok = false;
        if (ok) into_m.push_back(d);
    }
    MaxDiffResult b2 = maximally_differential_ideal(q, into_m, MaxDiffMode::fixpoint);
    CHECK(in_r_ideal(q, b2.generators, var(r, 0) * var(r, 1)));
}
