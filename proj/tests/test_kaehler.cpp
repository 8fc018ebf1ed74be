#include <doctest.h>

#include "diffalg/derivation.hpp"
#include "diffalg/kaehler.hpp"

using namespace diffalg;

namespace {

Polynomial var(const RingPtr& r, std::size_t i) { return Polynomial::variable(r, i); }

QRPtr ring_4_3() {
    auto r = make_ring(Field::prime(2), {"X", "Y"});
    return QuotientRing::make(
        r, {var(r, 0).pow(4), var(r, 0).pow(2) * var(r, 1).pow(2), var(r, 1).pow(4)});
}

QRPtr ring_4_13() {
    auto r = make_ring(Field::prime(2), {"X", "Y"});
    return QuotientRing::make(r, {var(r, 0).pow(2), var(r, 0) * var(r, 1), var(r, 1).pow(2)});
}

QRPtr curve_345() {
    auto r = make_ring(Field::rationals(), {"X", "Y", "Z"}, {3, 4, 5});
    return QuotientRing::make(r,
                              {var(r, 0).pow(2) * var(r, 1) - var(r, 2).pow(2),
                               var(r, 0) * var(r, 2) - var(r, 1).pow(2),
                               var(r, 1) * var(r, 2) - var(r, 0).pow(3)},
                              {}, /*domain=*/true);
}

constexpr long kBig = 1 << 20;

}  // namespace

TEST_CASE("omega presentations of the worked rings") {
    auto q3 = ring_4_3();
    CHECK(omega_relations_all_zero(q3));
    FreenessCertificate free3 = is_free_module(omega_presentation(q3), kBig);
    CHECK(free3.free);
    CHECK(free3.rank == 2);

    auto q13 = ring_4_13();
    PresentedModule omega13 = omega_presentation(q13);
    // relations: df1 = df3 = 0, df2 = (Y, X)
    REQUIRE(omega13.presentation().src_rank() == 3);
    auto r13 = q13->poly_ring();
    int nonzero = 0;
    for (std::size_t j = 0; j < 3; ++j) {
        const RVector& col = omega13.presentation().column(j);
        if (is_zero_vector(col)) continue;
        ++nonzero;
        CHECK(col[0] == var(r13, 1));
        CHECK(col[1] == var(r13, 0));
    }
    CHECK(nonzero == 1);

    auto r14 = make_ring(Field::prime(2), {"X", "Y"});
    QRPtr q14 = QuotientRing::make(r14, {var(r14, 0).pow(2), var(r14, 0) * var(r14, 1).pow(2)});
    PresentedModule omega14 = omega_presentation(q14);
    int nonzero14 = 0;
    for (std::size_t j = 0; j < omega14.presentation().src_rank(); ++j) {
        const RVector& col = omega14.presentation().column(j);
        if (is_zero_vector(col)) continue;
        ++nonzero14;
        CHECK(col[0] == var(r14, 1).pow(2));
        CHECK(col[1].is_zero());
    }
    CHECK(nonzero14 == 1);
}

TEST_CASE("the derivation module through both routes") {
    auto q3 = ring_4_3();
    DerModule der3 = der_module(q3, kBig);
    CHECK(der3.routes_agree);
    CHECK(der3.complete);
    Realization rd(der3.module);
    CHECK(rd.total_dim_through(2 + q3->top_degree()) == 24);
    FreenessCertificate cert = is_free_module(der3.module, kBig);
    CHECK(cert.free);
    CHECK(cert.rank == 2);

    auto q13 = ring_4_13();
    DerModule der13 = der_module(q13, kBig);
    Realization rd13(der13.module);
    CHECK(rd13.total_dim_through(2 + q13->top_degree()) == 4);

    // coker(Der -> R^2) has dimension 2 and is killed by m
    std::vector<long> ambient;
    for (int w : q13->poly_ring()->weights()) ambient.push_back(-static_cast<long>(w));
    PresentedModule coker(q13, ambient, der13.generator_vectors);
    Realization rc(coker);
    long top = 1 + q13->top_degree();
    CHECK(rc.total_dim_through(top) == 2);
    bool killed = true;
    for (long d = rc.min_degree(); d <= top; ++d)
        for (std::size_t v = 0; v < q13->nvars(); ++v)
            for (std::size_t c = 0; c < rc.mult_matrix(q13->variable(v), d).cols(); ++c)
                for (std::size_t r = 0; r < rc.mult_matrix(q13->variable(v), d).rows(); ++r)
                    if (!rc.mult_matrix(q13->variable(v), d).at(r, c).is_zero()) killed = false;
    CHECK(killed);

    // Q[X,Y]/(X,Y)^2: Der = m R^2, coker isomorphic to k^2
    auto rq = make_ring(Field::rationals(), {"X", "Y"});
    QRPtr q47 = QuotientRing::make(rq, {var(rq, 0).pow(2), var(rq, 0) * var(rq, 1),
                                        var(rq, 1).pow(2)});
    DerModule der47 = der_module(q47, kBig);
    Realization rd47(der47.module);
    CHECK(rd47.total_dim_through(2 + q47->top_degree()) == 4);
    // every generator has both components in m
    for (const auto& v : der47.generator_vectors)
        for (const auto& comp : v) CHECK(comp.constant_coefficient().is_zero());
    PresentedModule coker47(q47, {-1, -1}, der47.generator_vectors);
    Realization rc47(coker47);
    CHECK(rc47.total_dim_through(1 + q47->top_degree()) == 2);
    CHECK(minimal_generator_count(coker47) == 2);
}

TEST_CASE("derivation-module elements really are derivations") {
    for (const QRPtr& q : {ring_4_3(), ring_4_13()}) {
        DerModule der = der_module(q, kBig);
        for (const auto& theta : der.generator_vectors)
            CHECK(WellDefinedCheck::run(q, {theta.begin(), theta.end()}).ok());
    }
}

TEST_CASE("module rank over the fraction field") {
    auto curve = curve_345();
    CHECK(module_rank(PresentedModule::free_module(curve, 3)) == 3);
    CHECK(module_rank(omega_presentation(curve)) == 1);

    // coker of the identity is the zero module
    auto r = curve->poly_ring();
    Polynomial one = Polynomial::constant(r, r->field().one());
    Polynomial z = Polynomial::zero(r);
    PresentedModule zero_mod(curve, {0, 0}, {RVector{one, z}, RVector{z, one}});
    CHECK(module_rank(zero_mod) == 0);
}

TEST_CASE("freeness certificates") {
    auto curve = curve_345();
    PresentedModule omega = omega_presentation(curve);
    CHECK(minimal_generator_count(omega) == 3);
    FreenessCertificate cert = is_free_module(omega, kBig);
    CHECK_FALSE(cert.free);
    CHECK(cert.detail.find("3") != std::string::npos);
    CHECK(module_rank(omega) <= minimal_generator_count(omega));

    auto q13 = ring_4_13();
    FreenessCertificate kcert = is_free_module(PresentedModule::residue_field(q13), kBig);
    CHECK_FALSE(kcert.free);
}
