#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "ringlab/fixtures.hpp"
#include "ringlab/product.hpp"
#include "ringlab/star_map.hpp"

using namespace ringlab;

TEST_CASE("unit idempotents") {
    auto r = Ring::product({Ring::modular(4), Ring::modular(9)});
    const EIdx e1 = unit_idempotent(*r, 0);
    const EIdx e2 = unit_idempotent(*r, 1);
    CHECK(e1 == r->compose({1, 0}));
    CHECK(r->mul(e1, e2) == r->zero());
    CHECK(r->add(e1, e2) == r->one());
    CHECK(r->mul(e1, e1) == e1);
    CHECK_THROWS_AS(unit_idempotent(*r, 2), PreconditionError);
}

TEST_CASE("tame prime construction") {
    auto z4 = Ring::modular(4);
    auto z9 = Ring::modular(9);
    auto r = Ring::product({z4, z9});

    Ideal p = tame_prime(r, 0, Ideal::from_generators(z4, {2}));
    CHECK(p.size() == 18);
    for (EIdx x : p.elems()) CHECK(r->component(x, 0) % 2 == 0);
    CHECK(is_prime(p));

    auto f = Ring::modular(5);
    auto r3 = Ring::product({z4, f, z9});
    Ideal q = tame_prime(r3, 1, zero_ideal(f));
    CHECK(q.size() == 4 * 1 * 9);

    auto z12 = Ring::modular(12);
    auto r2 = Ring::product({z12, z9});
    CHECK_THROWS_WITH(tame_prime(r2, 0, Ideal::from_generators(z12, {6})),
                      Catch::Matchers::ContainsSubstring("not prime"));
}

TEST_CASE("classification of primes") {
    auto r = Ring::product({Ring::modular(4), Ring::modular(9)});
    const Spectrum sp = spec(r);
    for (const auto& point : sp.points()) {
        Classification cls = classify_prime(r, point.prime);
        REQUIRE_FALSE(cls.is_wild());
        CHECK(tame_prime(r, cls.tame->k, cls.tame->factor_prime) == point.prime);
    }
    // Explicit witnesses.
    Ideal p1 = tame_prime(r, 0, Ideal::from_generators(r->factors()[0], {2}));
    Classification c1 = classify_prime(r, p1);
    CHECK(c1.tame->k == 0);
    CHECK(c1.tame->factor_prime.elems() == std::vector<EIdx>{0, 2});

    Ideal p2 = tame_prime(r, 1, Ideal::from_generators(r->factors()[1], {3}));
    Classification c2 = classify_prime(r, p2);
    CHECK(c2.tame->k == 1);

    CHECK_THROWS_AS(classify_prime(r, Ideal::from_generators(r, {r->compose({2, 3})})),
                    PreconditionError);
}

TEST_CASE("direct sum ideal degenerates to the whole ring at finite index") {
    auto r = Ring::product({Ring::modular(4), Ring::modular(9)});
    Ideal dsum = direct_sum_ideal(r);
    CHECK(dsum.size() == r->size());
    CHECK(spec(r).v_of(dsum).empty());

    auto single = Ring::product({Ring::modular(6)});
    CHECK(direct_sum_ideal(single).size() == single->size());
}

TEST_CASE("residue and local isomorphisms at a tame prime") {
    auto r = Ring::product({Ring::modular(4), Ring::modular(9)});
    Ideal p = tame_prime(r, 0, Ideal::from_generators(r->factors()[0], {2}));
    ResidueLocalIso iso = residue_and_local_iso(r, p);
    CHECK(iso.residue.source()->size() == 2);  // R/P = Z/2
    CHECK(iso.residue.target()->size() == 2);
    CHECK(iso.local.source()->size() == 4);  // R_P = (Z/4)_(2) = Z/4
    CHECK(iso.local.target()->size() == 4);

    // Zero-ideal tame prime over a field factor: R/P is that field.
    auto rf = Ring::product({Ring::modular(5), Ring::modular(4)});
    Ideal pf = tame_prime(rf, 0, zero_ideal(rf->factors()[0]));
    ResidueLocalIso iso2 = residue_and_local_iso(rf, pf);
    CHECK(iso2.residue.target()->size() == 5);
    CHECK(ring_predicates(*iso2.residue.source()).is_field);
}

TEST_CASE("induced hom families") {
    auto z4 = Ring::modular(4);
    auto z9 = Ring::modular(9);
    std::vector<EIdx> m1(4), m2(9);
    for (EIdx x = 0; x < 4; ++x) m1[x] = x % 2;
    for (EIdx x = 0; x < 9; ++x) m2[x] = x % 3;
    RingHom phi1(z4, Ring::modular(2), m1);
    RingHom phi2(z9, Ring::modular(3), m2);

    InducedHomReport rep = induced_hom_classification({phi1, phi2});
    CHECK(rep.unit_idempotents_preserved);
    CHECK(rep.classification_commutes);
    CHECK(rep.primes_checked == 2);

    // The pullback of (0) x Z/3 is (2) x Z/9.
    const RingPtr& b = rep.hom.target();
    Ideal q = tame_prime(b, 0, zero_ideal(b->factors()[0]));
    Ideal up = preimage_ideal(rep.hom, q);
    Classification cls = classify_prime(rep.hom.source(), up);
    CHECK(cls.tame->k == 0);
    CHECK(cls.tame->factor_prime.elems() == std::vector<EIdx>{0, 2});

    InducedHomReport ident = induced_hom_classification(
        {RingHom::identity(z4), RingHom::identity(z9)});
    CHECK(ident.unit_idempotents_preserved);
    CHECK(ident.classification_commutes);
}

TEST_CASE("omega elements and the powerset direction") {
    auto r = Ring::product({Ring::modular(4), Ring::modular(9)});
    CHECK(omega(*r, 0b01) == unit_idempotent(*r, 0));
    CHECK(omega(*r, 0b11) == r->one());
    CHECK(omega(*r, 0) == r->zero());

    SetRing sets(2);
    Ideal p = tame_prime(r, 0, Ideal::from_generators(r->factors()[0], {2}));
    Ideal mp = spec_to_powerset(sets, r, p);
    // M_P = P(S \ {1}) = { {}, {2} }.
    CHECK(mp == setring_primes(sets)[0]);
    CHECK(mp.size() == 2);
}

TEST_CASE("tame max-regular ideals via the generator formula") {
    auto z6 = Ring::modular(6);
    auto z4 = Ring::modular(4);
    auto r = Ring::product({z6, z4});
    const Spectrum sp = spec(r);

    MaxRegularIdeal m1 = tame_max_regular(r, 0, Ideal::from_generators(z6, {3}), sp);
    CHECK(m1.ideal.size() == 2 * 4);  // (3) x Z/4
    for (EIdx x : m1.ideal.elems()) CHECK(r->component(x, 0) % 3 == 0);

    MaxRegularIdeal m2 = tame_max_regular(r, 1, zero_ideal(z4), sp);
    CHECK(m2.ideal.size() == 6);  // Z/6 x 0
    for (EIdx x : m2.ideal.elems()) CHECK(r->component(x, 1) == 0);

    // Count: |Sp(Z/6 x Z/4)| = |Sp(Z/6)| + |Sp(Z/4)| = 2 + 1.
    CHECK(connected_components(sp).size() == 3);

    // Non-max-regular input is rejected (the zero ideal of Z/6 is regular
    // but its quotient keeps the nontrivial idempotents).
    CHECK_THROWS_AS(tame_max_regular(r, 0, zero_ideal(z6), sp), PreconditionError);
    // (2) = (4) in Z/6 is genuinely max-regular and passes.
    CHECK(tame_max_regular(r, 0, Ideal::from_generators(z6, {2}), sp).ideal.size() == 3 * 4);
}

TEST_CASE("V(1 - e_k) component criterion") {
    auto r1 = Ring::product({Ring::modular(4), Ring::modular(9)});
    CHECK(v_one_minus_ek_is_component(r1, 0));
    CHECK(v_one_minus_ek_is_component(r1, 1));

    auto r2 = Ring::product({Ring::modular(6), Ring::modular(4)});
    CHECK_FALSE(v_one_minus_ek_is_component(r2, 0));  // Z/6 has idempotent 3
    CHECK(v_one_minus_ek_is_component(r2, 1));

    auto r3 = Ring::product({Ring::modular(5), Ring::modular(6)});
    CHECK(v_one_minus_ek_is_component(r3, 0));  // field factor
}

TEST_CASE("prime disjointness from T_F") {
    auto r = Ring::product({Ring::modular(4), Ring::modular(9)});
    const FilterObject f1 = FilterObject::principal(2, 0b01);
    Ideal p1 = tame_prime(r, 0, Ideal::from_generators(r->factors()[0], {2}));
    Ideal p2 = tame_prime(r, 1, Ideal::from_generators(r->factors()[1], {3}));
    CHECK(prime_disjoint_from_t(r, f1, p1));
    CHECK_FALSE(prime_disjoint_from_t(r, f1, p2));

    const FilterObject whole = FilterObject::principal(2, 0b11);
    CHECK(prime_disjoint_from_t(r, whole, p1));
    CHECK(prime_disjoint_from_t(r, whole, p2));
}

TEST_CASE("table-ring factors flow through classification") {
    auto r = Ring::product({fixtures::f2xy(), Ring::modular(9)});
    const Spectrum sp = spec(r);
    REQUIRE(sp.size() == 2);
    for (const auto& point : sp.points()) {
        Classification cls = classify_prime(r, point.prime);
        REQUIRE_FALSE(cls.is_wild());
        CHECK(tame_prime(r, cls.tame->k, cls.tame->factor_prime) == point.prime);
    }
    // The f2xy side: its unique prime is the socle-plus ideal (x, y).
    Ideal socle = tame_prime(r, 0, spec(r->factors()[0])[0].prime);
    Classification cls = classify_prime(r, socle);
    CHECK(cls.tame->k == 0);
    CHECK(cls.tame->factor_prime.size() == 4);

    ResidueLocalIso iso = residue_and_local_iso(r, socle);
    CHECK(iso.residue.target()->size() == 2);  // f2xy / (x,y) = F2
}

TEST_CASE("component purity") {
    auto r = Ring::product({Ring::modular(4), Ring::modular(9)});
    PurityReport rep = component_purity_check(r);
    CHECK(rep.pure);
    CHECK(rep.all_tame);
    CHECK(rep.components.size() == 2);

    auto r2 = Ring::product({Ring::modular(6), Ring::modular(4)});
    PurityReport rep2 = component_purity_check(r2);
    CHECK(rep2.pure);
    CHECK(rep2.all_tame);
    CHECK(rep2.components.size() == 3);

    auto single = Ring::product({Ring::modular(9)});
    CHECK(component_purity_check(single).pure);
}

TEST_CASE("no prime contains every unit idempotent") {
    for (auto r : {Ring::product({Ring::modular(4), Ring::modular(9)}),
                   Ring::product({Ring::modular(6), Ring::modular(10), Ring::modular(3)})}) {
        EIdx sum = r->zero();
        for (std::size_t k = 0; k < r->arity(); ++k) sum = r->add(sum, unit_idempotent(*r, k));
        CHECK(sum == r->one());
        const Spectrum sp = spec(r);
        for (const auto& point : sp.points()) {
            bool all_in = true;
            for (std::size_t k = 0; k < r->arity(); ++k)
                all_in &= point.prime.contains(unit_idempotent(*r, k));
            CHECK_FALSE(all_in);
        }
    }
}
