#include <catch2/catch_amalgamated.hpp>

#include "ringlab/fixtures.hpp"
#include "ringlab/localize.hpp"
#include "ringlab/product.hpp"

using namespace ringlab;

TEST_CASE("localization at prime complements") {
    auto z12 = Ring::modular(12);
    LocalizedRing at2 =
        localize(z12, MultiplicativeSet::complement_of_prime(z12, Ideal::from_generators(z12, {2})));
    CHECK(at2.ring()->size() == 4);
    CHECK(at2.kernel().elems() == std::vector<EIdx>{0, 4, 8});

    auto z6 = Ring::modular(6);
    LocalizedRing at3 =
        localize(z6, MultiplicativeSet::complement_of_prime(z6, Ideal::from_generators(z6, {3})));
    CHECK(at3.ring()->size() == 3);
    CHECK(ring_predicates(*at3.ring()).is_field);

    // The maximal ideal of R_P pulls back to P.
    for (EIdx g : std::vector<EIdx>{2, 3}) {
        Ideal p = Ideal::from_generators(z12, {g});
        LocalizedRing loc = localize(z12, MultiplicativeSet::complement_of_prime(z12, p));
        CHECK(ring_predicates(*loc.ring()).is_local);
        for (EIdx a = 0; a < z12->size(); ++a)
            CHECK(p.contains(a) == !is_unit(*loc.ring(), loc.canonical_map()(a)));
    }
}

TEST_CASE("localization at trivial and degenerate sets") {
    auto z12 = Ring::modular(12);
    LocalizedRing copy = localize(z12, MultiplicativeSet::explicit_closure(z12, {}));
    CHECK(copy.ring()->size() == 12);
    CHECK(copy.kernel().is_zero());

    // 0 in T: the localization collapses to the zero ring (the executable
    // shadow of the cofinite filter on a finite index set, where T owns 0).
    LocalizedRing degenerate = localize(z12, MultiplicativeSet::explicit_closure(z12, {0}));
    CHECK(degenerate.ring()->is_zero_ring());
    CHECK(degenerate.kernel().size() == 12);
}

TEST_CASE("pair classes resolve consistently") {
    auto z12 = Ring::modular(12);
    MultiplicativeSet t =
        MultiplicativeSet::complement_of_prime(z12, Ideal::from_generators(z12, {2}));
    LocalizedRing loc = localize(z12, t);
    // (a,s) ~ (b,u) iff v(au - bs) = 0 for some v in T, iff fractions agree.
    auto related = [&](EIdx a, EIdx s, EIdx b, EIdx u) {
        for (EIdx v : t.elems())
            if (z12->mul(v, z12->sub(z12->mul(a, u), z12->mul(b, s))) == z12->zero()) return true;
        return false;
    };
    std::size_t mismatches = 0;
    for (EIdx a = 0; a < z12->size(); ++a)
        for (EIdx s : t.elems())
            for (EIdx b = 0; b < z12->size(); ++b)
                for (EIdx u : t.elems())
                    if (related(a, s, b, u) != (loc.fraction(a, s) == loc.fraction(b, u)))
                        ++mismatches;
    CHECK(mismatches == 0);

    for (EIdx a = 0; a < z12->size(); ++a)
        for (EIdx s : t.elems()) {
            const EIdx cls = loc.fraction(a, s);
            const auto [ra, rs] = loc.least_pair(cls);
            CHECK(loc.fraction(ra, rs) == cls);
            CHECK(related(a, s, ra, rs));
        }
}

TEST_CASE("omega sets and supports") {
    auto r = Ring::product({Ring::modular(4), Ring::modular(9)});
    const EIdx x = r->compose({2, 1});
    CHECK(omega_set(*r, x) == 0b10);
    CHECK(support(*r, x) == 0b11);
    CHECK(omega_set(*r, r->one()) == 0b11);
    CHECK(omega_set(*r, unit_idempotent(*r, 0)) == 0b01);
    CHECK(support(*r, unit_idempotent(*r, 0)) == 0b01);

    // Omega(ab) = Omega(a) & Omega(b), exhaustively.
    for (EIdx a = 0; a < r->size(); ++a)
        for (EIdx b = a; b < r->size(); ++b)
            if (omega_set(*r, r->mul(a, b)) != (omega_set(*r, a) & omega_set(*r, b)))
                FAIL("omega multiplicativity failed");

    auto bad = Ring::product({Ring::modular(6), Ring::modular(4)});
    CHECK_THROWS_WITH(omega_set(*bad, bad->one()),
                      Catch::Matchers::ContainsSubstring("not local"));
}

TEST_CASE("filter quotient isomorphism") {
    auto r = Ring::product({Ring::modular(4), Ring::modular(9)});
    FilterQuotientIso iso = filter_quotient_iso(r, FilterObject::principal(2, 0b01));
    CHECK(iso.quotient->size() == 4);
    CHECK(iso.local.ring()->size() == 4);
    CHECK(iso.i_f.size() == 9);  // 0 x Z/9

    FilterQuotientIso full = filter_quotient_iso(r, FilterObject::principal(2, 0b11));
    CHECK(full.i_f.is_zero());
    CHECK(full.local.ring()->size() == r->size());

    auto r3 = Ring::product({Ring::modular(4), Ring::modular(9), Ring::modular(25)});
    FilterQuotientIso iso3 = filter_quotient_iso(r3, FilterObject::principal(3, 0b101));
    CHECK(iso3.quotient->size() == 100);  // Z/4 x Z/25

    auto nonlocal = Ring::product({Ring::modular(6), Ring::modular(4)});
    CHECK_THROWS_AS(filter_quotient_iso(nonlocal, FilterObject::principal(2, 0b01)),
                    PreconditionError);

    // Single-factor product: the only proper filter gives I_F = 0.
    auto single = Ring::product({Ring::modular(8)});
    FilterQuotientIso iso1 = filter_quotient_iso(single, FilterObject::principal(1, 0b1));
    CHECK(iso1.i_f.is_zero());
    CHECK(iso1.local.ring()->size() == 8);

    // Table-ring factor (f2xy is local).
    auto with_table = Ring::product({fixtures::f2xy(), Ring::modular(9)});
    FilterQuotientIso iso2 = filter_quotient_iso(with_table, FilterObject::principal(2, 0b01));
    CHECK(iso2.quotient->size() == 8);
}

TEST_CASE("domain embedding over products of fields") {
    auto r = Ring::product({Ring::modular(2), Ring::modular(3)});
    DomainEmbedding emb = domain_embedding_check(r, FilterObject::principal(2, 0b10));
    CHECK(emb.kernel.size() == 2);  // Z/2 x 0
    for (EIdx x : emb.kernel.elems()) CHECK(r->component(x, 1) == 0);
    CHECK(emb.injective);
    CHECK(emb.surjective);

    DomainEmbedding whole = domain_embedding_check(r, FilterObject::principal(2, 0b11));
    CHECK(whole.kernel.is_zero());
    CHECK(whole.injective);

    auto bad = Ring::product({Ring::modular(4), Ring::modular(3)});
    CHECK_THROWS_WITH(domain_embedding_check(bad, FilterObject::principal(2, 0b01)),
                      Catch::Matchers::ContainsSubstring("not a domain"));
}

TEST_CASE("lying over along injective homs") {
    auto z3 = Ring::modular(3);
    RingHom diag = RingHom::diagonal(z3, 2);
    Ideal zero_p = zero_ideal(z3);
    Ideal over = lying_over_minimal(diag, zero_p);
    CHECK(preimage_ideal(diag, over) == zero_p);
    CHECK(over.size() == 3);  // 0 x Z/3 or Z/3 x 0, whichever is first

    auto z6 = Ring::modular(6);
    RingHom id = RingHom::identity(z6);
    const Spectrum z6sp = spec(z6);
    for (const auto& point : z6sp.points())
        CHECK(lying_over_minimal(id, point.prime) == point.prime);

    // Through the canonical embedding R/I_F -> U^{-1}R.
    auto rf = Ring::product({Ring::modular(2), Ring::modular(3), Ring::modular(5)});
    DomainEmbedding emb = domain_embedding_check(rf, FilterObject::principal(3, 0b110));
    const Spectrum quot_sp = spec(emb.embedding.source());
    for (const auto& point : quot_sp.points()) {
        Ideal q = lying_over_minimal(emb.embedding, point.prime);
        CHECK(preimage_ideal(emb.embedding, q) == point.prime);
    }

    // Non-injective homs are rejected.
    std::vector<EIdx> fold(6);
    for (EIdx x = 0; x < 6; ++x) fold[x] = x % 3;
    RingHom proj(z6, z3, fold);
    CHECK_THROWS_AS(lying_over_minimal(proj, zero_ideal(z6)), PreconditionError);
}

TEST_CASE("explicit multiplicative sets close under products") {
    auto z12 = Ring::modular(12);
    MultiplicativeSet t = MultiplicativeSet::explicit_closure(z12, {5});
    CHECK(t.contains(1));
    CHECK(t.contains(5));
    CHECK(t.contains(z12->mul(5, 5)));
}
