#include <catch2/catch_amalgamated.hpp>

#include "ringlab/boolean.hpp"
#include "ringlab/oracle.hpp"
#include "ringlab/spectrum.hpp"

using namespace ringlab;

TEST_CASE("boolean ring of idempotents") {
    auto z6 = Ring::modular(6);
    BooleanRingView b = boolean_ring(z6);
    CHECK(b.carrier() == std::vector<EIdx>{0, 1, 3, 4});
    CHECK(b.bool_add(3, 4) == 1);  // 3 + 4 - 2*12 mod 6
    CHECK(b.bool_mul(3, 4) == 0);

    CHECK(boolean_ring(Ring::modular(4)).carrier().size() == 2);

    // B(prod R_k) carrier is the product of the factor carriers.
    auto r = Ring::product({Ring::modular(6), Ring::modular(4)});
    CHECK(boolean_ring(r).carrier().size() == 4 * 2);
}

TEST_CASE("boolean ring laws hold on the carrier") {
    for (auto host : {Ring::modular(30), Ring::product({Ring::modular(6), Ring::modular(10)})}) {
        BooleanRingView b = boolean_ring(host);
        // Table construction re-validates every commutative-ring axiom.
        RingPtr tab = boolean_table_ring(b);
        CHECK(tab->size() == b.carrier().size());
        for (EIdx e : b.carrier()) {
            CHECK(b.bool_add(e, e) == host->zero());  // characteristic 2
            CHECK(b.bool_mul(e, e) == e);
        }
    }
}

TEST_CASE("atoms") {
    auto z6 = Ring::modular(6);
    CHECK(atoms(boolean_ring(z6)) == std::vector<EIdx>{3, 4});
    CHECK(atoms(boolean_ring(Ring::modular(4))) == std::vector<EIdx>{1});
    auto b22 = Ring::product({Ring::modular(2), Ring::modular(2)});
    CHECK(atoms(boolean_ring(b22)) ==
          std::vector<EIdx>{b22->compose({0, 1}), b22->compose({1, 0})});
    CHECK(atoms(boolean_ring(Ring::modular(1))).empty());
}

TEST_CASE("stone isomorphism") {
    auto z6 = Ring::modular(6);
    StoneIso iso = stone_iso(boolean_ring(z6));
    REQUIRE(iso.atom_list == std::vector<EIdx>{3, 4});
    // 0 -> {}, 1 -> {3,4}, 3 -> {3}, 4 -> {4} over atom positions.
    const BooleanRingView b = boolean_ring(z6);
    CHECK(iso.mask_of[b.position(0)] == 0b00);
    CHECK(iso.mask_of[b.position(1)] == 0b11);
    CHECK(iso.mask_of[b.position(3)] == 0b01);
    CHECK(iso.mask_of[b.position(4)] == 0b10);

    CHECK(stone_iso(boolean_ring(Ring::modular(7))).sets.index_size() == 1);

    auto r = Ring::product({Ring::modular(6), Ring::modular(4)});
    StoneIso iso2 = stone_iso(boolean_ring(r));
    CHECK(iso2.atom_list.size() == 3);  // 2 + 1 atoms

    // Atom decomposition: every idempotent is the (+)-sum of the atoms below it.
    for (auto host : {z6, r}) {
        BooleanRingView bb = boolean_ring(host);
        auto at = atoms(bb);
        for (EIdx e : bb.carrier()) {
            EIdx acc = host->zero();
            for (EIdx a : at)
                if (bb.leq(a, e)) acc = bb.bool_add(acc, a);
            CHECK(acc == e);
        }
    }
}

TEST_CASE("setring primes") {
    SetRing s3(3);
    auto primes = setring_primes(s3);
    REQUIRE(primes.size() == 3);
    for (std::size_t k = 0; k < 3; ++k) {
        CHECK(primes[k].size() == 4);  // all subsets avoiding one index
        for (EIdx e : primes[k].elems()) CHECK(((s3.mask_of(e) >> k) & 1u) == 0);
        CHECK(is_maximal(primes[k]));
    }
    SetRing s1(1);
    auto p1 = setring_primes(s1);
    REQUIRE(p1.size() == 1);
    CHECK(p1[0].elems() == std::vector<EIdx>{s1.elem_of(0)});
}

TEST_CASE("power set ring is von Neumann regular and zero-dimensional") {
    SetRing s(3);
    const auto pred = ring_predicates(*s.ring());
    CHECK(pred.is_von_neumann_regular);
    CHECK(krull_dim(spec(s.ring())) == 0);
}

TEST_CASE("setring arithmetic is symmetric difference and intersection") {
    SetRing s(4);
    for (std::uint32_t a = 0; a <= s.full_mask(); ++a)
        for (std::uint32_t b = 0; b <= s.full_mask(); ++b) {
            CHECK(s.ring()->add(s.elem_of(a), s.elem_of(b)) == s.elem_of(a ^ b));
            CHECK(s.ring()->mul(s.elem_of(a), s.elem_of(b)) == s.elem_of(a & b));
            CHECK(s.mask_of(s.elem_of(a)) == a);
        }
}

TEST_CASE("spectrum of B(R) counts the connected components") {
    for (auto host : {Ring::modular(12), Ring::product({Ring::modular(6), Ring::modular(4)}),
                      Ring::modular(30)}) {
        BooleanRingView b = boolean_ring(host);
        const std::size_t n_atoms = atoms(b).size();
        CHECK(spec(boolean_table_ring(b)).size() == n_atoms);
        CHECK(connected_components(host).size() == n_atoms);
    }
}
