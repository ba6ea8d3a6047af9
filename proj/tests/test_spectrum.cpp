#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "ringlab/oracle.hpp"
#include "ringlab/spectrum.hpp"

using namespace ringlab;

namespace {

std::set<std::vector<EIdx>> prime_sets(const Spectrum& sp) {
    std::set<std::vector<EIdx>> out;
    for (const auto& p : sp.points()) out.insert(p.prime.elems());
    return out;
}

std::set<std::vector<EIdx>> oracle_prime_sets(const RingPtr& r) {
    std::set<std::vector<EIdx>> out;
    for (const Ideal& i : all_ideals(r))
        if (is_prime(i)) out.insert(i.elems());
    return out;
}

}  // namespace

TEST_CASE("spectra of small rings") {
    auto z12 = Ring::modular(12);
    const Spectrum sp = spec(z12);
    REQUIRE(sp.size() == 2);
    CHECK(prime_sets(sp) ==
          std::set<std::vector<EIdx>>{{0, 2, 4, 6, 8, 10}, {0, 3, 6, 9}});
    CHECK(prime_sets(sp) == oracle_prime_sets(z12));

    auto r = Ring::product({Ring::modular(4), Ring::modular(9)});
    CHECK(spec(r).size() == 2);
    CHECK(prime_sets(spec(r)) == oracle_prime_sets(r));

    auto f = Ring::modular(7);
    const Spectrum fsp = spec(f);
    REQUIRE(fsp.size() == 1);
    CHECK(fsp[0].prime.elems() == std::vector<EIdx>{0});

    CHECK(spec(Ring::modular(1)).size() == 0);
}

TEST_CASE("spectrum points carry valid provenance") {
    for (auto r : {Ring::modular(30), Ring::product({Ring::modular(6), Ring::modular(10)}),
                   Ring::product({Ring::modular(4), Ring::modular(6), Ring::modular(3)})}) {
        const Spectrum sp = spec(r);
        for (const auto& p : sp.points()) {
            CHECK(is_prime(p.prime));
            CHECK(is_maximal(p.prime));  // finite rings: every prime is maximal
            CHECK_FALSE(p.prime.contains(p.atom));
            for (const auto& q : sp.points())
                if (q.atom != p.atom) CHECK(p.prime.contains(q.atom));
            // Stored generators really generate the point.
            CHECK(Ideal::from_generators(r, p.prime.generators()).elems() == p.prime.elems());
        }
        // Deterministic order by atom.
        for (std::size_t i = 1; i < sp.size(); ++i) CHECK(sp[i - 1].atom < sp[i].atom);
    }
}

TEST_CASE("zariski utilities") {
    auto r = Ring::product({Ring::modular(4), Ring::modular(9)});
    const Spectrum sp = spec(r);
    CHECK(sp.d_of(r->one()).size() == sp.size());
    CHECK(sp.v_of_elem(r->one()).empty());
    CHECK(sp.v_of(nilradical(r)).size() == sp.size());

    const EIdx e1 = r->compose({1, 0});
    const auto d = sp.d_of(e1);
    REQUIRE(d.size() == 1);
    CHECK_FALSE(sp[d[0]].prime.contains(e1));
    // D(e1) is the point over the first factor: (2) x Z/9.
    CHECK(sp[d[0]].prime.size() == 18);

    // D(x) and V(x) partition the spectrum for every element.
    for (EIdx x = 0; x < r->size(); ++x)
        CHECK(sp.d_of(x).size() + sp.v_of_elem(x).size() == sp.size());
}

TEST_CASE("connected components and max-regular ideals") {
    auto z6 = Ring::modular(6);
    auto comps = connected_components(z6);
    REQUIRE(comps.size() == 2);
    // Max-regular ideals (4) = {0,2,4} and (3) = {0,3}.
    std::set<std::vector<EIdx>> ideals;
    for (const auto& c : comps) {
        ideals.insert(c.ideal.elems());
        CHECK(c.component.size() == 1);
        CHECK(is_max_regular(c.ideal));
        // Lemma route: R/M has no nontrivial idempotents.
        CHECK_FALSE(ring_predicates(*quotient_ring(c.ideal)).has_nontrivial_idempotents);
    }
    CHECK(ideals == std::set<std::vector<EIdx>>{{0, 2, 4}, {0, 3}});

    CHECK(connected_components(Ring::modular(8)).size() == 1);
    CHECK(connected_components(Ring::product({Ring::modular(6), Ring::modular(4)})).size() == 3);

    // The zero ideal of Z/6 is regular but not max-regular.
    CHECK(is_regular_ideal(zero_ideal(z6)));
    CHECK_FALSE(is_max_regular(zero_ideal(z6)));
    CHECK(ring_predicates(*quotient_ring(zero_ideal(z6))).has_nontrivial_idempotents);
}

TEST_CASE("krull dimension is zero for finite nonzero rings") {
    CHECK(krull_dim(spec(Ring::modular(12))) == 0);
    CHECK(krull_dim(spec(Ring::modular(7))) == 0);
    CHECK(krull_dim(spec(Ring::modular(1))) == -1);  // no primes at all

    std::vector<RingPtr> chain;
    for (int i = 1; i <= 5; ++i) chain.push_back(Ring::modular(std::uint64_t{1} << i));
    auto big = Ring::product(chain);
    REQUIRE(big->size() == (std::uint64_t{1} << 15));
    const Spectrum sp = spec(big, std::uint64_t{1} << 16);
    CHECK(sp.size() == 5);
    CHECK(krull_dim(sp) == 0);
    for (std::size_t i = 0; i < sp.size(); ++i)
        for (std::size_t j = 0; j < sp.size(); ++j)
            if (i != j) CHECK_FALSE(sp[i].prime.subset_of(sp[j].prime));
}

TEST_CASE("size guards refuse oversized scans") {
    auto big = Ring::product({Ring::modular(65), Ring::modular(64)});
    CHECK_THROWS_AS(spec(big), ResourceError);  // 4160 elements, default guard 4096
    CHECK(spec(big, std::uint64_t{1} << 13).size() == 3);
}
