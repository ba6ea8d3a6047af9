#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "ringlab/hom.hpp"
#include "ringlab/parse.hpp"
#include "ringlab/util.hpp"

namespace ringlab {

struct GenConfig {
    std::uint64_t max_size = 1024;
    int min_factors = 2;
    int max_factors = 4;
    bool local_factors = false;       // restrict factors to local rings
    bool multi_prime_factors = false;  // factors with at least two primes
    bool allow_quotient = true;
    bool allow_fixture = true;
};

namespace gen_detail {

inline const std::vector<std::uint64_t>& local_moduli() {
    static const std::vector<std::uint64_t> v{2, 3, 4, 5, 7, 8, 9, 11, 13, 25, 27};
    return v;
}
inline const std::vector<std::uint64_t>& general_moduli() {
    static const std::vector<std::uint64_t> v{2,  3,  4,  5,  6,  7,  8,  9,  10, 12,
                                              14, 15, 16, 18, 20, 21, 24, 25, 27, 30, 32};
    return v;
}
inline const std::vector<std::uint64_t>& multi_prime_moduli() {
    static const std::vector<std::uint64_t> v{6, 10, 12, 14, 15, 18, 20, 21, 30};
    return v;
}
inline const std::vector<std::string>& field_fixtures() {
    static const std::vector<std::string> v{"f4", "f8", "f9"};
    return v;
}
inline const std::vector<std::string>& local_fixtures() {
    static const std::vector<std::string> v{"f4", "f8", "f9", "f2xy"};
    return v;
}

inline std::uint64_t expr_size(const RingExpr& e) {
    switch (e.node) {
        case RingExpr::Node::ZMod:
            return e.modulus;
        case RingExpr::Node::Prod: {
            std::uint64_t s = 1;
            for (const auto& f : e.children) s *= expr_size(f);
            return s;
        }
        case RingExpr::Node::Quot:
            return expr_size(e.children[0]);  // upper bound
        case RingExpr::Node::Fixture:
            return e.fixture == "f9" ? 9 : 8;  // f4 is smaller; bound is enough
    }
    return 1;
}

}  // namespace gen_detail

/// One product factor within a size budget.
inline RingExpr random_factor(Rng& rng, std::uint64_t budget, const GenConfig& cfg) {
    using namespace gen_detail;
    const auto& pool = cfg.multi_prime_factors ? multi_prime_moduli()
                       : cfg.local_factors     ? local_moduli()
                                               : general_moduli();
    std::vector<std::uint64_t> fits;
    for (auto n : pool)
        if (n <= budget) fits.push_back(n);
    if (fits.empty()) fits.push_back(2);

    if (cfg.allow_fixture && !cfg.multi_prime_factors && budget >= 9 && rng.below(8) == 0)
        return RingExpr::named(
            rng.pick(cfg.local_factors ? field_fixtures() : local_fixtures()));
    if (cfg.allow_quotient && !cfg.local_factors && !cfg.multi_prime_factors &&
        rng.below(6) == 0) {
        // Z/n mod (s) with s | n is Z/s; sized by s.
        const std::uint64_t s = rng.pick(fits);
        const std::uint64_t mult = 2 + rng.below(2);
        if (s * mult <= 64) return RingExpr::quot(RingExpr::zmod(s * mult), {ElemLit{false, s, {}}});
        return RingExpr::zmod(s);
    }
    return RingExpr::zmod(rng.pick(fits));
}

/// A product expression within the configured size and arity bounds.
inline RingExpr random_product_expr(Rng& rng, const GenConfig& cfg) {
    const int arity =
        cfg.min_factors + static_cast<int>(rng.below(cfg.max_factors - cfg.min_factors + 1));
    std::vector<RingExpr> factors;
    std::uint64_t budget = cfg.max_size;
    for (int i = 0; i < arity; ++i) {
        const std::uint64_t remaining = arity - i;
        // Leave room for size-2 factors to fill the rest.
        std::uint64_t per = budget;
        for (std::uint64_t j = 1; j < remaining; ++j) per /= 2;
        RingExpr f = random_factor(rng, per < 2 ? 2 : per, cfg);
        budget /= std::max<std::uint64_t>(1, gen_detail::expr_size(f));
        factors.push_back(std::move(f));
    }
    return RingExpr::prod(std::move(factors));
}

/// Any generated ring: modular, product of 2..max factors, quotient, fixture.
inline RingExpr random_ring_expr(Rng& rng, const GenConfig& cfg) {
    switch (rng.below(4)) {
        case 0:
            return RingExpr::zmod(
                rng.pick(gen_detail::general_moduli()));
        case 1:
            if (cfg.allow_quotient) {
                const std::uint64_t n = rng.pick(gen_detail::general_moduli());
                const std::uint64_t g = rng.below(n);
                return RingExpr::quot(RingExpr::zmod(n), {ElemLit{false, g, {}}});
            }
            [[fallthrough]];
        case 2:
            if (cfg.allow_fixture && rng.below(4) == 0)
                return RingExpr::named(rng.pick(gen_detail::local_fixtures()));
            [[fallthrough]];
        default:
            return random_product_expr(rng, cfg);
    }
}

/// Everything with at most `cap` elements built from modular rings,
/// 2- and 3-factor products, quotients (of modulars and of products),
/// and the table fixtures. Deterministic order.
inline std::vector<RingExpr> small_ring_corpus(std::uint64_t cap = 32) {
    std::vector<RingExpr> out;
    for (std::uint64_t n = 1; n <= cap; ++n) out.push_back(RingExpr::zmod(n));
    for (std::uint64_t a = 2; a <= cap / 2; ++a)
        for (std::uint64_t b = 2; a * b <= cap; ++b)
            out.push_back(RingExpr::prod({RingExpr::zmod(a), RingExpr::zmod(b)}));
    for (std::uint64_t a = 2; a <= cap / 4; ++a)
        for (std::uint64_t b = 2; a * b <= cap / 2; ++b)
            for (std::uint64_t c = 2; a * b * c <= cap; ++c)
                out.push_back(
                    RingExpr::prod({RingExpr::zmod(a), RingExpr::zmod(b), RingExpr::zmod(c)}));
    // Quotients of modulars: by the zero ideal and by each proper divisor.
    for (std::uint64_t n = 2; n <= cap; ++n) {
        out.push_back(RingExpr::quot(RingExpr::zmod(n), {ElemLit{false, 0, {}}}));
        for (std::uint64_t d = 2; d < n; ++d)
            if (n % d == 0) out.push_back(RingExpr::quot(RingExpr::zmod(n), {ElemLit{false, d, {}}}));
    }
    // Quotients of 2-factor products by a unit idempotent.
    for (std::uint64_t a = 2; a <= cap / 2; ++a)
        for (std::uint64_t b = 2; a * b <= cap; ++b) {
            RingExpr p = RingExpr::prod({RingExpr::zmod(a), RingExpr::zmod(b)});
            ElemLit e1{true, 0, {ElemLit{false, 1, {}}, ElemLit{false, 0, {}}}};
            ElemLit e2{true, 0, {ElemLit{false, 0, {}}, ElemLit{false, 1, {}}}};
            out.push_back(RingExpr::quot(p, {e1}));
            out.push_back(RingExpr::quot(std::move(p), {e2}));
        }
    for (const auto& name : gen_detail::local_fixtures())
        if (gen_detail::expr_size(RingExpr::named(name)) <= cap)
            out.push_back(RingExpr::named(name));
    return out;
}

/// A componentwise hom family out of the factors of a source product:
/// identities, canonical Z/n -> Z/m with m | n, and canonical quotient maps.
inline std::vector<RingHom> random_hom_family(Rng& rng, const RingPtr& source) {
    if (source->kind() != Ring::Kind::Product)
        throw PreconditionError("random_hom_family: requires a product ring");
    std::vector<RingHom> comps;
    for (const auto& factor : source->factors()) {
        const int kind = static_cast<int>(rng.below(3));
        if (kind == 0) {
            comps.push_back(RingHom::identity(factor));
            continue;
        }
        if (kind == 1 && factor->kind() == Ring::Kind::Modular) {
            // Z/n -> Z/m, x |-> x mod m, for a divisor m >= 2.
            std::vector<std::uint64_t> divisors;
            for (std::uint64_t m = 2; m <= factor->modulus(); ++m)
                if (factor->modulus() % m == 0) divisors.push_back(m);
            const std::uint64_t m = rng.pick(divisors);
            RingPtr target = Ring::modular(m);
            std::vector<EIdx> mapping(factor->size());
            for (EIdx x = 0; x < factor->size(); ++x) mapping[x] = x % m;
            comps.emplace_back(factor, std::move(target), std::move(mapping));
            continue;
        }
        // Canonical quotient by a principal ideal on a non-unit generator.
        std::vector<EIdx> nonunits;
        for (EIdx g = 0; g < factor->size(); ++g)
            if (!is_unit(*factor, g)) nonunits.push_back(g);
        const EIdx g = rng.pick(nonunits);
        RingPtr q = quotient_ring(principal_ideal(factor, g));
        comps.push_back(RingHom::canonical_quotient(q));
    }
    return comps;
}

/// An injective hom out of a small ring: identity, diagonal into a power,
/// or the Chinese-remainder splitting of a composite modulus.
inline RingHom random_injective_hom(Rng& rng, const RingPtr& source) {
    std::vector<int> options{0};
    if (source->size() * source->size() <= kScanGuard) options.push_back(1);
    if (source->size() * source->size() * source->size() <= kScanGuard) options.push_back(2);
    std::uint64_t split = 0;
    if (source->kind() == Ring::Kind::Modular) {
        const std::uint64_t n = source->modulus();
        for (std::uint64_t a = 2; a * a <= n; ++a)
            if (n % a == 0 && std::gcd(a, n / a) == 1) {
                split = a;
                options.push_back(3);
                break;
            }
    }
    switch (options[rng.below(options.size())]) {
        case 1:
            return RingHom::diagonal(source, 2);
        case 2:
            return RingHom::diagonal(source, 3);
        case 3: {
            const std::uint64_t a = split, b = source->modulus() / split;
            RingPtr target = Ring::product({Ring::modular(a), Ring::modular(b)});
            std::vector<EIdx> mapping(source->size());
            for (EIdx x = 0; x < source->size(); ++x)
                mapping[x] = target->compose({x % a, x % b});
            return RingHom(source, std::move(target), std::move(mapping));
        }
        default:
            return RingHom::identity(source);
    }
}

}  // namespace ringlab
