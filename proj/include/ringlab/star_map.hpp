#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/boolean.hpp"
#include "ringlab/product.hpp"

namespace ringlab {

/// One chosen prime per factor of a product ring. Never defaulted silently:
/// callers either pass their own or explicitly ask for spec-order firsts.
class BasePrimeChoice {
public:
    BasePrimeChoice(const RingPtr& product, std::vector<Ideal> primes)
        : primes_(std::move(primes)) {
        require_product(*product, "BasePrimeChoice");
        if (primes_.size() != product->arity())
            throw PreconditionError("BasePrimeChoice: need one prime per factor");
        for (std::size_t k = 0; k < primes_.size(); ++k) {
            if (primes_[k].ring() != product->factors()[k])
                throw PreconditionError("BasePrimeChoice: prime " + std::to_string(k + 1) +
                                        " lives in the wrong ring");
            if (!is_prime(primes_[k]))
                throw PreconditionError("BasePrimeChoice: ideal " + std::to_string(k + 1) +
                                        " is not prime");
        }
    }

    /// The first prime of each factor in spectrum order.
    static BasePrimeChoice first_in_spec_order(const RingPtr& product,
                                               std::uint64_t guard = kScanGuard) {
        require_product(*product, "BasePrimeChoice");
        std::vector<Ideal> primes;
        for (const auto& f : product->factors()) {
            const Spectrum sp = spec(f, guard);
            if (sp.size() == 0)
                throw PreconditionError("BasePrimeChoice: factor " + f->str() + " has no prime");
            primes.push_back(sp[0].prime);
        }
        return BasePrimeChoice(product, std::move(primes));
    }

    const std::vector<Ideal>& primes() const { return primes_; }
    const Ideal& at(std::size_t k) const { return primes_[k]; }

private:
    std::vector<Ideal> primes_;
};

/// a^* = { i : a_i in p_i }, as a subset mask of S.
inline std::uint32_t a_star(const Ring& r, EIdx a, const BasePrimeChoice& base) {
    require_product(r, "a_star");
    if (base.primes().size() != r.arity())
        throw PreconditionError("a_star: base choice does not match the product arity");
    std::uint32_t mask = 0;
    for (std::size_t k = 0; k < r.arity(); ++k) {
        if (base.at(k).ring() != r.factors()[k])
            throw PreconditionError("a_star: base prime " + std::to_string(k + 1) +
                                    " lives in a different ring");
        if (base.at(k).contains(r.component(a, k))) mask |= std::uint32_t{1} << k;
    }
    return mask;
}

/// M^* = { a : a^* not in M } for a prime M of P(S). Verified against the
/// tame pullback pi_k^{-1}(p_k) of the index k generating M.
inline Ideal m_star(const SetRing& sets, RingPtr ring, const Ideal& m,
                    const BasePrimeChoice& base, std::uint64_t guard = kScanGuard) {
    require_product(*ring, "m_star");
    if (sets.index_size() != ring->arity())
        throw PreconditionError("m_star: index set does not match product arity");
    if (m.ring() != sets.ring()) throw PreconditionError("m_star: ideal not in P(S)");
    if (auto w = prime_witness(m))
        throw PreconditionError("m_star: M is not prime in P(S): " +
                                sets.ring()->elem_str(w->first) + " * " +
                                sets.ring()->elem_str(w->second) + " lies inside");
    // Every prime of P(S) over finite S is P(S minus one index); locate it.
    std::size_t k = sets.index_size();
    for (std::size_t j = 0; j < sets.index_size(); ++j)
        if (!m.contains(sets.elem_of(std::uint32_t{1} << j))) {
            if (k != sets.index_size())
                throw ConsistencyError("m_star: two singletons outside a setring prime");
            k = j;
        }
    if (k == sets.index_size())
        throw ConsistencyError("m_star: setring prime contains every singleton");

    std::vector<EIdx> elems;
    for (EIdx a = 0; a < ring->size(); ++a)
        if (!m.contains(sets.elem_of(a_star(*ring, a, base)))) elems.push_back(a);
    Ideal tame = tame_prime(ring, k, base.at(k), guard);
    if (elems != tame.elems())
        throw ConsistencyError("m_star: star set differs from pi_k^{-1}(p_k)");
    return Ideal::from_elements_unchecked(std::move(ring), std::move(elems), tame.generators());
}

struct EmbeddingReport {
    std::size_t setring_primes_checked = 0;
    std::size_t elements_checked = 0;
    bool all_images_prime = false;
    bool injective = false;
    bool continuity = false;           // preimage of D(a) equals V(a^*)
    bool tame_correspondence = false;  // principal M maps to the tame pullback
    bool left_inverse = false;         // spec_to_powerset after m_star is the identity
    bool wild_direction_vacuous = true;  // no wild primes exist at finite S
};

/// The embedding Spec(P(S)) -> Spec(R): injectivity, continuity on every
/// element, the principal-to-tame correspondence, and the left inverse law.
inline EmbeddingReport embedding_checks(RingPtr ring, const BasePrimeChoice& base,
                                        std::uint64_t guard = kScanGuard) {
    require_product(*ring, "embedding_checks");
    require_scan(*ring, guard, "embedding_checks");
    const SetRing sets(ring->arity());
    const std::vector<Ideal> ms = setring_primes(sets);
    EmbeddingReport report;
    report.setring_primes_checked = ms.size();

    std::vector<Ideal> stars;
    report.all_images_prime = true;
    report.tame_correspondence = true;
    for (std::size_t j = 0; j < ms.size(); ++j) {
        // m_star equates the star set with a tame pullback whose primality
        // tame_prime scanned in full; that is the primality verification.
        Ideal star = m_star(sets, ring, ms[j], base, guard);
        Classification cls = detail::classify_prime_trusted(ring, star, guard);
        if (cls.is_wild() || cls.tame->k != j || cls.tame->factor_prime != base.at(j))
            report.tame_correspondence = false;
        stars.push_back(std::move(star));
    }

    report.injective = true;
    for (std::size_t i = 0; i < stars.size(); ++i)
        for (std::size_t j = i + 1; j < stars.size(); ++j)
            if (stars[i] == stars[j]) report.injective = false;

    // Continuity: the preimage of D(a) under M |-> M^* is V(a^*) = D(1 - a^*).
    report.continuity = true;
    for (EIdx a = 0; a < ring->size(); ++a) {
        const EIdx star_elem = sets.elem_of(a_star(*ring, a, base));
        const EIdx costar = sets.ring()->sub(sets.ring()->one(), star_elem);
        for (std::size_t j = 0; j < ms.size(); ++j) {
            const bool in_preimage = !stars[j].contains(a);
            const bool in_v = ms[j].contains(star_elem);
            const bool in_d_complement = !ms[j].contains(costar);
            if (in_preimage != in_v || in_v != in_d_complement) report.continuity = false;
        }
    }
    report.elements_checked = ring->size();

    report.left_inverse = true;
    for (std::size_t j = 0; j < ms.size(); ++j)
        if (spec_to_powerset(sets, ring, stars[j]) != ms[j]) report.left_inverse = false;
    return report;
}

}  // namespace ringlab
