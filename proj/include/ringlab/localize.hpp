#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/filters.hpp"
#include "ringlab/hom.hpp"
#include "ringlab/ideal.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/spectrum.hpp"

namespace ringlab {

/// Support S(x) = { k : x_k != 0 } of a product element, as a bit mask.
inline std::uint32_t support(const Ring& r, EIdx x) {
    if (r.kind() != Ring::Kind::Product) throw PreconditionError("support: not a product ring");
    if (r.arity() > 20) throw ResourceError("support: too many factors for mask encoding");
    std::uint32_t mask = 0;
    for (std::size_t k = 0; k < r.arity(); ++k)
        if (r.component(x, k) != r.factors()[k]->zero()) mask |= std::uint32_t{1} << k;
    return mask;
}

/// Omega(x) = { k : x_k outside the maximal ideal of the local factor R_k }
/// = { k : x_k is a unit of R_k }. Every factor must be local.
inline std::uint32_t omega_set(const Ring& r, EIdx x) {
    if (r.kind() != Ring::Kind::Product) throw PreconditionError("omega_set: not a product ring");
    if (r.arity() > 20) throw ResourceError("omega_set: too many factors for mask encoding");
    std::uint32_t mask = 0;
    for (std::size_t k = 0; k < r.arity(); ++k) {
        const Ring& f = *r.factors()[k];
        if (!ring_predicates(f).is_local)
            throw PreconditionError("omega_set: factor " + std::to_string(k + 1) + " (" +
                                    f.str() + ") is not local");
        if (is_unit(f, r.component(x, k))) mask |= std::uint32_t{1} << k;
    }
    return mask;
}

/// A multiplicative subset: contains 1 and is closed under products
/// (verified at construction for every provenance).
class MultiplicativeSet {
public:
    enum class Provenance { ComplementOfPrime, TFilter, UFilter, Explicit };

    static MultiplicativeSet complement_of_prime(RingPtr ring, const Ideal& p) {
        if (p.ring() != ring) throw PreconditionError("complement_of_prime: foreign ideal");
        if (!is_prime(p)) throw PreconditionError("complement_of_prime: ideal is not prime");
        std::vector<EIdx> elems;
        for (EIdx x = 0; x < ring->size(); ++x)
            if (!p.contains(x)) elems.push_back(x);
        return MultiplicativeSet(std::move(ring), std::move(elems),
                                 Provenance::ComplementOfPrime);
    }

    /// T_F = { x : Omega(x) in F } over a product of local rings.
    static MultiplicativeSet t_filter(RingPtr ring, const FilterObject& f) {
        check_product(*ring, f, "t_filter");
        std::vector<Bits> factor_units = local_factor_units(*ring, "t_filter");
        std::vector<EIdx> elems;
        for (EIdx x = 0; x < ring->size(); ++x) {
            std::uint32_t om = 0;
            for (std::size_t k = 0; k < ring->arity(); ++k)
                if (factor_units[k].test(ring->component(x, k))) om |= std::uint32_t{1} << k;
            if (f.contains(om)) elems.push_back(x);
        }
        return MultiplicativeSet(std::move(ring), std::move(elems), Provenance::TFilter);
    }

    /// U_F = { x : support(x) in F } over a product of domains.
    static MultiplicativeSet u_filter(RingPtr ring, const FilterObject& f) {
        check_product(*ring, f, "u_filter");
        for (std::size_t k = 0; k < ring->arity(); ++k)
            if (!ring_predicates(*ring->factors()[k]).is_domain)
                throw PreconditionError("u_filter: factor " + std::to_string(k + 1) + " (" +
                                        ring->factors()[k]->str() + ") is not a domain");
        std::vector<EIdx> elems;
        for (EIdx x = 0; x < ring->size(); ++x)
            if (f.contains(support(*ring, x))) elems.push_back(x);
        return MultiplicativeSet(std::move(ring), std::move(elems), Provenance::UFilter);
    }

    /// Multiplicative closure of {1} and the given elements.
    static MultiplicativeSet explicit_closure(RingPtr ring, const std::vector<EIdx>& gens) {
        Bits in(ring->size());
        std::vector<EIdx> work{ring->one()};
        in.set(ring->one());
        for (EIdx g : gens) {
            if (g >= ring->size()) throw PreconditionError("explicit_closure: element out of range");
            if (!in.test(g)) {
                in.set(g);
                work.push_back(g);
            }
        }
        for (std::size_t i = 0; i < work.size(); ++i)
            for (std::size_t j = 0; j <= i; ++j) {
                const EIdx p = ring->mul(work[i], work[j]);
                if (!in.test(p)) {
                    in.set(p);
                    work.push_back(p);
                }
            }
        return MultiplicativeSet(std::move(ring), in.to_list(), Provenance::Explicit);
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<EIdx>& elems() const { return elems_; }
    bool contains(EIdx x) const { return mask_.test(x); }
    Provenance provenance() const { return prov_; }

private:
    MultiplicativeSet(RingPtr ring, std::vector<EIdx> elems, Provenance prov)
        : ring_(std::move(ring)), elems_(std::move(elems)), mask_(ring_->size()), prov_(prov) {
        for (EIdx x : elems_) mask_.set(x);
        if (!mask_.test(ring_->one()))
            throw ConstructionError("multiplicative set: missing 1");
        for (EIdx a : elems_)
            for (EIdx b : elems_)
                if (!mask_.test(ring_->mul(a, b)))
                    throw ConstructionError("multiplicative set: not closed at " +
                                            ring_->elem_str(a) + " * " + ring_->elem_str(b));
    }

    static void check_product(const Ring& r, const FilterObject& f, const char* who) {
        if (r.kind() != Ring::Kind::Product)
            throw PreconditionError(std::string(who) + ": not a product ring");
        if (f.index_size() != r.arity())
            throw PreconditionError(std::string(who) + ": filter index set does not match arity");
    }
    static std::vector<Bits> local_factor_units(const Ring& r, const char* who) {
        std::vector<Bits> out;
        for (std::size_t k = 0; k < r.arity(); ++k) {
            const Ring& f = *r.factors()[k];
            if (!ring_predicates(f).is_local)
                throw PreconditionError(std::string(who) + ": factor " + std::to_string(k + 1) +
                                        " (" + f.str() + ") is not local");
            out.push_back(unit_mask(f));
        }
        return out;
    }

    RingPtr ring_;
    std::vector<EIdx> elems_;
    Bits mask_;
    Provenance prov_;
};

/// T^{-1}R for a finite ring. Inverting T is the same as passing to R/K for
/// K = { a : at = 0 for some t in T }: images of T become non-zero-divisors,
/// and non-zero-divisors of a finite ring are units. Pair classes (a, t) are
/// exposed through fraction() and least_pair(); (a,t) ~ (a',t') iff
/// u(at' - a't) = 0 for some u in T iff the resolved fractions agree.
class LocalizedRing {
public:
    LocalizedRing(RingPtr base, MultiplicativeSet tset, RingPtr carrier, RingHom canonical,
                  Ideal kernel)
        : base_(std::move(base)),
          tset_(std::move(tset)),
          carrier_(std::move(carrier)),
          canonical_(std::move(canonical)),
          kernel_(std::move(kernel)) {}

    const RingPtr& base() const { return base_; }
    const MultiplicativeSet& mult_set() const { return tset_; }
    /// The carrier ring of T^{-1}R (a quotient of the base).
    const RingPtr& ring() const { return carrier_; }
    const RingHom& canonical_map() const { return canonical_; }
    const Ideal& kernel() const { return kernel_; }

    /// The class of the pair (a, t): canonical(a) * canonical(t)^{-1}.
    EIdx fraction(EIdx a, EIdx t) const {
        if (!tset_.contains(t)) throw PreconditionError("fraction: denominator not in T");
        const EIdx tbar = canonical_(t);
        for (EIdx z = 0; z < carrier_->size(); ++z)
            if (carrier_->mul(tbar, z) == carrier_->one())
                return carrier_->mul(canonical_(a), z);
        throw ConsistencyError("fraction: denominator image is not a unit");
    }

    /// Least (a, t) in lexicographic element order resolving to the class.
    std::pair<EIdx, EIdx> least_pair(EIdx cls) const {
        for (EIdx a = 0; a < base_->size(); ++a)
            for (EIdx t : tset_.elems())
                if (fraction(a, t) == cls) return {a, t};
        throw PreconditionError("least_pair: no pair resolves to this class");
    }

private:
    RingPtr base_;
    MultiplicativeSet tset_;
    RingPtr carrier_;
    RingHom canonical_;
    Ideal kernel_;
};

/// Localize a finite ring at a multiplicative set. 0 in T is permitted and
/// yields the zero ring. The canonical map is verified to send every member
/// of T to a unit.
inline LocalizedRing localize(RingPtr ring, MultiplicativeSet tset,
                              std::uint64_t guard = kScanGuard) {
    if (tset.ring() != ring) throw PreconditionError("localize: multiplicative set of another ring");
    require_scan(*ring, guard, "localize");
    std::vector<EIdx> kernel_elems;
    for (EIdx a = 0; a < ring->size(); ++a)
        for (EIdx t : tset.elems())
            if (ring->mul(a, t) == ring->zero()) {
                kernel_elems.push_back(a);
                break;
            }
    Ideal kernel = Ideal::from_elements(ring, std::move(kernel_elems), guard);
    RingPtr carrier = quotient_ring(kernel);
    RingHom canonical = RingHom::canonical_quotient(carrier);
    for (EIdx t : tset.elems())
        if (!is_unit(*carrier, canonical(t)))
            throw ConsistencyError("localize: image of a T-element is not a unit");
    return LocalizedRing(std::move(ring), std::move(tset), std::move(carrier),
                         std::move(canonical), std::move(kernel));
}

struct FilterQuotientIso {
    Ideal i_f;            // { a : S \ support(a) in F }, the kernel both ways
    RingPtr quotient;     // R / I_F
    LocalizedRing local;  // T_F^{-1} R
    RingHom iso;          // quotient -> local.ring(), verified bijective
};

/// The isomorphism R/I_F -> T_F^{-1}R over a product of local rings and a
/// proper filter F. The kernel of the canonical map is computed on the
/// localization side and checked against the direct comprehension; the map
/// a + I_F |-> a/1 is verified to be a bijective hom, with surjectivity
/// also witnessed through the componentwise partial inverse of every
/// denominator.
inline FilterQuotientIso filter_quotient_iso(RingPtr ring, const FilterObject& f,
                                             std::uint64_t guard = kScanGuard) {
    require_scan(*ring, guard, "filter_quotient_iso");
    MultiplicativeSet t = MultiplicativeSet::t_filter(ring, f);
    LocalizedRing local = localize(ring, t, guard);

    std::vector<EIdx> direct;
    const std::uint32_t full = f.full_mask();
    for (EIdx a = 0; a < ring->size(); ++a)
        if (f.contains(full & ~support(*ring, a))) direct.push_back(a);
    Ideal i_f = Ideal::from_elements(ring, std::move(direct), guard);
    if (i_f != local.kernel())
        throw ConsistencyError("filter_quotient_iso: kernel law failed on " + ring->str());

    RingPtr quot = quotient_ring(i_f);
    std::vector<EIdx> mapping(quot->size());
    for (EIdx q = 0; q < quot->size(); ++q) mapping[q] = local.fraction(quot->rep(q), ring->one());
    RingHom iso(quot, local.ring(), std::move(mapping));
    const auto analysis = hom_analysis(iso);
    if (!analysis.is_injective || !analysis.is_surjective)
        throw ConsistencyError("filter_quotient_iso: map is not bijective on " + ring->str());

    // Surjectivity witness: for b in T with componentwise partial inverse
    // b', the fraction 1/b is the image of b'.
    for (EIdx b : local.mult_set().elems()) {
        std::vector<EIdx> comps(ring->arity());
        for (std::size_t k = 0; k < ring->arity(); ++k) {
            const Ring& fac = *ring->factors()[k];
            const EIdx bk = ring->component(b, k);
            comps[k] = fac.zero();
            for (EIdx z = 0; z < fac.size(); ++z)
                if (fac.mul(bk, z) == fac.one()) {
                    comps[k] = z;
                    break;
                }
        }
        const EIdx bprime = ring->compose(comps);
        if (local.fraction(ring->one(), b) != local.canonical_map()(bprime))
            throw ConsistencyError("filter_quotient_iso: partial-inverse witness failed");
    }
    return FilterQuotientIso{std::move(i_f), std::move(quot), std::move(local), std::move(iso)};
}

struct DomainEmbedding {
    Ideal kernel;         // = I_F
    LocalizedRing local;  // U_F^{-1} R
    RingHom embedding;    // R/I_F -> U_F^{-1}R
    bool injective = false;
    bool surjective = false;
};

/// R/I_F embeds into U_F^{-1}R over a product of (finite) domains. At finite
/// scale the embedding is onto as well; both flags are reported.
inline DomainEmbedding domain_embedding_check(RingPtr ring, const FilterObject& f,
                                              std::uint64_t guard = kScanGuard) {
    require_scan(*ring, guard, "domain_embedding_check");
    MultiplicativeSet u = MultiplicativeSet::u_filter(ring, f);
    LocalizedRing local = localize(ring, u, guard);

    std::vector<EIdx> direct;
    const std::uint32_t full = f.full_mask();
    for (EIdx a = 0; a < ring->size(); ++a)
        if (f.contains(full & ~support(*ring, a))) direct.push_back(a);
    Ideal i_f = Ideal::from_elements(ring, std::move(direct), guard);
    if (i_f != local.kernel())
        throw ConsistencyError("domain_embedding_check: kernel differs from I_F on " + ring->str());

    RingPtr quot = quotient_ring(i_f);
    std::vector<EIdx> mapping(quot->size());
    for (EIdx q = 0; q < quot->size(); ++q) mapping[q] = local.fraction(quot->rep(q), ring->one());
    RingHom emb(quot, local.ring(), std::move(mapping));
    const auto analysis = hom_analysis(emb);
    return DomainEmbedding{std::move(i_f), std::move(local), std::move(emb),
                           analysis.is_injective, analysis.is_surjective};
}

/// For an injective hom and a prime of the source (minimal = any prime in a
/// finite ring), find the first prime of the target pulling back to it.
/// Existence is a theorem; failure raises a hard error.
inline Ideal lying_over_minimal(const RingHom& phi, const Ideal& p,
                                std::uint64_t guard = kScanGuard) {
    if (p.ring() != phi.source()) throw PreconditionError("lying_over: prime not in source ring");
    if (!is_prime(p)) throw PreconditionError("lying_over: ideal is not prime");
    if (hom_analysis(phi).kernel.size() != 1)
        throw PreconditionError("lying_over: hom is not injective");
    const Spectrum sp = spec(phi.target(), guard);
    for (const auto& point : sp.points())
        if (preimage_ideal(phi, point.prime) == p) return point.prime;
    throw ConsistencyError("lying_over: no prime of " + phi.target()->str() + " lies over " +
                           p.str() + " (theorem violation)");
}

}  // namespace ringlab
