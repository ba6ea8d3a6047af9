#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/ring.hpp"
#include "ringlab/util.hpp"

namespace ringlab {

/// An ideal stored extensionally: the full element set plus the generator
/// list it was closed from. Immutable after construction.
class Ideal {
public:
    static Ideal from_generators(RingPtr ring, std::vector<EIdx> gens,
                                 std::uint64_t guard = kScanGuard);
    /// Wraps a set already known to be an ideal (validated); a reduced
    /// generator list is derived for provenance and printing.
    static Ideal from_elements(RingPtr ring, std::vector<EIdx> elems,
                               std::uint64_t guard = kScanGuard);

    /// Wraps a set that is an ideal by construction (a hom preimage or a
    /// structural pullback). No validation pass; callers supply generators.
    static Ideal from_elements_unchecked(RingPtr ring, std::vector<EIdx> elems,
                                         std::vector<EIdx> gens);

    const RingPtr& ring() const { return ring_; }
    const std::vector<EIdx>& generators() const { return gens_; }
    const std::vector<EIdx>& elems() const { return elems_; }
    const Bits& mask() const { return mask_; }

    std::uint64_t size() const { return elems_.size(); }
    bool contains(EIdx x) const { return mask_.test(x); }
    bool is_proper() const { return !mask_.test(ring_->one()); }
    bool is_zero() const { return elems_.size() == 1; }

    bool subset_of(const Ideal& o) const { return mask_.subset_of(o.mask_); }
    bool operator==(const Ideal& o) const { return ring_ == o.ring_ && mask_ == o.mask_; }
    bool operator!=(const Ideal& o) const { return !(*this == o); }

    friend Ideal ideal_sum(const Ideal& a, const Ideal& b);

    /// "(g1,g2,...)" over generator encodings.
    std::string str() const {
        std::string out = "(";
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if (i) out += ",";
            out += ring_->elem_str(gens_[i]);
        }
        if (gens_.empty()) out += ring_->elem_str(ring_->zero());
        return out + ")";
    }

private:
    Ideal(RingPtr ring, std::vector<EIdx> gens, std::vector<EIdx> elems, Bits mask)
        : ring_(std::move(ring)),
          gens_(std::move(gens)),
          elems_(std::move(elems)),
          mask_(std::move(mask)) {}

    RingPtr ring_;
    std::vector<EIdx> gens_;
    std::vector<EIdx> elems_;  // sorted
    Bits mask_;
};

namespace detail {

inline Bits principal_mask(const Ring& r, EIdx g) {
    Bits out(r.size());
    for (EIdx x = 0; x < r.size(); ++x) out.set(r.mul(x, g));
    return out;
}

// Sum of two ideals given as masks: the sumset {i + j} is already an ideal.
inline Bits ideal_sum_mask(const Ring& r, const Bits& a, const Bits& b) {
    Bits out(r.size());
    const auto bl = b.to_list();
    for (EIdx i = 0; i < r.size(); ++i) {
        if (!a.test(i)) continue;
        for (EIdx j : bl) out.set(r.add(i, j));
    }
    return out;
}

inline bool is_ideal_mask(const Ring& r, const Bits& m) {
    if (!m.test(r.zero())) return false;
    const auto list = m.to_list();
    for (EIdx i : list)
        for (EIdx j : list)
            if (!m.test(r.add(i, j))) return false;
    for (EIdx i : list)
        for (EIdx x = 0; x < r.size(); ++x)
            if (!m.test(r.mul(i, x))) return false;
    return true;
}

}  // namespace detail

inline Ideal Ideal::from_generators(RingPtr ring, std::vector<EIdx> gens, std::uint64_t guard) {
    require_scan(*ring, guard, "ideal closure");
    Bits acc(ring->size());
    acc.set(ring->zero());
    for (EIdx g : gens) {
        if (g >= ring->size()) throw PreconditionError("ideal generator out of range");
        if (acc.test(g)) continue;
        acc = detail::ideal_sum_mask(*ring, acc, detail::principal_mask(*ring, g));
    }
    auto elems = acc.to_list();
    return Ideal(std::move(ring), std::move(gens), std::move(elems), std::move(acc));
}

inline Ideal Ideal::from_elements(RingPtr ring, std::vector<EIdx> elems, std::uint64_t guard) {
    require_scan(*ring, guard, "ideal from elements");
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    Bits mask(ring->size());
    for (EIdx x : elems) {
        if (x >= ring->size()) throw PreconditionError("ideal element out of range");
        mask.set(x);
    }
    if (!detail::is_ideal_mask(*ring, mask))
        throw PreconditionError("element set is not an ideal of " + ring->str());
    // Greedy reduced generators, in element order.
    std::vector<EIdx> gens;
    Bits acc(ring->size());
    acc.set(ring->zero());
    for (EIdx x : elems) {
        if (acc.test(x)) continue;
        gens.push_back(x);
        acc = detail::ideal_sum_mask(*ring, acc, detail::principal_mask(*ring, x));
    }
    return Ideal(std::move(ring), std::move(gens), std::move(elems), std::move(mask));
}

inline Ideal Ideal::from_elements_unchecked(RingPtr ring, std::vector<EIdx> elems,
                                            std::vector<EIdx> gens) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    Bits mask(ring->size());
    for (EIdx x : elems) mask.set(x);
    return Ideal(std::move(ring), std::move(gens), std::move(elems), std::move(mask));
}

inline Ideal principal_ideal(RingPtr ring, EIdx g, std::uint64_t guard = kScanGuard) {
    return Ideal::from_generators(std::move(ring), {g}, guard);
}

inline Ideal zero_ideal(RingPtr ring, std::uint64_t guard = kScanGuard) {
    return Ideal::from_generators(std::move(ring), {}, guard);
}

inline Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    if (a.ring() != b.ring()) throw PreconditionError("ideal sum across different rings");
    // The sumset of two ideals is itself the ideal sum; no revalidation needed.
    Bits m = detail::ideal_sum_mask(*a.ring(), a.mask(), b.mask());
    std::vector<EIdx> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    std::vector<EIdx> elems = m.to_list();
    return Ideal(a.ring(), std::move(gens), std::move(elems), std::move(m));
}

/// A pair (a, b) outside I with ab in I, if any (nullopt when I is prime).
/// An improper ideal reports (1, 1).
inline std::optional<std::pair<EIdx, EIdx>> prime_witness(const Ideal& i) {
    const Ring& r = *i.ring();
    if (!i.is_proper()) return std::make_pair(r.one(), r.one());
    std::vector<EIdx> outside;
    outside.reserve(r.size() - i.size());
    for (EIdx x = 0; x < r.size(); ++x)
        if (!i.contains(x)) outside.push_back(x);
    for (std::size_t p = 0; p < outside.size(); ++p)
        for (std::size_t q = p; q < outside.size(); ++q)
            if (i.contains(r.mul(outside[p], outside[q])))
                return std::make_pair(outside[p], outside[q]);
    return std::nullopt;
}

/// Proper, and ab in I forces a or b in I (exhaustive over the complement).
inline bool is_prime(const Ideal& i) {
    return i.is_proper() && !prime_witness(i).has_value();
}

inline RingPtr quotient_ring(const Ideal& i) {
    // Ideal-ness is the class invariant; no revalidation pass needed.
    return Ring::quotient_unchecked(i.ring(), i.elems(), i.generators());
}

/// True iff R/I is a field.
inline bool is_maximal(const Ideal& i) {
    if (!i.is_proper()) return false;
    RingPtr q = quotient_ring(i);
    if (q->size() < 2) return false;
    for (EIdx a = 0; a < q->size(); ++a)
        if (a != q->zero() && !is_unit(*q, a)) return false;
    return true;
}

/// { a : a^m in I for some m >= 1 }.
inline Ideal radical_of(const Ideal& i) {
    const Ring& r = *i.ring();
    std::vector<EIdx> members;
    for (EIdx a = 0; a < r.size(); ++a) {
        Bits seen(r.size());
        EIdx p = a;
        while (true) {
            if (i.contains(p)) {
                members.push_back(a);
                break;
            }
            if (seen.test(p)) break;
            seen.set(p);
            p = r.mul(p, a);
        }
    }
    return Ideal::from_elements(i.ring(), std::move(members));
}

inline Ideal nilradical(RingPtr ring, std::uint64_t guard = kScanGuard) {
    return radical_of(zero_ideal(std::move(ring), guard));
}

/// { a : 1 - ab is a unit for every b }: the intersection of the maximal
/// ideals, by the classical elementwise characterization.
inline Ideal jacobson_radical(RingPtr ring, std::uint64_t guard = kScanGuard) {
    require_scan(*ring, guard, "jacobson_radical");
    const Ring& r = *ring;
    const Bits units = unit_mask(r, guard);
    std::vector<EIdx> members;
    for (EIdx a = 0; a < r.size(); ++a) {
        bool in = true;
        for (EIdx b = 0; b < r.size(); ++b)
            if (!units.test(r.sub(r.one(), r.mul(a, b)))) {
                in = false;
                break;
            }
        if (in) members.push_back(a);
    }
    return Ideal::from_elements(std::move(ring), std::move(members));
}

/// Generated by its own idempotents.
inline bool is_regular_ideal(const Ideal& i, std::uint64_t guard = kScanGuard) {
    const Ring& r = *i.ring();
    require_scan(r, guard, "is_regular_ideal");
    // Fold e v f = e + f - ef over the contained idempotents; the ideal they
    // generate is principal on the join.
    EIdx join = r.zero();
    for (EIdx e = 0; e < r.size(); ++e)
        if (i.contains(e) && r.mul(e, e) == e)
            join = r.sub(r.add(join, e), r.mul(join, e));
    return detail::principal_mask(r, join) == i.mask();
}

}  // namespace ringlab
