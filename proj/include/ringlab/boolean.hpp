#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/hom.hpp"
#include "ringlab/ideal.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// The Boolean ring B(R) of idempotents of a host ring, with addition
/// e (+) f = e + f - 2ef and the host multiplication. Elements are host
/// element indices restricted to the carrier.
class BooleanRingView {
public:
    explicit BooleanRingView(RingPtr host, std::uint64_t guard = kScanGuard)
        : host_(std::move(host)), carrier_(idempotents(*host_, guard)) {
        pos_.assign(host_->size(), carrier_.size());
        for (std::size_t i = 0; i < carrier_.size(); ++i) pos_[carrier_[i]] = i;
        for (EIdx e : carrier_)
            for (EIdx f : carrier_)
                if (!is_carrier(bool_add(e, f)))
                    throw ConsistencyError("Boolean ring: (+) left the idempotent set");
    }

    const RingPtr& host() const { return host_; }
    const std::vector<EIdx>& carrier() const { return carrier_; }
    bool is_carrier(EIdx x) const { return x < pos_.size() && pos_[x] < carrier_.size(); }
    std::size_t position(EIdx e) const { return pos_[e]; }

    EIdx bool_add(EIdx e, EIdx f) const {
        const EIdx ef = host_->mul(e, f);
        return host_->sub(host_->add(e, f), host_->add(ef, ef));
    }
    EIdx bool_mul(EIdx e, EIdx f) const { return host_->mul(e, f); }
    /// e <= f in the idempotent order.
    bool leq(EIdx e, EIdx f) const { return host_->mul(e, f) == e; }
    /// Join e v f = e + f - ef (the complement-of-product of complements).
    EIdx join(EIdx e, EIdx f) const {
        return host_->sub(host_->add(e, f), host_->mul(e, f));
    }

private:
    RingPtr host_;
    std::vector<EIdx> carrier_;  // ascending host indices
    std::vector<std::size_t> pos_;
};

inline BooleanRingView boolean_ring(RingPtr host, std::uint64_t guard = kScanGuard) {
    return BooleanRingView(std::move(host), guard);
}

/// Minimal nonzero idempotents, ascending. Pairwise orthogonal; they sum
/// to 1 (verified). The zero ring has no atoms.
inline std::vector<EIdx> atoms(const BooleanRingView& b) {
    const Ring& r = *b.host();
    std::vector<EIdx> out;
    for (EIdx e : b.carrier()) {
        if (e == r.zero()) continue;
        bool minimal = true;
        for (EIdx f : b.carrier()) {
            if (f == r.zero() || f == e) continue;
            if (b.leq(f, e)) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(e);
    }
    if (r.is_zero_ring()) return out;
    EIdx sum = r.zero();
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (std::size_t j = i + 1; j < out.size(); ++j)
            if (r.mul(out[i], out[j]) != r.zero())
                throw ConsistencyError("atoms: not pairwise orthogonal");
        sum = r.add(sum, out[i]);
    }
    if (sum != r.one()) throw ConsistencyError("atoms: do not sum to 1");
    return out;
}

/// The power set ring P(S) over a finite ordered index set S of size m,
/// realized as the product of m copies of Z/2 via characteristic vectors.
/// Subsets are bit masks with bit k = index k of S.
class SetRing {
public:
    explicit SetRing(std::size_t m) : m_(m) {
        if (m > 20) throw ResourceError("SetRing: index set above guard (20)");
        if (m == 0) {
            ring_ = Ring::modular(1);  // P(empty) is the zero ring
            return;
        }
        std::vector<RingPtr> fs(m, Ring::modular(2));
        ring_ = Ring::product(std::move(fs));
    }

    std::size_t index_size() const { return m_; }
    const RingPtr& ring() const { return ring_; }
    std::uint32_t full_mask() const { return m_ == 0 ? 0 : (std::uint32_t{1} << m_) - 1; }

    EIdx elem_of(std::uint32_t mask) const {
        if (m_ == 0) return 0;
        std::vector<EIdx> comps(m_);
        for (std::size_t k = 0; k < m_; ++k) comps[k] = (mask >> k) & 1u;
        return ring_->compose(comps);
    }
    std::uint32_t mask_of(EIdx e) const {
        std::uint32_t mask = 0;
        for (std::size_t k = 0; k < m_; ++k)
            if (ring_->component(e, k)) mask |= std::uint32_t{1} << k;
        return mask;
    }

    std::string subset_str(std::uint32_t mask) const {
        std::string out = "{";
        bool first = true;
        for (std::size_t k = 0; k < m_; ++k)
            if ((mask >> k) & 1u) {
                if (!first) out += ",";
                out += std::to_string(k + 1);
                first = false;
            }
        return out + "}";
    }

private:
    std::size_t m_;
    RingPtr ring_;
};

/// The |S| prime (= maximal) ideals of P(S): M_k = P(S \ {k}), in index
/// order. Each is verified prime and maximal.
inline std::vector<Ideal> setring_primes(const SetRing& s) {
    std::vector<Ideal> out;
    for (std::size_t k = 0; k < s.index_size(); ++k) {
        std::vector<EIdx> elems;
        for (EIdx e = 0; e < s.ring()->size(); ++e)
            if (((s.mask_of(e) >> k) & 1u) == 0) elems.push_back(e);
        Ideal m = Ideal::from_elements(s.ring(), std::move(elems));
        if (!is_prime(m) || !is_maximal(m))
            throw ConsistencyError("setring prime M_" + std::to_string(k + 1) +
                                   " failed prime/maximal check");
        out.push_back(std::move(m));
    }
    return out;
}

/// The finite Stone isomorphism B(R) -> P(atoms): e |-> {atoms a : ae = a}.
/// The hom is realized on a table copy of (carrier, (+), .) and verified
/// bijective by construction.
struct StoneIso {
    std::vector<EIdx> atom_list;           // index set of the target SetRing
    SetRing sets;                          // P(atoms)
    RingPtr boolean_table;                 // B(R) as an explicit Table ring
    RingHom hom;                           // boolean_table -> sets.ring()
    std::vector<std::uint32_t> mask_of;    // carrier position -> subset mask
};

inline RingPtr boolean_table_ring(const BooleanRingView& b) {
    const std::size_t n = b.carrier().size();
    if (n > 256) throw ResourceError("boolean_table_ring: carrier above guard (256)");
    std::vector<EIdx> add(n * n), mul(n * n);
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels[i] = b.host()->elem_str(b.carrier()[i]);
        for (std::size_t j = 0; j < n; ++j) {
            add[i * n + j] = b.position(b.bool_add(b.carrier()[i], b.carrier()[j]));
            mul[i * n + j] = b.position(b.bool_mul(b.carrier()[i], b.carrier()[j]));
        }
    }
    return Ring::table(std::move(add), std::move(mul), std::move(labels));
}

inline StoneIso stone_iso(const BooleanRingView& b) {
    std::vector<EIdx> atom_list = atoms(b);
    SetRing sets(atom_list.size());
    RingPtr tab = boolean_table_ring(b);
    std::vector<std::uint32_t> masks(b.carrier().size());
    std::vector<EIdx> mapping(b.carrier().size());
    for (std::size_t i = 0; i < b.carrier().size(); ++i) {
        std::uint32_t mask = 0;
        for (std::size_t k = 0; k < atom_list.size(); ++k)
            if (b.host()->mul(atom_list[k], b.carrier()[i]) == atom_list[k])
                mask |= std::uint32_t{1} << k;
        masks[i] = mask;
        mapping[i] = sets.elem_of(mask);
    }
    RingHom hom(tab, sets.ring(), std::move(mapping));
    const auto analysis = hom_analysis(hom);
    if (!analysis.is_injective || !analysis.is_surjective)
        throw ConsistencyError("stone_iso: map is not bijective");
    return StoneIso{std::move(atom_list), std::move(sets), std::move(tab), std::move(hom),
                    std::move(masks)};
}

}  // namespace ringlab
