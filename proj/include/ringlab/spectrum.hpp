#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ringlab/boolean.hpp"
#include "ringlab/ideal.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// A prime of a finite ring together with the atom (primitive idempotent)
/// whose corner factor produced it. The atom lies outside the prime; every
/// other atom lies inside.
struct SpectrumPoint {
    Ideal prime;
    EIdx atom;
};

class Spectrum {
public:
    Spectrum(RingPtr ring, std::vector<SpectrumPoint> points)
        : ring_(std::move(ring)), points_(std::move(points)) {}

    const RingPtr& ring() const { return ring_; }
    const std::vector<SpectrumPoint>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    const SpectrumPoint& operator[](std::size_t i) const { return points_[i]; }

    /// D(x): positions of primes not containing x.
    std::vector<std::size_t> d_of(EIdx x) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < points_.size(); ++i)
            if (!points_[i].prime.contains(x)) out.push_back(i);
        return out;
    }
    /// V(x): positions of primes containing x.
    std::vector<std::size_t> v_of_elem(EIdx x) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < points_.size(); ++i)
            if (points_[i].prime.contains(x)) out.push_back(i);
        return out;
    }
    /// V(I): positions of primes containing the ideal.
    std::vector<std::size_t> v_of(const Ideal& ideal) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < points_.size(); ++i)
            if (ideal.mask().subset_of(points_[i].prime.mask())) out.push_back(i);
        return out;
    }

    /// Position of the point with this exact prime, or npos.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t find(const Ideal& prime) const {
        for (std::size_t i = 0; i < points_.size(); ++i)
            if (points_[i].prime == prime) return i;
        return npos;
    }

private:
    RingPtr ring_;
    std::vector<SpectrumPoint> points_;
};

/// Spec(R) for a finite ring, one point per atom of B(R): the pullback of
/// the non-units of the corner ring Ra (a local ring since a is primitive)
/// along x |-> xa. Every prime of a finite commutative ring arises this way.
/// Points are ordered by ascending atom.
inline Spectrum spec(RingPtr ring, std::uint64_t guard = kScanGuard) {
    require_scan(*ring, guard, "spec");
    const Ring& r = *ring;
    const BooleanRingView b = boolean_ring(ring, guard);
    std::vector<SpectrumPoint> points;
    for (EIdx a : atoms(b)) {
        // Corner ring Ra: carrier of the local factor selected by a.
        Bits corner(r.size());
        for (EIdx x = 0; x < r.size(); ++x) corner.set(r.mul(x, a));
        const auto corner_list = corner.to_list();
        Bits nonunits(r.size());
        for (EIdx y : corner_list) {
            bool unit = false;
            for (EIdx z : corner_list)
                if (r.mul(y, z) == a) {
                    unit = true;
                    break;
                }
            if (!unit) nonunits.set(y);
        }
        // Greedy generators of the non-unit ideal, computed inside the
        // corner (R*g equals corner*g for corner elements g).
        std::vector<EIdx> gens;
        if (r.sub(r.one(), a) != r.zero()) gens.push_back(r.sub(r.one(), a));
        Bits acc(r.size());
        acc.set(r.zero());
        for (EIdx y : corner_list) {
            if (!nonunits.test(y) || acc.test(y)) continue;
            gens.push_back(y);
            Bits py(r.size());
            for (EIdx c : corner_list) py.set(r.mul(c, y));
            acc = detail::ideal_sum_mask(r, acc, py);
        }
        std::vector<EIdx> elems;
        for (EIdx x = 0; x < r.size(); ++x)
            if (nonunits.test(r.mul(x, a))) elems.push_back(x);
        Ideal prime = Ideal::from_elements_unchecked(ring, std::move(elems), std::move(gens));
        if (!prime.is_proper() || prime.contains(a))
            throw ConsistencyError("spec: corner pullback misbehaved at atom " + r.elem_str(a));
        points.push_back(SpectrumPoint{std::move(prime), a});
    }
    // Provenance sanity: each point excludes its atom and contains the rest.
    for (const auto& p : points)
        for (const auto& q : points)
            if (p.atom != q.atom && !p.prime.contains(q.atom))
                throw ConsistencyError("spec: point misses a foreign atom");
    return Spectrum(std::move(ring), std::move(points));
}

/// Regular, proper, and maximal among proper regular ideals. The quotient
/// R/I is the corner on the complementary idempotent, so max-regularity is
/// equivalent to that complement being an atom.
inline bool is_max_regular(const Ideal& i, std::uint64_t guard = kScanGuard) {
    const Ring& r = *i.ring();
    require_scan(r, guard, "is_max_regular");
    if (!i.is_proper()) return false;
    EIdx join = r.zero();
    for (EIdx e = 0; e < r.size(); ++e)
        if (i.contains(e) && r.mul(e, e) == e) join = r.sub(r.add(join, e), r.mul(join, e));
    if (detail::principal_mask(r, join) != i.mask()) return false;  // not regular
    const EIdx c = r.sub(r.one(), join);
    for (EIdx e = 0; e < r.size(); ++e) {
        if (r.mul(e, e) != e) continue;
        const EIdx ec = r.mul(e, c);
        if (ec != r.zero() && ec != c) return false;  // R/I has a nontrivial idempotent
    }
    return true;
}

/// A max-regular ideal together with its connected component V(M).
struct MaxRegularIdeal {
    Ideal ideal;
    EIdx atom;                          // the component is V(R(1-atom)) = D(atom)
    std::vector<std::size_t> component;  // point positions in the spectrum
};

/// One component per atom a: the ideal generated by the idempotents killed
/// by a (whose join is 1-a), with component V of it. Components partition
/// the spectrum; the map M -> V(M) is a bijection (both verified).
inline std::vector<MaxRegularIdeal> connected_components(const Spectrum& sp,
                                                         std::uint64_t guard = kScanGuard) {
    const RingPtr& ring = sp.ring();
    const Ring& r = *ring;
    require_scan(r, guard, "connected_components");
    const BooleanRingView b = boolean_ring(ring, guard);
    std::vector<MaxRegularIdeal> out;
    std::vector<bool> covered(sp.size(), false);
    for (EIdx a : atoms(b)) {
        EIdx join = r.zero();
        for (EIdx e : b.carrier())
            if (r.mul(e, a) == r.zero()) join = b.join(join, e);
        if (join != r.sub(r.one(), a))
            throw ConsistencyError("connected_components: killed idempotents do not join to 1-a");
        std::vector<EIdx> elems = detail::principal_mask(r, join).to_list();
        std::vector<EIdx> gens;
        if (join != r.zero()) gens.push_back(join);
        Ideal m = Ideal::from_elements_unchecked(ring, std::move(elems), std::move(gens));
        if (!is_max_regular(m, guard))
            throw ConsistencyError("connected_components: ideal is not max-regular");
        std::vector<std::size_t> comp = sp.v_of(m);
        if (comp.empty()) throw ConsistencyError("connected_components: empty component");
        for (std::size_t pos : comp) {
            if (covered[pos])
                throw ConsistencyError("connected_components: components overlap");
            covered[pos] = true;
        }
        out.push_back(MaxRegularIdeal{std::move(m), a, std::move(comp)});
    }
    for (bool c : covered)
        if (!c) throw ConsistencyError("connected_components: point not covered");
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = i + 1; j < out.size(); ++j)
            if (out[i].component == out[j].component)
                throw ConsistencyError("connected_components: V is not injective");
    return out;
}

inline std::vector<MaxRegularIdeal> connected_components(RingPtr ring,
                                                         std::uint64_t guard = kScanGuard) {
    return connected_components(spec(std::move(ring), guard), guard);
}

/// Longest strict chain length in the containment poset of primes. Finite
/// rings are zero-dimensional, so this is 0 whenever the spectrum is
/// nonempty (and -1 for the zero ring, which has no primes).
inline int krull_dim(const Spectrum& sp) {
    const std::size_t n = sp.size();
    if (n == 0) return -1;
    std::vector<int> height(n, 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                if (sp[i].prime.subset_of(sp[j].prime) && sp[i].prime != sp[j].prime &&
                    height[j] < height[i] + 1) {
                    height[j] = height[i] + 1;
                    changed = true;
                }
            }
    }
    int dim = 0;
    for (int h : height) dim = std::max(dim, h);
    return dim;
}

}  // namespace ringlab
