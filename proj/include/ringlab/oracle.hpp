#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/ideal.hpp"
#include "ringlab/localize.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// Every ideal of a finite ring: the fixpoint of the principal ideals under
/// pairwise ideal sum (any ideal is a finite sum of principal ideals).
/// Deterministic order: lexicographic by element list.
inline std::vector<Ideal> all_ideals(RingPtr ring, std::size_t cap = 4096,
                                     std::uint64_t guard = kOracleGuard) {
    require_scan(*ring, guard, "all_ideals");
    std::set<std::vector<EIdx>> seen;
    std::vector<Ideal> pool;
    auto push = [&](Ideal i) {
        if (seen.insert(i.elems()).second) {
            pool.push_back(std::move(i));
            if (pool.size() > cap)
                throw ResourceError("all_ideals: more than " + std::to_string(cap) +
                                    " ideals in " + pool.front().ring()->str());
        }
    };
    for (EIdx g = 0; g < ring->size(); ++g) push(principal_ideal(ring, g, guard));
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) push(ideal_sum(pool[i], pool[j]));
    std::sort(pool.begin(), pool.end(),
              [](const Ideal& a, const Ideal& b) { return a.elems() < b.elems(); });
    return pool;
}

struct AvoidanceCounterexample {
    Ideal covered;             // contained in the union, in no member
    std::vector<Ideal> cover;  // the witnessing family
};

struct AvoidanceResult {
    bool has_avoidance = false;
    int max_cover = kDefaultMaxCover;
    std::optional<AvoidanceCounterexample> counterexample;
};

/// Brute force over all ideals: does some I sit inside a union of at most
/// `max_cover` ideals without sitting inside any one of them? A violating
/// family can be normalized to maximal proper subideals of I (intersecting
/// with I and enlarging preserves the violation), so only those are tried.
inline AvoidanceResult has_ideal_avoidance(RingPtr ring, int max_cover = kDefaultMaxCover,
                                           std::size_t cap = 4096,
                                           std::uint64_t guard = kOracleGuard) {
    const std::vector<Ideal> ideals = all_ideals(ring, cap, guard);
    AvoidanceResult result;
    result.max_cover = max_cover;
    for (const Ideal& target : ideals) {
        std::vector<const Ideal*> proper;
        for (const Ideal& j : ideals)
            if (j.subset_of(target) && j != target) proper.push_back(&j);
        std::vector<const Ideal*> maximal;
        for (const Ideal* j : proper) {
            bool top = true;
            for (const Ideal* j2 : proper)
                if (j != j2 && j->subset_of(*j2)) {
                    top = false;
                    break;
                }
            if (top) maximal.push_back(j);
        }
        if (maximal.size() < 2) continue;

        const int limit = std::min<int>(max_cover, static_cast<int>(maximal.size()));
        std::vector<std::size_t> pick;
        // Enumerate families of size 2..limit.
        auto covers = [&]() {
            for (EIdx x : target.elems()) {
                bool inside = false;
                for (std::size_t idx : pick)
                    if (maximal[idx]->contains(x)) {
                        inside = true;
                        break;
                    }
                if (!inside) return false;
            }
            return true;
        };
        std::function<bool(std::size_t, int)> search = [&](std::size_t start, int want) -> bool {
            if (want == 0) return covers();
            for (std::size_t i = start; i + want <= maximal.size(); ++i) {
                pick.push_back(i);
                if (search(i + 1, want - 1)) return true;
                pick.pop_back();
            }
            return false;
        };
        for (int size = 2; size <= limit; ++size) {
            pick.clear();
            if (search(0, size)) {
                std::vector<Ideal> family;
                for (std::size_t idx : pick) family.push_back(*maximal[idx]);
                result.has_avoidance = false;
                result.counterexample = AvoidanceCounterexample{target, std::move(family)};
                return result;
            }
        }
    }
    result.has_avoidance = true;
    return result;
}

/// Quartararo-Butts criterion, specialized to finite rings (R/M is never
/// infinite): every localization at a maximal ideal must be a Bezout ring,
/// and for finite rings that means every ideal of R_M is principal.
inline bool qb_criterion(RingPtr ring, std::size_t cap = 4096,
                         std::uint64_t guard = kOracleGuard) {
    const std::vector<Ideal> ideals = all_ideals(ring, cap, guard);
    for (const Ideal& m : ideals) {
        if (!is_maximal(m)) continue;
        LocalizedRing loc = localize(ring, MultiplicativeSet::complement_of_prime(ring, m), guard);
        for (const Ideal& j : all_ideals(loc.ring(), cap, guard)) {
            bool principal = false;
            for (EIdx g : j.elems())
                if (detail::principal_mask(*loc.ring(), g) == j.mask()) {
                    principal = true;
                    break;
                }
            if (!principal) return false;
        }
    }
    return true;
}

}  // namespace ringlab
