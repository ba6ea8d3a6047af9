#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "ringlab/util.hpp"

namespace ringlab {

/// A proper filter on a finite index set S = {0,...,m-1}, stored
/// extensionally as subset bit masks. Construction validates: nonempty,
/// upward closed, closed under intersection, and empty-set free.
class FilterObject {
public:
    FilterObject(std::size_t m, std::vector<std::uint32_t> members)
        : m_(m), members_(std::move(members)) {
        if (m == 0 || m > 20) throw PreconditionError("FilterObject: index set size out of range");
        const std::uint32_t full = (std::uint32_t{1} << m) - 1;
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
        if (members_.empty()) throw ConstructionError("filter: empty family");
        present_.assign(std::size_t{1} << m, false);
        for (auto a : members_) {
            if (a > full) throw ConstructionError("filter: subset outside the index set");
            if (a == 0) throw ConstructionError("filter: contains the empty set (improper)");
            present_[a] = true;
        }
        for (auto a : members_) {
            for (std::uint32_t b = a;; b = (b + 1) | a) {  // supersets of a
                if (!present_[b])
                    throw ConstructionError("filter: not upward closed at a superset of member");
                if (b == full) break;
            }
        }
        for (auto a : members_)
            for (auto b : members_)
                if (!present_[a & b]) throw ConstructionError("filter: not intersection closed");
    }

    static FilterObject principal(std::size_t m, std::uint32_t A) {
        if (A == 0) throw ConstructionError("filter: principal filter of the empty set is improper");
        std::vector<std::uint32_t> mem;
        const std::uint32_t full = (std::uint32_t{1} << m) - 1;
        for (std::uint32_t b = A;; b = (b + 1) | A) {
            mem.push_back(b);
            if (b == full) break;
        }
        return FilterObject(m, std::move(mem));
    }

    std::size_t index_size() const { return m_; }
    const std::vector<std::uint32_t>& members() const { return members_; }
    bool contains(std::uint32_t a) const { return present_[a]; }
    std::uint32_t full_mask() const { return (std::uint32_t{1} << m_) - 1; }

    /// Intersection of all members; on a finite set every filter is the
    /// principal filter of this subset.
    std::uint32_t min_member() const {
        std::uint32_t acc = full_mask();
        for (auto a : members_) acc &= a;
        return acc;
    }

    /// Exactly one of A, S\A is a member, for every A.
    bool is_ultrafilter() const {
        for (std::uint32_t a = 0; a <= full_mask(); ++a) {
            const bool in = contains(a);
            const bool co = contains(full_mask() & ~a);
            if (in == co) return false;
        }
        return true;
    }

private:
    std::size_t m_;
    std::vector<std::uint32_t> members_;
    std::vector<bool> present_;
};

/// { A : k in A }.
inline FilterObject principal_ultrafilter(std::size_t m, std::size_t k) {
    if (k >= m) throw PreconditionError("principal_ultrafilter: index out of range");
    return FilterObject::principal(m, std::uint32_t{1} << k);
}

/// All ultrafilters on a finite S: the m principal ones.
inline std::vector<FilterObject> all_ultrafilters(std::size_t m) {
    std::vector<FilterObject> out;
    for (std::size_t k = 0; k < m; ++k) out.push_back(principal_ultrafilter(m, k));
    return out;
}

/// All proper filters: principal filters of nonempty subsets (every filter
/// on a finite set is principal). Ordered by generating subset mask.
inline std::vector<FilterObject> all_proper_filters(std::size_t m) {
    std::vector<FilterObject> out;
    const std::uint32_t full = (std::uint32_t{1} << m) - 1;
    for (std::uint32_t a = 1; a <= full; ++a) out.push_back(FilterObject::principal(m, a));
    return out;
}

}  // namespace ringlab
