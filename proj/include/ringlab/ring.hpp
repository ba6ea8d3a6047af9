#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ringlab/util.hpp"

namespace ringlab {

/// Canonical element encoding: every element of a finite ring is a rank in
/// [0, |R|) under the ring's deterministic enumeration order.
///   Modular(n)  the residue itself.
///   Product     mixed-radix tuple rank, first factor most significant.
///   Quotient    rank of the coset ordered by least base representative.
///   Table       the table row index.
/// Two elements are equal iff they live in the same ring and have equal ranks.
using EIdx = std::uint64_t;

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// A finite commutative ring with enumerable elements. Immutable after
/// construction; safe to share across threads.
class Ring : public std::enable_shared_from_this<Ring> {
public:
    enum class Kind { Modular, Product, Quotient, Table };

    static RingPtr modular(std::uint64_t n);
    /// All factors must be nonzero rings.
    static RingPtr product(std::vector<RingPtr> factors);
    /// `ideal_elems` must be the full element set of an ideal of `base`
    /// (validated). `gen_hint` is kept for printing only.
    static RingPtr quotient(RingPtr base, std::vector<EIdx> ideal_elems,
                            std::vector<EIdx> gen_hint = {});
    /// Same, for element sets whose ideal-ness is already established
    /// (an Ideal's class invariant); skips the closure validation.
    static RingPtr quotient_unchecked(RingPtr base, std::vector<EIdx> ideal_elems,
                                      std::vector<EIdx> gen_hint = {});
    /// Tables are row-major n*n; all commutative-ring axioms are checked.
    static RingPtr table(std::vector<EIdx> add, std::vector<EIdx> mul,
                         std::vector<std::string> labels = {}, std::string name = {});

    Kind kind() const { return kind_; }
    std::uint64_t size() const { return size_; }
    bool is_zero_ring() const { return size_ == 1; }

    EIdx zero() const { return zero_; }
    EIdx one() const { return one_; }

    EIdx add(EIdx a, EIdx b) const;
    EIdx mul(EIdx a, EIdx b) const;
    EIdx neg(EIdx a) const;
    EIdx sub(EIdx a, EIdx b) const { return add(a, neg(b)); }
    EIdx pow(EIdx a, std::uint64_t e) const;

    // Product structure.
    const std::vector<RingPtr>& factors() const { return factors_; }
    std::size_t arity() const { return factors_.size(); }
    EIdx component(EIdx a, std::size_t k) const;
    EIdx compose(const std::vector<EIdx>& comps) const;
    /// Element with `v` in coordinate k and 0 elsewhere.
    EIdx embed_at(std::size_t k, EIdx v) const;

    // Quotient structure.
    const RingPtr& base() const { return base_; }
    EIdx rep(EIdx q) const { return reps_[q]; }
    EIdx coset_of(EIdx base_idx) const { return coset_of_[base_idx]; }
    const std::vector<EIdx>& quotient_ideal_elems() const { return ideal_elems_; }

    std::uint64_t modulus() const { return mod_; }
    const std::string& name() const { return name_; }

    /// DSL-compatible description where one exists ("Z/12", "Z/4 x Z/9",
    /// "(Z/12)/(6)", fixture name for named tables).
    std::string str() const;
    std::string elem_str(EIdx a) const;

private:
    Ring() = default;

    Kind kind_ = Kind::Modular;
    std::uint64_t size_ = 0;
    EIdx zero_ = 0;
    EIdx one_ = 0;
    std::string name_;

    // Modular
    std::uint64_t mod_ = 0;

    // Product
    std::vector<RingPtr> factors_;
    std::vector<std::uint64_t> strides_;

    // Quotient
    RingPtr base_;
    std::vector<EIdx> ideal_elems_;  // sorted
    std::vector<EIdx> gen_hint_;
    std::vector<EIdx> reps_;      // coset rank -> least base representative
    std::vector<EIdx> coset_of_;  // base index -> coset rank

    // Table
    std::vector<EIdx> add_tab_, mul_tab_, neg_tab_;
    std::vector<std::string> labels_;
};

inline RingPtr Ring::modular(std::uint64_t n) {
    if (n == 0) throw ConstructionError("Modular ring needs modulus >= 1");
    if (n > (std::uint64_t{1} << 31))
        throw ConstructionError("Modular ring modulus too large: " + std::to_string(n));
    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind_ = Kind::Modular;
    r->size_ = n;
    r->mod_ = n;
    r->zero_ = 0;
    r->one_ = n == 1 ? 0 : 1;
    return r;
}

inline RingPtr Ring::product(std::vector<RingPtr> factors) {
    if (factors.empty()) throw ConstructionError("Product ring needs at least one factor");
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < factors.size(); ++k) {
        if (!factors[k]) throw ConstructionError("Product ring: null factor");
        if (factors[k]->is_zero_ring())
            throw ConstructionError("Product ring: factor " + std::to_string(k + 1) +
                                    " is the zero ring (factors must be nonzero)");
        if (total > (std::uint64_t{1} << 62) / factors[k]->size())
            throw ConstructionError("Product ring: element count overflows");
        total *= factors[k]->size();
    }
    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind_ = Kind::Product;
    r->size_ = total;
    r->factors_ = std::move(factors);
    r->strides_.assign(r->factors_.size(), 1);
    for (std::size_t k = r->factors_.size(); k-- > 1;)
        r->strides_[k - 1] = r->strides_[k] * r->factors_[k]->size();
    std::vector<EIdx> ones;
    ones.reserve(r->factors_.size());
    for (auto& f : r->factors_) ones.push_back(f->one());
    r->zero_ = 0;
    r->one_ = r->compose(ones);
    return r;
}

inline RingPtr Ring::quotient(RingPtr base, std::vector<EIdx> ideal_elems,
                              std::vector<EIdx> gen_hint) {
    if (!base) throw ConstructionError("Quotient ring: null base");
    const std::uint64_t n = base->size();
    if (n > (std::uint64_t{1} << 20))
        throw ResourceError("Quotient ring: base too large (" + std::to_string(n) + " elements)");
    std::sort(ideal_elems.begin(), ideal_elems.end());
    ideal_elems.erase(std::unique(ideal_elems.begin(), ideal_elems.end()), ideal_elems.end());
    Bits in_ideal(n);
    for (EIdx x : ideal_elems) {
        if (x >= n) throw ConstructionError("Quotient ring: ideal element out of range");
        in_ideal.set(x);
    }
    if (!in_ideal.test(base->zero()))
        throw ConstructionError("Quotient ring: ideal does not contain 0");
    for (EIdx x : ideal_elems)
        for (EIdx y : ideal_elems)
            if (!in_ideal.test(base->add(x, y)))
                throw ConstructionError("Quotient ring: set not closed under addition at " +
                                        base->elem_str(x) + " + " + base->elem_str(y));
    for (EIdx x : ideal_elems)
        for (EIdx r = 0; r < n; ++r)
            if (!in_ideal.test(base->mul(x, r)))
                throw ConstructionError("Quotient ring: set not absorbing at " +
                                        base->elem_str(r) + " * " + base->elem_str(x));
    return quotient_unchecked(std::move(base), std::move(ideal_elems), std::move(gen_hint));
}

inline RingPtr Ring::quotient_unchecked(RingPtr base, std::vector<EIdx> ideal_elems,
                                        std::vector<EIdx> gen_hint) {
    if (!base) throw ConstructionError("Quotient ring: null base");
    const std::uint64_t n = base->size();
    if (n > (std::uint64_t{1} << 20))
        throw ResourceError("Quotient ring: base too large (" + std::to_string(n) + " elements)");
    auto q = std::shared_ptr<Ring>(new Ring());
    q->kind_ = Kind::Quotient;
    q->base_ = std::move(base);
    q->ideal_elems_ = std::move(ideal_elems);
    q->gen_hint_ = std::move(gen_hint);
    q->coset_of_.assign(n, n);  // n = unassigned marker
    for (EIdx a = 0; a < n; ++a) {
        if (q->coset_of_[a] != n) continue;
        // First unassigned element of a coset is its least representative.
        const EIdx rank = q->reps_.size();
        q->reps_.push_back(a);
        for (EIdx i : q->ideal_elems_) q->coset_of_[q->base_->add(a, i)] = rank;
    }
    q->size_ = q->reps_.size();
    q->zero_ = q->coset_of_[q->base_->zero()];
    q->one_ = q->coset_of_[q->base_->one()];
    return q;
}

inline RingPtr Ring::table(std::vector<EIdx> add, std::vector<EIdx> mul,
                           std::vector<std::string> labels, std::string name) {
    const std::uint64_t n2 = add.size();
    std::uint64_t n = 0;
    while (n * n < n2) ++n;
    if (n * n != n2 || mul.size() != n2 || n == 0)
        throw ConstructionError("Table ring: tables must be square and equally sized");
    if (n > 256) throw ResourceError("Table ring: size above construction guard (256)");
    if (!labels.empty() && labels.size() != n)
        throw ConstructionError("Table ring: label count mismatch");
    for (EIdx v : add)
        if (v >= n) throw ConstructionError("Table ring: + entry out of range");
    for (EIdx v : mul)
        if (v >= n) throw ConstructionError("Table ring: * entry out of range");

    auto at = [n](const std::vector<EIdx>& t, EIdx a, EIdx b) { return t[a * n + b]; };
    auto witness = [&](EIdx a) {
        return labels.empty() ? "#" + std::to_string(a) : labels[a];
    };

    // Additive identity.
    std::optional<EIdx> zero;
    for (EIdx e = 0; e < n; ++e) {
        bool ok = true;
        for (EIdx a = 0; a < n && ok; ++a) ok = at(add, e, a) == a;
        if (ok) {
            zero = e;
            break;
        }
    }
    if (!zero) throw ConstructionError("Table ring: no additive identity");

    std::vector<EIdx> negs(n, 0);
    for (EIdx a = 0; a < n; ++a) {
        bool found = false;
        for (EIdx b = 0; b < n; ++b)
            if (at(add, a, b) == *zero) {
                negs[a] = b;
                found = true;
                break;
            }
        if (!found)
            throw ConstructionError("Table ring: no additive inverse for " + witness(a));
    }

    for (EIdx a = 0; a < n; ++a)
        for (EIdx b = 0; b < n; ++b) {
            if (at(add, a, b) != at(add, b, a))
                throw ConstructionError("Table ring: + not commutative at (" + witness(a) + ", " +
                                        witness(b) + ")");
            if (at(mul, a, b) != at(mul, b, a))
                throw ConstructionError("Table ring: * not commutative at (" + witness(a) + ", " +
                                        witness(b) + ")");
        }

    // Multiplicative identity.
    std::optional<EIdx> one;
    for (EIdx u = 0; u < n; ++u) {
        bool ok = true;
        for (EIdx a = 0; a < n && ok; ++a) ok = at(mul, u, a) == a;
        if (ok) {
            one = u;
            break;
        }
    }
    if (!one) throw ConstructionError("Table ring: no multiplicative identity");

    for (EIdx a = 0; a < n; ++a)
        for (EIdx b = 0; b < n; ++b)
            for (EIdx c = 0; c < n; ++c) {
                if (at(add, at(add, a, b), c) != at(add, a, at(add, b, c)))
                    throw ConstructionError("Table ring: + not associative at (" + witness(a) +
                                            ", " + witness(b) + ", " + witness(c) + ")");
                if (at(mul, at(mul, a, b), c) != at(mul, a, at(mul, b, c)))
                    throw ConstructionError("Table ring: * not associative at (" + witness(a) +
                                            ", " + witness(b) + ", " + witness(c) + ")");
                if (at(mul, a, at(add, b, c)) != at(add, at(mul, a, b), at(mul, a, c)))
                    throw ConstructionError("Table ring: distributivity fails at (" + witness(a) +
                                            ", " + witness(b) + ", " + witness(c) + ")");
            }

    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind_ = Kind::Table;
    r->size_ = n;
    r->add_tab_ = std::move(add);
    r->mul_tab_ = std::move(mul);
    r->neg_tab_ = std::move(negs);
    r->labels_ = std::move(labels);
    r->name_ = std::move(name);
    r->zero_ = *zero;
    r->one_ = *one;
    return r;
}

inline EIdx Ring::add(EIdx a, EIdx b) const {
    switch (kind_) {
        case Kind::Modular: {
            EIdx s = a + b;
            return s >= mod_ ? s - mod_ : s;
        }
        case Kind::Product: {
            EIdx out = 0;
            for (std::size_t k = 0; k < factors_.size(); ++k) {
                const std::uint64_t fs = factors_[k]->size();
                out += factors_[k]->add((a / strides_[k]) % fs, (b / strides_[k]) % fs) *
                       strides_[k];
            }
            return out;
        }
        case Kind::Quotient:
            return coset_of_[base_->add(reps_[a], reps_[b])];
        case Kind::Table:
            return add_tab_[a * size_ + b];
    }
    return 0;
}

inline EIdx Ring::mul(EIdx a, EIdx b) const {
    switch (kind_) {
        case Kind::Modular:
            return (a * b) % mod_;
        case Kind::Product: {
            EIdx out = 0;
            for (std::size_t k = 0; k < factors_.size(); ++k) {
                const std::uint64_t fs = factors_[k]->size();
                out += factors_[k]->mul((a / strides_[k]) % fs, (b / strides_[k]) % fs) *
                       strides_[k];
            }
            return out;
        }
        case Kind::Quotient:
            return coset_of_[base_->mul(reps_[a], reps_[b])];
        case Kind::Table:
            return mul_tab_[a * size_ + b];
    }
    return 0;
}

inline EIdx Ring::neg(EIdx a) const {
    switch (kind_) {
        case Kind::Modular:
            return a == 0 ? 0 : mod_ - a;
        case Kind::Product: {
            EIdx out = 0;
            for (std::size_t k = 0; k < factors_.size(); ++k) {
                const std::uint64_t fs = factors_[k]->size();
                out += factors_[k]->neg((a / strides_[k]) % fs) * strides_[k];
            }
            return out;
        }
        case Kind::Quotient:
            return coset_of_[base_->neg(reps_[a])];
        case Kind::Table:
            return neg_tab_[a];
    }
    return 0;
}

inline EIdx Ring::pow(EIdx a, std::uint64_t e) const {
    EIdx acc = one();
    EIdx base = a;
    while (e) {
        if (e & 1u) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1u;
    }
    return acc;
}

inline EIdx Ring::component(EIdx a, std::size_t k) const {
    return (a / strides_[k]) % factors_[k]->size();
}

inline EIdx Ring::compose(const std::vector<EIdx>& comps) const {
    EIdx out = 0;
    for (std::size_t k = 0; k < factors_.size(); ++k) out += comps[k] * strides_[k];
    return out;
}

inline EIdx Ring::embed_at(std::size_t k, EIdx v) const {
    EIdx out = v * strides_[k];
    for (std::size_t j = 0; j < factors_.size(); ++j)
        if (j != k) out += factors_[j]->zero() * strides_[j];
    return out;
}

inline std::string Ring::str() const {
    switch (kind_) {
        case Kind::Modular:
            return "Z/" + std::to_string(mod_);
        case Kind::Product: {
            std::string out;
            for (std::size_t k = 0; k < factors_.size(); ++k) {
                if (k) out += " x ";
                const bool parens = factors_[k]->kind() == Kind::Product;
                if (parens) out += "(";
                out += factors_[k]->str();
                if (parens) out += ")";
            }
            return out;
        }
        case Kind::Quotient: {
            const bool parens =
                base_->kind() == Kind::Product || base_->kind() == Kind::Quotient;
            std::string out = parens ? "(" + base_->str() + ")" : base_->str();
            out += "/(";
            const std::vector<EIdx>& gens = gen_hint_.empty() ? ideal_elems_ : gen_hint_;
            for (std::size_t i = 0; i < gens.size(); ++i) {
                if (i) out += ",";
                out += base_->elem_str(gens[i]);
            }
            out += ")";
            return out;
        }
        case Kind::Table:
            return name_.empty() ? "table[" + std::to_string(size_) + "]" : name_;
    }
    return {};
}

inline std::string Ring::elem_str(EIdx a) const {
    switch (kind_) {
        case Kind::Modular:
            return std::to_string(a);
        case Kind::Product: {
            std::string out = "(";
            for (std::size_t k = 0; k < factors_.size(); ++k) {
                if (k) out += ",";
                out += factors_[k]->elem_str(component(a, k));
            }
            return out + ")";
        }
        case Kind::Quotient:
            return base_->elem_str(reps_[a]);
        case Kind::Table:
            return labels_.empty() ? "#" + std::to_string(a) : labels_[a];
    }
    return {};
}

/// Element handle used at API boundaries; equality is ring identity plus
/// canonical-encoding identity.
struct Elem {
    const Ring* ring = nullptr;
    EIdx idx = 0;

    Elem() = default;
    Elem(const Ring& r, EIdx i) : ring(&r), idx(i) {}

    friend Elem operator+(Elem a, Elem b) { return check(a, b), Elem(*a.ring, a.ring->add(a.idx, b.idx)); }
    friend Elem operator-(Elem a, Elem b) { return check(a, b), Elem(*a.ring, a.ring->sub(a.idx, b.idx)); }
    friend Elem operator*(Elem a, Elem b) { return check(a, b), Elem(*a.ring, a.ring->mul(a.idx, b.idx)); }
    Elem operator-() const { return Elem(*ring, ring->neg(idx)); }
    friend bool operator==(Elem a, Elem b) { return a.ring == b.ring && a.idx == b.idx; }
    friend bool operator!=(Elem a, Elem b) { return !(a == b); }

    std::string str() const { return ring->elem_str(idx); }

private:
    static void check(Elem a, Elem b) {
        if (a.ring != b.ring) throw PreconditionError("elements belong to different rings");
    }
};

inline void require_scan(const Ring& r, std::uint64_t guard, const char* what) {
    if (r.size() > guard)
        throw ResourceError(std::string(what) + ": ring " + r.str() + " has " +
                            std::to_string(r.size()) + " elements, guard is " +
                            std::to_string(guard));
}

/// All e with e^2 = e, ascending. Contains 0 and 1 (equal in the zero ring).
inline std::vector<EIdx> idempotents(const Ring& r, std::uint64_t guard = kScanGuard) {
    require_scan(r, guard, "idempotents");
    std::vector<EIdx> out;
    for (EIdx e = 0; e < r.size(); ++e)
        if (r.mul(e, e) == e) out.push_back(e);
    return out;
}

/// Least d >= 1 with a^d = 0, or nullopt when a is not nilpotent. Runs on
/// rings of any size; the power sequence is walked until 0 or a repeat.
inline std::optional<std::uint64_t> nilpotency_index(const Ring& r, EIdx a) {
    std::unordered_set<EIdx> seen;
    EIdx p = a;
    std::uint64_t d = 1;
    while (true) {
        if (p == r.zero()) return d;
        if (!seen.insert(p).second) return std::nullopt;
        p = r.mul(p, a);
        ++d;
    }
}

inline bool is_unit(const Ring& r, EIdx a) {
    for (EIdx b = 0; b < r.size(); ++b)
        if (r.mul(a, b) == r.one()) return true;
    return false;
}

inline Bits unit_mask(const Ring& r, std::uint64_t guard = kScanGuard) {
    require_scan(r, guard, "unit_mask");
    Bits units(r.size());
    for (EIdx a = 0; a < r.size(); ++a) {
        if (units.test(a)) continue;
        for (EIdx b = a; b < r.size(); ++b)
            if (r.mul(a, b) == r.one()) {
                units.set(a);
                units.set(b);
                break;
            }
    }
    return units;
}

struct RingPredicates {
    bool is_local = false;
    bool is_field = false;
    bool is_domain = false;
    bool is_von_neumann_regular = false;
    bool has_nontrivial_idempotents = false;
};

/// Exhaustive-scan predicates. The zero ring is neither local, a field,
/// nor a domain; it is von Neumann regular.
inline RingPredicates ring_predicates(const Ring& r, std::uint64_t guard = kScanGuard) {
    require_scan(r, guard, "ring_predicates");
    RingPredicates out;
    const std::uint64_t n = r.size();
    const Bits units = unit_mask(r, guard);

    if (n >= 2) {
        // Non-units are closed under multiplication by anything in a
        // commutative ring, so only additive closure needs checking.
        std::vector<EIdx> nonunits;
        for (EIdx a = 0; a < n; ++a)
            if (!units.test(a)) nonunits.push_back(a);
        out.is_local = true;
        for (EIdx a : nonunits) {
            for (EIdx b : nonunits)
                if (units.test(r.add(a, b))) {
                    out.is_local = false;
                    break;
                }
            if (!out.is_local) break;
        }
        out.is_field = units.count() == n - 1;

        out.is_domain = true;
        for (EIdx a = 0; a < n && out.is_domain; ++a) {
            if (a == r.zero()) continue;
            for (EIdx b = a; b < n; ++b) {
                if (b == r.zero()) continue;
                if (r.mul(a, b) == r.zero()) {
                    out.is_domain = false;
                    break;
                }
            }
        }
    }

    out.is_von_neumann_regular = true;
    for (EIdx a = 0; a < n && out.is_von_neumann_regular; ++a) {
        const EIdx a2 = r.mul(a, a);
        bool found = false;
        for (EIdx x = 0; x < n; ++x)
            if (r.mul(a2, x) == a) {
                found = true;
                break;
            }
        out.is_von_neumann_regular = found;
    }

    for (EIdx e = 0; e < n; ++e)
        if (e != r.zero() && e != r.one() && r.mul(e, e) == e) {
            out.has_nontrivial_idempotents = true;
            break;
        }
    return out;
}

}  // namespace ringlab
