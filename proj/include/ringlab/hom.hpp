#pragma once

#include <utility>
#include <vector>

#include "ringlab/ideal.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// A verified ring homomorphism stored as a total mapping table on the
/// source. Construction checks 0, 1, + and * preservation on all pairs.
class RingHom {
    struct Structural {};  // tag: hom laws hold by construction, skip the scan

public:
    RingHom(RingPtr source, RingPtr target, std::vector<EIdx> mapping)
        : src_(std::move(source)), dst_(std::move(target)), map_(std::move(mapping)) {
        if (map_.size() != src_->size())
            throw ConstructionError("RingHom: mapping must cover every source element");
        for (EIdx v : map_)
            if (v >= dst_->size()) throw ConstructionError("RingHom: image out of range");
        if (map_[src_->zero()] != dst_->zero())
            throw ConstructionError("RingHom: does not preserve 0");
        if (map_[src_->one()] != dst_->one())
            throw ConstructionError("RingHom: does not preserve 1");
        for (EIdx a = 0; a < src_->size(); ++a)
            for (EIdx b = a; b < src_->size(); ++b) {
                if (map_[src_->add(a, b)] != dst_->add(map_[a], map_[b]))
                    throw ConstructionError("RingHom: does not preserve + at (" +
                                            src_->elem_str(a) + ", " + src_->elem_str(b) + ")");
                if (map_[src_->mul(a, b)] != dst_->mul(map_[a], map_[b]))
                    throw ConstructionError("RingHom: does not preserve * at (" +
                                            src_->elem_str(a) + ", " + src_->elem_str(b) + ")");
            }
    }

    const RingPtr& source() const { return src_; }
    const RingPtr& target() const { return dst_; }
    EIdx operator()(EIdx a) const { return map_[a]; }
    const std::vector<EIdx>& mapping() const { return map_; }

    static RingHom identity(RingPtr r) {
        std::vector<EIdx> m(r->size());
        for (EIdx a = 0; a < r->size(); ++a) m[a] = a;
        return RingHom(r, r, std::move(m));
    }

    /// pi_k : product -> k-th factor.
    static RingHom projection(RingPtr product, std::size_t k) {
        if (product->kind() != Ring::Kind::Product || k >= product->arity())
            throw PreconditionError("projection: not a product or index out of range");
        std::vector<EIdx> m(product->size());
        for (EIdx a = 0; a < product->size(); ++a) m[a] = product->component(a, k);
        return RingHom(product, product->factors()[k], std::move(m));
    }

    /// base -> base/I for a quotient ring of base. Preservation of the
    /// operations is how quotient arithmetic is defined, so the pair scan
    /// is skipped here (a dual-route test re-verifies samples in full).
    static RingHom canonical_quotient(RingPtr quotient) {
        if (quotient->kind() != Ring::Kind::Quotient)
            throw PreconditionError("canonical_quotient: not a quotient ring");
        RingPtr base = quotient->base();
        std::vector<EIdx> m(base->size());
        for (EIdx a = 0; a < base->size(); ++a) m[a] = quotient->coset_of(a);
        return RingHom(Structural{}, std::move(base), std::move(quotient), std::move(m));
    }

    /// r -> r x r x ... x r, a |-> (a,...,a).
    static RingHom diagonal(RingPtr r, std::size_t copies) {
        std::vector<RingPtr> fs(copies, r);
        RingPtr power = Ring::product(std::move(fs));
        std::vector<EIdx> m(r->size());
        std::vector<EIdx> comps(copies);
        for (EIdx a = 0; a < r->size(); ++a) {
            std::fill(comps.begin(), comps.end(), a);
            m[a] = power->compose(comps);
        }
        return RingHom(std::move(r), std::move(power), std::move(m));
    }

    /// Product of componentwise homs: prod(src_k) -> prod(dst_k).
    static RingHom product_of(const std::vector<RingHom>& comps) {
        if (comps.empty()) throw PreconditionError("product_of: empty family");
        std::vector<RingPtr> srcs, dsts;
        for (const auto& h : comps) {
            srcs.push_back(h.source());
            dsts.push_back(h.target());
        }
        RingPtr src = Ring::product(std::move(srcs));
        RingPtr dst = Ring::product(std::move(dsts));
        std::vector<EIdx> m(src->size());
        std::vector<EIdx> out(comps.size());
        for (EIdx a = 0; a < src->size(); ++a) {
            for (std::size_t k = 0; k < comps.size(); ++k) out[k] = comps[k](src->component(a, k));
            m[a] = dst->compose(out);
        }
        return RingHom(std::move(src), std::move(dst), std::move(m));
    }

    static RingHom compose(const RingHom& g, const RingHom& f) {
        if (f.target() != g.source())
            throw PreconditionError("compose: inner target differs from outer source");
        std::vector<EIdx> m(f.source()->size());
        for (EIdx a = 0; a < f.source()->size(); ++a) m[a] = g(f(a));
        return RingHom(f.source(), g.target(), std::move(m));
    }

private:
    RingHom(Structural, RingPtr source, RingPtr target, std::vector<EIdx> mapping)
        : src_(std::move(source)), dst_(std::move(target)), map_(std::move(mapping)) {}

    RingPtr src_, dst_;
    std::vector<EIdx> map_;
};

struct HomAnalysis {
    Ideal kernel;
    std::vector<EIdx> image;  // sorted target indices
    bool is_injective = false;
    bool is_surjective = false;
};

inline HomAnalysis hom_analysis(const RingHom& h) {
    std::vector<EIdx> ker;
    Bits img(h.target()->size());
    for (EIdx a = 0; a < h.source()->size(); ++a) {
        if (h(a) == h.target()->zero()) ker.push_back(a);
        img.set(h(a));
    }
    Ideal kernel = Ideal::from_elements(h.source(), std::move(ker));
    const bool inj = kernel.size() == 1;
    const bool surj = img.count() == h.target()->size();
    return HomAnalysis{std::move(kernel), img.to_list(), inj, surj};
}

/// phi^{-1}(J) for an ideal J of the target.
inline Ideal preimage_ideal(const RingHom& h, const Ideal& j) {
    if (j.ring() != h.target()) throw PreconditionError("preimage: ideal not in target ring");
    std::vector<EIdx> elems;
    for (EIdx a = 0; a < h.source()->size(); ++a)
        if (j.contains(h(a))) elems.push_back(a);
    return Ideal::from_elements(h.source(), std::move(elems));
}

}  // namespace ringlab
