#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ringlab/generate.hpp"
#include "ringlab/oracle.hpp"
#include "ringlab/parse.hpp"
#include "ringlab/product.hpp"
#include "ringlab/star_map.hpp"

namespace ringlab {

struct VerifyConfig {
    std::uint64_t seed = 1;
    int trials = 0;            // 0: property default
    std::uint64_t max_size = 0;  // 0: property default
    int max_cover = kDefaultMaxCover;
};

enum class VerifyStatus { Pass, Fail, Vacuous };

inline const char* to_string(VerifyStatus s) {
    switch (s) {
        case VerifyStatus::Pass:
            return "pass";
        case VerifyStatus::Fail:
            return "fail";
        case VerifyStatus::Vacuous:
            return "vacuous";
    }
    return "?";
}

struct Counterexample {
    std::string ring_expr;
    std::uint64_t trial_seed = 0;
    std::string detail;
};

struct VerificationReport {
    std::string property_id;
    std::uint64_t seed = 0;
    int trials = 0;
    std::int64_t instances_checked = 0;
    VerifyStatus status = VerifyStatus::Pass;
    std::optional<Counterexample> counterexample;
    double wall_ms = 0.0;
    std::string note;
};

inline nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json j{{"schema", 1},
                     {"propertyId", r.property_id},
                     {"seed", r.seed},
                     {"trials", r.trials},
                     {"checked", r.instances_checked},
                     {"status", to_string(r.status)},
                     {"wallTimeMs", r.wall_ms}};
    if (r.counterexample)
        j["counterexample"] = {{"ring", r.counterexample->ring_expr},
                               {"trialSeed", r.counterexample->trial_seed},
                               {"detail", r.counterexample->detail}};
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

/// One registered theorem property. `plan` is a deterministic function of
/// (seed, trials, max_size); `check` returns a failure description or
/// nothing, and may use trial_seed for auxiliary randomness (hom families,
/// base-prime picks) so that failures replay from (expression, trial seed).
struct Property {
    std::string id;
    std::string summary;
    bool vacuous_on_pass = false;
    std::string note;
    int default_trials = 100;
    std::uint64_t default_max_size = 512;
    std::function<std::vector<RingExpr>(std::uint64_t, int, std::uint64_t)> plan;
    std::function<std::optional<std::string>(const RingExpr&, std::uint64_t, const VerifyConfig&)>
        check;
};

namespace props {

using Fail = std::optional<std::string>;

inline bool elaborates(const RingExpr& e) {
    try {
        (void)elaborate(e);
        return true;
    } catch (const Error&) {
        return false;
    }
}

// ---- spec-oracle -----------------------------------------------------------

inline Fail check_spec_oracle(const RingExpr& expr, std::uint64_t, const VerifyConfig&) {
    RingPtr r = elaborate(expr);
    if (r->size() > kOracleGuard) return std::nullopt;
    std::set<std::vector<EIdx>> oracle;
    for (const Ideal& i : all_ideals(r))
        if (is_prime(i)) oracle.insert(i.elems());
    std::set<std::vector<EIdx>> structural;
    const Spectrum sp = spec(r);
    for (const auto& p : sp.points()) structural.insert(p.prime.elems());
    if (oracle != structural)
        return "spec(R) differs from the prime filter of all_ideals(R): " +
               std::to_string(structural.size()) + " vs " + std::to_string(oracle.size()) +
               " primes";
    return std::nullopt;
}

// ---- tame-structure --------------------------------------------------------

inline Fail check_tame_structure(const RingExpr& expr, std::uint64_t, const VerifyConfig&) {
    RingPtr r = elaborate(expr);
    if (r->kind() != Ring::Kind::Product) return std::nullopt;
    const Spectrum sp = spec(r);
    std::vector<int> covered(sp.size(), 0);
    for (std::size_t k = 0; k < r->arity(); ++k)
        for (std::size_t pos : sp.d_of(unit_idempotent(*r, k))) ++covered[pos];
    for (std::size_t pos = 0; pos < sp.size(); ++pos) {
        if (covered[pos] == 0) return "a prime lies outside every D(e_k)";
        if (covered[pos] > 1) return "the D(e_k) are not pairwise disjoint";
    }
    for (const auto& point : sp.points()) {
        Classification cls = classify_prime(r, point.prime);
        if (cls.is_wild()) return "a prime of a finite product classified wild";
        Ideal rebuilt = tame_prime(r, cls.tame->k, cls.tame->factor_prime);
        if (rebuilt != point.prime) return "tame_prime(classify(P)) != P";
    }
    for (std::size_t k = 0; k < r->arity(); ++k) {
        const Spectrum fsp = spec(r->factors()[k]);
        for (const auto& fp : fsp.points()) {
            Ideal lifted = tame_prime(r, k, fp.prime);
            Classification cls = classify_prime(r, lifted);
            if (cls.is_wild() || cls.tame->k != k || cls.tame->factor_prime != fp.prime)
                return "classify(tame_prime(k, p)) != Tame(k, p) at factor " +
                       std::to_string(k + 1);
        }
    }
    return std::nullopt;
}

// ---- wild-emptiness --------------------------------------------------------

inline Fail check_wild_emptiness(const RingExpr& expr, std::uint64_t, const VerifyConfig&) {
    RingPtr r = elaborate(expr);
    if (r->kind() != Ring::Kind::Product) return std::nullopt;
    EIdx sum = r->zero();
    for (std::size_t k = 0; k < r->arity(); ++k) sum = r->add(sum, unit_idempotent(*r, k));
    if (sum != r->one()) return "sum of unit idempotents is not 1";
    Ideal dsum = direct_sum_ideal(r);
    if (dsum.size() != r->size()) return "direct sum ideal is proper over a finite index set";
    const Spectrum sp = spec(r);
    if (!sp.v_of(dsum).empty()) return "V(direct sum ideal) is nonempty";
    for (const auto& point : sp.points()) {
        const bool wild = classify_prime(r, point.prime).is_wild();
        if (wild) return "Wild branch reached at finite S";
        if (wild != dsum.mask().subset_of(point.prime.mask()))
            return "wildness differs from containment of the direct sum ideal";
    }
    return std::nullopt;
}

// ---- ultrafilter-embedding -------------------------------------------------

inline Fail check_ultrafilter_embedding(const RingExpr& expr, std::uint64_t tseed,
                                        const VerifyConfig&) {
    RingPtr r = elaborate(expr);
    if (r->kind() != Ring::Kind::Product) return std::nullopt;
    std::vector<Spectrum> factor_spectra;
    std::uint64_t combos = 1;
    for (const auto& f : r->factors()) {
        factor_spectra.push_back(spec(f));
        combos *= factor_spectra.back().size();
    }
    std::vector<std::uint64_t> picks;
    for (std::uint64_t c = 0; c < std::min<std::uint64_t>(3, combos); ++c) picks.push_back(c);
    picks.push_back(splitmix64(tseed) % combos);
    std::sort(picks.begin(), picks.end());
    picks.erase(std::unique(picks.begin(), picks.end()), picks.end());

    for (std::uint64_t combo : picks) {
        std::vector<Ideal> primes;
        std::uint64_t c = combo;
        for (const auto& fsp : factor_spectra) {
            primes.push_back(fsp[c % fsp.size()].prime);
            c /= fsp.size();
        }
        BasePrimeChoice base(r, std::move(primes));
        EmbeddingReport rep = embedding_checks(r, base);
        if (!rep.all_images_prime) return "an M* failed primality";
        if (!rep.injective) return "M -> M* is not injective";
        if (!rep.continuity) return "continuity identity (preimage of D(a) = V(a*)) failed";
        if (!rep.tame_correspondence) return "principal M did not map to the tame pullback";
        if (!rep.left_inverse) return "spec_to_powerset is not a left inverse of m_star";

        // Star-set laws used by the proof, on all pairs for small rings and
        // on a seeded sample otherwise.
        Rng rng(splitmix64(tseed ^ combo));
        const std::uint64_t n = r->size();
        const bool full = n <= 300;
        const std::uint64_t pair_count = full ? n * n : 1000;
        for (std::uint64_t t = 0; t < pair_count; ++t) {
            const EIdx a = full ? t / n : rng.below(n);
            const EIdx b = full ? t % n : rng.below(n);
            const std::uint32_t sa = a_star(*r, a, base);
            const std::uint32_t sb = a_star(*r, b, base);
            if ((sa & sb & ~a_star(*r, r->add(a, b), base)) != 0)
                return "a* and b* intersect outside (a+b)*";
            if (a_star(*r, r->mul(a, b), base) != (sa | sb)) return "(ab)* != a* union b*";
            if ((sa & ~a_star(*r, r->mul(b, a), base)) != 0) return "a* is not within (ra)*";
        }
    }
    return std::nullopt;
}

// ---- filter-quotient-iso ---------------------------------------------------

inline Fail check_filter_quotient_iso(const RingExpr& expr, std::uint64_t,
                                      const VerifyConfig&) {
    RingPtr r = elaborate(expr);
    if (r->kind() != Ring::Kind::Product) return std::nullopt;
    for (const FilterObject& f : all_proper_filters(r->arity())) {
        FilterQuotientIso iso = filter_quotient_iso(r, f);
        const std::uint32_t a_mask = f.min_member();
        for (EIdx a = 0; a < r->size(); ++a)
            if (((support(*r, a) & a_mask) == 0) != iso.i_f.contains(a))
                return "kernel law failed: Ker != { a : support(a) does not meet A } at filter " +
                       std::to_string(a_mask);
    }
    return std::nullopt;
}

// ---- nilradical-zerodim ----------------------------------------------------

inline bool is_power_chain(const Ring& r) {
    if (r.kind() != Ring::Kind::Product || r.arity() < 2) return false;
    std::uint64_t expect = 2;
    for (const auto& f : r.factors()) {
        if (f->kind() != Ring::Kind::Modular || f->modulus() != expect) return false;
        expect *= 2;
    }
    return true;
}

inline Fail check_nilradical_zerodim(const RingExpr& expr, std::uint64_t, const VerifyConfig&) {
    RingPtr r = elaborate(expr);
    if (r->kind() != Ring::Kind::Product) return std::nullopt;

    if (is_power_chain(*r)) {
        const std::size_t n_factors = r->arity();
        std::vector<EIdx> a_comps(n_factors), b_comps(n_factors);
        for (std::size_t i = 0; i < n_factors; ++i) {
            const std::uint64_t mod = r->factors()[i]->modulus();
            a_comps[i] = 2 % mod;
            b_comps[i] = i == 0 ? 0 : (std::uint64_t{1} << i) % mod;
        }
        const EIdx a = r->compose(a_comps);
        const EIdx b = r->compose(b_comps);
        auto idx = nilpotency_index(*r, a);
        if (!idx || *idx != n_factors)
            return "nilpotency index of (2 mod 2^n)_n is not the factor count";
        if (b == r->zero()) return "the b witness degenerated to 0";
        if (r->mul(b, b) != r->zero()) return "b^2 != 0 for the truncated witness";
        for (std::size_t i = 0; i < n_factors; ++i)
            if (!nilpotency_index(*r->factors()[i], b_comps[i]))
                return "a component of b is not nilpotent";
    }
    if (r->size() > kScanGuard) return std::nullopt;  // nilpotency-only instance

    Ideal nil = nilradical(r);
    Ideal jac = jacobson_radical(r);
    std::vector<Ideal> fnil, fjac;
    for (const auto& f : r->factors()) {
        fnil.push_back(nilradical(f));
        fjac.push_back(jacobson_radical(f));
    }
    for (EIdx x = 0; x < r->size(); ++x) {
        bool all_nil = true, all_jac = true;
        for (std::size_t k = 0; k < r->arity(); ++k) {
            if (!fnil[k].contains(r->component(x, k))) all_nil = false;
            if (!fjac[k].contains(r->component(x, k))) all_jac = false;
        }
        if (all_nil != nil.contains(x)) return "N(prod R_k) != prod N(R_k)";
        if (all_jac != jac.contains(x)) return "J(prod R_k) != prod J(R_k)";
    }
    if (!nil.subset_of(jac)) return "N(R) is not within J(R)";
    if (krull_dim(spec(r)) != 0) return "krull_dim != 0 for a finite ring";
    if (!ring_predicates(*quotient_ring(nil)).is_von_neumann_regular)
        return "R/N(R) is not von Neumann regular";
    return std::nullopt;
}

// ---- components-max-regular ------------------------------------------------

inline Fail check_components_max_regular(const RingExpr& expr, std::uint64_t,
                                         const VerifyConfig&) {
    RingPtr r = elaborate(expr);
    if (r->kind() != Ring::Kind::Product) return std::nullopt;
    const Spectrum sp = spec(r);
    const auto comps = connected_components(sp);

    std::size_t factor_total = 0;
    std::vector<std::vector<MaxRegularIdeal>> factor_comps;
    for (const auto& f : r->factors()) {
        factor_comps.push_back(connected_components(spec(f)));
        factor_total += factor_comps.back().size();
    }
    if (factor_total != comps.size())
        return "component count of the product is not the sum over factors";

    std::set<std::vector<EIdx>> expected;
    for (const auto& c : comps) expected.insert(c.ideal.elems());
    std::set<std::vector<EIdx>> built;
    for (std::size_t k = 0; k < r->arity(); ++k)
        for (const auto& m : factor_comps[k]) {
            MaxRegularIdeal lifted = tame_max_regular(r, k, m.ideal, sp);
            if (!built.insert(lifted.ideal.elems()).second)
                return "(k, M) -> pi_k^{-1}(M) is not injective";
            if (!expected.count(lifted.ideal.elems()))
                return "formula-built ideal is not a max-regular ideal of the product";
        }
    if (built != expected) return "(k, M) -> pi_k^{-1}(M) is not onto Sp(prod R_k)";

    for (std::size_t k = 0; k < r->arity(); ++k)
        (void)v_one_minus_ek_is_component(r, k);  // throws on any mismatch

    // Regular-ideal uniqueness: distinct regular ideals have distinct V.
    const BooleanRingView b = boolean_ring(r);
    std::vector<std::pair<std::vector<std::size_t>, Bits>> seen;
    for (EIdx e : b.carrier()) {
        Bits mask = detail::principal_mask(*r, e);
        std::vector<std::size_t> v;
        for (std::size_t i = 0; i < sp.size(); ++i)
            if (sp[i].prime.contains(e)) v.push_back(i);
        for (const auto& [pv, pm] : seen)
            if (pv == v && !(pm == mask)) return "regular ideals with equal V(.) differ";
        seen.emplace_back(std::move(v), std::move(mask));
    }
    return std::nullopt;
}

// ---- avoidance-qb ----------------------------------------------------------

inline bool product_of_modulars(const RingExpr& e) {
    if (e.node == RingExpr::Node::ZMod) return true;
    if (e.node != RingExpr::Node::Prod) return false;
    for (const auto& f : e.children)
        if (f.node != RingExpr::Node::ZMod) return false;
    return true;
}

inline Fail check_avoidance_qb(const RingExpr& expr, std::uint64_t, const VerifyConfig& cfg) {
    RingPtr r = elaborate(expr);
    if (r->size() > 16) return std::nullopt;
    const AvoidanceResult av = has_ideal_avoidance(r, cfg.max_cover);
    const bool qb = qb_criterion(r);
    if (av.has_avoidance != qb) {
        std::string detail = "avoidance brute force and Quartararo-Butts disagree (" +
                             std::string(av.has_avoidance ? "true" : "false") + " vs " +
                             (qb ? "true" : "false") + ")";
        if (av.counterexample)
            detail += "; cover witness on " + av.counterexample->covered.str();
        return detail;
    }
    if (expr.node == RingExpr::Node::Fixture && expr.fixture == "f2xy" && av.has_avoidance)
        return "f2xy must fail ideal avoidance";
    if (product_of_modulars(expr) && !av.has_avoidance)
        return "a finite product of modular (avoidance) rings failed avoidance";
    return std::nullopt;
}

// ---- induced-hom -----------------------------------------------------------

inline Fail check_induced_hom(const RingExpr& expr, std::uint64_t tseed, const VerifyConfig&) {
    RingPtr src = elaborate(expr);
    if (src->kind() != Ring::Kind::Product) return std::nullopt;
    Rng rng(tseed);
    const std::vector<RingHom> comps = random_hom_family(rng, src);
    InducedHomReport rep = induced_hom_classification(comps);
    if (!rep.unit_idempotents_preserved) return "phi(e_k) != e'_k";
    if (!rep.classification_commutes) return "classification does not commute with preimage";
    if (rep.primes_checked == 0) return "target spectrum was empty";
    return std::nullopt;
}

// ---- lying-over ------------------------------------------------------------

inline Fail check_lying_over(const RingExpr& expr, std::uint64_t tseed, const VerifyConfig&) {
    RingPtr src = elaborate(expr);
    if (src->is_zero_ring()) return std::nullopt;
    Rng rng(tseed);
    RingHom phi = random_injective_hom(rng, src);
    const Spectrum src_sp = spec(src);
    for (const auto& point : src_sp.points()) {
        Ideal over = lying_over_minimal(phi, point.prime);
        if (preimage_ideal(phi, over) != point.prime)
            return "returned prime does not contract to the source prime";
    }
    return std::nullopt;
}

}  // namespace props

// ---- registry and runner ---------------------------------------------------

inline std::vector<RingExpr> plan_random_products(std::uint64_t seed, int trials,
                                                  std::uint64_t max_size, GenConfig cfg,
                                                  std::uint64_t salt) {
    cfg.max_size = max_size;
    std::vector<RingExpr> out;
    Rng rng(child_seed(seed, salt));
    for (int i = 0; i < trials; ++i) out.push_back(random_product_expr(rng, cfg));
    return out;
}

inline const std::vector<Property>& property_registry() {
    static const std::vector<Property> registry = [] {
        std::vector<Property> props;

        props.push_back(Property{
            "spec-oracle",
            "spec(R) equals the prime filter of the brute-force ideal enumeration",
            false,
            "",
            0,
            32,
            [](std::uint64_t, int, std::uint64_t max_size) {
                return small_ring_corpus(std::min(max_size, kOracleGuard));
            },
            props::check_spec_oracle});

        props.push_back(Property{
            "tame-structure",
            "Spec = disjoint union of D(e_k); classify and tame_prime are mutually inverse",
            false,
            "",
            200,
            512,
            [](std::uint64_t seed, int trials, std::uint64_t max_size) {
                return plan_random_products(seed, trials, max_size, GenConfig{}, 0x7a11);
            },
            props::check_tame_structure});

        props.push_back(Property{
            "wild-emptiness",
            "direct sum ideal = R, V(I) empty, Wild branch unreachable at finite S",
            true,
            "wild primes require an infinite index set; their absence is the assertion",
            100,
            512,
            [](std::uint64_t seed, int trials, std::uint64_t max_size) {
                return plan_random_products(seed, trials, max_size, GenConfig{}, 0x3b1d);
            },
            props::check_wild_emptiness});

        props.push_back(Property{
            "ultrafilter-embedding",
            "M -> M* is an injective continuous embedding with principal->tame and left inverse",
            false,
            "",
            18,
            1400,
            [](std::uint64_t seed, int trials, std::uint64_t max_size) {
                std::vector<RingExpr> out;
                Rng rng(child_seed(seed, 0x0f17));
                for (int i = 0; i < trials; ++i) {
                    GenConfig cfg;
                    cfg.multi_prime_factors = true;
                    cfg.min_factors = cfg.max_factors = 2 + (i % 3);
                    const std::uint64_t arity_cap =
                        cfg.min_factors == 2 ? 400 : (cfg.min_factors == 3 ? 900 : 1400);
                    cfg.max_size = std::min(max_size, arity_cap);
                    out.push_back(random_product_expr(rng, cfg));
                }
                return out;
            },
            props::check_ultrafilter_embedding});

        props.push_back(Property{
            "filter-quotient-iso",
            "R/I_F is isomorphic to T_F^{-1}R for every proper filter over local factors",
            false,
            "",
            100,
            400,
            [](std::uint64_t seed, int trials, std::uint64_t max_size) {
                std::vector<RingExpr> out;
                // Deterministic lead-ins covering every named local factor.
                for (const char* text :
                     {"Z/4 x Z/9", "Z/8 x Z/27", "Z/9 x Z/25", "Z/25 x Z/27", "Z/4 x Z/8 x Z/9",
                      "Z/2 x Z/3 x Z/5 x Z/7", "f4 x Z/9", "f8 x f9", "Z/27 x f4 x Z/2"})
                    out.push_back(parse_ring_expr(text));
                GenConfig cfg;
                cfg.local_factors = true;
                cfg.allow_quotient = false;
                cfg.max_size = max_size;
                Rng rng(child_seed(seed, 0x10c));
                while (out.size() < static_cast<std::size_t>(trials))
                    out.push_back(random_product_expr(rng, cfg));
                return out;
            },
            props::check_filter_quotient_iso});

        props.push_back(Property{
            "nilradical-zerodim",
            "radical product laws, zero dimension, R/N regular; nilpotency growth in Z/2^n chains",
            false,
            "",
            150,
            512,
            [](std::uint64_t seed, int trials, std::uint64_t max_size) {
                std::vector<RingExpr> out;
                for (int n = 2; n <= 8; ++n) {
                    std::vector<RingExpr> fs;
                    for (int i = 1; i <= n; ++i)
                        fs.push_back(RingExpr::zmod(std::uint64_t{1} << i));
                    out.push_back(RingExpr::prod(std::move(fs)));
                }
                auto rest = plan_random_products(seed, trials, max_size, GenConfig{}, 0x217d);
                out.insert(out.end(), rest.begin(), rest.end());
                return out;
            },
            props::check_nilradical_zerodim});

        props.push_back(Property{
            "components-max-regular",
            "component additivity, the tame max-regular bijection, V(1-e_k), V-uniqueness",
            false,
            "",
            200,
            512,
            [](std::uint64_t seed, int trials, std::uint64_t max_size) {
                return plan_random_products(seed, trials, max_size, GenConfig{}, 0xc0de);
            },
            props::check_components_max_regular});

        props.push_back(Property{
            "avoidance-qb",
            "brute-force ideal avoidance agrees with the Quartararo-Butts criterion",
            false,
            "cover families are capped at --max-cover (default 4)",
            0,
            16,
            [](std::uint64_t, int, std::uint64_t max_size) {
                std::vector<RingExpr> out = small_ring_corpus(std::min<std::uint64_t>(max_size, 16));
                out.push_back(RingExpr::named("f2xy"));
                return out;
            },
            props::check_avoidance_qb});

        props.push_back(Property{
            "induced-hom",
            "classification commutes with preimages of componentwise hom families",
            false,
            "",
            100,
            512,
            [](std::uint64_t seed, int trials, std::uint64_t max_size) {
                GenConfig cfg;
                cfg.allow_fixture = false;
                return plan_random_products(seed, trials, max_size, cfg, 0x1d0e);
            },
            props::check_induced_hom});

        props.push_back(Property{
            "lying-over",
            "every source prime admits a prime lying over it along injective homs",
            false,
            "",
            100,
            48,
            [](std::uint64_t seed, int trials, std::uint64_t max_size) {
                std::vector<RingExpr> out;
                Rng rng(child_seed(seed, 0x10e5));
                GenConfig cfg;
                cfg.max_size = max_size;
                cfg.min_factors = 2;
                cfg.max_factors = 2;
                for (int i = 0; i < trials; ++i) {
                    switch (rng.below(3)) {
                        case 0:
                            out.push_back(RingExpr::zmod(2 + rng.below(max_size - 1)));
                            break;
                        case 1:
                            out.push_back(random_product_expr(rng, cfg));
                            break;
                        default:
                            out.push_back(random_ring_expr(rng, cfg));
                    }
                }
                return out;
            },
            props::check_lying_over});

        return props;
    }();
    return registry;
}

inline const Property& find_property(const std::string& id) {
    for (const auto& p : property_registry())
        if (p.id == id) return p;
    throw PreconditionError("unknown property id: " + id);
}

inline std::vector<RingExpr> shrink_candidates(const RingExpr& e) {
    std::vector<RingExpr> out;
    switch (e.node) {
        case RingExpr::Node::ZMod:
            for (std::uint64_t d = 2; d < e.modulus; ++d)
                if (e.modulus % d == 0) out.push_back(RingExpr::zmod(d));
            break;
        case RingExpr::Node::Prod: {
            for (const auto& f : e.children) out.push_back(f);
            if (e.children.size() > 2)
                for (std::size_t drop = 0; drop < e.children.size(); ++drop) {
                    std::vector<RingExpr> rest;
                    for (std::size_t i = 0; i < e.children.size(); ++i)
                        if (i != drop) rest.push_back(e.children[i]);
                    out.push_back(RingExpr::prod(std::move(rest)));
                }
            for (std::size_t i = 0; i < e.children.size(); ++i)
                for (const auto& sub : shrink_candidates(e.children[i])) {
                    std::vector<RingExpr> factors = e.children;
                    factors[i] = sub;
                    out.push_back(RingExpr::prod(std::move(factors)));
                }
            break;
        }
        case RingExpr::Node::Quot: {
            out.push_back(e.children[0]);
            if (e.gens.size() > 1)
                for (std::size_t drop = 0; drop < e.gens.size(); ++drop) {
                    std::vector<ElemLit> gens;
                    for (std::size_t i = 0; i < e.gens.size(); ++i)
                        if (i != drop) gens.push_back(e.gens[i]);
                    out.push_back(RingExpr::quot(e.children[0], std::move(gens)));
                }
            break;
        }
        case RingExpr::Node::Fixture:
            break;
    }
    return out;
}

/// Greedy minimization: adopt any shrink candidate that still fails under
/// the same trial seed.
inline std::pair<RingExpr, std::string> minimize_counterexample(const Property& prop,
                                                                RingExpr expr,
                                                                std::string detail,
                                                                std::uint64_t tseed,
                                                                const VerifyConfig& cfg) {
    int fuel = 200;
    bool progressed = true;
    while (progressed && fuel-- > 0) {
        progressed = false;
        for (const RingExpr& cand : shrink_candidates(expr)) {
            if (!props::elaborates(cand)) continue;
            std::optional<std::string> f;
            try {
                f = prop.check(cand, tseed, cfg);
            } catch (const Error& err) {
                f = std::string("exception: ") + err.what();
            }
            if (f) {
                expr = cand;
                detail = *f;
                progressed = true;
                break;
            }
        }
    }
    return {std::move(expr), std::move(detail)};
}

inline VerificationReport run_property(const Property& prop, VerifyConfig cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    if (cfg.trials <= 0) cfg.trials = prop.default_trials;
    if (cfg.max_size == 0) cfg.max_size = prop.default_max_size;
    const std::vector<RingExpr> plan = prop.plan(cfg.seed, cfg.trials, cfg.max_size);

    VerificationReport report;
    report.property_id = prop.id;
    report.seed = cfg.seed;
    report.trials = static_cast<int>(plan.size());
    report.note = prop.note;

    for (std::size_t i = 0; i < plan.size(); ++i) {
        const std::uint64_t tseed = child_seed(cfg.seed, i);
        std::optional<std::string> failure;
        try {
            failure = prop.check(plan[i], tseed, cfg);
        } catch (const Error& err) {
            failure = std::string("exception: ") + err.what();
        }
        if (failure) {
            auto [minimized, detail] =
                minimize_counterexample(prop, plan[i], *failure, tseed, cfg);
            report.status = VerifyStatus::Fail;
            report.counterexample = Counterexample{to_string(minimized), tseed, detail};
            break;
        }
        ++report.instances_checked;
    }
    if (report.status != VerifyStatus::Fail && prop.vacuous_on_pass)
        report.status = VerifyStatus::Vacuous;
    report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                               t0)
                         .count();
    return report;
}

inline VerificationReport run_property(const std::string& id, const VerifyConfig& cfg) {
    return run_property(find_property(id), cfg);
}

inline std::vector<VerificationReport> run_all_properties(const VerifyConfig& cfg) {
    std::vector<VerificationReport> out;
    for (const auto& p : property_registry()) out.push_back(run_property(p, cfg));
    return out;
}

}  // namespace ringlab
