// ringlab CLI: spectra, components, Boolean rings, tame/wild classification,
// localizations, ultrafilter embeddings, and the theorem-verification suite
// for finite direct products of commutative rings.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ringlab/ringlab.hpp"

using namespace ringlab;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitUsage = 2;

json ideal_json(const Ideal& i) {
    json gens = json::array();
    for (EIdx g : i.generators()) gens.push_back(i.ring()->elem_str(g));
    return json{{"generators", gens}, {"size", i.size()}};
}

std::string gens_str(const Ideal& i) { return i.str(); }

Ideal ideal_from_option(const RingPtr& r, const std::string& text) {
    std::vector<EIdx> gens;
    for (const ElemLit& lit : parse_elem_list(text))
        gens.push_back(elaborate_elem(*r, lit, "element list"));
    return Ideal::from_generators(r, gens);
}

int cmd_spec(const std::string& expr_text, bool as_json) {
    RingPtr r = elaborate(parse_ring_expr(expr_text));
    const Spectrum sp = spec(r);
    if (as_json) {
        json points = json::array();
        for (const auto& p : sp.points()) {
            json jp = ideal_json(p.prime);
            jp["atom"] = r->elem_str(p.atom);
            jp["maximal"] = is_maximal(p.prime);
            points.push_back(std::move(jp));
        }
        std::cout << json{{"schema", 1}, {"ring", r->str()}, {"size", r->size()},
                          {"points", points}}
                         .dump(2)
                  << "\n";
        return kExitOk;
    }
    std::cout << "Spec(" << r->str() << "): " << sp.size() << " prime(s)\n";
    for (const auto& p : sp.points())
        std::cout << "  " << gens_str(p.prime) << "  [" << p.prime.size()
                  << " elements, atom " << r->elem_str(p.atom) << "]\n";
    return kExitOk;
}

int cmd_components(const std::string& expr_text, bool as_json) {
    RingPtr r = elaborate(parse_ring_expr(expr_text));
    const Spectrum sp = spec(r);
    const auto comps = connected_components(sp);
    if (as_json) {
        json out = json::array();
        for (const auto& c : comps) {
            json jc;
            jc["maxRegularIdeal"] = ideal_json(c.ideal);
            jc["atom"] = r->elem_str(c.atom);
            json pts = json::array();
            for (std::size_t pos : c.component) pts.push_back(gens_str(sp[pos].prime));
            jc["component"] = pts;
            out.push_back(std::move(jc));
        }
        std::cout << json{{"schema", 1}, {"ring", r->str()}, {"components", out}}.dump(2)
                  << "\n";
        return kExitOk;
    }
    std::cout << "Spec(" << r->str() << ") has " << comps.size() << " connected component(s)\n";
    for (const auto& c : comps) {
        std::cout << "  max-regular " << gens_str(c.ideal) << "  V = {";
        for (std::size_t i = 0; i < c.component.size(); ++i)
            std::cout << (i ? ", " : " ") << gens_str(sp[c.component[i]].prime);
        std::cout << " }  atom " << r->elem_str(c.atom) << "\n";
    }
    return kExitOk;
}

int cmd_boolean(const std::string& expr_text, bool as_json) {
    RingPtr r = elaborate(parse_ring_expr(expr_text));
    const BooleanRingView b = boolean_ring(r);
    const StoneIso iso = stone_iso(b);
    if (as_json) {
        json carrier = json::array();
        for (std::size_t i = 0; i < b.carrier().size(); ++i)
            carrier.push_back(json{{"idempotent", r->elem_str(b.carrier()[i])},
                                   {"atomSet", iso.sets.subset_str(iso.mask_of[i])}});
        json atoms_j = json::array();
        for (EIdx a : iso.atom_list) atoms_j.push_back(r->elem_str(a));
        std::cout << json{{"schema", 1},
                          {"ring", r->str()},
                          {"carrierSize", b.carrier().size()},
                          {"atoms", atoms_j},
                          {"stone", carrier}}
                         .dump(2)
                  << "\n";
        return kExitOk;
    }
    std::cout << "B(" << r->str() << "): " << b.carrier().size() << " idempotent(s), "
              << iso.atom_list.size() << " atom(s)\n";
    std::cout << "  atoms:";
    for (EIdx a : iso.atom_list) std::cout << " " << r->elem_str(a);
    std::cout << "\n  Stone isomorphism onto P(atoms):\n";
    for (std::size_t i = 0; i < b.carrier().size(); ++i)
        std::cout << "    " << r->elem_str(b.carrier()[i]) << " -> "
                  << iso.sets.subset_str(iso.mask_of[i]) << "\n";
    return kExitOk;
}

int cmd_classify(const std::string& expr_text, const std::string& prime_text, bool as_json) {
    RingPtr r = elaborate(parse_ring_expr(expr_text));
    Ideal p = ideal_from_option(r, prime_text);
    Classification cls = classify_prime(r, p);
    if (as_json) {
        json out{{"schema", 1}, {"ring", r->str()}, {"prime", ideal_json(p)}};
        if (cls.is_wild()) {
            out["classification"] = "wild";
        } else {
            out["classification"] = "tame";
            out["factorIndex"] = cls.tame->k + 1;
            out["factorPrime"] = ideal_json(cls.tame->factor_prime);
        }
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }
    if (cls.is_wild()) {
        std::cout << "Wild\n";
    } else {
        std::cout << "Tame(k=" << cls.tame->k + 1 << ", " << gens_str(cls.tame->factor_prime)
                  << ")\n";
    }
    return kExitOk;
}

MultiplicativeSet mult_set_from_option(const RingPtr& r, const std::string& text) {
    const auto open = text.find('(');
    if (text.rfind("complement(", 0) == 0 && text.back() == ')') {
        Ideal p = ideal_from_option(r, text.substr(open + 1, text.size() - open - 2));
        return MultiplicativeSet::complement_of_prime(r, p);
    }
    if (text.rfind("filter(", 0) == 0 && text.back() == ')') {
        std::string inner = text.substr(open + 1, text.size() - open - 2);
        std::uint32_t mask = 0;
        std::string digits;
        auto flush = [&] {
            if (digits.empty()) return;
            const unsigned long k = std::stoul(digits);
            if (k < 1 || k > r->arity())
                throw PreconditionError("filter subset index out of range: " + digits);
            mask |= std::uint32_t{1} << (k - 1);
            digits.clear();
        };
        for (char c : inner) {
            if (c >= '0' && c <= '9')
                digits += c;
            else if (c == ',' || c == '{' || c == '}' || c == ' ')
                flush();
            else
                throw PreconditionError(std::string("bad filter subset character: ") + c);
        }
        flush();
        if (mask == 0) throw PreconditionError("filter subset must be nonempty");
        return MultiplicativeSet::t_filter(r, FilterObject::principal(r->arity(), mask));
    }
    std::vector<EIdx> gens;
    for (const ElemLit& lit : parse_elem_list(text))
        gens.push_back(elaborate_elem(*r, lit, "multiplicative set"));
    return MultiplicativeSet::explicit_closure(r, gens);
}

int cmd_localize(const std::string& expr_text, const std::string& mult_text, bool as_json) {
    RingPtr r = elaborate(parse_ring_expr(expr_text));
    MultiplicativeSet t = mult_set_from_option(r, mult_text);
    LocalizedRing loc = localize(r, t);
    if (as_json) {
        std::cout << json{{"schema", 1},
                          {"ring", r->str()},
                          {"multSetSize", t.elems().size()},
                          {"kernel", ideal_json(loc.kernel())},
                          {"localizedSize", loc.ring()->size()},
                          {"localizedRing", loc.ring()->str()}}
                         .dump(2)
                  << "\n";
        return kExitOk;
    }
    std::cout << "T has " << t.elems().size() << " element(s); kernel of R -> T^-1R is "
              << gens_str(loc.kernel()) << "\n";
    std::cout << "T^-1(" << r->str() << ") has " << loc.ring()->size() << " element(s)\n";
    return kExitOk;
}

int cmd_ultra(const std::string& expr_text, const std::string& base_text, bool as_json) {
    RingPtr r = elaborate(parse_ring_expr(expr_text));
    require_product(*r, "ultra");
    std::string base_note;
    std::vector<Ideal> primes;
    if (base_text.empty()) {
        BasePrimeChoice def = BasePrimeChoice::first_in_spec_order(r);
        primes = def.primes();
        base_note = "base primes defaulted to the first prime of each factor in spectrum order";
    } else {
        const auto lits = parse_elem_list(base_text);
        if (lits.size() != r->arity())
            throw PreconditionError("--base-primes needs one generator per factor");
        for (std::size_t k = 0; k < lits.size(); ++k) {
            const RingPtr& f = r->factors()[k];
            primes.push_back(principal_ideal(
                f, elaborate_elem(*f, lits[k], "base prime " + std::to_string(k + 1))));
        }
        base_note = "base primes supplied on the command line";
    }
    BasePrimeChoice base(r, primes);
    EmbeddingReport rep = embedding_checks(r, base);
    const bool all_ok = rep.all_images_prime && rep.injective && rep.continuity &&
                        rep.tame_correspondence && rep.left_inverse;
    if (as_json) {
        json base_j = json::array();
        for (const auto& p : primes) base_j.push_back(ideal_json(p));
        std::cout << json{{"schema", 1},
                          {"ring", r->str()},
                          {"basePrimes", base_j},
                          {"baseNote", base_note},
                          {"setringPrimes", rep.setring_primes_checked},
                          {"elementsChecked", rep.elements_checked},
                          {"imagesPrime", rep.all_images_prime},
                          {"injective", rep.injective},
                          {"continuity", rep.continuity},
                          {"tameCorrespondence", rep.tame_correspondence},
                          {"leftInverse", rep.left_inverse},
                          {"wildDirectionVacuous", rep.wild_direction_vacuous},
                          {"allChecksPassed", all_ok}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << base_note << ":";
        for (const auto& p : primes) std::cout << " " << gens_str(p);
        std::cout << "\nSpec(P(S)) -> Spec(R) over " << rep.setring_primes_checked
                  << " setring prime(s), " << rep.elements_checked << " element(s):\n";
        std::cout << "  images prime:        " << (rep.all_images_prime ? "yes" : "NO") << "\n";
        std::cout << "  injective:           " << (rep.injective ? "yes" : "NO") << "\n";
        std::cout << "  continuity:          " << (rep.continuity ? "yes" : "NO") << "\n";
        std::cout << "  principal -> tame:   " << (rep.tame_correspondence ? "yes" : "NO")
                  << "\n";
        std::cout << "  left inverse:        " << (rep.left_inverse ? "yes" : "NO") << "\n";
        std::cout << "  wild direction:      vacuous at finite S\n";
    }
    return all_ok ? kExitOk : kExitPropertyFailure;
}

int cmd_dim(const std::string& expr_text, bool as_json) {
    RingPtr r = elaborate(parse_ring_expr(expr_text));
    const Spectrum sp = spec(r, std::uint64_t{1} << 20);
    const int dim = krull_dim(sp);
    if (as_json) {
        std::cout << json{{"schema", 1}, {"ring", r->str()}, {"primes", sp.size()},
                          {"krullDim", dim}}
                         .dump(2)
                  << "\n";
        return kExitOk;
    }
    std::cout << "Krull dimension of " << r->str() << " = " << dim << " (" << sp.size()
              << " prime(s), every prime maximal)\n";
    return kExitOk;
}

int cmd_verify(const std::string& id, const VerifyConfig& cfg, bool as_json) {
    std::vector<VerificationReport> reports;
    if (id == "all")
        reports = run_all_properties(cfg);
    else
        reports.push_back(run_property(id, cfg));
    bool any_fail = false;
    for (const auto& r : reports) any_fail |= r.status == VerifyStatus::Fail;
    if (as_json) {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        std::cout << json{{"schema", 1}, {"seed", cfg.seed}, {"reports", arr}}.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            std::cout << r.property_id << ": " << to_string(r.status) << " ("
                      << r.instances_checked << "/" << r.trials << " instances, "
                      << static_cast<long>(r.wall_ms) << " ms)";
            if (r.counterexample)
                std::cout << "\n  counterexample: " << r.counterexample->ring_expr
                          << "  [trialSeed " << r.counterexample->trial_seed << "] "
                          << r.counterexample->detail;
            if (!r.note.empty()) std::cout << "\n  note: " << r.note;
            std::cout << "\n";
        }
    }
    return any_fail ? kExitPropertyFailure : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-scale laboratory for prime spectra of direct product rings"};
    app.require_subcommand(1);
    app.fallthrough();

    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of text");

    std::string expr_text, prime_text, mult_text, base_text;
    VerifyConfig cfg;
    std::string verify_id = "all";

    auto* c_spec = app.add_subcommand("spec", "prime spectrum of a ring expression");
    c_spec->add_option("expr", expr_text, "ring expression")->required();

    auto* c_comp = app.add_subcommand("components",
                                      "connected components and max-regular ideals");
    c_comp->add_option("expr", expr_text, "ring expression")->required();

    auto* c_bool = app.add_subcommand("boolean", "Boolean ring of idempotents and Stone map");
    c_bool->add_option("expr", expr_text, "ring expression")->required();

    auto* c_cls = app.add_subcommand("classify", "tame/wild classification of a prime");
    c_cls->add_option("expr", expr_text, "product ring expression")->required();
    c_cls->add_option("--prime", prime_text, "generators of the prime ideal")->required();

    auto* c_loc = app.add_subcommand("localize", "localization at a multiplicative set");
    c_loc->add_option("expr", expr_text, "ring expression")->required();
    c_loc->add_option("--mult-set", mult_text,
                      "complement(<gens>) | filter(<subset>) | explicit element list")
        ->required();

    auto* c_ultra = app.add_subcommand("ultra", "ultrafilter embedding Spec(P(S)) -> Spec(R)");
    c_ultra->add_option("expr", expr_text, "product ring expression")->required();
    c_ultra->add_option("--base-primes", base_text, "one prime generator per factor");

    auto* c_dim = app.add_subcommand("dim", "Krull dimension");
    c_dim->add_option("expr", expr_text, "ring expression")->required();

    auto* c_verify = app.add_subcommand("verify", "run the theorem-verification suite");
    c_verify->add_option("property", verify_id, "property id or 'all'");
    c_verify->add_option("--seed", cfg.seed, "generator seed");
    c_verify->add_option("--trials", cfg.trials, "trial count (0 = property default)");
    c_verify->add_option("--max-size", cfg.max_size, "ring size bound (0 = property default)");
    c_verify->add_option("--max-cover", cfg.max_cover, "avoidance cover-size cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (c_spec->parsed()) return cmd_spec(expr_text, as_json);
        if (c_comp->parsed()) return cmd_components(expr_text, as_json);
        if (c_bool->parsed()) return cmd_boolean(expr_text, as_json);
        if (c_cls->parsed()) return cmd_classify(expr_text, prime_text, as_json);
        if (c_loc->parsed()) return cmd_localize(expr_text, mult_text, as_json);
        if (c_ultra->parsed()) return cmd_ultra(expr_text, base_text, as_json);
        if (c_dim->parsed()) return cmd_dim(expr_text, as_json);
        if (c_verify->parsed()) return cmd_verify(verify_id, cfg, as_json);
    } catch (const ConsistencyError& e) {
        std::cerr << "consistency failure: " << e.what() << "\n";
        return kExitPropertyFailure;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
