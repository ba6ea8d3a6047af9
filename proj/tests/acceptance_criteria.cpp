// Acceptance suite: one line per criterion, nonzero exit iff any fails.
// The CLI contract checks need the built binary; its path arrives in the
// RINGLAB_CLI environment variable (set by CTest).

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ringlab/ringlab.hpp"

using namespace ringlab;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& name, const std::function<std::string()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string problem;
    try {
        problem = body();
    } catch (const std::exception& e) {
        problem = std::string("exception: ") + e.what();
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (problem.empty()) {
        std::printf("criterion %2d (%s): PASS  [%.0f ms]\n", number, name.c_str(), ms);
    } else {
        ++g_failures;
        std::printf("criterion %2d (%s): FAIL  [%.0f ms] %s\n", number, name.c_str(), ms,
                    problem.c_str());
    }
    std::fflush(stdout);
}

std::string expect_status(const VerificationReport& rep, VerifyStatus want) {
    if (rep.status == want) return {};
    std::string out = rep.property_id + " finished " + to_string(rep.status) + ", wanted " +
                      to_string(want);
    if (rep.counterexample)
        out += "; counterexample " + rep.counterexample->ring_expr + " (" +
               rep.counterexample->detail + ")";
    return out;
}

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    const char* cli = std::getenv("RINGLAB_CLI");
    if (!cli) return CliResult{-1, "RINGLAB_CLI not set"};
    const std::string cmd = std::string(cli) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return CliResult{-1, "popen failed"};
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int raw = pclose(pipe);
    return CliResult{WEXITSTATUS(raw), std::move(out)};
}

std::string strip_wall_time(const std::string& json_text) {
    std::istringstream in(json_text);
    std::string line, out;
    while (std::getline(in, line))
        if (line.find("wallTimeMs") == std::string::npos) out += line + "\n";
    return out;
}

}  // namespace

int main() {
    const auto suite_start = std::chrono::steady_clock::now();
    VerifyConfig cfg;  // seed 1, property defaults

    criterion(1, "spectrum oracle equivalence", [&] {
        VerificationReport rep = run_property("spec-oracle", cfg);
        if (rep.trials < 300)
            return std::string("corpus too small: ") + std::to_string(rep.trials);
        return expect_status(rep, VerifyStatus::Pass);
    });

    criterion(2, "tame structure theorem", [&] {
        return expect_status(run_property("tame-structure", cfg), VerifyStatus::Pass);
    });

    criterion(3, "wild emptiness (vacuous by theorem)", [&] {
        return expect_status(run_property("wild-emptiness", cfg), VerifyStatus::Vacuous);
    });

    criterion(4, "ultrafilter embedding", [&] {
        std::string r = expect_status(run_property("ultrafilter-embedding", cfg),
                                      VerifyStatus::Pass);
        if (!r.empty()) return r;
        // Fixed instances over |S| = 2, 3, 4 with three explicit base choices.
        for (const char* text : {"Z/6 x Z/10", "Z/6 x Z/10 x Z/12", "Z/6 x Z/6 x Z/10 x Z/10"}) {
            RingPtr ring = elaborate(parse_ring_expr(text));
            std::vector<Spectrum> fsp;
            std::uint64_t combos = 1;
            for (const auto& f : ring->factors()) {
                fsp.push_back(spec(f));
                combos *= fsp.back().size();
            }
            if (combos < 3) return std::string("instance lacks three base choices: ") + text;
            for (std::uint64_t combo : {std::uint64_t{0}, std::uint64_t{1}, std::uint64_t{2}}) {
                std::vector<Ideal> primes;
                std::uint64_t c = combo;
                for (const auto& sp : fsp) {
                    primes.push_back(sp[c % sp.size()].prime);
                    c /= sp.size();
                }
                EmbeddingReport rep = embedding_checks(ring, BasePrimeChoice(ring, primes));
                if (!rep.all_images_prime || !rep.injective || !rep.continuity ||
                    !rep.tame_correspondence || !rep.left_inverse)
                    return std::string("embedding check failed on ") + text;
            }
        }
        return std::string{};
    });

    criterion(5, "filter-quotient isomorphism", [&] {
        VerificationReport rep = run_property("filter-quotient-iso", cfg);
        if (rep.trials < 100) return std::string("needs at least 100 products");
        return expect_status(rep, VerifyStatus::Pass);
    });

    criterion(6, "nilradical and zero dimension", [&] {
        return expect_status(run_property("nilradical-zerodim", cfg), VerifyStatus::Pass);
    });

    criterion(7, "components and max-regular ideals", [&] {
        VerificationReport rep = run_property("components-max-regular", cfg);
        if (rep.trials < 200) return std::string("needs at least 200 instances");
        return expect_status(rep, VerifyStatus::Pass);
    });

    criterion(8, "avoidance cross-validation", [&] {
        VerificationReport rep = run_property("avoidance-qb", cfg);
        std::string r = expect_status(rep, VerifyStatus::Pass);
        if (!r.empty()) return r;
        RingPtr fx = fixtures::f2xy();
        const AvoidanceResult av = has_ideal_avoidance(fx, cfg.max_cover);
        if (av.has_avoidance || qb_criterion(fx))
            return std::string("f2xy must fail both avoidance routes");
        std::printf("    (cover size cap %d; fixture witness uses %zu ideals)\n", cfg.max_cover,
                    av.counterexample ? av.counterexample->cover.size() : 0);
        return std::string{};
    });

    criterion(9, "induced homs", [&] {
        VerificationReport rep = run_property("induced-hom", cfg);
        if (rep.trials < 100) return std::string("needs at least 100 hom families");
        return expect_status(rep, VerifyStatus::Pass);
    });

    criterion(10, "lying over", [&] {
        VerificationReport rep = run_property("lying-over", cfg);
        if (rep.trials < 100) return std::string("needs at least 100 homs");
        return expect_status(rep, VerifyStatus::Pass);
    });

    criterion(11, "determinism and CLI contract", [&] {
        VerifyConfig c2;
        c2.seed = 42;
        c2.trials = 25;
        nlohmann::json a = to_json(run_property("tame-structure", c2));
        nlohmann::json b = to_json(run_property("tame-structure", c2));
        a.erase("wallTimeMs");
        b.erase("wallTimeMs");
        if (a.dump() != b.dump()) return std::string("in-process reports differ for equal seeds");

        CliResult r1 = run_cli("verify spec-oracle --seed 7 --json");
        CliResult r2 = run_cli("verify spec-oracle --seed 7 --json");
        if (r1.exit_code != 0) return "verify exit code " + std::to_string(r1.exit_code);
        if (strip_wall_time(r1.output) != strip_wall_time(r2.output))
            return std::string("CLI reports differ byte-for-byte (modulo wallTime)");
        CliResult all = run_cli("verify all --seed 11 --trials 25 --max-size 256 --json");
        if (all.exit_code != 0)
            return "verify all exit code " + std::to_string(all.exit_code);
        if (all.output.find("\"fail\"") != std::string::npos)
            return std::string("verify all reported a failing property");
        std::size_t reports = 0;
        for (std::size_t at = all.output.find("propertyId"); at != std::string::npos;
             at = all.output.find("propertyId", at + 1))
            ++reports;
        if (reports != 10) return "verify all must cover 10 properties, saw " +
                                  std::to_string(reports);
        CliResult ok = run_cli("spec \"Z/12\"");
        if (ok.exit_code != 0) return std::string("spec exit code nonzero");
        if (ok.output.find("2 prime(s)") == std::string::npos)
            return std::string("spec output missing prime count");
        CliResult cls = run_cli("classify \"Z/4 x Z/9\" --prime \"(2,1)\"");
        if (cls.exit_code != 0 || cls.output.find("Tame(k=1, (2))") == std::string::npos)
            return std::string("classify output contract violated");
        CliResult notprime = run_cli("classify \"Z/4 x Z/9\" --prime \"(2,3)\"");
        if (notprime.exit_code != 2)
            return "non-prime classify input must exit 2, got " +
                   std::to_string(notprime.exit_code);
        CliResult usage = run_cli("spec \"Z/\"");
        if (usage.exit_code != 2)
            return "parse error must exit 2, got " + std::to_string(usage.exit_code);
        CliResult badsub = run_cli("frobnicate");
        if (badsub.exit_code != 2)
            return "unknown subcommand must exit 2, got " + std::to_string(badsub.exit_code);
        return std::string{};
    });

    const double total =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - suite_start).count();
    std::printf("acceptance: %s (%d failure(s), %.1f s)\n", g_failures ? "FAIL" : "PASS",
                g_failures, total);
    return g_failures ? 1 : 0;
}
