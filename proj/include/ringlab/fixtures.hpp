#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {
namespace fixtures {

/// GF(p^k) as a Table ring over polynomial residues mod an irreducible.
/// Coefficients little-endian; element index = sum c_i p^i. Labels are
/// polynomials in the generator g.
inline RingPtr galois_field(std::uint64_t p, std::uint64_t k,
                            const std::vector<std::uint64_t>& irreducible, std::string name) {
    std::uint64_t n = 1;
    for (std::uint64_t i = 0; i < k; ++i) n *= p;
    auto coeffs = [&](EIdx idx) {
        std::vector<std::uint64_t> c(k);
        for (std::uint64_t i = 0; i < k; ++i) {
            c[i] = idx % p;
            idx /= p;
        }
        return c;
    };
    auto index = [&](const std::vector<std::uint64_t>& c) {
        EIdx idx = 0;
        for (std::uint64_t i = k; i-- > 0;) idx = idx * p + c[i];
        return idx;
    };
    // Reduce a polynomial of degree < 2k-1 mod the monic irreducible.
    auto reduce = [&](std::vector<std::uint64_t> c) {
        for (std::size_t d = c.size(); d-- > k;) {
            const std::uint64_t lead = c[d];
            if (lead == 0) continue;
            c[d] = 0;
            for (std::uint64_t i = 0; i < k; ++i) {
                // x^d = x^(d-k) * (x^k - tail): subtract tail * lead.
                const std::uint64_t t = (irreducible[i] * lead) % p;
                c[d - k + i] = (c[d - k + i] + p - t % p) % p;
            }
        }
        c.resize(k);
        return c;
    };
    std::vector<EIdx> add(n * n), mul(n * n);
    std::vector<std::string> labels(n);
    for (EIdx a = 0; a < n; ++a) {
        const auto ca = coeffs(a);
        std::string lab;
        for (std::uint64_t i = k; i-- > 0;) {
            if (ca[i] == 0) continue;
            if (!lab.empty()) lab += "+";
            if (i == 0 || ca[i] != 1) lab += std::to_string(ca[i]);
            if (i >= 1) lab += "g";
            if (i >= 2) lab += "^" + std::to_string(i);
        }
        labels[a] = lab.empty() ? "0" : lab;
        for (EIdx b = 0; b < n; ++b) {
            const auto cb = coeffs(b);
            std::vector<std::uint64_t> s(k);
            for (std::uint64_t i = 0; i < k; ++i) s[i] = (ca[i] + cb[i]) % p;
            add[a * n + b] = index(s);
            std::vector<std::uint64_t> prod(2 * k - 1, 0);
            for (std::uint64_t i = 0; i < k; ++i)
                for (std::uint64_t j = 0; j < k; ++j)
                    prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
            mul[a * n + b] = index(reduce(std::move(prod)));
        }
    }
    return Ring::table(std::move(add), std::move(mul), std::move(labels), std::move(name));
}

/// F2[x,y]/(x,y)^2: elements a + bx + cy with a,b,c in F2, index a + 2b + 4c.
/// The classical ideal-avoidance failure: (x,y) is covered by its three
/// proper subideals (x), (y), (x+y).
inline RingPtr f2xy() {
    const std::uint64_t n = 8;
    auto bits = [](EIdx v) { return std::array<std::uint64_t, 3>{v & 1, (v >> 1) & 1, (v >> 2) & 1}; };
    std::vector<EIdx> add(n * n), mul(n * n);
    for (EIdx a = 0; a < n; ++a)
        for (EIdx b = 0; b < n; ++b) {
            add[a * n + b] = a ^ b;
            const auto [a0, a1, a2] = bits(a);
            const auto [b0, b1, b2] = bits(b);
            const std::uint64_t c0 = (a0 * b0) & 1;
            const std::uint64_t c1 = (a0 * b1 + a1 * b0) & 1;
            const std::uint64_t c2 = (a0 * b2 + a2 * b0) & 1;
            mul[a * n + b] = c0 | (c1 << 1) | (c2 << 2);
        }
    std::vector<std::string> labels{"0", "1", "x", "1+x", "y", "1+y", "x+y", "1+x+y"};
    return Ring::table(std::move(add), std::move(mul), std::move(labels), "f2xy");
}

inline RingPtr f4() { return galois_field(2, 2, {1, 1, 1}, "f4"); }   // x^2+x+1
inline RingPtr f8() { return galois_field(2, 3, {1, 1, 0, 1}, "f8"); }  // x^3+x+1
inline RingPtr f9() { return galois_field(3, 2, {1, 0, 1}, "f9"); }   // x^2+1

inline const std::map<std::string, std::function<RingPtr()>>& registry() {
    static const std::map<std::string, std::function<RingPtr()>> reg = {
        {"f2xy", [] { return f2xy(); }},
        {"f4", [] { return f4(); }},
        {"f8", [] { return f8(); }},
        {"f9", [] { return f9(); }},
    };
    return reg;
}

inline RingPtr by_name(const std::string& name) {
    const auto& reg = registry();
    auto it = reg.find(name);
    if (it == reg.end()) throw PreconditionError("unknown fixture: " + name);
    return it->second();
}

}  // namespace fixtures
}  // namespace ringlab
