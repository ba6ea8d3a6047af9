#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace ringlab {

// Default resource guards. Operations that scan all elements (or all pairs)
// refuse rings above these sizes unless the caller passes a larger bound.
inline constexpr std::uint64_t kScanGuard = 4096;
inline constexpr std::uint64_t kOracleGuard = 64;
inline constexpr int kDefaultMaxCover = 4;

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Violated ring axioms, zero-ring product factors, malformed tables.
class ConstructionError : public Error {
public:
    using Error::Error;
};

// Caller broke an operation's precondition (non-prime ideal, non-local factor, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// A size guard or enumeration cap was exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

// A mathematically impossible state was reached (theorem violation).
class ConsistencyError : public Error {
public:
    using Error::Error;
};

// Fixed-size bit set addressed by element index.
class Bits {
public:
    Bits() = default;
    explicit Bits(std::uint64_t n) : words_((n + 63) / 64, 0), size_(n) {}

    std::uint64_t size() const { return size_; }

    bool test(std::uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::uint64_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::uint64_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    std::uint64_t count() const {
        std::uint64_t c = 0;
        for (auto w : words_) c += static_cast<std::uint64_t>(__builtin_popcountll(w));
        return c;
    }
    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    bool operator==(const Bits& o) const { return size_ == o.size_ && words_ == o.words_; }
    bool operator!=(const Bits& o) const { return !(*this == o); }

    bool subset_of(const Bits& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    Bits& operator|=(const Bits& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bits& operator&=(const Bits& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    std::vector<std::uint64_t> to_list() const {
        std::vector<std::uint64_t> out;
        out.reserve(count());
        for (std::uint64_t i = 0; i < size_; ++i)
            if (test(i)) out.push_back(i);
        return out;
    }

private:
    std::vector<std::uint64_t> words_;
    std::uint64_t size_ = 0;
};

// Deterministic RNG for instance generation. Bounded draws use plain modulo so
// that streams are identical across standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
    std::uint64_t in(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
    bool coin() { return next() & 1u; }

    template <class T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<std::size_t>(below(v.size()))];
    }

private:
    std::mt19937_64 eng_;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Per-trial seed derivation: independent of trial count, stable across runs.
inline std::uint64_t child_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed ^ splitmix64(index + 1));
}

}  // namespace ringlab
