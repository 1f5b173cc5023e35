#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace sumboost {

// ---------------------------------------------------------------------------
// Hashing (FNV-1a, 64 bit). Used for cache keys, seeds and fingerprints.
// ---------------------------------------------------------------------------

class Fnv64 {
public:
    Fnv64& update(std::string_view s) {
        update_u64(s.size());
        for (unsigned char c : s) step(c);
        return *this;
    }
    Fnv64& update_u64(std::uint64_t v) {
        for (int i = 0; i < 8; ++i) step(static_cast<unsigned char>(v >> (8 * i)));
        return *this;
    }
    Fnv64& update_f64(double v);
    std::uint64_t digest() const { return state_; }

private:
    void step(unsigned char c) {
        state_ ^= c;
        state_ *= 0x100000001b3ULL;
    }
    std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

std::uint64_t fnv64(std::string_view s);
std::string hex64(std::uint64_t v);

/// splitmix64 step; the standard way to stretch one seed into many.
std::uint64_t splitmix64(std::uint64_t& state);

/// Derives an independent stream seed from a base seed and a label.
std::uint64_t derive_seed(std::uint64_t base, std::string_view label, std::uint64_t index = 0);

// ---------------------------------------------------------------------------
// Deterministic RNG. std::shuffle and the std distributions are
// implementation-defined, so sampling goes through this wrapper to keep
// results identical across standard libraries.
// ---------------------------------------------------------------------------

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform integer in [0, n) by rejection sampling; n must be > 0.
    std::size_t uniform_index(std::size_t n);

    /// Uniform double in [0, 1) with 53 bits of entropy.
    double uniform01();

    /// Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = uniform_index(i);
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

// ---------------------------------------------------------------------------
// Strings
// ---------------------------------------------------------------------------

std::string to_lower(std::string_view s);
std::string trim(std::string_view s);
std::vector<std::string> split_words(std::string_view s);
int word_count(std::string_view s);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

/// "41" -> "forty-one"; supports 0..100.
std::string cardinal_words(int n);
/// "41" -> "forty-first"; supports 0..100 ("zeroth" .. "hundredth").
std::string ordinal_words(int n);

}  // namespace sumboost
