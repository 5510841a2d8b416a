#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>

namespace homsys {

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Deterministic stream for every randomized search; callers own their streams.
using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
    return Rng(splitmix64(seed ^ splitmix64(stream)));
}

struct SearchOptions {
    // Exhaustive coefficient search while p^dim stays below this, otherwise
    // randomized sampling with at most retry_bound draws.
    std::uint64_t exhaustive_threshold = 4096;
    std::uint32_t retry_bound = 256;
};

enum class SearchStatus { found, absent, exhausted };

// found carries a certificate; absent is a definitive negative; exhausted
// means the randomized search hit its retry bound without deciding.
template <typename T>
struct SearchResult {
    SearchStatus status = SearchStatus::absent;
    std::optional<T> value;

    static SearchResult make_found(T v) { return {SearchStatus::found, std::move(v)}; }
    static SearchResult make_absent() { return {SearchStatus::absent, std::nullopt}; }
    static SearchResult make_exhausted() { return {SearchStatus::exhausted, std::nullopt}; }

    bool found() const { return status == SearchStatus::found; }
    bool absent() const { return status == SearchStatus::absent; }
    bool exhausted() const { return status == SearchStatus::exhausted; }
};

}  // namespace homsys
