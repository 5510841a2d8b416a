#pragma once

#include <cstdint>

#include "homsys/common.hpp"

namespace homsys {

bool is_prime(std::uint32_t n);

// Prime field GF(p). All residues live in [0, p).
struct PrimeField {
    std::uint32_t p = 2;

    PrimeField() = default;
    explicit PrimeField(std::uint32_t prime);

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : a + p - b;
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
    }
    std::uint32_t inv(std::uint32_t a) const;
    // Reduces an arbitrary signed integer into [0, p).
    std::uint32_t reduce(long long v) const {
        long long r = v % static_cast<long long>(p);
        if (r < 0) r += p;
        return static_cast<std::uint32_t>(r);
    }

    bool operator==(const PrimeField&) const = default;
};

}  // namespace homsys
