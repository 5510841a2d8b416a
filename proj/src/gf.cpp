#include "homsys/gf.hpp"

namespace homsys {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint32_t d = 3; static_cast<std::uint64_t>(d) * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t prime) : p(prime) {
    if (!is_prime(prime)) throw error("field characteristic " + std::to_string(prime) + " is not prime");
    if (prime > (1u << 15)) throw error("field characteristic too large");
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    if (a == 0) throw error("inverse of zero in GF(" + std::to_string(p) + ")");
    // extended Euclid on (a, p)
    long long t = 0, new_t = 1;
    long long r = p, new_r = a % p;
    while (new_r != 0) {
        long long q = r / new_r;
        long long tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

}  // namespace homsys
