#pragma once

// Arithmetic in Z/pZ[x] for word-sized primes close to 2^62.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace amo::detail {

__extension__ using u128 = unsigned __int128;

using ModPoly = std::vector<std::uint64_t>;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    std::uint64_t r = a + b;
    return r >= p ? r - p : r;
}

inline std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return a >= b ? a - b : a + p - b;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);

// idx-th prime below 2^62, descending. Deterministic across runs.
std::uint64_t prime_at(std::size_t idx);

inline void trim(ModPoly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

// Monic gcd; gcd(0, 0) is the empty polynomial.
ModPoly gcd_monic(ModPoly a, ModPoly b, std::uint64_t p);

} // namespace amo::detail
