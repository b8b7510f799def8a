#include "modular.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace amo::detail {

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p)
{
    if (a % p == 0)
        throw std::domain_error("invmod: zero has no inverse");
    return powmod(a, p - 2, p);
}

namespace {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    static constexpr std::array<std::uint64_t, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (auto b : bases) {
        if (n % b == 0)
            return n == b;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (auto b : bases) {
        std::uint64_t x = powmod(b, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

std::vector<std::uint64_t> make_primes(std::size_t count)
{
    std::vector<std::uint64_t> out;
    out.reserve(count);
    for (std::uint64_t n = (std::uint64_t{1} << 62) - 1; out.size() < count; n -= 2)
        if (is_prime(n))
            out.push_back(n);
    return out;
}

} // namespace

std::uint64_t prime_at(std::size_t idx)
{
    static const std::vector<std::uint64_t> primes = make_primes(1024);
    if (idx >= primes.size())
        throw std::runtime_error("prime_at: modular prime table exhausted");
    return primes[idx];
}

namespace {

void make_monic(ModPoly& a, std::uint64_t p)
{
    if (a.empty())
        return;
    const std::uint64_t inv = invmod(a.back(), p);
    for (auto& c : a)
        c = mulmod(c, inv, p);
}

// a <- a mod b, b monic
void rem_in_place(ModPoly& a, const ModPoly& b, std::uint64_t p)
{
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::uint64_t t = a.back();
        if (t != 0) {
            const std::size_t off = a.size() - 1 - db;
            for (std::size_t j = 0; j < db; ++j)
                a[off + j] = submod(a[off + j], mulmod(t, b[j], p), p);
        }
        a.pop_back();
    }
    trim(a);
}

} // namespace

ModPoly gcd_monic(ModPoly a, ModPoly b, std::uint64_t p)
{
    trim(a);
    trim(b);
    if (a.size() < b.size())
        std::swap(a, b);
    make_monic(b, p);
    while (!b.empty()) {
        rem_in_place(a, b, p);
        std::swap(a, b);
        make_monic(b, p);
    }
    make_monic(a, p);
    return a;
}

} // namespace amo::detail
