#pragma once

#include "amo/bigq.hpp"
#include "amo/combinatorics.hpp"
#include "amo/cyclo.hpp"
#include "amo/int_poly.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace amo {

// (a_1, ..., a_n): determinant of the tridiagonal matrix with unit
// off-diagonals. C_n = a_n C_{n-1} - C_{n-2}, C_0 = 1, C_{-1} = 0.
template <class T>
T continuant(std::span<const T> a, const T& one)
{
    T prev = one - one;
    T cur = one;
    for (const T& x : a) {
        T next = x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// [[a_1, ..., a_n]] = (a_1..a_n) - (a_2..a_{n-1}) + 2(-1)^{n-1}; n >= 3.
template <class T>
T periodic_continuant(std::span<const T> a, const T& one)
{
    const std::size_t n = a.size();
    if (n < 3)
        throw std::domain_error("periodic_continuant: n must be >= 3");
    const T two = one + one;
    T r = continuant(a, one) - continuant(a.subspan(1, n - 2), one);
    return n % 2 == 1 ? T(r + two) : T(r - two);
}

template <class T>
T continuant_via_families(std::span<const T> a, const T& one)
{
    return alternating_family_sum(FamilyKind::Linear, a, static_cast<int>(a.size()), one);
}

template <class T>
T periodic_via_families(std::span<const T> a, const T& one)
{
    const std::size_t n = a.size();
    if (n < 3)
        throw std::domain_error("periodic_via_families: n must be >= 3");
    const T two = one + one;
    T s = alternating_family_sum(FamilyKind::Cyclic, a, static_cast<int>(n), one);
    if (n % 2 == 1)
        return s + two;
    return (n / 2) % 2 == 0 ? T(s - two + one) : T(s - two - one);
}

// Chebyshev polynomial of the first kind.
IntPoly chebyshev_T(int q);

// prod_{k=1}^q 2cos(2 pi k / q) = (-1)^q 2 (T_q(0) - 1), one of 0, 2, -4.
int diag_product_exact(int q);

// The claimed value of [[mu(x^k + x^-k)]]_{k=1..q}: 0, 2(1 + mu^q) or -4(1 + mu^q)
// according to q mod 4.
BigQ cos_periodic_constant(int q, const BigQ& mu);

// [[a_1..a_q]] with a_k = mu(x^k + x^-k) in Q[x]/(x^q - 1).
CycloElement cos_periodic_residue(int q, const BigQ& mu);

// Evaluates the residue above, checks that it minus the claimed constant
// vanishes at every primitive q-th root, and returns the constant. Throws
// verification_failure if the divisibility check fails.
BigQ periodic_continuant_cos_exact(int q, const BigQ& mu);

// sum over I in S~_{q,k} of prod_{j in I} (x^j + x^-j), by enumeration.
CycloElement cyclic_cos_sum(int q, int k);

// Phi_q divides cyclic_cos_sum(q, k).
bool main_theorem_exact(int q, int k);

struct MainTheoremNumeric {
    int q = 0;
    bool passed = false;
    // Largest |sum| / |S~_{q,k}| over coprime p and 1 <= k < q/2.
    double worst_ratio = 0.0;
    int worst_p = 0;
    int worst_k = 0;
    unsigned precision_bits = 0;
};

// For every p coprime to q and 1 <= k < q/2, evaluates the cyclic family sum
// with a_j = 2cos(2 pi j p / q) by the family recurrence in extended precision
// and requires |sum| < tol * |S~_{q,k}|. precision_bits = 0 picks one automatically.
MainTheoremNumeric main_theorem_numeric(int q, double tol = 1e-8, unsigned precision_bits = 0);

} // namespace amo
