#include "amo/continuants.hpp"
#include "amo/errors.hpp"

#include "working_precision.hpp"

#include <cmath>
#include <numeric>

namespace amo {

IntPoly chebyshev_T(int q)
{
    if (q < 0)
        throw std::domain_error("chebyshev_T: q must be >= 0");
    IntPoly prev(1);
    if (q == 0)
        return prev;
    IntPoly cur = IntPoly::x();
    const IntPoly two_x = IntPoly::monomial(2, 1);
    for (int i = 2; i <= q; ++i) {
        IntPoly next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

int diag_product_exact(int q)
{
    if (q < 2)
        throw std::domain_error("diag_product_exact: q must be >= 2");
    // prod (x - a_i) = 2(T_q(x/2) - 1); at x = 0 this is (-1)^q prod a_i.
    const BigZ t0 = chebyshev_T(q).coeff(0);
    BigZ v = 2 * (t0 - 1);
    if (q % 2 == 1)
        v = -v;
    return static_cast<int>(v.get_si());
}

BigQ cos_periodic_constant(int q, const BigQ& mu)
{
    const BigQ base = 1 + pow(mu, static_cast<unsigned long>(q));
    switch (q % 4) {
    case 0:
        return 0;
    case 2:
        return -4 * base;
    default:
        return 2 * base;
    }
}

CycloElement cos_periodic_residue(int q, const BigQ& mu)
{
    if (q < 3)
        throw std::domain_error("cos_periodic_residue: q must be >= 3");
    std::vector<CycloElement> a;
    a.reserve(static_cast<std::size_t>(q));
    for (int k = 1; k <= q; ++k)
        a.push_back(cyclo_cos_term(q, k, mu));
    return periodic_continuant(std::span<const CycloElement>(a), CycloElement::constant(q, 1));
}

BigQ periodic_continuant_cos_exact(int q, const BigQ& mu)
{
    if (q < 3)
        throw std::domain_error("periodic_continuant_cos_exact: q must be >= 3");
    if (mu <= 0)
        throw std::domain_error("periodic_continuant_cos_exact: mu must be positive");
    const BigQ claimed = cos_periodic_constant(q, mu);
    CycloElement diff = cos_periodic_residue(q, mu) - CycloElement::constant(q, claimed);
    if (!cyclo_vanishes_at_primitive_roots(diff))
        throw verification_failure("periodic continuant of scaled cosines differs from the claimed constant at q=" +
                                   std::to_string(q) + ", mu=" + mu.get_str());
    return claimed;
}

CycloElement cyclic_cos_sum(int q, int k)
{
    std::vector<CycloElement> a;
    a.reserve(static_cast<std::size_t>(q));
    for (int j = 1; j <= q; ++j)
        a.push_back(cyclo_cos_term(q, j, 1));
    return family_sum(FamilyKind::Cyclic, std::span<const CycloElement>(a), k, CycloElement::constant(q, 1));
}

bool main_theorem_exact(int q, int k)
{
    if (q < 3 || k < 1 || 2 * k >= q)
        throw std::domain_error("main_theorem_exact: requires 1 <= k < q/2");
    return cyclo_vanishes_at_primitive_roots(cyclic_cos_sum(q, k));
}

namespace {

template <class Real>
MainTheoremNumeric main_theorem_numeric_impl(int q, double tol, unsigned bits)
{
    MainTheoremNumeric r;
    r.q = q;
    r.passed = true;
    r.precision_bits = bits;

    std::vector<double> ones(static_cast<std::size_t>(q), 1.0);
    const auto counts = family_sums(FamilyKind::Cyclic, std::span<const double>(ones), 1.0);

    const Real two_pi = 2 * detail::pi_value<Real>();
    for (int p = 1; p < q; ++p) {
        if (std::gcd(p, q) != 1)
            continue;
        std::vector<Real> a;
        a.reserve(static_cast<std::size_t>(q));
        for (int j = 1; j <= q; ++j) {
            const Real ang = two_pi * Real(static_cast<long>((static_cast<long>(j) * p) % q)) / Real(q);
            a.push_back(2 * cos(ang));
        }
        const auto sums = family_sums(FamilyKind::Cyclic, std::span<const Real>(a), Real(1));
        for (int k = 1; 2 * k < q; ++k) {
            const double v = std::fabs(detail::to_double(sums[static_cast<std::size_t>(k)]));
            const double ratio = v / counts[static_cast<std::size_t>(k)];
            if (ratio > r.worst_ratio || r.worst_p == 0) {
                r.worst_ratio = ratio;
                r.worst_p = p;
                r.worst_k = k;
            }
            if (!(ratio < tol))
                r.passed = false;
        }
    }
    return r;
}

} // namespace

MainTheoremNumeric main_theorem_numeric(int q, double tol, unsigned precision_bits)
{
    if (q < 3)
        throw std::domain_error("main_theorem_numeric: q must be >= 3");
    unsigned bits = precision_bits;
    if (bits == 0) {
        // Every term is bounded by 2^(q - 2k); the sums of |terms| bound the cancellation.
        std::vector<double> twos(static_cast<std::size_t>(q), 2.0);
        const auto mags = family_sums(FamilyKind::Cyclic, std::span<const double>(twos), 1.0);
        double worst = 1.0;
        for (double m : mags)
            worst = std::max(worst, m);
        bits = detail::bits_for_magnitude(worst);
    }
    return detail::with_working_precision(bits, [&](auto tag) {
        using Real = typename decltype(tag)::type;
        return main_theorem_numeric_impl<Real>(q, tol, detail::precision_bits_of<Real>());
    });
}

} // namespace amo
