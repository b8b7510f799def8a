#pragma once

#include "amo/bigq.hpp"

#include <compare>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace amo {

// Linear: S_{n,k}, pairs {i, i+1} inside {1..n}.
// OffsetLinear: S'_{n,k}, pairs inside {2..n}.
// Cyclic: S~_{n,k}, pairs inside {1..n} plus the wrap-around pair {n, 1}.
enum class FamilyKind { Linear, OffsetLinear, Cyclic };

std::string_view to_string(FamilyKind kind);

class IndexSubset {
public:
    IndexSubset() = default;
    // Throws std::invalid_argument unless elements are strictly increasing in [1, n].
    IndexSubset(std::vector<int> elements, int ambient_n);

    const std::vector<int>& elements() const { return e_; }
    int ambient_n() const { return n_; }
    std::size_t size() const { return e_.size(); }
    bool empty() const { return e_.empty(); }

    friend bool operator==(const IndexSubset&, const IndexSubset&) = default;
    friend auto operator<=>(const IndexSubset&, const IndexSubset&) = default;

    std::string to_string() const;

private:
    std::vector<int> e_;
    int n_ = 0;
};

// Largest admissible k for the family over n.
int max_pairs(FamilyKind kind, int n);

// Members in lexicographic order of the deleted-pair start indices (the
// wrap-around pair {n, 1} has start n). Throws std::domain_error for k out of range.
std::vector<IndexSubset> enum_family(FamilyKind kind, int n, int k);

// Each set unioned with {n}. Throws std::domain_error if some element is >= n.
std::vector<IndexSubset> family_join(const std::vector<IndexSubset>& sets, int n);

// values[i - 1] holds a_i.
template <class T>
T subset_product(std::span<const T> values, const IndexSubset& s, const T& one)
{
    T r = one;
    for (int i : s.elements()) {
        if (i < 1 || static_cast<std::size_t>(i) > values.size())
            throw std::out_of_range("subset_product: index outside the value list");
        r = r * values[static_cast<std::size_t>(i - 1)];
    }
    return r;
}

namespace detail {

// Visits every way of keeping/deleting positions first..last (1-based) with
// exactly `pairs` adjacent pairs deleted; emits the product of kept values.
template <class T, class Emit>
void linear_walk(std::span<const T> a, int pos, int last, int pairs, const T& prefix, Emit& emit)
{
    const int remaining = last - pos + 1;
    if (remaining < 2 * pairs)
        return;
    if (remaining <= 0) {
        emit(prefix);
        return;
    }
    if (remaining - 1 >= 2 * pairs)
        linear_walk(a, pos + 1, last, pairs, T(prefix * a[static_cast<std::size_t>(pos - 1)]), emit);
    if (pairs > 0)
        linear_walk(a, pos + 2, last, pairs - 1, prefix, emit);
}

inline void check_family_range(FamilyKind kind, int n, int k)
{
    if (n < 0 || k < 0 || k > max_pairs(kind, n))
        throw std::domain_error("family parameter k out of range");
}

} // namespace detail

// Sum of a_I over the family, with n = values.size(). Walks the family without
// materialising it, sharing prefix products.
template <class T>
T family_sum(FamilyKind kind, std::span<const T> values, int k, const T& one)
{
    const int n = static_cast<int>(values.size());
    detail::check_family_range(kind, n, k);
    T total = one - one;
    auto emit = [&total](const T& v) { total = total + v; };
    switch (kind) {
    case FamilyKind::Linear:
        detail::linear_walk(values, 1, n, k, one, emit);
        break;
    case FamilyKind::OffsetLinear:
        detail::linear_walk(values, 2, n, k, one, emit);
        break;
    case FamilyKind::Cyclic:
        detail::linear_walk(values, 1, n, k, one, emit);
        // Members that delete {n, 1}; at 2k = n they repeat the empty set.
        if (k >= 1 && n >= 3 && 2 * k != n)
            detail::linear_walk(values, 2, n - 1, k - 1, one, emit);
        break;
    }
    return total;
}

// sum_k (-1)^k sum_{I in family(n, k)} a_I over every admissible k.
template <class T>
T alternating_family_sum(FamilyKind kind, std::span<const T> values, int n, const T& one)
{
    if (static_cast<int>(values.size()) != n)
        throw std::invalid_argument("alternating_family_sum: expected n values");
    T total = one - one;
    for (int k = 0; k <= max_pairs(kind, n); ++k) {
        T s = family_sum(kind, values, k, one);
        total = (k % 2 == 0) ? T(total + s) : T(total - s);
    }
    return total;
}

// Family sums for every k at once by the recurrence
// e(S_{m,k}) = a_m e(S_{m-1,k}) + e(S_{m-2,k-1}).
template <class T>
std::vector<T> linear_family_sums(std::span<const T> a, const T& one)
{
    const T zero = one - one;
    const std::size_t n = a.size();
    std::vector<T> prev2{one};                        // m - 2
    std::vector<T> prev1{one};                        // m - 1
    if (n == 0)
        return prev1;
    prev1 = {a[0]};
    for (std::size_t m = 2; m <= n; ++m) {
        std::vector<T> cur(m / 2 + 1, zero);
        for (std::size_t k = 0; k < cur.size(); ++k) {
            if (k < prev1.size())
                cur[k] = a[m - 1] * prev1[k];
            if (k >= 1 && k - 1 < prev2.size())
                cur[k] = cur[k] + prev2[k - 1];
        }
        prev2 = std::move(prev1);
        prev1 = std::move(cur);
    }
    return prev1;
}

template <class T>
std::vector<T> family_sums(FamilyKind kind, std::span<const T> a, const T& one)
{
    const std::size_t n = a.size();
    switch (kind) {
    case FamilyKind::Linear:
        return linear_family_sums(a, one);
    case FamilyKind::OffsetLinear:
        if (n == 0)
            throw std::domain_error("family_sums: OffsetLinear needs n >= 1");
        return linear_family_sums(a.subspan(1), one);
    case FamilyKind::Cyclic:
        break;
    }
    std::vector<T> lin = linear_family_sums(a, one);
    if (n < 3)
        return lin;
    std::vector<T> inner = linear_family_sums(a.subspan(1, n - 2), one);
    for (std::size_t k = 1; k < lin.size(); ++k) {
        if (2 * k == n)
            lin[k] = one;
        else
            lin[k] = lin[k] + inner[k - 1];
    }
    return lin;
}

BigQ random_rational(std::mt19937_64& rng);
std::vector<BigQ> random_rationals(std::size_t n, std::mt19937_64& rng);

struct ClauseResult {
    std::string clause;
    bool holds = false;
    // A clause that reproduces a known misprint; reported, not counted.
    bool erratum = false;
    std::string detail;
};

struct Prop3Report {
    int n = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    std::vector<ClauseResult> clauses;

    bool passed() const;
    std::string to_text() const;
};

// Checks the set recursion, the alternating-sum recurrence, the cyclic
// decomposition and the cyclic alternating-sum relation for one n.
Prop3Report check_prop3(int n, int trials, std::uint64_t seed = 1);

} // namespace amo
