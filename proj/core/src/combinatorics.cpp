#include "amo/combinatorics.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace amo {

std::string_view to_string(FamilyKind kind)
{
    switch (kind) {
    case FamilyKind::Linear:
        return "Linear";
    case FamilyKind::OffsetLinear:
        return "OffsetLinear";
    case FamilyKind::Cyclic:
        return "Cyclic";
    }
    return "?";
}

IndexSubset::IndexSubset(std::vector<int> elements, int ambient_n) : e_(std::move(elements)), n_(ambient_n)
{
    if (n_ < 0)
        throw std::invalid_argument("IndexSubset: negative ambient size");
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] < 1 || e_[i] > n_)
            throw std::invalid_argument("IndexSubset: element outside [1, n]");
        if (i > 0 && e_[i] <= e_[i - 1])
            throw std::invalid_argument("IndexSubset: elements must be strictly increasing");
    }
}

std::string IndexSubset::to_string() const
{
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < e_.size(); ++i)
        os << (i ? "," : "") << e_[i];
    os << '}';
    return os.str();
}

int max_pairs(FamilyKind kind, int n)
{
    if (n < 0)
        return -1;
    if (kind == FamilyKind::OffsetLinear)
        return n >= 1 ? (n - 1) / 2 : -1;
    return n / 2;
}

namespace {

struct Enumerator {
    FamilyKind kind;
    int n;
    int k;
    std::vector<int> starts;
    std::vector<IndexSubset> out;

    int first_start() const { return kind == FamilyKind::OffsetLinear ? 2 : 1; }

    int last_start() const
    {
        if (kind == FamilyKind::Cyclic)
            return n >= 2 ? n : 0;
        return n - 1;
    }

    void emit()
    {
        std::vector<bool> deleted(static_cast<std::size_t>(n) + 2, false);
        for (int s : starts) {
            deleted[static_cast<std::size_t>(s)] = true;
            deleted[static_cast<std::size_t>(s == n ? 1 : s + 1)] = true;
        }
        std::vector<int> keep;
        for (int i = first_start(); i <= n; ++i)
            if (!deleted[static_cast<std::size_t>(i)])
                keep.push_back(i);
        out.emplace_back(std::move(keep), n);
    }

    void walk(int min_start)
    {
        if (static_cast<int>(starts.size()) == k) {
            emit();
            return;
        }
        for (int s = min_start; s <= last_start(); ++s) {
            if (kind == FamilyKind::Cyclic && s == n) {
                // {n, 1} clashes with a pair starting at 1, and at 2k = n it
                // reproduces the empty set already reached without it.
                if (!starts.empty() && starts.front() == 1)
                    continue;
                if (2 * k == n)
                    continue;
                if (n == 2)
                    continue;
            }
            starts.push_back(s);
            walk(s + 2);
            starts.pop_back();
        }
    }
};

} // namespace

std::vector<IndexSubset> enum_family(FamilyKind kind, int n, int k)
{
    detail::check_family_range(kind, n, k);
    Enumerator e{kind, n, k, {}, {}};
    e.walk(e.first_start());
    return std::move(e.out);
}

std::vector<IndexSubset> family_join(const std::vector<IndexSubset>& sets, int n)
{
    std::vector<IndexSubset> out;
    out.reserve(sets.size());
    for (const auto& s : sets) {
        std::vector<int> e = s.elements();
        if (!e.empty() && e.back() >= n)
            throw std::domain_error("family_join: element >= n");
        e.push_back(n);
        out.emplace_back(std::move(e), n);
    }
    return out;
}

BigQ random_rational(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> dist(-99, 99);
    const int num = dist(rng);
    int den = 0;
    while (den == 0)
        den = dist(rng);
    return make_q(num, den);
}

std::vector<BigQ> random_rationals(std::size_t n, std::mt19937_64& rng)
{
    std::vector<BigQ> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        v.push_back(random_rational(rng));
    return v;
}

bool Prop3Report::passed() const
{
    return std::all_of(clauses.begin(), clauses.end(), [](const ClauseResult& c) { return c.erratum || c.holds; });
}

std::string Prop3Report::to_text() const
{
    std::ostringstream os;
    os << "prop3 n=" << n << " trials=" << trials << " seed=" << seed << '\n';
    for (const auto& c : clauses) {
        os << "  (" << c.clause << ") " << (c.holds ? "holds" : "fails");
        if (c.erratum)
            os << " [erratum]";
        if (!c.detail.empty())
            os << "  " << c.detail;
        os << '\n';
    }
    return os.str();
}

namespace {

std::set<std::vector<int>> as_element_set(const std::vector<IndexSubset>& f)
{
    std::set<std::vector<int>> s;
    for (const auto& x : f)
        s.insert(x.elements());
    return s;
}

BigQ alt(FamilyKind kind, const std::vector<BigQ>& a, int n)
{
    std::span<const BigQ> v(a.data(), static_cast<std::size_t>(n));
    return alternating_family_sum(kind, v, n, BigQ(1));
}

} // namespace

Prop3Report check_prop3(int n, int trials, std::uint64_t seed)
{
    if (n < 2)
        throw std::domain_error("check_prop3: n must be >= 2");
    Prop3Report rep;
    rep.n = n;
    rep.trials = trials;
    rep.seed = seed;

    {
        bool ok = true;
        for (int k = 1; 2 * k < n; ++k) {
            auto lhs = as_element_set(enum_family(FamilyKind::Linear, n, k));
            auto rhs = as_element_set(family_join(enum_family(FamilyKind::Linear, n - 1, k), n));
            auto tail = as_element_set(enum_family(FamilyKind::Linear, n - 2, k - 1));
            rhs.insert(tail.begin(), tail.end());
            ok = ok && lhs == rhs;
        }
        rep.clauses.push_back({"i", ok, false, "set recursion, 1 <= k < n/2"});
    }
    {
        bool ok = true;
        for (int k = 1; 2 * k <= n; ++k) {
            auto lhs = as_element_set(enum_family(FamilyKind::Cyclic, n, k));
            auto rhs = as_element_set(enum_family(FamilyKind::Linear, n, k));
            auto off = as_element_set(enum_family(FamilyKind::OffsetLinear, n - 1, k - 1));
            rhs.insert(off.begin(), off.end());
            ok = ok && lhs == rhs;
        }
        rep.clauses.push_back({"iii", ok, false, "cyclic decomposition, 1 <= k <= n/2"});
    }

    std::mt19937_64 rng(seed);
    bool ok_ii = true;
    bool ok_iv = true;
    bool ok_iv_printed = true;
    for (int t = 0; t < trials; ++t) {
        auto a = random_rationals(static_cast<std::size_t>(n), rng);
        const BigQ lin_n = alt(FamilyKind::Linear, a, n);
        const BigQ lin_n1 = alt(FamilyKind::Linear, a, n - 1);
        const BigQ lin_n2 = alt(FamilyKind::Linear, a, n - 2);
        ok_ii = ok_ii && lin_n == a[static_cast<std::size_t>(n - 1)] * lin_n1 - lin_n2;

        const BigQ cyc = alt(FamilyKind::Cyclic, a, n);
        const BigQ off = alt(FamilyKind::OffsetLinear, a, n - 1);
        if (n % 2 == 1) {
            ok_iv = ok_iv && cyc == lin_n - off;
        } else {
            const int sgn = (n / 2) % 2 == 0 ? 1 : -1;
            ok_iv = ok_iv && cyc == lin_n - sgn - off;
            ok_iv_printed = ok_iv_printed && cyc == lin_n + sgn - off;
        }
    }
    rep.clauses.push_back({"ii", ok_ii, false, "alternating-sum recurrence"});
    if (n % 2 == 1) {
        rep.clauses.push_back({"iv", ok_iv, false, "odd n"});
    } else {
        rep.clauses.push_back({"iv", ok_iv, false, "even n, with -(-1)^{n/2}"});
        rep.clauses.push_back({"iv-printed", ok_iv_printed, true, "even n, with +(-1)^{n/2} as printed"});
    }
    return rep;
}

} // namespace amo
