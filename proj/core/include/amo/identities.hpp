#pragma once

#include "amo/rational_function.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace amo {

// sum over lo <= i_1, i_{j+1} >= i_j + gap, i_k <= hi of
// prod_j [(x^-i_j + x^i_j)(x^-(i_j+1) + x^(i_j+1))]^-1
struct NestedSumSpec {
    int k = 0;
    int lo = 1;
    int hi = 0;
    int gap = 2;
};

// k = 0 gives 1; an empty index range with k >= 1 gives 0.
RationalFunction nested_sum(const NestedSumSpec& spec);

// Every nested sum with a fixed lower end, k <= k_max and hi <= hi_max, built
// once by P[j][h] = P[j][h-1] + w(h) P[j-1][h-gap].
class NestedSumTable {
public:
    NestedSumTable(int lo, int hi_max, int k_max, int gap = 2);

    // k < 0 gives 0 and k = 0 gives 1. Throws std::out_of_range beyond the table.
    RationalFunction get(int k, int hi) const;

    int lo() const { return lo_; }
    int hi_max() const { return hi_max_; }
    int k_max() const { return k_max_; }
    bool covers(int k, int hi) const { return k <= k_max_ && hi <= hi_max_; }

private:
    int lo_, hi_max_, k_max_, gap_;
    std::vector<std::vector<RationalFunction>> p_;
};

// Shared nested sums for a (k, q) grid: lower ends 1 and 3.
struct IdentityTables {
    NestedSumTable from1;
    NestedSumTable from3;
    IdentityTables(int k_max, int q_max);
};

enum class Verdict { ExactPass, ExactFail, OutOfStatedRange };

std::string to_string(Verdict v);

struct IdentityReport {
    std::string name;
    int k = 0;
    int q = 0;
    Verdict verdict = Verdict::OutOfStatedRange;
    // Canonical LHS - RHS, present on ExactFail.
    std::optional<RationalFunction> witness;
    std::vector<std::string> resolved_typos;
    std::optional<std::uint64_t> seed;
    std::optional<int> trials;
    // Verified by random evaluation rather than a canonical form.
    bool probabilistic = false;
    // Both displayed sides evaluated directly in double precision at x = 1.7.
    bool numeric_checked = false;
    bool numeric_ok = true;
    double numeric_rel_err = 0.0;
    std::string note;

    bool passed() const { return verdict == Verdict::ExactPass && numeric_ok; }
};

IdentityReport check_lemma9_i(int q);
IdentityReport check_lemma9_ii(int k);
IdentityReport check_cor11(int q);
// The telescoped form of sum_{i=3}^{q-2} used in the proof of check_cor11.
IdentityReport check_cor11_intermediate(int q);
IdentityReport check_thm12(int k, int q, const IdentityTables* tables = nullptr);
IdentityReport check_thm13(int k, int q, const IdentityTables* tables = nullptr);
IdentityReport check_cor14(int k, int q, const IdentityTables* tables = nullptr);
// S_{k,q} = S_{k,q-1} + [t_q t_{q+1}]^-1 S_{k-1,q-2}, for both sides of the
// summation identity; requires q >= 2k.
IdentityReport check_thm12_recurrence(int k, int q, const IdentityTables* tables = nullptr);
// S_{k,q} = S_{k,q-1} t_{q-1} / t_{q+1} + S_{k-1,q-2} / (t_q t_{q+1}), both sides.
IdentityReport check_thm13_recurrence(int k, int q, const IdentityTables* tables = nullptr);
// Random-rational evaluation of the complement-sum bridge; 1 <= k < q/2.
IdentityReport check_thm9(int q, int k, int trials = 25, std::uint64_t seed = 1);

struct Case1Report {
    int q = 0;
    bool applicable = false;
    bool passed = false;
    double max_numerator = 0.0;
    double min_denominator = 0.0;
};

// At x = exp(2 pi i p / q), q not divisible by 4: the factor x^-q - x^q
// vanishes while every denominator factor of the Cor. 14 right side does not.
Case1Report check_case1_roots(int q);

std::string to_json(const IdentityReport& r);
std::string to_json(const std::vector<IdentityReport>& rs);
std::string to_text(const IdentityReport& r);

struct IdentityGridConfig {
    int lemma9_i_q_max = 40;
    int lemma9_ii_k_max = 10;
    int cor11_q_max = 40;
    int k_max = 5;
    int q_max = 30;
    int thm9_q_max = 16;
    int thm9_trials = 25;
    std::uint64_t seed = 1;
    unsigned jobs = 1;
};

// Runs every checker over the configured grid; ordered by (name, k, q).
std::vector<IdentityReport> run_identity_grid(const IdentityGridConfig& cfg);

} // namespace amo
