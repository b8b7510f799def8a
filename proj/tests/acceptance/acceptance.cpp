// One line per acceptance criterion: "criterion N PASS|FAIL  title  [detail]".
// Criteria are evaluated literally; known misprints are reported in the
// detail, never corrected away.

#include "amo/combinatorics.hpp"
#include "amo/continuants.hpp"
#include "amo/identities.hpp"
#include "amo/spectrum.hpp"
#include "family_oracle.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

using namespace amo;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

std::vector<RotationNumber> rotations(int q)
{
    std::vector<RotationNumber> out;
    for (int p = 1; p < q; ++p)
        if (std::gcd(p, q) == 1)
            out.push_back({p, q});
    return out;
}

double max_abs_diff(const RealPoly& a, const RealPoly& b)
{
    double m = 0;
    for (int i = 0; i <= std::max(a.degree(), b.degree()); ++i)
        m = std::max(m, std::abs(a.coeff(i) - b.coeff(i)));
    return m;
}

const std::vector<BigQ> mus{BigQ(1, 2), BigQ(1), BigQ(3, 2)};

Outcome delta_table()
{
    const auto t0 = Clock::now();
    double worst = 0, worst_corrected = 0;
    std::string where;
    for (const DeltaTableRow& row : printed_delta_table()) {
        const DeltaTableRow fixed = corrected_delta_row(row.q);
        for (RotationNumber t : rotations(row.q)) {
            const RealPoly d = delta_transfer(t, 2.0);
            const double e = max_abs_diff(d, table_row_poly(row, t.p));
            if (e > worst) {
                worst = e;
                where = std::to_string(t.p) + "/" + std::to_string(t.q);
            }
            worst_corrected = std::max(worst_corrected, max_abs_diff(d, table_row_poly(fixed, t.p)));
        }
    }
    const double secs = seconds_since(t0);
    Outcome o;
    o.pass = worst < 1e-9 && secs < 1.0;
    o.detail = "max coefficient error " + num(worst) + (where.empty() ? "" : " at theta=" + where) + ", " + num(secs) + " s";
    if (!o.pass)
        o.detail += "; printed q=9 x^3 entry -9(31/3 - 6xi + 2xi_2) is off by 93, with -9(62/3 - 6xi + 2xi_2) every row matches to " +
                    num(worst_corrected);
    return o;
}

Outcome corollary_values()
{
    const auto t0 = Clock::now();
    Outcome o{true, {}};
    for (int q = 3; q <= 32; ++q)
        for (const BigQ& mu : mus) {
            const BigQ muq = pow(mu, static_cast<unsigned long>(q));
            const BigQ want = q % 2 == 1 ? BigQ(2) * (1 + muq) : (q % 4 == 0 ? BigQ(0) : BigQ(-4) * (1 + muq));
            try {
                if (periodic_continuant_cos_exact(q, mu) != want) {
                    o.pass = false;
                    o.detail = "q=" + std::to_string(q) + " mu=" + mu.get_str() + " returned a different constant; ";
                }
            } catch (const std::exception& e) {
                o.pass = false;
                o.detail = std::string(e.what()) + "; ";
            }
        }
    const double secs = seconds_since(t0);
    o.pass = o.pass && secs < 30.0;
    o.detail += "3 <= q <= 32, mu in {1/2, 1, 3/2}, exact mod Phi_q, " + num(secs) + " s";
    return o;
}

Outcome main_theorem()
{
    const auto t0 = Clock::now();
    bool exact = true;
    int instances = 0;
    for (int q = 3; q <= 24; ++q)
        for (int k = 1; 2 * k < q; ++k, ++instances)
            if (!main_theorem_exact(q, k)) {
                exact = false;
                std::cerr << "main theorem: Phi_" << q << " does not divide the k=" << k << " sum\n";
            }
    bool numeric = true;
    double worst = 0;
    for (int q = 3; q <= 60; ++q) {
        MainTheoremNumeric r = main_theorem_numeric(q, 1e-8);
        numeric = numeric && r.passed;
        worst = std::max(worst, r.worst_ratio);
    }
    const double secs = seconds_since(t0);
    return {exact && numeric && secs < 60.0, std::to_string(instances) + " exact instances q <= 24 " + (exact ? "divisible" : "NOT divisible") +
                                                 "; numeric q <= 60 worst |sum|/|S~| " + num(worst) + ", " + num(secs) + " s"};
}

Outcome prop5()
{
    bool ok = true;
    for (int q = 2; q <= 50; ++q) {
        // Constant term of 2(T_q(x/2) - 1) with sign (-1)^q, recomputed here.
        const BigZ c0 = chebyshev_T(q).coeff(0);
        const BigZ want = (q % 2 == 0 ? 1 : -1) * 2 * (c0 - 1);
        const int split = q % 2 == 1 ? 2 : (q % 4 == 0 ? 0 : -4);
        ok = ok && diag_product_exact(q) == split && want == split;
    }
    return {ok, "2 <= q <= 50, 0 / 2 / -4 by q mod 4"};
}

Outcome identity_grid()
{
    const auto t0 = Clock::now();
    IdentityGridConfig cfg;
    cfg.jobs = 0;
    const auto reports = run_identity_grid(cfg);
    std::map<std::string, std::pair<int, int>> counts;
    bool ok = true;
    for (const auto& r : reports) {
        if (r.name == "thm9")
            continue;
        auto& c = counts[r.name];
        ++c.second;
        if (r.verdict == Verdict::ExactPass)
            ++c.first;
        else {
            ok = false;
            std::cerr << to_text(r) << '\n';
        }
    }
    const double secs = seconds_since(t0);
    std::string detail;
    for (const auto& [name, c] : counts)
        detail += name + " " + std::to_string(c.first) + "/" + std::to_string(c.second) + ", ";
    return {ok && secs < 300.0, detail + num(secs) + " s"};
}

Outcome coupling()
{
    const auto t0 = Clock::now();
    Outcome o;
    CouplingReport rep;
    try {
        rep = resolve_coupling_sign_global(32, 20, 1);
    } catch (const std::exception& e) {
        return {false, e.what()};
    }
    bool ok = rep.max_variance < 1e-16 && rep.max_residual < 1e-8 && rep.sign == coupling_sign();
    int checked = 0, failed = 0;
    for (int q = 2; q <= 32; ++q)
        for (RotationNumber t : rotations(q))
            for (const BigQ& mu : mus) {
                const ConstantTermReport c = constant_term_check(t, 2 * to_double(mu), 8, 1, 1e-9);
                ++checked;
                if (!c.passed() || c.sign != rep.sign) {
                    ++failed;
                    std::cerr << "constant term " << t.p << "/" << t.q << " mu=" << mu.get_str() << " delta0 rel err "
                              << c.delta0_rel_err << " coefficient rel err " << c.coefficient_rel_err << '\n';
                }
            }
    ok = ok && failed == 0;
    return {ok, "sign " + std::to_string(rep.sign) + ", variance " + num(rep.max_variance) + ", residual " + num(rep.max_residual) +
                    ", other sign " + num(rep.rejected_residual) + " (q <= 32, 20 samples each); constant term " +
                    std::to_string(checked - failed) + "/" + std::to_string(checked) + " pass, " + num(seconds_since(t0)) + " s"};
}

Outcome coefficients()
{
    int k1_fail = 0, k2_fail = 0, total = 0;
    double k1_worst = 0, k2_worst = 0, k3_worst = 0, k1_alt = 0;
    for (const BigQ& mu_q : mus) {
        const double mu = to_double(mu_q);
        for (int q = 3; q <= 40; ++q)
            for (RotationNumber t : rotations(q)) {
                ++total;
                const CoeffReport k1 = coeff_check(t, 2 * mu, 1);
                k1_worst = std::max(k1_worst, k1.rel_err);
                k1_fail += !k1.passed;
                k1_alt = std::max(k1_alt, std::abs(k1.computed + q * (1 + mu * mu)) / (q * (1 + mu * mu)));
                if (q > 4) {
                    const CoeffReport k2 = coeff_check(t, 2 * mu, 2);
                    k2_worst = std::max(k2_worst, k2.rel_err);
                    k2_fail += !k2.passed;
                }
                if (q > 6)
                    k3_worst = std::max(k3_worst, coeff_check(t, 2 * mu, 3).rel_err);
            }
    }
    Outcome o;
    o.pass = k1_fail == 0 && k2_fail == 0;
    o.detail = "k=1 against -q(1+mu^q): " + std::to_string(total - k1_fail) + "/" + std::to_string(total) + " within 1e-9 (worst " +
               num(k1_worst) + "); k=2: worst " + num(k2_worst) + ", " + std::to_string(k2_fail) + " failures; k=3 conjecture residual " +
               num(k3_worst) + " (report only)";
    if (k1_fail)
        o.detail += "; the coefficient is -q(1+mu^2) to " + num(k1_alt) + ", equal to the printed form only at mu=1";
    return o;
}

Outcome thm9()
{
    int total = 0, passed = 0;
    for (int q = 3; q <= 16; ++q)
        for (int k = 1; 2 * k < q; ++k) {
            ++total;
            IdentityReport r = check_thm9(q, k, 25, 1);
            if (r.passed())
                ++passed;
            else
                std::cerr << to_text(r) << '\n';
        }
    return {passed == total, std::to_string(passed) + "/" + std::to_string(total) + " (q, k) pairs, 25 seeded trials each"};
}

Outcome butterfly_sweep()
{
    ButterflyConfig cfg;
    cfg.q_max = 50;
    cfg.lambda = 2.0;
    cfg.jobs = 0;
    const auto t0 = Clock::now();
    const auto rows = butterfly(cfg);
    const double secs = seconds_since(t0);

    bool ok = true;
    int bad_rows = 0;
    double worst_sym = 0;
    for (const BandList& r : rows) {
        const std::size_t n = r.intervals.size();
        bool row_ok = n == static_cast<std::size_t>(r.theta.q) && !r.flagged();
        for (std::size_t i = 0; i < n; ++i) {
            const auto [lo, hi] = r.intervals[i];
            const auto [mlo, mhi] = r.intervals[n - 1 - i];
            worst_sym = std::max({worst_sym, std::abs(lo + mhi), std::abs(hi + mlo)});
            row_ok = row_ok && lo >= -4.0 && hi <= 4.0 && lo <= hi;
        }
        bad_rows += !row_ok;
    }
    ok = bad_rows == 0 && worst_sym < 1e-8;

    std::ostringstream csv1, svg1, csv2, svg2;
    write_csv(csv1, rows);
    write_svg(svg1, rows, 2.0);
    cfg.jobs = 1;
    const auto again = butterfly(cfg);
    write_csv(csv2, again);
    write_svg(svg2, again, 2.0);
    const bool same = csv1.str() == csv2.str() && svg1.str() == svg2.str();

    const unsigned cores = std::max(1u, std::thread::hardware_concurrency());
    return {ok && same && secs < 60.0,
            std::to_string(rows.size()) + " rows, " + std::to_string(bad_rows) + " bad, symmetry " + num(worst_sym) + ", sweep " +
                num(secs) + " s on " + std::to_string(cores) + " core(s), rerun bytes " + (same ? "identical" : "DIFFER")};
}

Outcome oracle_equivalence()
{
    std::mt19937_64 rng(1);
    int mismatches = 0;
    for (int trial = 0; trial < 100; ++trial)
        for (int n = 1; n <= 12; ++n) {
            const auto a = random_rationals(static_cast<std::size_t>(n), rng);
            const std::span<const BigQ> v(a);
            mismatches += continuant_via_families(v, BigQ(1)) != continuant(v, BigQ(1));
            if (n >= 3)
                mismatches += periodic_via_families(v, BigQ(1)) != periodic_continuant(v, BigQ(1));
        }
    int family_mismatch = 0, families = 0;
    for (FamilyKind kind : {FamilyKind::Linear, FamilyKind::OffsetLinear, FamilyKind::Cyclic})
        for (int n = 1; n <= 14; ++n)
            for (int k = 0; k <= max_pairs(kind, n); ++k, ++families) {
                const auto fam = enum_family(kind, n, k);
                const auto s = oracle::as_sets(fam);
                family_mismatch += s.size() != fam.size() || s != oracle::brute_force(kind, n, k);
            }
    return {mismatches == 0 && family_mismatch == 0,
            "100 trials n <= 12: " + std::to_string(mismatches) + " expansion mismatches; " + std::to_string(families) +
                " families n <= 14: " + std::to_string(family_mismatch) + " differ from the 2^n filter"};
}

struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
};

const std::vector<Criterion> criteria{
    {1, "Delta table reproduction", delta_table},
    {2, "Corollary values, exact", corollary_values},
    {3, "Main theorem", main_theorem},
    {4, "Prop 5 case split", prop5},
    {5, "Identity grid, exact", identity_grid},
    {6, "Coupling sign and constant term", coupling},
    {7, "Coefficient formulas", coefficients},
    {8, "Theorem 9 bridge", thm9},
    {9, "Butterfly at desk scale", butterfly_sweep},
    {10, "Oracle equivalence", oracle_equivalence},
};

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"acceptance criteria"};
    int which = 0;
    app.add_option("--criterion", which, "run one criterion (default: all)")->check(CLI::Range(1, 10));
    CLI11_PARSE(app, argc, argv);

    bool all_pass = true;
    for (const Criterion& c : criteria) {
        if (which != 0 && c.id != which)
            continue;
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        all_pass = all_pass && o.pass;
        std::cout << "criterion " << c.id << (c.id < 10 ? "  " : " ") << (o.pass ? "PASS" : "FAIL") << "  " << c.title << "  [" << o.detail
                  << "]" << std::endl;
    }
    return all_pass ? 0 : 1;
}
