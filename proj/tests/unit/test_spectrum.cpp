#include "amo/errors.hpp"
#include "amo/spectrum.hpp"

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

using namespace amo;
using cd = std::complex<double>;

namespace {

constexpr double pi = std::numbers::pi;

double xi(int j, RotationNumber t) { return 2 * std::cos(2 * pi * j * t.p / t.q); }

std::vector<RotationNumber> rotations(int q)
{
    std::vector<RotationNumber> out;
    for (int p = 1; p < q; ++p)
        if (std::gcd(p, q) == 1)
            out.push_back({p, q});
    return out;
}

// Trace of the 2x2 transfer product at one x, in long double.
long double transfer_value(RotationNumber t, double lambda, long double x)
{
    long double m00 = 1, m01 = 0, m10 = 0, m11 = 1;
    for (int k = 1; k <= t.q; ++k) {
        const long double a = x - lambda * std::cos(2 * pi * k * t.p / t.q + pi / (2 * t.q));
        // M * [[a, -1], [1, 0]]
        const long double n00 = m00 * a + m01, n01 = -m00;
        const long double n10 = m10 * a + m11, n11 = -m10;
        m00 = n00, m01 = n01, m10 = n10, m11 = n11;
    }
    return m00 + m11;
}

Eigen::MatrixXcd to_eigen(const ComplexMatrix& m)
{
    Eigen::MatrixXcd e(m.size(), m.size());
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j)
            e(i, j) = m(i, j);
    return e;
}

cd random_unit(std::mt19937_64& rng)
{
    return std::polar(1.0, std::uniform_real_distribution<double>(0, 2 * pi)(rng));
}

} // namespace

TEST(Rotation, Validation)
{
    EXPECT_THROW(make_rotation(2, 4), std::domain_error);
    EXPECT_THROW(make_rotation(0, 3), std::domain_error);
    EXPECT_THROW(make_rotation(3, 3), std::domain_error);
    EXPECT_EQ(make_rotation(2, 5).q, 5);
    EXPECT_LT(RotationNumber({2, 3}), RotationNumber({1, 4}));
    EXPECT_THROW(validate({{1, 3}, -1.0}), std::domain_error);
    EXPECT_THROW(validate({{1, 3}, 1.0, cd(1.1, 0)}), std::domain_error);
}

TEST(BuildH, HalfIsSymmetric)
{
    ComplexMatrix h = build_h({{1, 2}, 2.0});
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_eigen(h));
    EXPECT_NEAR(es.eigenvalues()(0), -es.eigenvalues()(1), 1e-12);
}

TEST(BuildH, HermitianAndTraceless)
{
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 100; ++trial) {
        const int q = 2 + trial % 15;
        const int p = rotations(q)[static_cast<std::size_t>(trial) % rotations(q).size()].p;
        ModelParams mp{{p, q}, 0.5 + (trial % 7) * 0.4, random_unit(rng), random_unit(rng)};
        Eigen::MatrixXcd e = to_eigen(build_h(mp));
        EXPECT_LT((e - e.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_LT(std::abs(e.trace()), 1e-10);
    }
}

TEST(Charpoly, SmallMatrices)
{
    ComplexMatrix id(2);
    id(0, 0) = id(1, 1) = 1;
    auto c = charpoly(id).coeffs;
    ASSERT_EQ(c.size(), 3u);
    EXPECT_NEAR(std::abs(c[0] - 1.0), 0, 1e-14);
    EXPECT_NEAR(std::abs(c[1] + 2.0), 0, 1e-14);
    EXPECT_NEAR(std::abs(c[2] - 1.0), 0, 1e-14);

    ComplexMatrix d(3);
    d(0, 0) = 1, d(1, 1) = 2, d(2, 2) = 3;
    auto e = charpoly(d).coeffs;
    const double want[] = {-6, 11, -6, 1};
    for (int i = 0; i < 4; ++i)
        EXPECT_NEAR(std::abs(e[static_cast<std::size_t>(i)] - want[i]), 0, 1e-12);
    EXPECT_THROW(charpoly(ComplexMatrix(0)), std::domain_error);
}

TEST(Charpoly, RootsMatchEigensolver)
{
    std::mt19937_64 rng(2);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 20; ++trial) {
        ComplexMatrix m(6);
        for (int i = 0; i < 6; ++i) {
            m(i, i) = g(rng);
            for (int j = i + 1; j < 6; ++j) {
                m(i, j) = cd(g(rng), g(rng));
                m(j, i) = std::conj(m(i, j));
            }
        }
        ComplexPoly p = charpoly(m);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_eigen(m));
        for (int i = 0; i < 6; ++i) {
            const double lam = es.eigenvalues()(i);
            // Compare against the product over the other eigenvalues times the step.
            double dprod = 1;
            for (int j = 0; j < 6; ++j)
                if (j != i)
                    dprod *= lam - es.eigenvalues()(j);
            EXPECT_LT(std::abs(p.eval(lam)), 1e-8 * std::max(1.0, std::abs(dprod)));
        }
    }
}

TEST(Delta, TableRowsSmallQ)
{
    auto close = [](const RealPoly& a, std::vector<double> want) {
        EXPECT_LT(max_coeff_deviation(a, RealPoly(std::move(want))), 1e-12) << a.to_string();
    };
    close(delta_transfer({1, 2}, 2), {-4, 0, 1});
    close(delta_transfer({1, 4}, 2), {4, 0, -8, 0, 1});
    for (int p : {1, 2})
        close(delta_transfer({p, 5}, 2), {0, 5 * (3 - xi(1, {p, 5})), 0, -10, 0, 1});
    close(delta_continuant({1, 3}, 2), {0, -6, 0, 1});
    close(delta_continuant({1, 6}, 2), {-4, 0, 6 * (5 - xi(1, {1, 6})), 0, -12, 0, 1});
    EXPECT_THROW(delta_continuant({1, 2}, 2), std::domain_error);
    EXPECT_EQ(delta_transfer({1, 4}, 2).to_string(), "x^4 - 8x^2 + 4");
}

TEST(Delta, MatchesPointwiseTransferProduct)
{
    for (int q : {3, 7, 10, 13})
        for (RotationNumber t : rotations(q)) {
            RealPoly d = delta_transfer(t, 1.5);
            for (double x : {-2.7, -1.1, 0.0, 0.4, 1.9, 3.1}) {
                const double want = static_cast<double>(transfer_value(t, 1.5, x));
                EXPECT_NEAR(d.eval(x), want, 1e-9 * std::max(1.0, std::abs(want)));
                EXPECT_NEAR(delta_at(t, 1.5, x).first, want, 1e-9 * std::max(1.0, std::abs(want)));
            }
        }
}

TEST(Delta, RoutesAgree)
{
    for (double lambda : {1.0, 2.0, 3.0})
        for (int q = 3; q <= 40; ++q)
            for (RotationNumber t : rotations(q))
                ASSERT_LT(max_coeff_deviation(delta_transfer(t, lambda), delta_continuant(t, lambda)), 1e-9)
                    << t.p << "/" << q << " lambda " << lambda;
}

TEST(Delta, Parity)
{
    for (double lambda : {1.0, 2.0, 3.0})
        for (int q = 2; q <= 50; ++q)
            for (RotationNumber t : rotations(q)) {
                RealPoly d = delta_transfer(t, lambda);
                RealPoly m = d.negated_argument();
                std::vector<double> diff(d.coeffs().size());
                for (std::size_t i = 0; i < diff.size(); ++i)
                    diff[i] = m.coeff(static_cast<int>(i)) - (q % 2 == 0 ? 1 : -1) * d.coeff(static_cast<int>(i));
                const double scale = std::max(1.0, d.max_abs_coeff());
                for (double v : diff)
                    ASSERT_LT(std::abs(v) / scale, 1e-9) << t.p << "/" << q;
            }
}

namespace {

// Largest residual of a least-squares fit of the chosen coefficients of
// Delta_{p/q, 2} against (1, xi_theta, xi_2theta) over all p.
double affine_xi_residual(int q, const std::vector<int>& powers)
{
    auto rs = rotations(q);
    Eigen::MatrixXd a(static_cast<Eigen::Index>(rs.size()), 3);
    Eigen::MatrixXd b(static_cast<Eigen::Index>(rs.size()), static_cast<Eigen::Index>(powers.size()));
    for (std::size_t i = 0; i < rs.size(); ++i) {
        const auto r = static_cast<Eigen::Index>(i);
        a(r, 0) = 1, a(r, 1) = xi(1, rs[i]), a(r, 2) = xi(2, rs[i]);
        RealPoly d = delta_transfer(rs[i], 2.0);
        for (std::size_t j = 0; j < powers.size(); ++j)
            b(r, static_cast<Eigen::Index>(j)) = d.coeff(powers[j]);
    }
    Eigen::MatrixXd fit = a.completeOrthogonalDecomposition().solve(b);
    return (a * fit - b).cwiseAbs().maxCoeff();
}

} // namespace

TEST(Delta, LeadingCoefficientsAffineInXi)
{
    // x^(q-2k) for k <= 3, the coefficients the table writes in xi and xi_2.
    for (int q = 2; q <= 24; ++q) {
        std::vector<int> powers;
        for (int k = 0; k <= 3 && q - 2 * k >= 0; ++k)
            powers.push_back(q - 2 * k);
        EXPECT_LT(affine_xi_residual(q, powers), 1e-8) << "q=" << q;
    }
}

TEST(Delta, AllCoefficientsAffineInXiOnlyUpToTen)
{
    for (int q = 2; q <= 12; ++q) {
        std::vector<int> all(static_cast<std::size_t>(q + 1));
        std::iota(all.begin(), all.end(), 0);
        if (q == 11)
            EXPECT_GT(affine_xi_residual(q, all), 1.0) << "x and x^3 need xi_3, xi_4 at q = 11";
        else
            EXPECT_LT(affine_xi_residual(q, all), 1e-8) << "q=" << q;
    }
}

TEST(Coupling, ResolvedSignAndBound)
{
    CouplingReport r = resolve_coupling_sign({2, 7}, 1.3, 12, 5);
    EXPECT_EQ(r.sign, -1);
    EXPECT_LT(r.max_variance, 1e-16);
    EXPECT_LT(r.max_residual, 1e-8);
    EXPECT_GT(r.rejected_residual, 1e-3);
    EXPECT_THROW(resolve_coupling_sign({1, 3}, 1.0, 7), std::domain_error);

    std::mt19937_64 rng(4);
    for (int q = 2; q <= 20; ++q) {
        const double mu = 0.8;
        const double t = coupling_term(q, 2 * mu, random_unit(rng), random_unit(rng));
        EXPECT_LE(std::abs(t), 2 * (1 + std::pow(mu, q)) + 1e-12);
    }
}

TEST(Coupling, CharpolyMinusCouplingIsDelta)
{
    const int s = coupling_sign();
    std::mt19937_64 rng(9);
    for (int q = 2; q <= 12; ++q)
        for (RotationNumber t : rotations(q)) {
            RealPoly d = delta_transfer(t, 2.0);
            for (int sample = 0; sample < 10; ++sample) {
                ModelParams mp{t, 2.0, random_unit(rng), random_unit(rng)};
                ComplexPoly c = charpoly(build_h(mp));
                const double term = coupling_term(q, 2.0, mp.z1, mp.z2);
                for (int i = 0; i <= q; ++i) {
                    const double want = d.coeff(i) + (i == 0 ? s * term : 0.0);
                    EXPECT_NEAR(c.coeffs[static_cast<std::size_t>(i)].real(), want, 1e-8 * std::max(1.0, d.max_abs_coeff()));
                    EXPECT_NEAR(c.coeffs[static_cast<std::size_t>(i)].imag(), 0.0, 1e-8 * std::max(1.0, d.max_abs_coeff()));
                }
            }
        }
}

TEST(Coupling, OddConstantTermIsPureTorusTerm)
{
    std::mt19937_64 rng(12);
    ModelParams mp{{2, 5}, 1.0, random_unit(rng), random_unit(rng)};
    ComplexPoly c = charpoly(build_h(mp));
    EXPECT_NEAR(c.coeffs[0].real(), -coupling_term(5, 1.0, mp.z1, mp.z2), 1e-10);
}

TEST(ConstantTerm, EvenAndOdd)
{
    ConstantTermReport r4 = constant_term_check({1, 4}, 2.0);
    EXPECT_TRUE(r4.passed());
    EXPECT_NEAR(r4.delta0, 4.0, 1e-12);
    ConstantTermReport r6 = constant_term_check({1, 6}, 2.0);
    EXPECT_TRUE(r6.passed());
    EXPECT_NEAR(r6.delta0, -4.0, 1e-12);
    ConstantTermReport r5 = constant_term_check({3, 5}, 1.5);
    EXPECT_TRUE(r5.passed());
    EXPECT_NEAR(r5.delta0, 0.0, 1e-12);
    // The phaseless diagonal differs by -2 mu^q at x = 0.
    ConstantTermReport r6b = constant_term_check({1, 6}, 1.0);
    EXPECT_NEAR(r6b.phaseless_delta0 - r6b.delta0, -2 * std::pow(0.5, 6), 1e-12);
}

TEST(Coefficients, TableExamples)
{
    CoeffReport k1 = coeff_check({3, 8}, 2.0, 1);
    EXPECT_NEAR(k1.computed, -16, 1e-12);
    EXPECT_TRUE(k1.passed);
    CoeffReport k2 = coeff_check({2, 7}, 2.0, 2);
    EXPECT_NEAR(k2.computed, 7 * (7 - xi(1, {2, 7})), 1e-9);
    EXPECT_TRUE(k2.passed);
    EXPECT_THROW(coeff_check({1, 4}, 2.0, 2), std::domain_error);
}

TEST(Coefficients, FirstCoefficientIsMinusQOnePlusMuSquared)
{
    // e_2 of the shifted diagonal gives -q mu^2; the cyclic adjacent pairs give -q.
    for (double mu : {0.5, 1.0, 1.5})
        for (int q = 3; q <= 40; ++q) {
            CoeffReport r = coeff_check({1, q}, 2 * mu, 1);
            EXPECT_NEAR(r.computed, -q * (1 + mu * mu), 1e-9 * q * (1 + mu * mu)) << "q=" << q;
            EXPECT_DOUBLE_EQ(r.formula, -q * (1 + std::pow(mu, q)));
        }
}

TEST(Coefficients, SecondCoefficientMatchesTable)
{
    for (double mu : {0.5, 1.0, 1.5})
        for (int q = 5; q <= 40; ++q)
            for (RotationNumber t : rotations(q)) {
                CoeffReport r = coeff_check(t, 2 * mu, 2);
                EXPECT_TRUE(r.passed) << t.p << "/" << q << " mu " << mu << " rel " << r.rel_err;
            }
}

TEST(Coefficients, ThirdIsReportedOnly)
{
    CoeffReport r = coeff_check({1, 9}, 1.0, 3);
    EXPECT_TRUE(r.conjectural);
    EXPECT_EQ(r.terms.size(), 4u);
}

TEST(Bands, HalfAtCritical)
{
    BandList b = bands({1, 2}, 2.0);
    ASSERT_EQ(b.intervals.size(), 2u);
    EXPECT_NEAR(b.intervals[0].first, -2 * std::sqrt(2.0), 1e-10);
    EXPECT_NEAR(b.intervals[0].second, 0.0, 1e-7);
    EXPECT_NEAR(b.intervals[1].first, 0.0, 1e-7);
    EXPECT_NEAR(b.intervals[1].second, 2 * std::sqrt(2.0), 1e-10);
    EXPECT_EQ(b.intervals[0].second, b.intervals[1].first);
}

TEST(Bands, EdgesSolveTheDiscriminantEquation)
{
    for (RotationNumber t : {RotationNumber{1, 3}, RotationNumber{2, 7}, RotationNumber{3, 10}}) {
        BandList b = bands(t, 2.0);
        ASSERT_EQ(b.intervals.size(), static_cast<std::size_t>(t.q));
        const double c = 2 * (1 + 1);
        for (auto [lo, hi] : b.intervals) {
            EXPECT_LE(lo, hi);
            EXPECT_NEAR(std::abs(delta_at(t, 2.0, lo).first), c, 1e-7);
            EXPECT_NEAR(std::abs(delta_at(t, 2.0, hi).first), c, 1e-7);
            // Inside a band |Delta| <= c.
            EXPECT_LE(std::abs(delta_at(t, 2.0, 0.5 * (lo + hi)).first), c + 1e-9);
        }
    }
}

TEST(Bands, SymmetricBoundedAndCounted)
{
    for (double lambda : {1.0, 2.0, 3.0})
        for (int q = 2; q <= 16; ++q)
            for (RotationNumber t : rotations(q)) {
                BandList b = bands(t, lambda);
                ASSERT_EQ(b.intervals.size(), static_cast<std::size_t>(q));
                for (std::size_t i = 0; i < b.intervals.size(); ++i) {
                    const auto [lo, hi] = b.intervals[i];
                    const auto [mlo, mhi] = b.intervals[b.intervals.size() - 1 - i];
                    EXPECT_NEAR(lo, -mhi, 1e-8);
                    EXPECT_NEAR(hi, -mlo, 1e-8);
                    EXPECT_GE(lo, -(2 + lambda) - 1e-12);
                    EXPECT_LE(hi, 2 + lambda + 1e-12);
                    if (i > 0)
                        EXPECT_LE(b.intervals[i - 1].second, lo);
                }
            }
}

TEST(Bands, EdgesAreEigenvaluesOfPeriodicAndAntiperiodicH)
{
    const RotationNumber t{3, 8};
    BandList b = bands(t, 1.0);
    std::vector<double> edges;
    for (auto [lo, hi] : b.intervals)
        edges.insert(edges.end(), {lo, hi});
    for (cd z : {cd(1, 0), std::polar(1.0, pi / 8)}) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_eigen(build_h({t, 1.0, z, z})));
        for (int i = 0; i < 8; ++i) {
            double best = 1e9;
            for (double e : edges)
                best = std::min(best, std::abs(e - es.eigenvalues()(i)));
            EXPECT_LT(best, 1e-9);
        }
    }
}

TEST(Butterfly, RowsOrderAndDeterminism)
{
    ButterflyConfig cfg;
    cfg.q_max = 2;
    auto one = butterfly(cfg);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].intervals.size(), 2u);

    cfg.q_max = 14;
    cfg.jobs = 1;
    auto a = butterfly(cfg);
    cfg.jobs = 4;
    auto b = butterfly(cfg);
    std::size_t expected = 0;
    for (int q = 2; q <= 14; ++q)
        expected += rotations(q).size();
    ASSERT_EQ(a.size(), expected);
    for (std::size_t i = 1; i < a.size(); ++i)
        EXPECT_LT(a[i - 1].theta, a[i].theta);

    std::ostringstream ca, cb, sa, sb, ja, jb;
    write_csv(ca, a);
    write_csv(cb, b);
    write_svg(sa, a, 2.0);
    write_svg(sb, b, 2.0);
    write_json(ja, a);
    write_json(jb, b);
    EXPECT_EQ(ca.str(), cb.str());
    EXPECT_EQ(sa.str(), sb.str());
    EXPECT_EQ(ja.str(), jb.str());
    EXPECT_EQ(ca.str().substr(0, ca.str().find('\n')), "p,q,theta,band_index,lower,upper");
    EXPECT_NE(sa.str().find("viewBox=\"0 0 1000 1000\""), std::string::npos);
}

TEST(Table, CorrectedRowsMatchTransfer)
{
    ASSERT_EQ(printed_delta_table().size(), 8u);
    for (const auto& row : printed_delta_table()) {
        DeltaTableRow fixed = corrected_delta_row(row.q);
        for (RotationNumber t : rotations(row.q)) {
            RealPoly d = delta_transfer(t, 2.0);
            EXPECT_LT(max_coeff_deviation(d, table_row_poly(fixed, t.p)), 1e-9) << row.text;
            const double printed = max_coeff_deviation(d, table_row_poly(row, t.p));
            if (row.q == 9)
                EXPECT_GT(printed, 0.1);
            else
                EXPECT_LT(printed, 1e-9) << row.text;
        }
    }
    ASSERT_EQ(delta_table_errata().size(), 1u);
    EXPECT_EQ(delta_table_errata()[0].q, 9);
    EXPECT_EQ(delta_table_errata()[0].power, 3);
}
