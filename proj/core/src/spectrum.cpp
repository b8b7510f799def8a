#include "amo/spectrum.hpp"
#include "amo/continuants.hpp"
#include "amo/errors.hpp"

#include "spectral_kernels.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>

namespace amo {

RotationNumber make_rotation(int p, int q)
{
    if (q < 2 || p < 1 || p >= q || std::gcd(p, q) != 1)
        throw std::domain_error("rotation number must be p/q with 1 <= p < q and gcd(p, q) = 1");
    return {p, q};
}

void validate(const ModelParams& params)
{
    make_rotation(params.theta.p, params.theta.q);
    if (!(params.lambda > 0))
        throw std::domain_error("lambda must be positive");
    if (std::fabs(std::abs(params.z1) - 1.0) > 1e-12 || std::fabs(std::abs(params.z2) - 1.0) > 1e-12)
        throw std::domain_error("z1 and z2 must have unit modulus");
}

RealPoly::RealPoly(std::vector<double> coeffs) : c_(std::move(coeffs))
{
    while (!c_.empty() && c_.back() == 0.0)
        c_.pop_back();
}

double RealPoly::max_abs_coeff() const
{
    double m = 0.0;
    for (double v : c_)
        m = std::max(m, std::fabs(v));
    return m;
}

double RealPoly::eval(double x) const
{
    double r = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * x + *it;
    return r;
}

RealPoly RealPoly::negated_argument() const
{
    std::vector<double> c = c_;
    for (std::size_t i = 1; i < c.size(); i += 2)
        c[i] = -c[i];
    return RealPoly(std::move(c));
}

std::string RealPoly::to_string(int digits) const
{
    const double cut = 1e-9 * std::max(1.0, max_abs_coeff());
    std::string out;
    char buf[64];
    for (int i = degree(); i >= 0; --i) {
        double v = c_[static_cast<std::size_t>(i)];
        if (std::fabs(v) <= cut)
            continue;
        const bool neg = v < 0;
        v = std::fabs(v);
        if (out.empty())
            out = neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::snprintf(buf, sizeof buf, "%.*g", digits, v);
        const bool unit_coeff = std::string(buf) == "1";
        if (i == 0 || !unit_coeff)
            out += buf;
        if (i >= 1)
            out += "x";
        if (i >= 2)
            out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

double max_coeff_deviation(const RealPoly& a, const RealPoly& b)
{
    const int n = std::max(a.degree(), b.degree());
    double d = 0.0;
    for (int i = 0; i <= n; ++i)
        d = std::max(d, std::fabs(a.coeff(i) - b.coeff(i)));
    return d / std::max(1.0, a.max_abs_coeff());
}

std::complex<double> ComplexPoly::eval(std::complex<double> x) const
{
    std::complex<double> r = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        r = r * x + *it;
    return r;
}

ComplexMatrix build_h(const ModelParams& params)
{
    validate(params);
    const auto m = detail::h_matrix<double>(params.theta, params.lambda, detail::normalize<double>(params.z1),
                                            detail::normalize<double>(params.z2));
    const int q = params.theta.q;
    ComplexMatrix h(q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) {
            const auto& e = m[static_cast<std::size_t>(i * q + j)];
            h(i, j) = {e.re, e.im};
        }
    return h;
}

ComplexPoly charpoly(const ComplexMatrix& m)
{
    const int n = m.size();
    if (n < 1 || n > 512)
        throw std::domain_error("charpoly: matrix size must be in [1, 512]");
    Eigen::MatrixXcd a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a(i, j) = m(i, j);
    const Eigen::MatrixXcd hm = Eigen::HessenbergDecomposition<Eigen::MatrixXcd>(a).matrixH();

    // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (h_{i+1,i} ... h_{k,k-1}) p_{i-1}
    using Poly = std::vector<std::complex<double>>;
    std::vector<Poly> p(static_cast<std::size_t>(n) + 1);
    p[0] = {1.0};
    for (int k = 1; k <= n; ++k) {
        Poly cur(static_cast<std::size_t>(k) + 1, 0.0);
        const Poly& prev = p[static_cast<std::size_t>(k - 1)];
        const std::complex<double> hkk = hm(k - 1, k - 1);
        for (std::size_t i = 0; i < prev.size(); ++i) {
            cur[i + 1] += prev[i];
            cur[i] -= hkk * prev[i];
        }
        std::complex<double> sub = 1.0;
        for (int i = k - 1; i >= 1; --i) {
            sub *= hm(i, i - 1);
            const std::complex<double> f = hm(i - 1, k - 1) * sub;
            const Poly& pi = p[static_cast<std::size_t>(i - 1)];
            for (std::size_t t = 0; t < pi.size(); ++t)
                cur[t] -= f * pi[t];
        }
        p[static_cast<std::size_t>(k)] = std::move(cur);
    }
    return ComplexPoly{std::move(p[static_cast<std::size_t>(n)])};
}

unsigned spectrum_precision_bits(int q, double lambda)
{
    const double lg = q * std::log2(3.0 + 2.0 * std::fabs(lambda));
    return detail::bits_for_magnitude(std::exp2(std::min(lg, 1000.0)));
}

namespace {

unsigned pick_bits(int q, double lambda, unsigned requested)
{
    return requested ? requested : spectrum_precision_bits(q, lambda);
}

void check_inputs(RotationNumber theta, double lambda)
{
    make_rotation(theta.p, theta.q);
    if (!(lambda > 0))
        throw std::domain_error("lambda must be positive");
}

} // namespace

RealPoly delta_transfer(RotationNumber theta, double lambda, unsigned precision_bits)
{
    check_inputs(theta, lambda);
    return detail::with_working_precision(pick_bits(theta.q, lambda, precision_bits), [&](auto tag) {
        using Real = typename decltype(tag)::type;
        return detail::to_real_poly(detail::transfer_poly(detail::transfer_diagonal<Real>(theta, lambda)));
    });
}

namespace {

template <class Real>
struct MpPoly {
    std::vector<Real> c;

    friend MpPoly operator+(const MpPoly& a, const MpPoly& b)
    {
        MpPoly r{a.c};
        if (r.c.size() < b.c.size())
            r.c.resize(b.c.size(), Real(0));
        for (std::size_t i = 0; i < b.c.size(); ++i)
            r.c[i] += b.c[i];
        return r;
    }
    friend MpPoly operator-(const MpPoly& a, const MpPoly& b)
    {
        MpPoly r{a.c};
        if (r.c.size() < b.c.size())
            r.c.resize(b.c.size(), Real(0));
        for (std::size_t i = 0; i < b.c.size(); ++i)
            r.c[i] -= b.c[i];
        return r;
    }
    friend MpPoly operator*(const MpPoly& a, const MpPoly& b)
    {
        if (a.c.empty() || b.c.empty())
            return {};
        MpPoly r{std::vector<Real>(a.c.size() + b.c.size() - 1, Real(0))};
        for (std::size_t i = 0; i < a.c.size(); ++i)
            for (std::size_t j = 0; j < b.c.size(); ++j)
                r.c[i + j] += a.c[i] * b.c[j];
        return r;
    }
};

} // namespace

RealPoly delta_continuant(RotationNumber theta, double lambda, unsigned precision_bits)
{
    check_inputs(theta, lambda);
    if (theta.q < 3)
        throw std::domain_error("delta_continuant: q must be >= 3");
    return detail::with_working_precision(pick_bits(theta.q, lambda, precision_bits), [&](auto tag) {
        using Real = typename decltype(tag)::type;
        using P = MpPoly<Real>;
        std::vector<P> alpha;
        // With the constant 2((-1)^q + mu^q) the identity holds for the phaseless
        // diagonal; the pi/(2q)-shifted one would need 2(-1)^q instead.
        for (const Real& ak : detail::cos_diagonal<Real>(theta, lambda, 0.0))
            alpha.push_back(P{{-ak, Real(1)}});
        P d = periodic_continuant(std::span<const P>(alpha), P{{Real(1)}});
        const Real mu = Real(lambda) / 2;
        const Real shift = 2 * (Real(theta.q % 2 == 0 ? 1 : -1) + detail::real_pow(mu, static_cast<unsigned>(theta.q)));
        if (d.c.empty())
            d.c.push_back(Real(0));
        d.c[0] += shift;
        return detail::to_real_poly(d.c);
    });
}

std::pair<double, double> delta_at(RotationNumber theta, double lambda, double x, unsigned precision_bits)
{
    check_inputs(theta, lambda);
    return detail::with_working_precision(pick_bits(theta.q, lambda, precision_bits), [&](auto tag) {
        using Real = typename decltype(tag)::type;
        const auto [v, d] = detail::transfer_trace(detail::transfer_diagonal<Real>(theta, lambda), Real(x));
        return std::pair{detail::to_double(v), detail::to_double(d)};
    });
}

double coupling_term(int q, double lambda, std::complex<double> z1, std::complex<double> z2)
{
    return detail::coupling_term_t<double>(q, lambda, detail::normalize<double>(z1), detail::normalize<double>(z2));
}

namespace {

constexpr double coupling_variance_tol = 1e-16;
constexpr double coupling_residual_tol = 1e-8;

struct CouplingAccumulator {
    double max_variance = 0.0;
    double plus_residual = 0.0;
    double minus_residual = 0.0;
    int samples = 0;
    unsigned bits = 0;
};

// One torus point: offsets det(xI - h) - Delta(x) at several x.
void coupling_sample(RotationNumber th, double lambda, double phi1, double phi2, std::mt19937_64& rng,
                     CouplingAccumulator& acc)
{
    const int q = th.q;
    // The determinant expansion has terms up to (2 + lambda + |x|)^q; LU adds a little growth.
    const unsigned bits = spectrum_precision_bits(q, lambda) + 2 * static_cast<unsigned>(q) + 32;
    acc.bits = std::max(acc.bits, bits);
    std::uniform_real_distribution<double> xs(-(2.0 + lambda), 2.0 + lambda);
    std::vector<double> xv;
    for (int i = 0; i < 3; ++i)
        xv.push_back(xs(rng));
    detail::with_working_precision(bits, [&](auto tag) {
        using Real = typename decltype(tag)::type;
        const auto z1 = detail::unit<Real>(Real(phi1));
        const auto z2 = detail::unit<Real>(Real(phi2));
        const auto h = detail::h_matrix<Real>(th, lambda, z1, z2);
        const auto a = detail::transfer_diagonal<Real>(th, lambda);
        const Real term = detail::coupling_term_t<Real>(q, lambda, z1, z2);
        std::vector<Real> off;
        for (double x : xv) {
            const Real xr(x);
            const auto det = detail::shifted_determinant<Real>(h, q, xr);
            off.push_back(det.re - detail::transfer_trace(a, xr).first);
        }
        Real mean(0);
        for (const auto& o : off)
            mean += o;
        mean /= Real(static_cast<int>(off.size()));
        Real var(0);
        for (const auto& o : off)
            var += (o - mean) * (o - mean);
        var /= Real(static_cast<int>(off.size()));
        acc.max_variance = std::max(acc.max_variance, detail::to_double(var));
        using std::fabs;
        acc.plus_residual = std::max(acc.plus_residual, detail::to_double(fabs(mean - term)));
        acc.minus_residual = std::max(acc.minus_residual, detail::to_double(fabs(mean + term)));
    });
    ++acc.samples;
}

CouplingReport finish_coupling(const CouplingAccumulator& acc, int q_min, int q_max, std::uint64_t seed)
{
    CouplingReport r;
    r.samples = acc.samples;
    r.q_min = q_min;
    r.q_max = q_max;
    r.seed = seed;
    r.precision_bits = acc.bits;
    r.max_variance = acc.max_variance;
    const bool plus = acc.plus_residual < coupling_residual_tol;
    const bool minus = acc.minus_residual < coupling_residual_tol;
    if (acc.max_variance >= coupling_variance_tol || plus == minus)
        throw no_consistent_sign("coupling sign: det(xI - h) - Delta(x) fits neither sign (residuals +" +
                                 std::to_string(acc.plus_residual) + ", -" + std::to_string(acc.minus_residual) +
                                 ", variance " + std::to_string(acc.max_variance) + ")");
    r.sign = plus ? 1 : -1;
    r.max_residual = plus ? acc.plus_residual : acc.minus_residual;
    r.rejected_residual = plus ? acc.minus_residual : acc.plus_residual;
    return r;
}

} // namespace

CouplingReport resolve_coupling_sign(RotationNumber theta, double lambda, int samples, std::uint64_t seed)
{
    check_inputs(theta, lambda);
    if (samples < 8)
        throw std::domain_error("resolve_coupling_sign: at least 8 samples required");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
    CouplingAccumulator acc;
    for (int s = 0; s < samples; ++s) {
        const double phi1 = ang(rng);
        const double phi2 = ang(rng);
        coupling_sample(theta, lambda, phi1, phi2, rng, acc);
    }
    return finish_coupling(acc, theta.q, theta.q, seed);
}

CouplingReport resolve_coupling_sign_global(int q_max, int samples, std::uint64_t seed)
{
    if (q_max < 2)
        throw std::domain_error("resolve_coupling_sign_global: q_max must be >= 2");
    if (samples < 8)
        throw std::domain_error("resolve_coupling_sign_global: at least 8 samples required");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> lam(0.5, 3.0);
    CouplingAccumulator acc;
    for (int q = 2; q <= q_max; ++q) {
        std::vector<int> ps;
        for (int p = 1; p < q; ++p)
            if (std::gcd(p, q) == 1)
                ps.push_back(p);
        std::uniform_int_distribution<std::size_t> pick(0, ps.size() - 1);
        for (int s = 0; s < samples; ++s) {
            const RotationNumber th{ps[pick(rng)], q};
            const double lambda = lam(rng);
            const double phi1 = ang(rng);
            const double phi2 = ang(rng);
            coupling_sample(th, lambda, phi1, phi2, rng, acc);
        }
    }
    return finish_coupling(acc, 2, q_max, seed);
}

const CouplingReport& coupling_sign_report()
{
    static const CouplingReport report = resolve_coupling_sign_global();
    return report;
}

int coupling_sign()
{
    return coupling_sign_report().sign;
}

ConstantTermReport constant_term_check(RotationNumber theta, double lambda, int samples, std::uint64_t seed, double tol)
{
    check_inputs(theta, lambda);
    const int q = theta.q;
    ConstantTermReport r;
    r.theta = theta;
    r.lambda = lambda;
    r.sign = coupling_sign();
    r.samples = samples;

    const double mu = lambda / 2;
    const double c = 2.0 * (1.0 + std::pow(mu, q));
    r.expected_delta0 = q % 2 == 0 ? ((q / 2) % 2 == 0 ? c : -c) : 0.0;
    const unsigned bits = spectrum_precision_bits(q, lambda) + 2 * static_cast<unsigned>(q) + 32;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
    detail::with_working_precision(bits, [&](auto tag) {
        using Real = typename decltype(tag)::type;
        using std::fabs;
        const Real zero(0);
        const Real d0 = detail::transfer_trace(detail::transfer_diagonal<Real>(theta, lambda), zero).first;
        r.delta0 = detail::to_double(d0);
        r.delta0_rel_err = std::fabs(r.delta0 - r.expected_delta0) / c;
        r.delta0_ok = r.delta0_rel_err < tol;

        // The same trace with the phaseless shifts lambda cos(2 pi k p / q).
        r.phaseless_delta0 =
            detail::to_double(detail::transfer_trace(detail::cos_diagonal<Real>(theta, lambda, 0.0), zero).first);

        double worst = 0.0;
        for (int s = 0; s < samples; ++s) {
            const auto z1 = detail::unit<Real>(Real(ang(rng)));
            const auto z2 = detail::unit<Real>(Real(ang(rng)));
            const auto h = detail::h_matrix<Real>(theta, lambda, z1, z2);
            const Real coeff0 = detail::shifted_determinant<Real>(h, q, zero).re;
            const Real term = detail::coupling_term_t<Real>(q, lambda, z1, z2);
            const Real want = Real(r.sign) * term + Real(r.expected_delta0);
            worst = std::max(worst, detail::to_double(fabs(coeff0 - want)) / c);
        }
        r.coefficient_rel_err = worst;
        r.coefficient_ok = worst < tol;
    });
    return r;
}

double coeff_formula(int k, int q, double mu, double xi, double xi2)
{
    const double m2 = mu * mu;
    switch (k) {
    case 1:
        return -q * (1.0 + std::pow(mu, q));
    case 2: {
        const double b = (q - 3) / 2.0;
        return q * (b * m2 * m2 + (q - 4 - xi) * m2 + b);
    }
    case 3: {
        const double b = (q - 4.0) * (q - 5.0) / 6.0;
        const double mid = 1.0 + (q - 5.0) * (q - 6.0) / 2.0 - (q - 6) * xi + xi2;
        return -q * (b * m2 * m2 * m2 + mid * m2 * m2 + mid * m2 + b);
    }
    default:
        throw std::domain_error("coeff_formula: k must be 1, 2 or 3");
    }
}

namespace {

// Formula coefficients of mu^0, mu^2, ..., mu^(2k) for k = 2, 3.
std::vector<double> formula_terms(int k, int q, double xi, double xi2)
{
    if (k == 2) {
        const double b = q * (q - 3) / 2.0;
        return {b, q * (q - 4 - xi), b};
    }
    const double b = -q * (q - 4.0) * (q - 5.0) / 6.0;
    const double mid = -q * (1.0 + (q - 5.0) * (q - 6.0) / 2.0 - (q - 6) * xi + xi2);
    return {b, mid, mid, b};
}

} // namespace

CoeffReport coeff_check(RotationNumber theta, double lambda, int k, double tol)
{
    check_inputs(theta, lambda);
    const int q = theta.q;
    if (k < 1 || k > 3 || q <= 2 * k)
        throw std::domain_error("coeff_check: requires k in {1, 2, 3} and q > 2k");
    CoeffReport r;
    r.theta = theta;
    r.lambda = lambda;
    r.k = k;
    r.conjectural = k == 3;

    const double xi = 2.0 * std::cos(2.0 * std::numbers::pi * theta.p / q);
    const double xi2 = 2.0 * std::cos(4.0 * std::numbers::pi * theta.p / q);
    const double mu = lambda / 2;
    r.computed = delta_transfer(theta, lambda).coeff(q - 2 * k);
    r.formula = coeff_formula(k, q, mu, xi, xi2);
    r.rel_err = std::fabs(r.computed - r.formula) / std::max(1.0, std::fabs(r.formula));
    r.passed = !r.conjectural && r.rel_err < tol;

    if (k >= 2) {
        // The coefficient is a polynomial of degree k in mu^2; recover it from k + 1 values of mu.
        const int n = k + 1;
        Eigen::MatrixXd v(n, n);
        Eigen::VectorXd y(n);
        for (int i = 0; i < n; ++i) {
            const double m2 = std::pow(0.5 * (i + 1), 2);
            for (int j = 0; j < n; ++j)
                v(i, j) = std::pow(m2, j);
            y(i) = delta_transfer(theta, 2.0 * std::sqrt(m2)).coeff(q - 2 * k);
        }
        const Eigen::VectorXd fit = v.colPivHouseholderQr().solve(y);
        const auto want = formula_terms(k, q, xi, xi2);
        for (int j = 0; j < n; ++j)
            r.terms.push_back({2 * j, fit(j), want[static_cast<std::size_t>(j)], fit(j) - want[static_cast<std::size_t>(j)]});
    }
    return r;
}

} // namespace amo
