#include "amo/errors.hpp"
#include "amo/spectrum.hpp"

#include "parallel.hpp"
#include "spectral_kernels.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace amo {

namespace {

constexpr double touch_tol = 1e-7;
constexpr double residual_tol = 1e-8;

std::vector<double> eigenvalues_at(RotationNumber th, double lambda, double phase)
{
    const auto z = detail::unit<double>(phase);
    const auto m = detail::h_matrix<double>(th, lambda, z, z);
    const int q = th.q;
    Eigen::MatrixXcd h(q, q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) {
            const auto& e = m[static_cast<std::size_t>(i * q + j)];
            h(i, j) = {e.re, e.im};
        }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd ev = es.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

// Polishes the eigenvalues of one matrix onto their common level Delta(x) = +c or -c,
// taken from the sign of Delta at the majority of them.
template <class Real>
std::vector<double> polish(RotationNumber th, double lambda, const std::vector<double>& guesses, double c,
                           std::vector<std::string>& flags)
{
    using std::fabs;
    const auto a = detail::transfer_diagonal<Real>(th, lambda);
    int vote = 0;
    for (double g : guesses)
        vote += detail::transfer_trace(a, Real(g)).first >= 0 ? 1 : -1;
    const Real target = vote >= 0 ? Real(c) : Real(-c);
    std::vector<double> out;
    out.reserve(guesses.size());
    double worst = 0.0;
    for (double g : guesses) {
        Real x(g);
        auto [v, d] = detail::transfer_trace(a, x);
        for (int it = 0; it < 12; ++it) {
            if (d == 0)
                break;
            const Real step = (v - target) / d;
            // Near a double root Newton stalls; the eigenvalue is already accurate there.
            if (fabs(step) > 1e-6)
                break;
            x -= step;
            std::tie(v, d) = detail::transfer_trace(a, x);
            if (fabs(step) <= Real(1e-24) * (1 + fabs(x)))
                break;
        }
        const double res = detail::to_double(fabs(v - target));
        worst = std::max(worst, res);
        out.push_back(detail::to_double(x));
    }
    if (worst > residual_tol * std::max(1.0, c))
        flags.push_back("numeric_breakdown: edge residual " + std::to_string(worst));
    return out;
}

BandList compute_bands(RotationNumber th, double lambda, unsigned bits)
{
    BandList r;
    r.theta = th;
    r.lambda = lambda;
    r.precision_bits = bits;
    const int q = th.q;
    const double c = 2.0 * (1.0 + std::pow(lambda / 2, q));

    const auto periodic = eigenvalues_at(th, lambda, 0.0);
    const auto antiperiodic = eigenvalues_at(th, lambda, std::numbers::pi / q);

    std::vector<double> edges = detail::with_working_precision(bits, [&](auto tag) {
        using Real = typename decltype(tag)::type;
        r.precision_bits = detail::precision_bits_of<Real>();
        auto e = polish<Real>(th, lambda, periodic, c, r.flags);
        const auto f = polish<Real>(th, lambda, antiperiodic, c, r.flags);
        e.insert(e.end(), f.begin(), f.end());
        return e;
    });
    std::sort(edges.begin(), edges.end());

    for (std::size_t i = 0; i + 1 < edges.size(); i += 2)
        r.intervals.emplace_back(edges[i], edges[i + 1]);
    for (std::size_t i = 0; i + 1 < r.intervals.size(); ++i) {
        auto& hi = r.intervals[i].second;
        auto& lo = r.intervals[i + 1].first;
        if (lo - hi < touch_tol) {
            const double mid = 0.5 * (hi + lo);
            hi = mid;
            lo = mid;
        }
    }
    const double bound = 2.0 + lambda + 1e-9;
    if (!r.intervals.empty() && (r.intervals.front().first < -bound || r.intervals.back().second > bound))
        r.flags.push_back("numeric_breakdown: band outside the operator-norm bound");
    if (static_cast<int>(r.intervals.size()) != q)
        r.flags.push_back("numeric_breakdown: wrong band count");
    return r;
}

unsigned band_bits(int q, double lambda, unsigned requested)
{
    return requested ? requested : spectrum_precision_bits(q, lambda);
}

} // namespace

BandList try_bands(RotationNumber theta, double lambda, unsigned precision_bits)
{
    make_rotation(theta.p, theta.q);
    if (!(lambda > 0))
        throw std::domain_error("lambda must be positive");
    return compute_bands(theta, lambda, band_bits(theta.q, lambda, precision_bits));
}

BandList bands(RotationNumber theta, double lambda, unsigned precision_bits)
{
    BandList r = try_bands(theta, lambda, precision_bits);
    if (r.flagged())
        throw numeric_breakdown("bands " + std::to_string(theta.p) + "/" + std::to_string(theta.q) + ": " +
                                r.flags.front());
    return r;
}

std::vector<BandList> butterfly(const ButterflyConfig& cfg)
{
    if (cfg.q_max < 2)
        throw std::domain_error("butterfly: q_max must be >= 2");
    if (!(cfg.lambda > 0))
        throw std::domain_error("lambda must be positive");
    std::vector<RotationNumber> keys;
    for (int q = 2; q <= cfg.q_max; ++q)
        for (int p = 1; p < q; ++p)
            if (std::gcd(p, q) == 1)
                keys.push_back({p, q});

    std::vector<BandList> rows(keys.size());
    detail::parallel_for(keys.size(), cfg.jobs, [&](std::size_t i) {
        const RotationNumber th = keys[i];
        const unsigned bits = band_bits(th.q, cfg.lambda, cfg.precision_bits);
        BandList r = compute_bands(th, cfg.lambda, bits);
        if (r.flagged() && 2 * bits <= detail::max_precision_bits) {
            BandList retry = compute_bands(th, cfg.lambda, 2 * bits);
            if (!retry.flagged())
                r = std::move(retry);
        }
        rows[i] = std::move(r);
    });
    return rows;
}

} // namespace amo
