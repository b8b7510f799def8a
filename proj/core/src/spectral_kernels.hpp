#pragma once

// Scalar kernels shared by the spectral routes, templated on the working real type.

#include "amo/spectrum.hpp"

#include "working_precision.hpp"

#include <cmath>
#include <complex>
#include <utility>
#include <vector>

namespace amo::detail {

template <class Real>
struct Cx {
    Real re{0};
    Real im{0};

    friend Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
    friend Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
    friend Cx operator*(const Cx& a, const Cx& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
    friend Cx operator/(const Cx& a, const Cx& b)
    {
        const Real d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    Cx conj() const { return {re, -im}; }
    Real norm() const { return re * re + im * im; }
};

template <class Real>
Cx<Real> unit(const Real& angle)
{
    using std::cos;
    using std::sin;
    return {cos(angle), sin(angle)};
}

template <class Real>
Cx<Real> pow(Cx<Real> b, unsigned e)
{
    Cx<Real> r{Real(1), Real(0)};
    while (e) {
        if (e & 1u)
            r = r * b;
        b = b * b;
        e >>= 1u;
    }
    return r;
}

template <class Real>
Cx<Real> normalize(std::complex<double> z)
{
    Real re(z.real()), im(z.imag());
    using std::sqrt;
    const Real n = sqrt(re * re + im * im);
    return {re / n, im / n};
}

template <class Real>
Real real_pow(Real b, unsigned e)
{
    Real r(1);
    while (e) {
        if (e & 1u)
            r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

// lambda cos(2 pi k p / q + phase / q) for k = 1..q, phase in units of pi.
template <class Real>
std::vector<Real> cos_diagonal(RotationNumber th, double lambda, double phase)
{
    using std::cos;
    const Real pi = pi_value<Real>();
    std::vector<Real> a;
    a.reserve(static_cast<std::size_t>(th.q));
    for (int k = 1; k <= th.q; ++k) {
        const long r = (static_cast<long>(k) * th.p) % th.q;
        const Real ang = (2 * pi * Real(r) + pi * Real(phase)) / Real(th.q);
        a.push_back(Real(lambda) * cos(ang));
    }
    return a;
}

// The shifts in A_k(x) = [[x - a_k, -1], [1, 0]].
template <class Real>
std::vector<Real> transfer_diagonal(RotationNumber th, double lambda)
{
    return cos_diagonal<Real>(th, lambda, 0.5);
}

// Trace of A_1(x) ... A_q(x) and its derivative.
template <class Real>
std::pair<Real, Real> transfer_trace(const std::vector<Real>& a, const Real& x)
{
    // M = [[m11, m12], [m21, m22]] and dM; M A = [[m11 d + m12, -m11], [m21 d + m22, -m21]].
    Real m11(1), m12(0), m21(0), m22(1);
    Real d11(0), d12(0), d21(0), d22(0);
    for (const Real& ak : a) {
        const Real d = x - ak;
        const Real n11 = m11 * d + m12;
        const Real n21 = m21 * d + m22;
        const Real e11 = d11 * d + m11 + d12;
        const Real e21 = d21 * d + m21 + d22;
        m12 = -m11;
        m22 = -m21;
        d12 = -d11;
        d22 = -d21;
        m11 = n11;
        m21 = n21;
        d11 = e11;
        d21 = e21;
    }
    return {m11 + m22, d11 + d22};
}

// Coefficients (low first) of trace(A_1 ... A_q) as a polynomial in x.
template <class Real>
std::vector<Real> transfer_poly(const std::vector<Real>& a)
{
    using Poly = std::vector<Real>;
    auto times_shift = [](const Poly& p, const Real& ak) {
        // p (x - ak)
        Poly r(p.size() + 1, Real(0));
        for (std::size_t i = 0; i < p.size(); ++i) {
            r[i + 1] += p[i];
            r[i] -= p[i] * ak;
        }
        return r;
    };
    auto add = [](Poly a, const Poly& b) {
        if (a.size() < b.size())
            a.resize(b.size(), Real(0));
        for (std::size_t i = 0; i < b.size(); ++i)
            a[i] += b[i];
        return a;
    };
    auto neg = [](Poly p) {
        for (auto& c : p)
            c = -c;
        return p;
    };
    Poly m11{Real(1)}, m12{Real(0)}, m21{Real(0)}, m22{Real(1)};
    for (const Real& ak : a) {
        Poly n11 = add(times_shift(m11, ak), m12);
        Poly n21 = add(times_shift(m21, ak), m22);
        m12 = neg(m11);
        m22 = neg(m21);
        m11 = std::move(n11);
        m21 = std::move(n21);
    }
    return add(m11, m22);
}

template <class Real>
RealPoly to_real_poly(const std::vector<Real>& c)
{
    std::vector<double> out;
    out.reserve(c.size());
    for (const auto& v : c)
        out.push_back(to_double(v));
    return RealPoly(std::move(out));
}

// h at (z1, z2) in row-major storage.
template <class Real>
std::vector<Cx<Real>> h_matrix(RotationNumber th, double lambda, const Cx<Real>& z1, const Cx<Real>& z2)
{
    const int q = th.q;
    const std::size_t n = static_cast<std::size_t>(q);
    std::vector<Cx<Real>> m(n * n);
    const Real pi = pi_value<Real>();
    const Real mu = Real(lambda) / 2;
    for (int i = 0; i < q; ++i) {
        const int j = (i + 1) % q;
        // z1 u has z1 at (i, i+1) and at (q, 1); its inverse is the conjugate transpose.
        m[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)] =
            m[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)] + z1;
        m[static_cast<std::size_t>(j) * n + static_cast<std::size_t>(i)] =
            m[static_cast<std::size_t>(j) * n + static_cast<std::size_t>(i)] + z1.conj();
        const long r = (static_cast<long>(i + 1) * th.p) % q;
        const Cx<Real> w = z2 * unit<Real>(2 * pi * Real(r) / Real(q));
        auto& d = m[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(i)];
        d = d + Cx<Real>{2 * mu * w.re, Real(0)};
    }
    return m;
}

// Determinant by LU with partial pivoting.
template <class Real>
Cx<Real> determinant(std::vector<Cx<Real>> m, int n)
{
    const auto at = [n](int i, int j) { return static_cast<std::size_t>(i * n + j); };
    Cx<Real> det{Real(1), Real(0)};
    for (int c = 0; c < n; ++c) {
        int piv = c;
        Real best = m[at(c, c)].norm();
        for (int r = c + 1; r < n; ++r) {
            const Real v = m[at(r, c)].norm();
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (best == 0)
            return {Real(0), Real(0)};
        if (piv != c) {
            for (int j = 0; j < n; ++j)
                std::swap(m[at(c, j)], m[at(piv, j)]);
            det = Cx<Real>{Real(0), Real(0)} - det;
        }
        const Cx<Real> p = m[at(c, c)];
        det = det * p;
        for (int r = c + 1; r < n; ++r) {
            const Cx<Real> f = m[at(r, c)] / p;
            if (f.re == 0 && f.im == 0)
                continue;
            for (int j = c + 1; j < n; ++j)
                m[at(r, j)] = m[at(r, j)] - f * m[at(c, j)];
        }
    }
    return det;
}

// det(xI - m).
template <class Real>
Cx<Real> shifted_determinant(const std::vector<Cx<Real>>& m, int n, const Real& x)
{
    std::vector<Cx<Real>> a(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        a[i] = Cx<Real>{Real(0), Real(0)} - m[i];
    for (int i = 0; i < n; ++i) {
        auto& d = a[static_cast<std::size_t>(i * n + i)];
        d.re += x;
    }
    return determinant(std::move(a), n);
}

template <class Real>
Real coupling_term_t(int q, double lambda, const Cx<Real>& z1, const Cx<Real>& z2)
{
    const Real mu = Real(lambda) / 2;
    const auto w1 = pow(z1, static_cast<unsigned>(q));
    const auto w2 = pow(z2, static_cast<unsigned>(q));
    return 2 * w1.re + real_pow(mu, static_cast<unsigned>(q)) * 2 * w2.re;
}

} // namespace amo::detail
