#include "amo/int_poly.hpp"

#include "modular.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace amo {

IntPoly::IntPoly(std::vector<BigZ> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(const BigZ& c)
{
    if (c != 0)
        c_.push_back(c);
}

IntPoly::IntPoly(long c) : IntPoly(BigZ(c)) {}

IntPoly IntPoly::monomial(const BigZ& c, std::size_t deg)
{
    IntPoly r;
    if (c != 0) {
        r.c_.assign(deg + 1, BigZ(0));
        r.c_[deg] = c;
    }
    return r;
}

void IntPoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

const BigZ& IntPoly::lead() const
{
    if (c_.empty())
        throw std::domain_error("IntPoly::lead of zero polynomial");
    return c_.back();
}

const BigZ& IntPoly::trailing() const
{
    return c_.at(valuation());
}

std::size_t IntPoly::valuation() const
{
    if (c_.empty())
        throw std::domain_error("IntPoly::valuation of zero polynomial");
    std::size_t i = 0;
    while (c_[i] == 0)
        ++i;
    return i;
}

BigZ IntPoly::content() const
{
    BigZ g = 0;
    for (const auto& c : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const
{
    if (c_.empty())
        return {};
    BigZ g = content();
    if (lead() < 0)
        g = -g;
    IntPoly r = *this;
    if (g != 1)
        for (auto& c : r.c_)
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return r;
}

IntPoly IntPoly::shifted_down(std::size_t n) const
{
    if (n == 0)
        return *this;
    if (n >= c_.size())
        return {};
    for (std::size_t i = 0; i < n; ++i)
        if (c_[i] != 0)
            throw std::domain_error("IntPoly::shifted_down would drop nonzero terms");
    return IntPoly(std::vector<BigZ>(c_.begin() + static_cast<std::ptrdiff_t>(n), c_.end()));
}

IntPoly IntPoly::shifted_up(std::size_t n) const
{
    if (n == 0 || c_.empty())
        return *this;
    std::vector<BigZ> v(n, BigZ(0));
    v.insert(v.end(), c_.begin(), c_.end());
    IntPoly r;
    r.c_ = std::move(v);
    return r;
}

BigZ IntPoly::eval(const BigZ& t) const
{
    BigZ r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * t + *it;
    return r;
}

BigQ IntPoly::eval(const BigQ& t) const
{
    // Homogenised Horner: sum c_i n^i d^(deg-i), divided by d^deg at the end.
    if (c_.empty())
        return 0;
    const BigZ& n = t.get_num();
    const BigZ& d = t.get_den();
    BigZ acc = 0;
    BigZ dpow = 1;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * n + *it * dpow;
        dpow *= d;
    }
    return make_q(acc, dpow / d);
}

IntPoly& IntPoly::operator+=(const IntPoly& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), BigZ(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), BigZ(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator*=(const BigZ& s)
{
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_)
        c *= s;
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<BigZ> r(a.c_.size() + b.c_.size() - 1, BigZ(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0)
            continue;
        const mpz_srcptr ai = a.c_[i].get_mpz_t();
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            mpz_addmul(r[i + j].get_mpz_t(), ai, b.c_[j].get_mpz_t());
    }
    return IntPoly(std::move(r));
}

IntPoly operator-(IntPoly a)
{
    for (auto& c : a.c_)
        c = -c;
    return a;
}

std::string IntPoly::to_string(char var) const
{
    if (c_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const BigZ& c = c_[static_cast<std::size_t>(i)];
        if (c == 0)
            continue;
        BigZ mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (mag != 1 || i == 0)
            os << mag.get_str();
        if (i >= 1)
            os << var;
        if (i >= 2)
            os << '^' << i;
    }
    return os.str();
}

bool try_divexact(const IntPoly& a, const IntPoly& b, IntPoly* quotient)
{
    if (b.is_zero())
        throw std::domain_error("try_divexact: division by zero polynomial");
    if (a.is_zero()) {
        if (quotient)
            *quotient = IntPoly();
        return true;
    }
    if (a.degree() < b.degree())
        return false;
    // A cheap necessary condition before the long division.
    if (!mpz_divisible_p(a.trailing().get_mpz_t(), b.trailing().get_mpz_t()) ||
        a.valuation() < b.valuation())
        return false;
    std::vector<BigZ> r = a.coeffs();
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    std::vector<BigZ> q(r.size() - db, BigZ(0));
    const mpz_srcptr lb = bc.back().get_mpz_t();
    BigZ t;
    for (std::size_t k = q.size(); k-- > 0;) {
        BigZ& top = r[k + db];
        if (top == 0)
            continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lb))
            return false;
        mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lb);
        for (std::size_t j = 0; j < db; ++j)
            mpz_submul(r[k + j].get_mpz_t(), t.get_mpz_t(), bc[j].get_mpz_t());
        top = 0;
        q[k] = t;
    }
    for (std::size_t j = 0; j < db; ++j)
        if (r[j] != 0)
            return false;
    if (quotient)
        *quotient = IntPoly(std::move(q));
    return true;
}

IntPoly divexact(const IntPoly& a, const IntPoly& b)
{
    IntPoly q;
    if (!try_divexact(a, b, &q))
        throw std::domain_error("divexact: divisor does not divide dividend");
    return q;
}

IntPoly rem_monic(const IntPoly& a, const IntPoly& b)
{
    if (b.is_zero() || b.lead() != 1)
        throw std::domain_error("rem_monic: divisor must be monic");
    std::vector<BigZ> r = a.coeffs();
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    for (std::size_t k = r.size(); k-- > db;) {
        if (r[k] == 0)
            continue;
        BigZ t = r[k];
        for (std::size_t j = 0; j <= db; ++j)
            mpz_submul(r[k - db + j].get_mpz_t(), t.get_mpz_t(), bc[j].get_mpz_t());
    }
    if (r.size() > db)
        r.resize(db);
    return IntPoly(std::move(r));
}

namespace {

using detail::ModPoly;

ModPoly reduce(const IntPoly& a, std::uint64_t p)
{
    ModPoly r(a.coeffs().size());
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = mpz_fdiv_ui(a.coeffs()[i].get_mpz_t(), p);
    detail::trim(r);
    return r;
}

// Coefficients of h in the symmetric range (-m/2, m/2].
IntPoly symmetric_lift(const std::vector<BigZ>& h, const BigZ& m)
{
    BigZ half = m / 2;
    std::vector<BigZ> r(h.size());
    for (std::size_t i = 0; i < h.size(); ++i)
        r[i] = h[i] > half ? BigZ(h[i] - m) : h[i];
    return IntPoly(std::move(r));
}

IntPoly primitive_gcd(const IntPoly& a, const IntPoly& b)
{
    // a, b primitive with positive leading coefficients and degree >= 1.
    BigZ g;
    mpz_gcd(g.get_mpz_t(), a.lead().get_mpz_t(), b.lead().get_mpz_t());

    int best = std::min(a.degree(), b.degree()) + 1;
    std::vector<BigZ> h;
    BigZ m;
    IntPoly previous;
    bool have_previous = false;

    for (std::size_t idx = 0;; ++idx) {
        const std::uint64_t p = detail::prime_at(idx);
        if (mpz_divisible_ui_p(a.lead().get_mpz_t(), p) || mpz_divisible_ui_p(b.lead().get_mpz_t(), p))
            continue;
        ModPoly gp = detail::gcd_monic(reduce(a, p), reduce(b, p), p);
        const int e = static_cast<int>(gp.size()) - 1;
        if (e == 0)
            return IntPoly(1);
        if (e > best)
            continue;
        const std::uint64_t gmod = mpz_fdiv_ui(g.get_mpz_t(), p);
        for (auto& c : gp)
            c = detail::mulmod(c, gmod, p);
        if (e < best) {
            best = e;
            h.assign(gp.size(), BigZ(0));
            for (std::size_t i = 0; i < gp.size(); ++i)
                h[i] = static_cast<unsigned long>(gp[i]);
            m = static_cast<unsigned long>(p);
            have_previous = false;
        } else {
            // CRT: h <- h + m * ((gp - h) * m^{-1} mod p)
            const std::uint64_t minv = detail::invmod(mpz_fdiv_ui(m.get_mpz_t(), p), p);
            for (std::size_t i = 0; i < gp.size(); ++i) {
                const std::uint64_t hi = mpz_fdiv_ui(h[i].get_mpz_t(), p);
                const std::uint64_t delta = detail::mulmod(detail::submod(gp[i], hi, p), minv, p);
                mpz_addmul_ui(h[i].get_mpz_t(), m.get_mpz_t(), delta);
            }
            mpz_mul_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        }
        IntPoly lifted = symmetric_lift(h, m);
        if (have_previous && lifted == previous) {
            IntPoly cand = lifted.primitive_part();
            if (try_divexact(a, cand, nullptr) && try_divexact(b, cand, nullptr))
                return cand;
        }
        previous = std::move(lifted);
        have_previous = true;
    }
}

} // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b)
{
    if (a.is_zero() && b.is_zero())
        return {};
    if (a.is_zero())
        return b.primitive_part() * b.content();
    if (b.is_zero())
        return a.primitive_part() * a.content();
    BigZ cg;
    const BigZ ca = a.content();
    const BigZ cb = b.content();
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    IntPoly pa = a.primitive_part();
    IntPoly pb = b.primitive_part();
    if (pa.degree() == 0 || pb.degree() == 0)
        return IntPoly(cg);
    if (pa == pb)
        return pa * cg;
    // Pull out the common power of x before the modular stage.
    const std::size_t v = std::min(pa.valuation(), pb.valuation());
    pa = pa.shifted_down(pa.valuation());
    pb = pb.shifted_down(pb.valuation());
    IntPoly g = (pa.degree() == 0 || pb.degree() == 0) ? IntPoly(1) : primitive_gcd(pa, pb);
    return g.shifted_up(v) * cg;
}

IntPoly cyclotomic_poly(int q)
{
    if (q < 1)
        throw std::domain_error("cyclotomic_poly: q must be >= 1");
    // Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e, built up over the divisors of q.
    std::vector<int> divs;
    for (int d = 1; d <= q; ++d)
        if (q % d == 0)
            divs.push_back(d);
    std::vector<IntPoly> phi;
    for (std::size_t i = 0; i < divs.size(); ++i) {
        IntPoly r = IntPoly::monomial(1, static_cast<std::size_t>(divs[i])) - IntPoly(1);
        for (std::size_t j = 0; j < i; ++j)
            if (divs[i] % divs[j] == 0)
                r = divexact(r, phi[j]);
        phi.push_back(std::move(r));
    }
    return phi.back();
}

} // namespace amo
