#include "amo/rational_function.hpp"
#include "amo/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace amo {

namespace {

struct Split {
    BigQ c;
    std::int64_t v = 0;
    IntPoly p;
};

// L = c * x^v * p with p primitive, p(0) != 0, lead(p) > 0.
Split split(const LaurentPoly& l)
{
    Split s;
    const auto& dense = l.dense();
    BigZ lcm = 1;
    for (const auto& q : dense)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    std::vector<BigZ> ints(dense.size());
    for (std::size_t i = 0; i < dense.size(); ++i) {
        mpz_divexact(ints[i].get_mpz_t(), lcm.get_mpz_t(), dense[i].get_den_mpz_t());
        ints[i] *= dense[i].get_num();
    }
    IntPoly p(std::move(ints));
    BigZ g = p.content();
    if (p.lead() < 0)
        g = -g;
    s.p = p.primitive_part();
    s.c = make_q(g, lcm);
    s.v = l.low_exp();
    return s;
}

IntPoly strip_x(const IntPoly& p, std::int64_t& v)
{
    const std::size_t k = p.valuation();
    v = detail::checked_add(v, static_cast<std::int64_t>(k));
    return p.shifted_down(k);
}

} // namespace

RationalFunction::RationalFunction() : c_(0) {}

RationalFunction::RationalFunction(const BigQ& c) : c_(c) {}

RationalFunction::RationalFunction(const LaurentPoly& p)
{
    if (p.is_zero()) {
        c_ = 0;
        return;
    }
    Split s = split(p);
    c_ = s.c;
    v_ = s.v;
    n_ = std::move(s.p);
}

RationalFunction RationalFunction::from_parts(BigQ c, std::int64_t v, IntPoly n, IntPoly d)
{
    if (d.is_zero())
        throw division_by_zero("RationalFunction: zero denominator");
    if (c == 0 || n.is_zero())
        return {};
    n = strip_x(n, v);
    std::int64_t dv = 0;
    d = strip_x(d, dv);
    v = detail::checked_add(v, -dv);
    BigZ cn = n.content();
    if (n.lead() < 0)
        cn = -cn;
    BigZ cd = d.content();
    if (d.lead() < 0)
        cd = -cd;
    n = n.primitive_part();
    d = d.primitive_part();
    c *= make_q(cn, cd);
    if (d.degree() > 0 && n.degree() > 0) {
        IntPoly g = gcd(n, d);
        if (g.degree() > 0) {
            n = divexact(n, g);
            d = divexact(d, g);
        }
    }
    RationalFunction r;
    r.c_ = std::move(c);
    r.v_ = v;
    r.n_ = std::move(n);
    r.d_ = std::move(d);
    return r;
}

RationalFunction RationalFunction::fraction(const LaurentPoly& num, const LaurentPoly& den)
{
    if (den.is_zero())
        throw division_by_zero("RationalFunction::fraction: zero denominator");
    return RationalFunction(num) / RationalFunction(den);
}

RationalFunction RationalFunction::x_pow(std::int64_t e)
{
    RationalFunction r(BigQ(1));
    r.v_ = e;
    return r;
}

LaurentPoly RationalFunction::num() const
{
    if (is_zero())
        return {};
    BigQ s = c_ * BigQ(d_.lead());
    return LaurentPoly::from_poly(n_, v_) * s;
}

LaurentPoly RationalFunction::den() const
{
    if (is_zero())
        return LaurentPoly(1);
    return LaurentPoly::from_poly(d_) * make_q(BigZ(1), d_.lead());
}

RationalFunction RationalFunction::inverse() const
{
    if (is_zero())
        throw division_by_zero("RationalFunction::inverse of zero");
    RationalFunction r;
    r.c_ = 1 / c_;
    r.v_ = detail::checked_mul(v_, -1);
    r.n_ = d_;
    r.d_ = n_;
    return r;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o)
{
    if (is_zero() || o.is_zero()) {
        *this = RationalFunction();
        return *this;
    }
    c_ *= o.c_;
    v_ = detail::checked_add(v_, o.v_);
    IntPoly n1 = std::move(n_), d1 = std::move(d_);
    IntPoly n2 = o.n_, d2 = o.d_;
    if (n1.degree() > 0 && d2.degree() > 0) {
        IntPoly g = gcd(n1, d2);
        if (g.degree() > 0) {
            n1 = divexact(n1, g);
            d2 = divexact(d2, g);
        }
    }
    if (n2.degree() > 0 && d1.degree() > 0) {
        IntPoly g = gcd(n2, d1);
        if (g.degree() > 0) {
            n2 = divexact(n2, g);
            d1 = divexact(d1, g);
        }
    }
    n_ = n1 * n2;
    d_ = d1 * d2;
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o)
{
    return *this *= o.inverse();
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o)
{
    if (o.is_zero())
        return *this;
    if (is_zero())
        return *this = o;
    const std::int64_t v = std::min(v_, o.v_);
    const auto e1 = static_cast<std::size_t>(v_ - v);
    const auto e2 = static_cast<std::size_t>(o.v_ - v);

    IntPoly g, q1, q2;
    if (d_ == o.d_) {
        g = d_;
        q1 = IntPoly(1);
        q2 = IntPoly(1);
    } else {
        g = gcd(d_, o.d_);
        q1 = divexact(d_, g);
        q2 = divexact(o.d_, g);
    }
    // c1 = a1/b1, c2 = a2/b2; numerator over the common scalar b1*b2.
    const BigZ s1 = c_.get_num() * o.c_.get_den();
    const BigZ s2 = o.c_.get_num() * c_.get_den();
    IntPoly m = (n_ * q2).shifted_up(e1) * s1 + (o.n_ * q1).shifted_up(e2) * s2;
    if (m.is_zero()) {
        *this = RationalFunction();
        return *this;
    }
    std::int64_t nv = v;
    m = strip_x(m, nv);
    BigZ cm = m.content();
    if (m.lead() < 0)
        cm = -cm;
    m = m.primitive_part();
    // Any common factor of m and the denominator divides g.
    if (g.degree() > 0 && m.degree() > 0) {
        IntPoly h = gcd(m, g);
        if (h.degree() > 0) {
            m = divexact(m, h);
            g = divexact(g, h);
        }
    }
    c_ = make_q(cm, c_.get_den() * o.c_.get_den());
    v_ = nv;
    n_ = std::move(m);
    d_ = g * q1 * q2;
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o)
{
    return *this += -o;
}

RationalFunction operator-(RationalFunction a)
{
    a.c_ = -a.c_;
    return a;
}

BigQ RationalFunction::eval(const BigQ& t) const
{
    if (is_zero())
        return 0;
    if (t == 0) {
        if (v_ < 0)
            throw division_by_zero("RationalFunction::eval: pole at 0");
        if (v_ > 0)
            return 0;
        return c_ * make_q(n_.coeff(0), d_.coeff(0));
    }
    BigQ dt = d_.eval(t);
    if (dt == 0)
        throw division_by_zero("RationalFunction::eval: pole");
    BigQ xv = v_ >= 0 ? pow(t, static_cast<unsigned long>(v_)) : 1 / pow(t, static_cast<unsigned long>(-v_));
    return c_ * xv * n_.eval(t) / dt;
}

namespace {

template <class T>
T horner(const IntPoly& p, T t)
{
    T acc = 0.0;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * t + it->get_d();
    return acc;
}

} // namespace

double RationalFunction::eval(double t) const
{
    if (is_zero())
        return 0.0;
    return c_.get_d() * std::pow(t, static_cast<double>(v_)) * horner(n_, t) / horner(d_, t);
}

std::complex<double> RationalFunction::eval(std::complex<double> t) const
{
    if (is_zero())
        return 0.0;
    return c_.get_d() * std::pow(t, static_cast<double>(v_)) * horner(n_, t) / horner(d_, t);
}

std::string RationalFunction::to_string() const
{
    LaurentPoly d = den();
    if (d == LaurentPoly(1))
        return num().to_string();
    return "(" + num().to_string() + ")/(" + d.to_string() + ")";
}

RationalFunction rf_term(std::int64_t i)
{
    if (i == 0)
        return RationalFunction(BigQ(2));
    const std::int64_t a = i < 0 ? detail::checked_mul(i, -1) : i;
    return LaurentPoly::monomial(1, -a) + LaurentPoly::monomial(1, a);
}

RationalFunction rf_diff(std::int64_t i)
{
    if (i == 0)
        return {};
    return LaurentPoly::monomial(1, detail::checked_mul(i, -1)) - LaurentPoly::monomial(1, i);
}

RationalFunction rf_arith(const RationalFunction& a, const RationalFunction& b, RfOp op)
{
    switch (op) {
    case RfOp::add:
        return a + b;
    case RfOp::sub:
        return a - b;
    case RfOp::mul:
        return a * b;
    case RfOp::div:
        return a / b;
    }
    throw std::invalid_argument("rf_arith: unknown op");
}

bool rf_eq(const RationalFunction& a, const RationalFunction& b)
{
    return a == b;
}

} // namespace amo
