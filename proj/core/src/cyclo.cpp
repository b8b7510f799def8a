#include "amo/cyclo.hpp"
#include "amo/int_poly.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace amo {

namespace {

std::size_t reduce_exp(std::int64_t j, int q)
{
    std::int64_t r = j % q;
    if (r < 0)
        r += q;
    return static_cast<std::size_t>(r);
}

} // namespace

CycloElement::CycloElement(int q) : q_(q)
{
    if (q < 1)
        throw std::invalid_argument("CycloElement: modulus must be >= 1");
    c_.assign(static_cast<std::size_t>(q), BigQ(0));
}

CycloElement::CycloElement(int q, std::vector<BigQ> coeffs) : q_(q), c_(std::move(coeffs))
{
    if (q < 1)
        throw std::invalid_argument("CycloElement: modulus must be >= 1");
    if (c_.size() != static_cast<std::size_t>(q))
        throw std::invalid_argument("CycloElement: coefficient count must equal the modulus");
}

CycloElement CycloElement::constant(int q, const BigQ& c)
{
    CycloElement r(q);
    r.c_[0] = c;
    return r;
}

CycloElement CycloElement::monomial(int q, std::int64_t j, const BigQ& c)
{
    CycloElement r(q);
    r.c_[reduce_exp(j, q)] = c;
    return r;
}

bool CycloElement::is_zero() const
{
    for (const auto& c : c_)
        if (c != 0)
            return false;
    return true;
}

void CycloElement::check_modulus(const CycloElement& o) const
{
    if (o.q_ != q_)
        throw std::invalid_argument("CycloElement: mismatched moduli");
}

CycloElement& CycloElement::operator+=(const CycloElement& o)
{
    check_modulus(o);
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] += o.c_[i];
    return *this;
}

CycloElement& CycloElement::operator-=(const CycloElement& o)
{
    check_modulus(o);
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] -= o.c_[i];
    return *this;
}

CycloElement& CycloElement::operator*=(const CycloElement& o)
{
    return *this = *this * o;
}

CycloElement& CycloElement::operator*=(const BigQ& s)
{
    for (auto& c : c_)
        c *= s;
    return *this;
}

CycloElement operator*(const CycloElement& a, const CycloElement& b)
{
    a.check_modulus(b);
    const std::size_t q = a.c_.size();
    // Skip zero coefficients on both sides; cosine terms are two-term sparse.
    std::vector<std::size_t> nzb;
    for (std::size_t j = 0; j < q; ++j)
        if (b.c_[j] != 0)
            nzb.push_back(j);
    CycloElement r(a.q_);
    BigQ t;
    for (std::size_t i = 0; i < q; ++i) {
        if (a.c_[i] == 0)
            continue;
        for (std::size_t j : nzb) {
            std::size_t k = i + j;
            if (k >= q)
                k -= q;
            mpq_mul(t.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
            r.c_[k] += t;
        }
    }
    return r;
}

std::complex<double> CycloElement::eval_at_root(std::int64_t p) const
{
    std::complex<double> acc = 0.0;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            continue;
        const double ang = 2.0 * std::numbers::pi * static_cast<double>((static_cast<std::int64_t>(i) * p) % q_) / q_;
        acc += c_[i].get_d() * std::polar(1.0, ang);
    }
    return acc;
}

std::string CycloElement::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0)
            continue;
        BigQ mag = abs(c_[i]);
        if (first)
            os << (c_[i] < 0 ? "-" : "");
        else
            os << (c_[i] < 0 ? " - " : " + ");
        first = false;
        if (mag != 1 || i == 0)
            os << mag.get_str();
        if (i >= 1)
            os << 'x';
        if (i >= 2)
            os << '^' << i;
    }
    if (first)
        os << '0';
    os << " mod x^" << q_ << " - 1";
    return os.str();
}

CycloElement cyclo_cos_term(int q, std::int64_t j, const BigQ& mu)
{
    std::vector<BigQ> c(static_cast<std::size_t>(q), BigQ(0));
    c[reduce_exp(j, q)] += mu;
    c[reduce_exp(-j, q)] += mu;
    return CycloElement(q, std::move(c));
}

bool cyclo_vanishes_at_primitive_roots(const CycloElement& e)
{
    if (e.is_zero())
        return true;
    BigZ lcm = 1;
    for (const auto& c : e.coeffs())
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<BigZ> ints(e.coeffs().size());
    for (std::size_t i = 0; i < ints.size(); ++i)
        ints[i] = e.coeffs()[i].get_num() * (lcm / e.coeffs()[i].get_den());
    return rem_monic(IntPoly(std::move(ints)), cyclotomic_poly(e.modulus())).is_zero();
}

} // namespace amo
