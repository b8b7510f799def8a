#include "amo/laurent.hpp"
#include "amo/errors.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace amo {

namespace detail {

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("Laurent exponent overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("Laurent exponent overflow");
    return r;
}

} // namespace detail

LaurentPoly::LaurentPoly(const BigQ& c)
{
    if (c != 0)
        c_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(const BigQ& c, std::int64_t e)
{
    LaurentPoly r(c);
    if (!r.is_zero())
        r.low_ = e;
    return r;
}

LaurentPoly LaurentPoly::from_terms(const std::map<std::int64_t, BigQ>& terms)
{
    LaurentPoly r;
    for (const auto& [e, c] : terms)
        r += monomial(c, e);
    return r;
}

LaurentPoly LaurentPoly::from_poly(const IntPoly& p, std::int64_t shift)
{
    LaurentPoly r;
    if (p.is_zero())
        return r;
    r.low_ = shift;
    r.c_.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs())
        r.c_.emplace_back(c);
    r.trim();
    return r;
}

void LaurentPoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
    std::size_t lead_zeros = 0;
    while (lead_zeros < c_.size() && c_[lead_zeros] == 0)
        ++lead_zeros;
    if (lead_zeros > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead_zeros));
        low_ = detail::checked_add(low_, static_cast<std::int64_t>(lead_zeros));
    }
    if (c_.empty())
        low_ = 0;
}

std::int64_t LaurentPoly::low_exp() const
{
    if (is_zero())
        throw std::domain_error("LaurentPoly::low_exp of zero");
    return low_;
}

std::int64_t LaurentPoly::high_exp() const
{
    if (is_zero())
        throw std::domain_error("LaurentPoly::high_exp of zero");
    return detail::checked_add(low_, static_cast<std::int64_t>(c_.size()) - 1);
}

BigQ LaurentPoly::coeff(std::int64_t e) const
{
    if (is_zero() || e < low_)
        return 0;
    const auto off = static_cast<std::uint64_t>(e - low_);
    return off < c_.size() ? c_[off] : BigQ(0);
}

std::map<std::int64_t, BigQ> LaurentPoly::terms() const
{
    std::map<std::int64_t, BigQ> m;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0)
            m.emplace(low_ + static_cast<std::int64_t>(i), c_[i]);
    return m;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
    if (o.is_zero())
        return *this;
    if (is_zero())
        return *this = o;
    const std::int64_t lo = std::min(low_, o.low_);
    const std::int64_t hi = std::max(high_exp(), o.high_exp());
    std::vector<BigQ> r(static_cast<std::size_t>(detail::checked_add(hi, -lo) + 1), BigQ(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        r[static_cast<std::size_t>(low_ - lo) + i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        r[static_cast<std::size_t>(o.low_ - lo) + i] += o.c_[i];
    c_ = std::move(r);
    low_ = lo;
    trim();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o)
{
    return *this += -o;
}

LaurentPoly& LaurentPoly::operator*=(const BigQ& s)
{
    if (s == 0) {
        c_.clear();
        low_ = 0;
        return *this;
    }
    for (auto& c : c_)
        c *= s;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    LaurentPoly r;
    if (a.is_zero() || b.is_zero())
        return r;
    r.low_ = detail::checked_add(a.low_, b.low_);
    detail::checked_add(a.high_exp(), b.high_exp());
    r.c_.assign(a.c_.size() + b.c_.size() - 1, BigQ(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

BigQ LaurentPoly::eval(const BigQ& t) const
{
    if (is_zero())
        return 0;
    if (t == 0) {
        if (low_ < 0)
            throw division_by_zero("LaurentPoly::eval: pole at 0");
        return coeff(0);
    }
    BigQ acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * t + *it;
    if (low_ >= 0)
        return acc * pow(t, static_cast<unsigned long>(low_));
    return acc / pow(t, static_cast<unsigned long>(-low_));
}

double LaurentPoly::eval(double t) const
{
    if (is_zero())
        return 0.0;
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * t + it->get_d();
    return acc * std::pow(t, static_cast<double>(low_));
}

std::complex<double> LaurentPoly::eval(std::complex<double> t) const
{
    if (is_zero())
        return 0.0;
    std::complex<double> acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * t + it->get_d();
    return acc * std::pow(t, static_cast<double>(low_));
}

std::string LaurentPoly::to_string(char var) const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const BigQ& c = c_[i];
        if (c == 0)
            continue;
        const std::int64_t e = low_ + static_cast<std::int64_t>(i);
        BigQ mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (mag != 1 || e == 0)
            os << mag.get_str();
        if (e != 0)
            os << var;
        if (e != 0 && e != 1)
            os << '^' << e;
    }
    return os.str();
}

} // namespace amo
