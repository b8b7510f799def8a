#pragma once

#include "amo/bigq.hpp"
#include "amo/int_poly.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace amo {

// Laurent polynomial over Q. Stored densely between the lowest and highest
// nonzero exponents; both ends are trimmed so the representation is unique.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const BigQ& c);
    LaurentPoly(long c) : LaurentPoly(BigQ(c)) {}

    static LaurentPoly monomial(const BigQ& c, std::int64_t e);
    static LaurentPoly from_terms(const std::map<std::int64_t, BigQ>& terms);
    static LaurentPoly from_poly(const IntPoly& p, std::int64_t shift = 0);

    bool is_zero() const { return c_.empty(); }
    std::int64_t low_exp() const;
    std::int64_t high_exp() const;
    BigQ coeff(std::int64_t e) const;
    std::map<std::int64_t, BigQ> terms() const;
    const std::vector<BigQ>& dense() const { return c_; }

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const BigQ& s);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const BigQ& s) { return a *= s; }
    friend LaurentPoly operator-(LaurentPoly a) { return a *= BigQ(-1); }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b)
    {
        return a.low_ == b.low_ && a.c_ == b.c_;
    }

    // Throws division_by_zero at t = 0 when negative exponents are present.
    BigQ eval(const BigQ& t) const;
    double eval(double t) const;
    std::complex<double> eval(std::complex<double> t) const;

    std::string to_string(char var = 'x') const;

private:
    void trim();
    std::int64_t low_ = 0;
    std::vector<BigQ> c_;
};

namespace detail {
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
} // namespace detail

} // namespace amo
