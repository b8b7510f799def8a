#pragma once

#include "amo/bigq.hpp"
#include "amo/int_poly.hpp"
#include "amo/laurent.hpp"

#include <complex>
#include <cstdint>
#include <string>

namespace amo {

// Element of Q(x). Held as c * x^v * N / D with N, D primitive integer
// polynomials, N(0) != 0, D(0) != 0, positive leading coefficients and
// gcd(N, D) = 1. That form is unique, so equality is structural.
class RationalFunction {
public:
    RationalFunction();
    RationalFunction(const BigQ& c);
    RationalFunction(long c) : RationalFunction(BigQ(c)) {}
    RationalFunction(const LaurentPoly& p);

    // Throws division_by_zero when den is zero.
    static RationalFunction fraction(const LaurentPoly& num, const LaurentPoly& den);
    static RationalFunction x_pow(std::int64_t e);

    bool is_zero() const { return c_ == 0; }

    // Normalized view: den is an ordinary monic polynomial with den(0) != 0;
    // num carries any negative exponents.
    LaurentPoly num() const;
    LaurentPoly den() const;

    const BigQ& scalar() const { return c_; }
    std::int64_t valuation() const { return v_; }
    const IntPoly& num_poly() const { return n_; }
    const IntPoly& den_poly() const { return d_; }

    RationalFunction inverse() const;

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend RationalFunction operator-(RationalFunction a);
    friend bool operator==(const RationalFunction& a, const RationalFunction& b)
    {
        return a.c_ == b.c_ && a.v_ == b.v_ && a.n_ == b.n_ && a.d_ == b.d_;
    }

    // Throws division_by_zero at a pole.
    BigQ eval(const BigQ& t) const;
    double eval(double t) const;
    std::complex<double> eval(std::complex<double> t) const;

    std::string to_string() const;

private:
    static RationalFunction from_parts(BigQ c, std::int64_t v, IntPoly n, IntPoly d);

    BigQ c_;
    std::int64_t v_ = 0;
    IntPoly n_{1};
    IntPoly d_{1};
};

// x^{-i} + x^{i}
RationalFunction rf_term(std::int64_t i);
// x^{-i} - x^{i}
RationalFunction rf_diff(std::int64_t i);

enum class RfOp { add, sub, mul, div };
RationalFunction rf_arith(const RationalFunction& a, const RationalFunction& b, RfOp op);
bool rf_eq(const RationalFunction& a, const RationalFunction& b);

} // namespace amo
