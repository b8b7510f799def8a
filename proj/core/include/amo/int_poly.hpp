#pragma once

#include "amo/bigq.hpp"

#include <string>
#include <vector>

namespace amo {

// Dense polynomial in Z[x], coefficients stored low degree first with no
// trailing zeros. The zero polynomial has an empty coefficient vector.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigZ> coeffs);
    IntPoly(const BigZ& c);
    IntPoly(long c);

    static IntPoly monomial(const BigZ& c, std::size_t deg);
    static IntPoly x() { return monomial(1, 1); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<BigZ>& coeffs() const { return c_; }
    BigZ coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigZ(0); }
    const BigZ& lead() const;
    const BigZ& trailing() const;
    // Number of zero coefficients below the lowest nonzero one.
    std::size_t valuation() const;

    BigZ content() const;
    IntPoly primitive_part() const;
    IntPoly shifted_down(std::size_t n) const;
    IntPoly shifted_up(std::size_t n) const;

    BigZ eval(const BigZ& t) const;
    BigQ eval(const BigQ& t) const;

    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    IntPoly& operator*=(const BigZ& s);

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(IntPoly a, const BigZ& s) { return a *= s; }
    friend IntPoly operator-(IntPoly a);
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

    std::string to_string(char var = 'x') const;

private:
    void trim();
    std::vector<BigZ> c_;
};

// Exact quotient a / b in Z[x]. Returns false when b does not divide a.
bool try_divexact(const IntPoly& a, const IntPoly& b, IntPoly* quotient);
// Exact quotient; throws std::domain_error when b does not divide a.
IntPoly divexact(const IntPoly& a, const IntPoly& b);
// Remainder of a modulo a monic b.
IntPoly rem_monic(const IntPoly& a, const IntPoly& b);

// gcd over Z[x]: content gcd times the primitive gcd, positive leading
// coefficient. gcd(0, 0) = 0.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

IntPoly cyclotomic_poly(int q);

} // namespace amo
