#pragma once

#include "amo/bigq.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace amo {

// Residue in Q[x]/(x^q - 1), held as its degree < q representative.
class CycloElement {
public:
    explicit CycloElement(int q);
    // Throws std::invalid_argument unless coeffs.size() == q.
    CycloElement(int q, std::vector<BigQ> coeffs);

    static CycloElement constant(int q, const BigQ& c);
    // c * x^(j mod q)
    static CycloElement monomial(int q, std::int64_t j, const BigQ& c = 1);

    int modulus() const { return q_; }
    const std::vector<BigQ>& coeffs() const { return c_; }
    bool is_zero() const;

    // Arithmetic with a different modulus throws std::invalid_argument.
    CycloElement& operator+=(const CycloElement& o);
    CycloElement& operator-=(const CycloElement& o);
    CycloElement& operator*=(const CycloElement& o);
    CycloElement& operator*=(const BigQ& s);

    friend CycloElement operator+(CycloElement a, const CycloElement& b) { return a += b; }
    friend CycloElement operator-(CycloElement a, const CycloElement& b) { return a -= b; }
    friend CycloElement operator*(const CycloElement& a, const CycloElement& b);
    friend CycloElement operator*(CycloElement a, const BigQ& s) { return a *= s; }
    friend CycloElement operator-(CycloElement a) { return a *= BigQ(-1); }
    friend bool operator==(const CycloElement& a, const CycloElement& b)
    {
        return a.q_ == b.q_ && a.c_ == b.c_;
    }

    // Value at x = exp(2 pi i p / q).
    std::complex<double> eval_at_root(std::int64_t p) const;

    std::string to_string() const;

private:
    void check_modulus(const CycloElement& o) const;
    int q_;
    std::vector<BigQ> c_;
};

// mu * (x^(j mod q) + x^(-j mod q))
CycloElement cyclo_cos_term(int q, std::int64_t j, const BigQ& mu);

// True iff Phi_q divides the representative of e, i.e. e vanishes at every
// primitive q-th root of unity.
bool cyclo_vanishes_at_primitive_roots(const CycloElement& e);

} // namespace amo
