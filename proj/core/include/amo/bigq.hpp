#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace amo {

using BigZ = mpz_class;
// mpq_class keeps gcd(num, den) = 1 and den > 0 after canonicalize().
using BigQ = mpq_class;

BigQ make_q(const BigZ& num, const BigZ& den);
BigQ make_q(long num, long den = 1);

BigQ pow(const BigQ& base, unsigned long e);
BigZ pow(const BigZ& base, unsigned long e);

std::string to_string(const BigQ& v);
std::string to_string(const BigZ& v);

double to_double(const BigQ& v);

} // namespace amo
