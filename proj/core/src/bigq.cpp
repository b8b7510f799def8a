#include "amo/bigq.hpp"
#include "amo/errors.hpp"

namespace amo {

BigQ make_q(const BigZ& num, const BigZ& den)
{
    if (den == 0)
        throw division_by_zero("make_q: zero denominator");
    BigQ r(num, den);
    r.canonicalize();
    return r;
}

BigQ make_q(long num, long den)
{
    return make_q(BigZ(num), BigZ(den));
}

BigQ pow(const BigQ& base, unsigned long e)
{
    BigQ r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
    return r;
}

BigZ pow(const BigZ& base, unsigned long e)
{
    BigZ r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

std::string to_string(const BigQ& v) { return v.get_str(); }
std::string to_string(const BigZ& v) { return v.get_str(); }

double to_double(const BigQ& v) { return v.get_d(); }

} // namespace amo
