#pragma once

// Fixed-precision MPFR tiers. The precision is part of the type, so no global
// MPFR default is touched and the types are safe to use from several threads.

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <type_traits>

namespace amo::detail {

namespace bmp = boost::multiprecision;

template <unsigned Digits10>
using mp_real = bmp::number<bmp::mpfr_float_backend<Digits10, bmp::allocate_dynamic>, bmp::et_off>;

using real_133 = mp_real<40>;
using real_193 = mp_real<58>;
using real_266 = mp_real<80>;
using real_532 = mp_real<160>;
using real_1063 = mp_real<320>;

template <class T>
constexpr unsigned precision_bits_of()
{
    return static_cast<unsigned>(std::numeric_limits<T>::digits);
}

constexpr unsigned max_precision_bits = 1063;

// Calls f(std::type_identity<T>{}) with the smallest tier of at least `bits`.
template <class F>
decltype(auto) with_working_precision(unsigned bits, F&& f)
{
    if (bits <= 53)
        return f(std::type_identity<double>{});
    if (bits <= precision_bits_of<real_133>())
        return f(std::type_identity<real_133>{});
    if (bits <= precision_bits_of<real_193>())
        return f(std::type_identity<real_193>{});
    if (bits <= precision_bits_of<real_266>())
        return f(std::type_identity<real_266>{});
    if (bits <= precision_bits_of<real_532>())
        return f(std::type_identity<real_532>{});
    if (bits <= precision_bits_of<real_1063>())
        return f(std::type_identity<real_1063>{});
    throw std::domain_error("requested working precision exceeds the largest tier");
}

template <class T>
T pi_value()
{
    if constexpr (std::is_same_v<T, double>)
        return 3.14159265358979323846;
    else
        return boost::math::constants::pi<T>();
}

template <class T>
double to_double(const T& v)
{
    if constexpr (std::is_same_v<T, double>)
        return v;
    else
        return v.template convert_to<double>();
}

// Bits needed so that absolute errors of order 2^-64 * magnitude stay far
// below the tolerances used downstream.
inline unsigned bits_for_magnitude(double magnitude)
{
    const double lg = magnitude > 1.0 ? std::log2(magnitude) : 0.0;
    return 64u + static_cast<unsigned>(std::ceil(lg));
}

} // namespace amo::detail
