#ifndef QMF_NUMERIC_HPP
#define QMF_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace qmf
{

using Integer = mpz_class;
using Rational = mpq_class;

// "num/den" with the denominator always present, e.g. "5/1", "-7/12".
std::string to_fraction_string(const Rational &r);

// Inverse of to_fraction_string; also accepts a bare integer.
Rational parse_fraction_string(const std::string &s);

inline std::string to_decimal_string(const Integer &z)
{
    return z.get_str(10);
}

bool is_integer(const Rational &r);

// Least nonnegative residue of z modulo m (m > 0).
Integer mod_floor(const Integer &z, const Integer &m);

Integer factorial(unsigned n);

// Trial division; adequate for the small moduli used here.
bool is_prime(std::uint64_t n);

} // namespace qmf

#endif
