#include <qmf/numeric.hpp>

#include <stdexcept>

namespace qmf
{

std::string to_fraction_string(const Rational &r)
{
    return r.get_num().get_str(10) + "/" + r.get_den().get_str(10);
}

Rational parse_fraction_string(const std::string &s)
{
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0 || r.get_den() == 0) {
        throw std::invalid_argument("malformed fraction string: '" + s + "'");
    }
    r.canonicalize();
    return r;
}

bool is_integer(const Rational &r)
{
    return r.get_den() == 1;
}

Integer mod_floor(const Integer &z, const Integer &m)
{
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), m.get_mpz_t());
    return r;
}

Integer factorial(unsigned n)
{
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d <= n / d; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

} // namespace qmf
