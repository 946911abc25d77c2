#include <qmf/arith.hpp>
#include <qmf/forms.hpp>

#include <stdexcept>
#include <string>

namespace qmf
{

std::uint64_t totient(std::uint64_t m)
{
    if (m == 0) {
        throw std::invalid_argument("totient: argument must be positive");
    }
    std::uint64_t result = m;
    for (std::uint64_t d = 2; d <= m / d; ++d) {
        if (m % d == 0) {
            while (m % d == 0) {
                m /= d;
            }
            result -= result / d;
        }
    }
    if (m > 1) {
        result -= result / m;
    }
    return result;
}

std::uint64_t prime_power(std::uint64_t p, unsigned s)
{
    std::uint64_t value = 1;
    for (unsigned e = 0; e < s; ++e) {
        if (value > UINT64_MAX / p) {
            throw std::overflow_error("prime power " + std::to_string(p) + "^" + std::to_string(s) + " overflows");
        }
        value *= p;
    }
    return value;
}

std::vector<std::pair<int, int>> kummer_pairs(std::uint64_t p, unsigned s, int i_max)
{
    if (!is_prime(p)) {
        throw std::invalid_argument("kummer_pairs: " + std::to_string(p) + " is not prime");
    }
    if (s < 1) {
        throw std::invalid_argument("kummer_pairs: s must be >= 1");
    }
    const std::uint64_t phi = totient(prime_power(p, s));
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= i_max; ++i) {
        for (int j = i + 1; j <= i_max; ++j) {
            if ((2 * static_cast<std::uint64_t>(j - i)) % phi == 0) {
                pairs.emplace_back(i, j);
            }
        }
    }
    return pairs;
}

Integer CongruenceReport::modulus() const
{
    Integer m;
    mpz_ui_pow_ui(m.get_mpz_t(), p, s);
    return m;
}

CongruenceReport check_kummer(int i, int j, std::uint64_t p, unsigned s, int order)
{
    if (order < 3) {
        throw std::invalid_argument("check_kummer: order must be >= 3");
    }
    return check_kummer(i, j, p, s, order, LambdaDistribution(order - 1));
}

CongruenceReport check_kummer(int i, int j, std::uint64_t p, unsigned s, int order, const LambdaDistribution &dist)
{
    if (i < 1 || j < 1) {
        throw std::invalid_argument("check_kummer: form indices must be >= 1");
    }
    if (!is_prime(p)) {
        throw std::invalid_argument("check_kummer: " + std::to_string(p) + " is not prime");
    }
    if (s < 1) {
        throw std::invalid_argument("check_kummer: s must be >= 1");
    }
    CongruenceReport report{i, j, p, s, order, true, std::nullopt};
    const Integer m = report.modulus();
    const QSeries a = abar(i, order, dist).series;
    const QSeries b = i == j ? a : abar(j, order, dist).series;
    for (int e = 0; e < order; ++e) {
        Integer ri = mod_floor(a.coeff(e).get_num(), m);
        Integer rj = mod_floor(b.coeff(e).get_num(), m);
        if (ri != rj) {
            report.holds = false;
            report.first_failure = CongruenceFailure{e, std::move(ri), std::move(rj)};
            break;
        }
    }
    return report;
}

std::vector<std::pair<int, Integer>> reduce_series_mod(const QSeries &s, const Integer &m)
{
    std::vector<std::pair<int, Integer>> out;
    for (const auto &[k, c] : s.terms()) {
        if (k % 2 != 0 || !is_integer(c)) {
            throw std::invalid_argument("reduce_series_mod: series must have integer exponents and coefficients");
        }
        Integer r = mod_floor(c.get_num(), m);
        if (r != 0) {
            out.emplace_back(static_cast<int>(k / 2), std::move(r));
        }
    }
    return out;
}

bool theorem2_applicable(int k, std::uint64_t p)
{
    if (k < 1) {
        throw std::invalid_argument("theorem2_applicable: k must be >= 1");
    }
    if (!is_prime(p)) {
        throw std::invalid_argument("theorem2_applicable: " + std::to_string(p) + " is not prime");
    }
    if (p < 7) {
        return true;
    }
    const std::uint64_t r = (6 * static_cast<std::uint64_t>(k)) % (p - 1);
    return r == 4 || r == 6 || r == 8 || r == 10 || r == 14;
}

std::optional<unsigned> padic_valuation(const Integer &z, std::uint64_t p)
{
    if (z == 0) {
        return std::nullopt;
    }
    Integer rest = z;
    unsigned v = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        ++v;
    }
    return v;
}

ValuationTable padic_valuations(int k, std::uint64_t p, int n_max)
{
    if (n_max < 1) {
        throw std::invalid_argument("padic_valuations: n_max must be >= 1");
    }
    ValuationTable table;
    table.k = k;
    table.p = p;
    table.hypothesis_holds = theorem2_applicable(k, p);

    const std::uint64_t top = prime_power(p, static_cast<unsigned>(n_max));
    if (top > static_cast<std::uint64_t>(LambdaDistribution::max_supported_degree)) {
        throw std::length_error("padic_valuations: a_k(" + std::to_string(p) + "^" + std::to_string(n_max) +
                                ") needs partitions of " + std::to_string(top) + ", beyond the supported " +
                                std::to_string(LambdaDistribution::max_supported_degree));
    }
    const int order = static_cast<int>(top) + 1;
    const QSeries series = abar(k, order).series;
    std::uint64_t pn = 1;
    for (int n = 1; n <= n_max; ++n) {
        pn *= p;
        ValuationRow row;
        row.n = n;
        row.coefficient = series.coeff(static_cast<QSeries::Key>(pn)).get_num();
        row.valuation = padic_valuation(row.coefficient, p);
        table.rows.push_back(std::move(row));
    }
    return table;
}

} // namespace qmf
