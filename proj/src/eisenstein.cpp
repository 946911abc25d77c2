#include <qmf/eisenstein.hpp>
#include <qmf/forms.hpp>

#include <string>

namespace qmf
{

Integer divisor_sigma(unsigned k, std::uint64_t m)
{
    Integer sum = 0;
    Integer term;
    for (std::uint64_t d = 1; d <= m / d; ++d) {
        if (m % d != 0) {
            continue;
        }
        mpz_ui_pow_ui(term.get_mpz_t(), d, k);
        sum += term;
        const std::uint64_t other = m / d;
        if (other != d) {
            mpz_ui_pow_ui(term.get_mpz_t(), other, k);
            sum += term;
        }
    }
    return sum;
}

QSeries eisenstein(int k, int order)
{
    long scale = 0;
    unsigned power = 0;
    switch (k) {
    case 2:
        scale = -24;
        power = 1;
        break;
    case 4:
        scale = 240;
        power = 3;
        break;
    case 6:
        scale = -504;
        power = 5;
        break;
    default:
        throw std::invalid_argument("eisenstein: weight must be 2, 4 or 6, got " + std::to_string(k));
    }
    if (order < 1) {
        throw std::invalid_argument("eisenstein: order must be >= 1");
    }
    QSeries e(2 * static_cast<QSeries::Key>(order));
    e.add_term(0, 1);
    for (int m = 1; m < order; ++m) {
        e.add_term(2 * m, Rational(divisor_sigma(power, static_cast<std::uint64_t>(m)) * scale));
    }
    return e;
}

std::vector<EisensteinMonomial> monomial_basis(int weight)
{
    if (weight <= 0 || weight % 2 != 0) {
        throw std::invalid_argument("monomial_basis: weight must be even and positive, got " + std::to_string(weight));
    }
    std::vector<EisensteinMonomial> basis;
    for (int a = weight / 2; a >= 0; --a) {
        for (int b = (weight - 2 * a) / 4; b >= 0; --b) {
            const int rest = weight - 2 * a - 4 * b;
            if (rest % 6 == 0) {
                basis.push_back({a, b, rest / 6});
            }
        }
    }
    return basis;
}

// ---------------------------------------------------------------------------

EisensteinExpansions::EisensteinExpansions(int order) : order_(order)
{
    if (order < 1) {
        throw std::invalid_argument("EisensteinExpansions: order must be >= 1");
    }
}

const QSeries &EisensteinExpansions::power(int k, int e)
{
    const auto key = std::make_pair(k, e);
    if (auto it = powers_.find(key); it != powers_.end()) {
        return it->second;
    }
    QSeries value = e == 0 ? QSeries::constant(1, 2 * static_cast<QSeries::Key>(order_)) : power(k, e - 1) * eisenstein(k, order_);
    return powers_.emplace(key, std::move(value)).first->second;
}

QSeries EisensteinExpansions::monomial(const EisensteinMonomial &m)
{
    return power(2, m.e2) * power(4, m.e4) * power(6, m.e6);
}

// ---------------------------------------------------------------------------

Rational EisensteinDecomposition::coefficient(const EisensteinMonomial &m) const
{
    for (const auto &[mono, c] : terms) {
        if (mono == m) {
            return c;
        }
    }
    return 0;
}

bool EisensteinDecomposition::is_zero() const
{
    for (const auto &[mono, c] : terms) {
        if (c != 0) {
            return false;
        }
    }
    return true;
}

Integer EisensteinDecomposition::common_denominator() const
{
    Integer l = 1;
    for (const auto &[mono, c] : terms) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    return l;
}

QSeries EisensteinDecomposition::evaluate(int order) const
{
    EisensteinExpansions expansions(order);
    QSeries sum(2 * static_cast<QSeries::Key>(order));
    for (const auto &[mono, c] : terms) {
        if (c != 0) {
            sum += expansions.monomial(mono) * c;
        }
    }
    return sum;
}

std::vector<std::pair<EisensteinMonomial, Integer>> EisensteinDecomposition::renormalized() const
{
    const Integer den = common_denominator();
    std::vector<std::pair<EisensteinMonomial, Integer>> out;
    out.reserve(terms.size());
    Integer g = 0;
    for (const auto &[mono, c] : terms) {
        const Rational scaled = c * den;
        out.emplace_back(mono, scaled.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_num_mpz_t());
    }
    if (g != 0) {
        for (auto &[mono, z] : out) {
            mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
        }
    }
    return out;
}

EisensteinDecomposition decompose(const QSeries &f, int weight)
{
    const auto basis = monomial_basis(weight);
    const auto m = basis.size();
    if (!f.bounded() || f.trunc_x2() % 2 != 0) {
        throw std::invalid_argument("decompose: series needs a finite integer truncation order");
    }
    const auto rows = static_cast<std::size_t>(f.order());
    if (rows < m + 2) {
        throw std::invalid_argument("decompose: weight " + std::to_string(weight) + " needs order >= " + std::to_string(m + 2) +
                                    ", got " + std::to_string(rows));
    }
    if (f.has_half_integer_exponents()) {
        throw NotInSpan("decompose: series has half-integer exponents");
    }

    // Augmented system: row r is the q^r coefficient, columns are monomials,
    // the last column is f.
    EisensteinExpansions expansions(static_cast<int>(rows));
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(m + 1));
    for (std::size_t col = 0; col < m; ++col) {
        const QSeries s = expansions.monomial(basis[col]);
        for (const auto &[k, c] : s.terms()) {
            a[static_cast<std::size_t>(k / 2)][col] = c;
        }
    }
    for (const auto &[k, c] : f.terms()) {
        a[static_cast<std::size_t>(k / 2)][m] = c;
    }

    // Gauss-Jordan elimination; the pivot is the first row with a nonzero
    // entry in the current column.
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t r = pivot_row;
        while (r < rows && a[r][col] == 0) {
            ++r;
        }
        if (r == rows) {
            throw SingularSystem("decompose: basis expansions are linearly dependent through q^" + std::to_string(rows - 1) +
                                 " at weight " + std::to_string(weight));
        }
        std::swap(a[r], a[pivot_row]);
        const Rational inv = 1 / a[pivot_row][col];
        for (std::size_t c = col; c <= m; ++c) {
            a[pivot_row][c] *= inv;
        }
        for (std::size_t other = 0; other < rows; ++other) {
            if (other == pivot_row || a[other][col] == 0) {
                continue;
            }
            const Rational factor = a[other][col];
            for (std::size_t c = col; c <= m; ++c) {
                a[other][c] -= factor * a[pivot_row][c];
            }
        }
        ++pivot_row;
    }
    for (std::size_t r = m; r < rows; ++r) {
        if (a[r][m] != 0) {
            throw NotInSpan("decompose: series is not a weight-" + std::to_string(weight) +
                            " combination of E2, E4, E6 through q^" + std::to_string(rows - 1));
        }
    }

    EisensteinDecomposition out;
    out.weight = weight;
    out.terms.reserve(m);
    for (std::size_t col = 0; col < m; ++col) {
        out.terms.emplace_back(basis[col], a[col][m]);
    }
    return out;
}

std::size_t basis_rank(int weight, int order)
{
    if (order < 1) {
        throw std::invalid_argument("basis_rank: order must be positive");
    }
    const auto basis = monomial_basis(weight);
    const auto rows = static_cast<std::size_t>(order);
    EisensteinExpansions expansions(order);
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(basis.size()));
    for (std::size_t col = 0; col < basis.size(); ++col) {
        const QSeries s = expansions.monomial(basis[col]);
        for (const auto &[k, c] : s.terms()) {
            a[static_cast<std::size_t>(k / 2)][col] = c;
        }
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < basis.size() && rank < rows; ++col) {
        std::size_t r = rank;
        while (r < rows && a[r][col] == 0) {
            ++r;
        }
        if (r == rows) {
            continue;
        }
        std::swap(a[r], a[rank]);
        for (std::size_t other = rank + 1; other < rows; ++other) {
            if (a[other][col] == 0) {
                continue;
            }
            const Rational factor = a[other][col] / a[rank][col];
            for (std::size_t c = col; c < basis.size(); ++c) {
                a[other][c] -= factor * a[rank][c];
            }
        }
        ++rank;
    }
    return rank;
}

// ---------------------------------------------------------------------------

std::vector<std::pair<EisensteinMonomial, unsigned long>> ReducedDecomposition::nonzero_terms() const
{
    std::vector<std::pair<EisensteinMonomial, unsigned long>> out;
    for (const auto &t : terms) {
        if (t.second != 0) {
            out.push_back(t);
        }
    }
    return out;
}

bool ReducedDecomposition::is_zero() const
{
    return nonzero_terms().empty();
}

ReducedDecomposition reduce_decomposition_mod(const EisensteinDecomposition &d, unsigned long p)
{
    if (!is_prime(p)) {
        throw std::invalid_argument("reduce_decomposition_mod: modulus " + std::to_string(p) + " is not prime");
    }
    ReducedDecomposition out;
    out.weight = d.weight;
    out.p = p;
    const Integer modulus(p);
    for (const auto &[mono, z] : d.renormalized()) {
        out.terms.emplace_back(mono, mod_floor(z, modulus).get_ui());
    }
    return out;
}

std::map<int, unsigned long> substitute_e4_one_e6_e2(const ReducedDecomposition &d)
{
    std::map<int, unsigned long> collapsed;
    for (const auto &[mono, r] : d.terms) {
        auto &slot = collapsed[mono.e2 + mono.e6];
        slot = (slot + r) % d.p;
    }
    std::erase_if(collapsed, [](const auto &kv) { return kv.second == 0; });
    return collapsed;
}

EisensteinDecomposition decompose_kummer_difference(int i, int j, int order)
{
    if (i < 1 || j <= i || (j - i) % 2 != 0) {
        throw std::invalid_argument("decompose_kummer_difference: need 1 <= i < j with j - i even");
    }
    const int weight = 6 * j;
    if (order == 0) {
        order = 3 * static_cast<int>(monomial_basis(weight).size());
    }
    const LambdaDistribution dist(order - 1);
    const QSeries lower = abar(i, order, dist).series;
    const QSeries upper = abar(j, order, dist).series;
    const QSeries lift = pow(eisenstein(4, order), static_cast<unsigned>(3 * (j - i) / 2));
    return decompose(upper - lift * lower, weight);
}

} // namespace qmf
