#ifndef QMF_EISENSTEIN_HPP
#define QMF_EISENSTEIN_HPP

#include <qmf/series.hpp>

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qmf
{

// sigma_k(m) = sum of d^k over divisors d of m.
Integer divisor_sigma(unsigned k, std::uint64_t m);

// Level-1 Eisenstein series normalized to constant term 1:
//   E2 = 1 - 24 sum sigma_1(m) q^m
//   E4 = 1 + 240 sum sigma_3(m) q^m
//   E6 = 1 - 504 sum sigma_5(m) q^m
// exact below q^order. Throws std::invalid_argument unless k is 2, 4 or 6.
QSeries eisenstein(int k, int order);

// E2^e2 E4^e4 E6^e6
struct EisensteinMonomial
{
    int e2 = 0;
    int e4 = 0;
    int e6 = 0;

    int weight() const noexcept { return 2 * e2 + 4 * e4 + 6 * e6; }

    friend auto operator<=>(const EisensteinMonomial &, const EisensteinMonomial &) = default;
};

// All monomials of the given weight, lexicographically descending in
// (e2, e4, e6). Throws std::invalid_argument for odd or nonpositive weight.
std::vector<EisensteinMonomial> monomial_basis(int weight);

// Expansions of monomials at a fixed truncation, sharing the powers of E2,
// E4 and E6.
class EisensteinExpansions
{
public:
    explicit EisensteinExpansions(int order);

    int order() const noexcept { return order_; }
    QSeries monomial(const EisensteinMonomial &m);

private:
    const QSeries &power(int k, int e);

    int order_;
    std::map<std::pair<int, int>, QSeries> powers_;
};

class SingularSystem : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class NotInSpan : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct EisensteinDecomposition
{
    int weight = 0;
    // One entry per basis monomial, in monomial_basis(weight) order.
    std::vector<std::pair<EisensteinMonomial, Rational>> terms;

    Rational coefficient(const EisensteinMonomial &m) const;
    bool is_zero() const;
    // Least common multiple of the coefficient denominators.
    Integer common_denominator() const;
    QSeries evaluate(int order) const;

    // Clear the common denominator and divide by the (positive) content of
    // the resulting integer vector. The zero decomposition maps to zeros.
    std::vector<std::pair<EisensteinMonomial, Integer>> renormalized() const;
};

// Solve exactly for f as a combination of the weight-w monomials.
//
// f must have integer exponents and a bounded integer truncation order of
// at least basis size + 2. All rows q^0 .. q^{order-1} enter the system, so
// a consistent solution certifies the residual vanishes through the whole
// available range.
//
// Throws SingularSystem if the coefficient matrix is rank deficient,
// NotInSpan if the system is inconsistent, std::invalid_argument on bad
// input.
EisensteinDecomposition decompose(const QSeries &f, int weight);

// Rank of the matrix of q^0 .. q^{order-1} coefficients of the weight-w
// monomials.
std::size_t basis_rank(int weight, int order);

struct ReducedDecomposition
{
    int weight = 0;
    unsigned long p = 0;
    // Residues in [0, p), basis order, zero residues included.
    std::vector<std::pair<EisensteinMonomial, unsigned long>> terms;

    std::vector<std::pair<EisensteinMonomial, unsigned long>> nonzero_terms() const;
    bool is_zero() const;
};

// Renormalize and reduce coefficients mod p. Throws std::invalid_argument
// unless p is prime.
ReducedDecomposition reduce_decomposition_mod(const EisensteinDecomposition &d, unsigned long p);

// Apply E4 -> 1 and E6 -> E2 to a reduced decomposition; returns the
// residues of the resulting polynomial in E2, keyed by E2-degree (nonzero
// residues only). Both substitutions are congruences mod 5.
std::map<int, unsigned long> substitute_e4_one_e6_e2(const ReducedDecomposition &d);

// Decomposition of Abar_j - E4^{3(j-i)/2} Abar_i at weight 6j. The E4 power
// lifts Abar_i to the weight of Abar_j; E4 = 1 mod 240, so the lift is
// invisible to congruences modulo divisors of 240. Requires
// 1 <= i < j with j - i even. `order` defaults to three times the basis size.
EisensteinDecomposition decompose_kummer_difference(int i, int j, int order = 0);

} // namespace qmf

#endif
