#ifndef QMF_ARITH_HPP
#define QMF_ARITH_HPP

#include <qmf/partitions.hpp>
#include <qmf/series.hpp>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace qmf
{

// Euler's phi by trial factorization. Throws std::invalid_argument for 0.
std::uint64_t totient(std::uint64_t m);

// p^s, throwing std::overflow_error if it does not fit in 64 bits.
std::uint64_t prime_power(std::uint64_t p, unsigned s);

// All 1 <= i < j <= i_max with 2i = 2j mod phi(p^s).
std::vector<std::pair<int, int>> kummer_pairs(std::uint64_t p, unsigned s, int i_max);

struct CongruenceFailure
{
    int exponent = 0;
    Integer residue_i;
    Integer residue_j;
};

struct CongruenceReport
{
    int i = 0;
    int j = 0;
    std::uint64_t p = 0;
    unsigned s = 0;
    int order = 0;
    bool holds = false;
    // Lowest exponent where the residues differ.
    std::optional<CongruenceFailure> first_failure;

    Integer modulus() const;
};

// Compare Abar_i and Abar_j coefficientwise mod p^s below q^order. Reports
// facts only; the hypothesis 2i = 2j mod phi(p^s) is not required. i and j
// must be >= 1.
CongruenceReport check_kummer(int i, int j, std::uint64_t p, unsigned s, int order);
CongruenceReport check_kummer(int i, int j, std::uint64_t p, unsigned s, int order, const LambdaDistribution &dist);

// Nonzero residues (in [0, m)) of an integer-coefficient series, by
// increasing integer exponent.
std::vector<std::pair<int, Integer>> reduce_series_mod(const QSeries &s, const Integer &m);

// p < 7, or 6k mod (p - 1) in {4, 6, 8, 10, 14}.
bool theorem2_applicable(int k, std::uint64_t p);

// Exponent of p in z; nullopt for z = 0 (infinite valuation).
std::optional<unsigned> padic_valuation(const Integer &z, std::uint64_t p);

struct ValuationRow
{
    int n = 0;
    Integer coefficient; // a_k(p^n)
    std::optional<unsigned> valuation;
};

struct ValuationTable
{
    int k = 0;
    std::uint64_t p = 0;
    bool hypothesis_holds = false;
    std::vector<ValuationRow> rows;
};

// a_k(p^n) and v_p(a_k(p^n)) for n = 1..n_max, from Abar_k at order
// p^{n_max} + 1. Throws std::length_error when that order is beyond what
// the partition sweep supports.
ValuationTable padic_valuations(int k, std::uint64_t p, int n_max);

} // namespace qmf

#endif
