#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

#include <qmf/eisenstein.hpp>
#include <qmf/forms.hpp>

#include <random>

using namespace qmf;

namespace
{

using M = EisensteinMonomial;

Rational frac(const char *num, const char *den)
{
    Rational r{Integer(num), Integer(den)};
    r.canonicalize();
    return r;
}

} // namespace

TEST_CASE("divisor_sigma against trial division")
{
    for (unsigned k = 0; k <= 7; ++k) {
        for (unsigned m = 1; m <= 200; ++m) {
            CHECK(divisor_sigma(k, m) == oracle::sigma_brute(k, m));
        }
    }
}

TEST_CASE("Eisenstein expansions")
{
    const auto e2 = eisenstein(2, 5);
    const auto e4 = eisenstein(4, 5);
    const auto e6 = eisenstein(6, 5);
    const long c2[] = {1, -24, -72, -96, -168};
    const long c4[] = {1, 240, 2160, 6720, 17520};
    const long c6[] = {1, -504, -16632, -122976, -532728};
    for (int e = 0; e < 5; ++e) {
        CHECK(e2.coeff(e) == c2[e]);
        CHECK(e4.coeff(e) == c4[e]);
        CHECK(e6.coeff(e) == c6[e]);
    }
    CHECK(e2.trunc_x2() == 10);
    CHECK_THROWS_AS(eisenstein(8, 5), std::invalid_argument);
}

TEST_CASE("E4 = 1 and E6 = E2 mod 5 through q^39")
{
    const auto e2 = eisenstein(2, 40);
    const auto e4 = eisenstein(4, 40);
    const auto e6 = eisenstein(6, 40);
    for (int e = 0; e < 40; ++e) {
        const Integer d4 = e4.coeff(e).get_num() - (e == 0 ? 1 : 0);
        const Integer d6 = e6.coeff(e).get_num() - e2.coeff(e).get_num();
        CHECK(mpz_divisible_ui_p(d4.get_mpz_t(), 5));
        CHECK(mpz_divisible_ui_p(d6.get_mpz_t(), 5));
    }
}

TEST_CASE("monomial basis")
{
    CHECK(monomial_basis(2) == std::vector<M>{{1, 0, 0}});
    CHECK(monomial_basis(12) ==
          std::vector<M>{{6, 0, 0}, {4, 1, 0}, {3, 0, 1}, {2, 2, 0}, {1, 1, 1}, {0, 3, 0}, {0, 0, 2}});
    CHECK(monomial_basis(24).size() == 19);
    for (int w = 2; w <= 60; w += 2) {
        const auto basis = monomial_basis(w);
        CHECK(basis.size() == static_cast<std::size_t>(oracle::monomial_count(w)));
        for (std::size_t i = 0; i < basis.size(); ++i) {
            CHECK(basis[i].weight() == w);
            if (i > 0) {
                CHECK(basis[i - 1] > basis[i]);
            }
        }
    }
    CHECK_THROWS_AS(monomial_basis(0), std::invalid_argument);
    CHECK_THROWS_AS(monomial_basis(7), std::invalid_argument);
    CHECK_THROWS_AS(monomial_basis(-4), std::invalid_argument);
}

TEST_CASE("basis has full rank at truncation order = basis size")
{
    for (int w = 2; w <= 24; w += 2) {
        const auto m = monomial_basis(w).size();
        CHECK(basis_rank(w, static_cast<int>(m)) == m);
    }
}

TEST_CASE("decompose of Abar_2 at weight 12")
{
    const auto d = decompose(abar(2, 21).series, 12);
    const Integer den("447897600");
    CHECK(d.common_denominator() == den);
    const std::pair<M, long> expected[] = {
        {{6, 0, 0}, -875}, {{4, 1, 0}, 2220}, {{2, 2, 0}, -1791}, {{0, 3, 0}, 1050},
        {{3, 0, 1}, 580},  {{1, 1, 1}, -1788}, {{0, 0, 2}, 604},
    };
    for (const auto &[mono, num] : expected) {
        Rational c(num, 1);
        c /= den;
        CHECK(d.coefficient(mono) == c);
    }
    CHECK(d.evaluate(21) == abar(2, 21).series);
}

TEST_CASE("decompose of Abar_4 at weight 24")
{
    const auto d = decompose(abar(4, 40).series, 24);
    const char *den = "60183678025728000";
    CHECK(d.common_denominator() == Integer(den));
    const std::pair<M, const char *> expected[] = {
        {{12, 0, 0}, "-7072690625"},   {{10, 1, 0}, "29791020000"},    {{8, 2, 0}, "-17984909250"},
        {{6, 3, 0}, "-41175027180"},   {{4, 4, 0}, "-73855453833"},    {{2, 5, 0}, "692323272900"},
        {{0, 6, 0}, "41478466500"},    {{9, 0, 1}, "33993155000"},     {{7, 1, 1}, "-298920573000"},
        {{5, 2, 1}, "920662991640"},   {{3, 3, 1}, "-1574832872088"},  {{1, 4, 1}, "-887970913200"},
        {{6, 0, 2}, "70320075000"},    {{4, 1, 2}, "-283741244640"},   {{2, 2, 2}, "1785182642712"},
        {{0, 3, 2}, "189036658800"},   {{3, 0, 3}, "-189291716320"},   {{1, 1, 3}, "-405118626528"},
        {{0, 0, 4}, "17175744112"},
    };
    CHECK(std::size(expected) == d.terms.size());
    for (const auto &[mono, num] : expected) {
        CHECK(d.coefficient(mono) == frac(num, den));
    }
}

TEST_CASE("Abar_n lies in the weight-6n span for n <= 4")
{
    for (int n = 1; n <= 4; ++n) {
        const int order = 3 * static_cast<int>(monomial_basis(6 * n).size());
        const auto f = abar(n, order).series;
        const auto d = decompose(f, 6 * n);
        CHECK(d.evaluate(order) == f);
    }
}

TEST_CASE("decompose round trip on random combinations, weight <= 18")
{
    std::mt19937 rng(1729);
    std::uniform_int_distribution<int> num(-50, 50);
    std::uniform_int_distribution<int> den(1, 12);
    for (int w = 2; w <= 18; w += 2) {
        const auto basis = monomial_basis(w);
        for (int trial = 0; trial < 5; ++trial) {
            EisensteinDecomposition d;
            d.weight = w;
            for (const auto &mono : basis) {
                Rational c(num(rng), den(rng));
                c.canonicalize();
                d.terms.emplace_back(mono, c);
            }
            const auto back = decompose(d.evaluate(3 * static_cast<int>(basis.size())), w);
            CHECK(back.terms == d.terms);
        }
    }
}

TEST_CASE("decompose errors")
{
    SUBCASE("wrong weight")
    {
        CHECK_THROWS_AS(decompose(abar(2, 60).series, 24), NotInSpan);
    }
    SUBCASE("half-integer exponents")
    {
        auto f = abar(2, 21).series;
        f.add_term(5, 1);
        CHECK_THROWS_AS(decompose(f, 12), NotInSpan);
    }
    SUBCASE("too few rows")
    {
        CHECK_THROWS_AS(decompose(abar(2, 8).series, 12), std::invalid_argument);
        CHECK_THROWS_AS(decompose(QSeries::constant(1), 12), std::invalid_argument);
    }
    SUBCASE("zero series decomposes to zero")
    {
        const auto d = decompose(QSeries(40), 12);
        CHECK(d.is_zero());
        CHECK(d.terms.size() == 7);
        CHECK(reduce_decomposition_mod(d, 5).is_zero());
    }
}

TEST_CASE("mod 5 reduction of the Kummer difference")
{
    const std::vector<std::pair<M, unsigned long>> twos = {
        {{4, 4, 0}, 2}, {{3, 3, 1}, 2}, {{2, 2, 2}, 2}, {{1, 1, 3}, 2}, {{0, 0, 4}, 2}};

    SUBCASE("Abar_4 - E4^3 Abar_2")
    {
        const auto diff = decompose_kummer_difference(2, 4);
        const auto reduced = reduce_decomposition_mod(diff, 5);
        CHECK(reduced.weight == 24);
        CHECK(reduced.p == 5);
        CHECK(reduced.terms.size() == 19);
        CHECK(reduced.nonzero_terms() == twos);
        CHECK(substitute_e4_one_e6_e2(reduced).empty());
    }
    SUBCASE("E4^3 Abar_2 - Abar_4 gives the negation")
    {
        const int order = 57;
        const auto e4 = eisenstein(4, order);
        const auto f = e4 * e4 * e4 * abar(2, order).series - abar(4, order).series;
        const auto reduced = reduce_decomposition_mod(decompose(f, 24), 5);
        for (const auto &[mono, residue] : reduced.nonzero_terms()) {
            CHECK(residue == 3);
        }
        CHECK(reduced.nonzero_terms().size() == 5);
    }
    SUBCASE("renormalization has content 1")
    {
        const auto r = decompose_kummer_difference(2, 4).renormalized();
        Integer g = 0;
        for (const auto &[mono, z] : r) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
        }
        CHECK(g == 1);
    }
    SUBCASE("preconditions")
    {
        CHECK_THROWS_AS(decompose_kummer_difference(2, 3), std::invalid_argument);
        CHECK_THROWS_AS(decompose_kummer_difference(0, 2), std::invalid_argument);
        CHECK_THROWS_AS(decompose_kummer_difference(4, 2), std::invalid_argument);
        CHECK_THROWS_AS(reduce_decomposition_mod(decompose_kummer_difference(2, 4), 4), std::invalid_argument);
        CHECK_THROWS_AS(reduce_decomposition_mod(decompose_kummer_difference(2, 4), 1), std::invalid_argument);
    }
}
