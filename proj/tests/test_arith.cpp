#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

#include <qmf/arith.hpp>
#include <qmf/forms.hpp>

#include <map>

using namespace qmf;

namespace
{

std::map<int, long> residues(const std::vector<std::pair<int, Integer>> &rs)
{
    std::map<int, long> out;
    for (const auto &[e, r] : rs) {
        out[e] = r.get_si();
    }
    return out;
}

Integer product(std::initializer_list<std::pair<unsigned long, unsigned>> factors)
{
    Integer out = 1;
    for (const auto &[base, exp] : factors) {
        Integer t;
        mpz_ui_pow_ui(t.get_mpz_t(), base, exp);
        out *= t;
    }
    return out;
}

} // namespace

TEST_CASE("totient")
{
    CHECK(totient(1) == 1);
    CHECK(totient(5) == 4);
    CHECK(totient(9) == 6);
    for (std::uint64_t m = 1; m <= 500; ++m) {
        CHECK(totient(m) == oracle::totient_brute(m));
    }
    CHECK_THROWS_AS(totient(0), std::invalid_argument);
}

TEST_CASE("prime_power")
{
    CHECK(prime_power(3, 4) == 81);
    CHECK(prime_power(7, 0) == 1);
    CHECK_THROWS_AS(prime_power(2, 64), std::overflow_error);
}

TEST_CASE("kummer_pairs")
{
    auto contains = [](const std::vector<std::pair<int, int>> &v, std::pair<int, int> x) {
        return std::find(v.begin(), v.end(), x) != v.end();
    };
    CHECK(contains(kummer_pairs(5, 1, 4), {2, 4}));
    CHECK(contains(kummer_pairs(3, 2, 6), {3, 6}));
    CHECK(kummer_pairs(2, 1, 5).size() == 10);
    CHECK(kummer_pairs(5, 1, 4) == std::vector<std::pair<int, int>>{{1, 3}, {2, 4}});
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL}) {
        for (unsigned s = 1; s <= 2; ++s) {
            const auto phi = static_cast<int>(totient(prime_power(p, s)));
            for (const auto &[i, j] : kummer_pairs(p, s, 10)) {
                CHECK(1 <= i);
                CHECK(i < j);
                CHECK(j <= 10);
                CHECK((2 * j - 2 * i) % phi == 0);
            }
        }
    }
}

TEST_CASE("check_kummer on the worked examples")
{
    SUBCASE("Abar_2 = Abar_4 mod 5 through q^24")
    {
        const auto r = check_kummer(2, 4, 5, 1, 25);
        CHECK(r.holds);
        CHECK_FALSE(r.first_failure.has_value());
        CHECK(r.modulus() == 5);
        const std::map<int, long> expected = {{2, 1},  {5, 3},  {7, 4},  {8, 4},  {10, 3}, {12, 3},
                                              {13, 2}, {15, 1}, {20, 4}, {22, 2}, {23, 4}};
        CHECK(residues(reduce_series_mod(abar(2, 25).series, 5)) == expected);
        CHECK(residues(reduce_series_mod(abar(4, 25).series, 5)) == expected);
    }
    SUBCASE("Abar_3 = Abar_6 mod 9 through q^15")
    {
        const auto r = check_kummer(3, 6, 3, 2, 16);
        CHECK(r.holds);
        CHECK(r.modulus() == 9);
        const std::map<int, long> expected = {{2, 1},  {3, 8}, {5, 2},  {6, 6},  {8, 5},
                                              {9, 3}, {11, 1}, {12, 5}, {14, 2}, {15, 3}};
        CHECK(residues(reduce_series_mod(abar(3, 16).series, 9)) == expected);
        CHECK(residues(reduce_series_mod(abar(6, 16).series, 9)) == expected);
    }
    SUBCASE("reflexive")
    {
        for (int i = 1; i <= 4; ++i) {
            CHECK(check_kummer(i, i, 7, 3, 12).holds);
        }
    }
    SUBCASE("a failing pair reports its first exponent")
    {
        // 80 - 728 = -648 = -2^3 3^4 is not divisible by 5.
        const auto r = check_kummer(2, 3, 5, 1, 10);
        CHECK_FALSE(r.holds);
        REQUIRE(r.first_failure.has_value());
        CHECK(r.first_failure->exponent == 3);
        CHECK(r.first_failure->residue_i == 0);
        CHECK(r.first_failure->residue_j == 3);
    }
    SUBCASE("preconditions")
    {
        CHECK_THROWS_AS(check_kummer(0, 2, 5, 1, 10), std::invalid_argument);
        CHECK_THROWS_AS(check_kummer(1, 2, 4, 1, 10), std::invalid_argument);
    }
}

TEST_CASE("Kummer sweep at order 30, i_max = 8")
{
    const LambdaDistribution dist(29);
    const std::pair<std::uint64_t, unsigned> moduli[] = {{2, 1}, {2, 2}, {3, 1}, {3, 2}, {5, 1}, {7, 1}};
    for (const auto &[p, s] : moduli) {
        for (const auto &[i, j] : kummer_pairs(p, s, 8)) {
            CAPTURE(p);
            CAPTURE(s);
            CAPTURE(i);
            CAPTURE(j);
            CHECK(check_kummer(i, j, p, s, 30, dist).holds);
        }
    }

    // Pairs outside the hypothesis for p = 5: reported, not asserted.
    int failing = 0;
    int total = 0;
    for (int i = 1; i <= 8; ++i) {
        for (int j = i + 1; j <= 8; ++j) {
            if ((2 * j - 2 * i) % 4 != 0) {
                ++total;
                failing += check_kummer(i, j, 5, 1, 30, dist).holds ? 0 : 1;
            }
        }
    }
    MESSAGE("mod 5 pairs outside the hypothesis: ", failing, " of ", total, " fail");
}

TEST_CASE("reduce_series_mod")
{
    QSeries s(20);
    s.add_term(2, -1);
    s.add_term(4, 10);
    s.add_term(6, 7);
    CHECK(reduce_series_mod(s, 5) == std::vector<std::pair<int, Integer>>{{1, 4}, {3, 2}});
    QSeries half(10);
    half.add_term(1, 1);
    CHECK_THROWS_AS(reduce_series_mod(half, 5), std::invalid_argument);
}

TEST_CASE("theorem2_applicable")
{
    CHECK(theorem2_applicable(3, 3));
    CHECK(theorem2_applicable(1, 13));
    for (int k = 1; k <= 20; ++k) {
        CHECK(theorem2_applicable(k, 2));
        CHECK(theorem2_applicable(k, 5));
    }
    // 6 mod 6 = 0
    CHECK_FALSE(theorem2_applicable(1, 7));
    // 12 mod 6 = 0
    CHECK_FALSE(theorem2_applicable(2, 7));
    // 6 mod 10 = 6
    CHECK(theorem2_applicable(1, 11));
}

TEST_CASE("padic_valuation")
{
    CHECK(padic_valuation(Integer(728), 3) == 0U);
    CHECK(padic_valuation(Integer(-81), 3) == 4U);
    CHECK_FALSE(padic_valuation(Integer(0), 3).has_value());
}

TEST_CASE("valuation table (3, 3, 4)")
{
    const auto t = padic_valuations(3, 3, 4);
    CHECK(t.k == 3);
    CHECK(t.p == 3);
    CHECK(t.hypothesis_holds);
    REQUIRE(t.rows.size() == 4);
    const Integer expected[] = {
        product({{2, 3}, {7, 1}, {13, 1}}),
        product({{2, 5}, {3, 1}, {5, 1}, {13, 2}, {89, 1}, {281, 1}}),
        product({{2, 4}, {3, 3}, {5, 1}, {7, 1}, {617, 1}, {187275523, 1}}),
        product({{2, 5}, {3, 5}, {5, 1}, {7, 2}, {794953, 1}, {824956519, 1}}),
    };
    const char *printed[] = {"728", "2028730080", "1747100845087920", "1249380857829754167840"};
    const unsigned valuations[] = {0, 1, 3, 5};
    for (std::size_t r = 0; r < 4; ++r) {
        CHECK(t.rows[r].n == static_cast<int>(r) + 1);
        CHECK(t.rows[r].coefficient == expected[r]);
        CHECK(t.rows[r].coefficient == Integer(printed[r]));
        CHECK(t.rows[r].valuation == valuations[r]);
    }
}

TEST_CASE("valuation table (2, 5, 2)")
{
    const auto t = padic_valuations(2, 5, 2);
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[0].coefficient == 9248);
    CHECK(t.rows[0].valuation == 0U);
    CHECK(t.rows[1].coefficient == Integer("7421159040"));
    CHECK(t.rows[1].valuation == 1U);
}

TEST_CASE("valuation table limits")
{
    CHECK_THROWS_AS(padic_valuations(2, 3, 5), std::length_error);
    CHECK_THROWS_AS(padic_valuations(2, 3, 0), std::invalid_argument);
}
