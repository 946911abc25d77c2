#ifndef QMF_TESTS_ORACLES_HPP
#define QMF_TESTS_ORACLES_HPP

// Independent reference computations used only by the tests. None of these
// call into the library's algorithms.

#include <qmf/numeric.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

namespace qmf::oracle
{

// Schoolbook product of dense integer polynomials, truncated to `len`
// coefficients.
inline std::vector<Integer> poly_mul(const std::vector<Integer> &a, const std::vector<Integer> &b, std::size_t len)
{
    std::vector<Integer> out(len, 0);
    for (std::size_t i = 0; i < a.size() && i < len; ++i) {
        for (std::size_t j = 0; j < b.size() && i + j < len; ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

// prod_{m=1}^{n_factors} (1 - q^m) expanded factor by factor.
inline std::vector<Integer> euler_product(int n_factors, std::size_t len)
{
    std::vector<Integer> prod(len, 0);
    prod[0] = 1;
    for (int m = 1; m <= n_factors; ++m) {
        std::vector<Integer> factor(static_cast<std::size_t>(m) + 1, 0);
        factor[0] = 1;
        factor[static_cast<std::size_t>(m)] = -1;
        prod = poly_mul(prod, factor, len);
    }
    return prod;
}

// Coefficients of prod (1 - q^m) from the pentagonal number theorem:
// sum_k (-1)^k q^{k(3k-1)/2}, k ranging over all integers.
inline std::vector<int> pentagonal_series(std::size_t len)
{
    std::vector<int> out(len, 0);
    for (long k = -static_cast<long>(len); k <= static_cast<long>(len); ++k) {
        const long e = k * (3 * k - 1) / 2;
        if (e >= 0 && static_cast<std::size_t>(e) < len) {
            out[static_cast<std::size_t>(e)] += (k % 2 == 0) ? 1 : -1;
        }
    }
    return out;
}

// p(0..n) by Euler's pentagonal recurrence.
inline std::vector<Integer> partition_numbers(int n)
{
    std::vector<Integer> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Integer total = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > m) {
                break;
            }
            const int sign = (k % 2 == 1) ? 1 : -1;
            total += sign * p[static_cast<std::size_t>(m - g1)];
            if (g2 <= m) {
                total += sign * p[static_cast<std::size_t>(m - g2)];
            }
        }
        p[static_cast<std::size_t>(m)] = total;
    }
    return p;
}

// sigma_k(m) by testing every candidate divisor.
inline Integer sigma_brute(unsigned k, unsigned m)
{
    Integer sum = 0;
    for (unsigned d = 1; d <= m; ++d) {
        if (m % d == 0) {
            Integer t;
            mpz_ui_pow_ui(t.get_mpz_t(), d, k);
            sum += t;
        }
    }
    return sum;
}

inline std::uint64_t totient_brute(std::uint64_t m)
{
    std::uint64_t count = 0;
    for (std::uint64_t a = 1; a <= m; ++a) {
        if (std::gcd(a, m) == 1) {
            ++count;
        }
    }
    return count;
}

// Enumerate every pair (A, B) of equal-size sets of positive half-integers
// with sum(A) + sum(B) = d, and return the sorted multiset of
// (sum A^2 - sum B^2) / 2. Half-integers are handled doubled (odd numbers).
inline std::vector<Integer> lambda_multiset_from_set_pairs(int d)
{
    // (size, doubled sum) -> list of doubled sums of squares
    std::map<std::pair<int, int>, std::vector<long>> subsets;
    std::function<void(int, int, int, long)> grow = [&](int next_odd, int size, int sum_x2, long sq_x4) {
        subsets[{size, sum_x2}].push_back(sq_x4);
        for (int v = next_odd; sum_x2 + v <= 2 * d; v += 2) {
            grow(v + 2, size + 1, sum_x2 + v, sq_x4 + static_cast<long>(v) * v);
        }
    };
    grow(1, 0, 0, 0);

    std::vector<Integer> out;
    for (const auto &[key_a, squares_a] : subsets) {
        const auto [size, sum_a] = key_a;
        const auto it = subsets.find({size, 2 * d - sum_a});
        if (it == subsets.end()) {
            continue;
        }
        for (long sa : squares_a) {
            for (long sb : it->second) {
                // doubled values: r = v/2, so r^2 = v^2/4 and lambda = (sa - sb)/8
                out.emplace_back((sa - sb) / 8);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Number of (a, b, c) >= 0 with 2a + 4b + 6c = w, by brute force.
inline int monomial_count(int w)
{
    int count = 0;
    for (int a = 0; 2 * a <= w; ++a) {
        for (int b = 0; 4 * b <= w; ++b) {
            for (int c = 0; 6 * c <= w; ++c) {
                count += (2 * a + 4 * b + 6 * c == w) ? 1 : 0;
            }
        }
    }
    return count;
}

} // namespace qmf::oracle

#endif
