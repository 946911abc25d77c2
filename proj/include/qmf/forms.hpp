#ifndef QMF_FORMS_HPP
#define QMF_FORMS_HPP

#include <qmf/partitions.hpp>
#include <qmf/series.hpp>

#include <cstdint>

namespace qmf
{

// Normalized form with coprime integer coefficients, leading term q^2.
struct ABarForm
{
    int n = 0;
    QSeries series;

    int weight() const noexcept { return 6 * n; }
};

// Coefficient of X^{2n} in Theta_0(X, q).
struct AForm
{
    int n = 0;
    QSeries series;

    int weight() const noexcept { return 6 * n; }
};

// Abar_n = 1/2 * prod (1 - q^m) * sum_d S_{2n}(d) q^d, exact below q^order.
//
// Requires n >= 1 and order >= 3; throws std::invalid_argument otherwise.
// Integrality, coprimality and the leading q^2 coefficient are checked and a
// violation throws std::logic_error.
ABarForm abar(int n, int order);
// Same, reusing a precomputed distribution (max_degree() >= order - 1).
ABarForm abar(int n, int order, const LambdaDistribution &dist);

// A_n = 1/(2n)! * prod (1 - q^m) * sum_d S_{2n}(d) q^d. Requires n >= 0 and
// order >= 1.
AForm a_form(int n, int order);
AForm a_form(int n, int order, const LambdaDistribution &dist);

// Theta_0 assembled from the partition route: X^{2n} coefficient is A_n,
// odd X-degrees are zero.
XSeries theta0_partition(int x_trunc, int order);

// Theta_0 by expanding the truncated triple product directly:
//
//   prod_{m < order} (1 - q^m)
//     * prod_{n odd, n/2 < order} (1 - e^{n^2 X/8} q^{n/2} zeta)(1 - e^{-n^2 X/8} q^{n/2} zeta^{-1})
//
// with each exponential expanded through X^{x_trunc}, then taking the zeta^0
// coefficient. Dropped factors only touch q-exponents >= order. Slow; kept
// as an independent check of the partition route.
//
// Throws std::invalid_argument for odd or negative x_trunc and order < 1.
XSeries theta0_direct(int x_trunc, int order);

// Coefficient of X^{2g-2} in log Theta_0. Requires g >= 2 and order >= 1.
QSeries f_g(int g, int order);

} // namespace qmf

#endif
