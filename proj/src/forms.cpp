#include <qmf/forms.hpp>

#include <stdexcept>
#include <string>

namespace qmf
{

namespace
{

// sum_{d < order} S_k(d) q^d
QSeries power_sum_series(unsigned k, int order, const LambdaDistribution &dist)
{
    if (dist.max_degree() < order - 1) {
        throw std::invalid_argument("lambda distribution covers degrees up to " + std::to_string(dist.max_degree()) +
                                    ", need " + std::to_string(order - 1));
    }
    QSeries s(2 * static_cast<QSeries::Key>(order));
    for (int d = 0; d < order; ++d) {
        s.add_term(2 * d, Rational(dist.power_sum(d, k)));
    }
    return s;
}

Integer content(const QSeries &s)
{
    Integer g = 0;
    for (const auto &[k, c] : s.terms()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    }
    return g;
}

} // namespace

ABarForm abar(int n, int order)
{
    if (n < 1) {
        throw std::invalid_argument("abar: n must be >= 1, got " + std::to_string(n));
    }
    if (order < 3) {
        throw std::invalid_argument("abar: order must be >= 3, got " + std::to_string(order));
    }
    return abar(n, order, LambdaDistribution(order - 1));
}

ABarForm abar(int n, int order, const LambdaDistribution &dist)
{
    if (n < 1) {
        throw std::invalid_argument("abar: n must be >= 1, got " + std::to_string(n));
    }
    if (order < 3) {
        throw std::invalid_argument("abar: order must be >= 3, got " + std::to_string(order));
    }
    QSeries twice = eta_like_product(order) * power_sum_series(2 * static_cast<unsigned>(n), order, dist);
    if (!twice.has_integer_coefficients()) {
        throw std::logic_error("abar: non-integral power-sum product");
    }
    for (const auto &[k, c] : twice.terms()) {
        if (!mpz_even_p(c.get_num_mpz_t())) {
            throw std::logic_error("abar: odd coefficient at q^" + std::to_string(k / 2) + " before halving");
        }
    }
    ABarForm form{n, twice * Rational(1, 2)};
    if (form.series.coeff(0) != 0 || form.series.coeff(1) != 0 || form.series.coeff(2) != 1) {
        throw std::logic_error("abar: leading term is not q^2");
    }
    if (content(form.series) != 1) {
        throw std::logic_error("abar: coefficients are not coprime");
    }
    return form;
}

AForm a_form(int n, int order)
{
    if (n < 0) {
        throw std::invalid_argument("a_form: n must be >= 0, got " + std::to_string(n));
    }
    if (order < 1) {
        throw std::invalid_argument("a_form: order must be >= 1, got " + std::to_string(order));
    }
    return a_form(n, order, LambdaDistribution(order - 1));
}

AForm a_form(int n, int order, const LambdaDistribution &dist)
{
    if (n < 0) {
        throw std::invalid_argument("a_form: n must be >= 0, got " + std::to_string(n));
    }
    if (order < 1) {
        throw std::invalid_argument("a_form: order must be >= 1, got " + std::to_string(order));
    }
    QSeries sums = power_sum_series(2 * static_cast<unsigned>(n), order, dist);
    const Rational scale(Integer(1), factorial(2 * static_cast<unsigned>(n)));
    return AForm{n, eta_like_product(order) * sums * scale};
}

XSeries theta0_partition(int x_trunc, int order)
{
    if (x_trunc < 0 || x_trunc % 2 != 0) {
        throw std::invalid_argument("theta0: x_trunc must be a nonnegative even integer");
    }
    if (order < 1) {
        throw std::invalid_argument("theta0: order must be >= 1");
    }
    const LambdaDistribution dist(order - 1);
    XSeries theta(x_trunc, 2 * static_cast<QSeries::Key>(order));
    for (int n = 0; 2 * n <= x_trunc; ++n) {
        theta[2 * n] = a_form(n, order, dist).series;
    }
    return theta;
}

XSeries theta0_direct(int x_trunc, int order)
{
    if (x_trunc < 0 || x_trunc % 2 != 0) {
        throw std::invalid_argument("theta0_direct: x_trunc must be a nonnegative even integer");
    }
    if (order < 1) {
        throw std::invalid_argument("theta0_direct: order must be >= 1");
    }
    const QSeries::Key trunc = 2 * static_cast<QSeries::Key>(order);
    const int band = safe_zeta_band(order);

    // state[c + band] is the zeta^c coefficient.
    std::vector<XSeries> state(static_cast<std::size_t>(2 * band + 1), XSeries(x_trunc, trunc));
    state[static_cast<std::size_t>(band)][0].add_term(0, 1);

    // e^{sign * n^2 X / 8} q^{n/2} as an X-polynomial.
    auto factor_coeff = [&](int n, int sign) {
        XSeries f(x_trunc, trunc);
        const Rational rate(Integer(sign * n * n), Integer(8));
        Rational term = 1;
        for (int k = 0; k <= x_trunc; ++k) {
            f[k].add_term(n, term);
            term *= rate;
            term /= Rational(k + 1);
        }
        return f;
    };

    for (int n = 1; n < 2 * order; n += 2) {
        // (1 - C zeta): new[c] = old[c] - C old[c - 1]; walk c downwards so
        // old[c - 1] is still unmodified.
        const XSeries up = factor_coeff(n, 1);
        for (int c = band; c > -band; --c) {
            const auto &prev = state[static_cast<std::size_t>(c - 1 + band)];
            if (!prev.is_zero()) {
                state[static_cast<std::size_t>(c + band)] -= up * prev;
            }
        }
        // (1 - C' zeta^{-1}): new[c] = old[c] - C' old[c + 1]; walk upwards.
        const XSeries down = factor_coeff(n, -1);
        for (int c = -band; c < band; ++c) {
            const auto &next = state[static_cast<std::size_t>(c + 1 + band)];
            if (!next.is_zero()) {
                state[static_cast<std::size_t>(c + band)] -= down * next;
            }
        }
    }

    XSeries theta = state[static_cast<std::size_t>(band)];
    const QSeries eta = eta_like_product(order);
    for (int k = 0; k <= x_trunc; ++k) {
        theta[k] = theta[k] * eta;
    }
    return theta;
}

QSeries f_g(int g, int order)
{
    if (g < 2) {
        throw std::invalid_argument("f_g: g must be >= 2, got " + std::to_string(g));
    }
    if (order < 1) {
        throw std::invalid_argument("f_g: order must be >= 1, got " + std::to_string(order));
    }
    const int x_trunc = 2 * g - 2;
    return xs_log(theta0_partition(x_trunc, order))[x_trunc];
}

} // namespace qmf
