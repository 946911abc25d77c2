#include <qmf/series.hpp>

#include <cmath>
#include <string>

namespace qmf
{

QSeries::QSeries(Key trunc_x2) : trunc_x2_(trunc_x2)
{
    if (trunc_x2 < 0) {
        throw std::invalid_argument("negative truncation order");
    }
}

QSeries QSeries::from_integer_coeffs(std::span<const Rational> coeffs, Key order)
{
    QSeries s(2 * order);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        s.add_term(2 * static_cast<Key>(i), coeffs[i]);
    }
    return s;
}

QSeries QSeries::from_integer_coeffs(std::span<const Integer> coeffs, Key order)
{
    QSeries s(2 * order);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        s.add_term(2 * static_cast<Key>(i), Rational(coeffs[i]));
    }
    return s;
}

QSeries QSeries::constant(const Rational &c, Key trunc_x2)
{
    return monomial(c, 0, trunc_x2);
}

QSeries QSeries::monomial(const Rational &c, Key key, Key trunc_x2)
{
    QSeries s(trunc_x2);
    s.add_term(key, c);
    return s;
}

QSeries::Key QSeries::order() const
{
    if (!bounded()) {
        throw std::logic_error("order() of an unbounded series");
    }
    return trunc_x2_ / 2;
}

Rational QSeries::coeff_x2(Key key) const
{
    if (key >= trunc_x2_) {
        throw std::out_of_range("coefficient of q^(" + std::to_string(key) + "/2) lies beyond the truncation order");
    }
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool QSeries::has_half_integer_exponents() const
{
    for (const auto &[k, c] : terms_) {
        if (k % 2 != 0) {
            return true;
        }
    }
    return false;
}

bool QSeries::has_integer_coefficients() const
{
    for (const auto &[k, c] : terms_) {
        if (!is_integer(c)) {
            return false;
        }
    }
    return true;
}

void QSeries::add_term(Key key, const Rational &c)
{
    if (key < 0) {
        throw std::invalid_argument("negative q-exponent");
    }
    if (key >= trunc_x2_ || c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

QSeries QSeries::truncated(Key trunc_x2) const
{
    QSeries out(std::min(trunc_x2, trunc_x2_));
    for (auto it = terms_.begin(); it != terms_.end() && it->first < out.trunc_x2_; ++it) {
        out.terms_.insert(*it);
    }
    return out;
}

QSeries &QSeries::operator+=(const QSeries &other)
{
    if (other.trunc_x2_ < trunc_x2_) {
        *this = truncated(other.trunc_x2_);
    }
    for (const auto &[k, c] : other.terms_) {
        add_term(k, c);
    }
    return *this;
}

QSeries &QSeries::operator-=(const QSeries &other)
{
    if (other.trunc_x2_ < trunc_x2_) {
        *this = truncated(other.trunc_x2_);
    }
    for (const auto &[k, c] : other.terms_) {
        add_term(k, -c);
    }
    return *this;
}

QSeries &QSeries::operator*=(const Rational &c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[k, v] : terms_) {
        v *= c;
    }
    return *this;
}

QSeries operator*(const QSeries &a, const QSeries &b)
{
    QSeries out(std::min(a.trunc_x2_, b.trunc_x2_));
    const auto limit = out.trunc_x2_;
    for (const auto &[ka, ca] : a.terms_) {
        if (ka >= limit) {
            break;
        }
        for (const auto &[kb, cb] : b.terms_) {
            if (kb >= limit - ka) {
                break;
            }
            out.add_term(ka + kb, ca * cb);
        }
    }
    return out;
}

QSeries qs_add(const QSeries &a, const QSeries &b)
{
    return a + b;
}

QSeries qs_mul(const QSeries &a, const QSeries &b)
{
    return a * b;
}

QSeries pow(const QSeries &a, unsigned e)
{
    QSeries result = QSeries::constant(1, a.trunc_x2());
    QSeries base = a;
    while (e != 0) {
        if (e & 1U) {
            result = result * base;
        }
        e >>= 1U;
        if (e != 0) {
            base = base * base;
        }
    }
    return result;
}

QSeries eta_like_product(std::int64_t order)
{
    if (order <= 0) {
        throw std::invalid_argument("eta_like_product: order must be positive, got " + std::to_string(order));
    }
    // Factors with m >= order only touch exponents >= order.
    QSeries prod = QSeries::constant(1, 2 * order);
    for (std::int64_t m = 1; m < order; ++m) {
        QSeries factor = QSeries::constant(1);
        factor.add_term(2 * m, -1);
        prod = prod * factor;
    }
    return prod;
}

int safe_zeta_band(std::int64_t order)
{
    if (order <= 0) {
        return 0;
    }
    auto band = static_cast<std::int64_t>(std::sqrt(static_cast<double>(2 * order)));
    while (band * band < 2 * order) {
        ++band;
    }
    while (band > 0 && (band - 1) * (band - 1) >= 2 * order) {
        --band;
    }
    return static_cast<int>(band);
}

// ---------------------------------------------------------------------------
// XSeries

XSeries::XSeries(int x_trunc, QSeries::Key trunc_x2)
{
    if (x_trunc < 0) {
        throw std::invalid_argument("negative X truncation");
    }
    coeffs_.assign(static_cast<std::size_t>(x_trunc) + 1, QSeries(trunc_x2));
}

XSeries::XSeries(std::vector<QSeries> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw std::invalid_argument("XSeries needs at least the X^0 coefficient");
    }
}

bool XSeries::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const QSeries &c) { return c.is_zero(); });
}

bool XSeries::odd_part_is_zero() const
{
    for (std::size_t k = 1; k < coeffs_.size(); k += 2) {
        if (!coeffs_[k].is_zero()) {
            return false;
        }
    }
    return true;
}

XSeries &XSeries::operator+=(const XSeries &other)
{
    if (other.coeffs_.size() < coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] += other.coeffs_[k];
    }
    return *this;
}

XSeries &XSeries::operator-=(const XSeries &other)
{
    if (other.coeffs_.size() < coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] -= other.coeffs_[k];
    }
    return *this;
}

XSeries &XSeries::operator*=(const Rational &c)
{
    for (auto &q : coeffs_) {
        q *= c;
    }
    return *this;
}

XSeries operator*(const XSeries &a, const XSeries &b)
{
    const std::size_t n = std::min(a.coeffs_.size(), b.coeffs_.size());
    std::vector<QSeries> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        QSeries acc = a.coeffs_[0] * b.coeffs_[k];
        for (std::size_t i = 1; i <= k; ++i) {
            acc += a.coeffs_[i] * b.coeffs_[k - i];
        }
        out.push_back(std::move(acc));
    }
    return XSeries(std::move(out));
}

namespace
{

QSeries::Key min_trunc(const XSeries &f)
{
    QSeries::Key t = QSeries::unbounded;
    for (const auto &c : f.coeffs()) {
        t = std::min(t, c.trunc_x2());
    }
    return t;
}

// Bound on the number of powers of u needed before u^k vanishes: every term
// of u has X-degree >= 1 or q-exponent >= 1/2, so u^k lives in filtration
// degree >= k and the retained range has filtration degree below
// x_trunc + trunc_x2.
unsigned nilpotency_bound(const XSeries &u)
{
    const auto trunc = min_trunc(u);
    if (trunc == QSeries::unbounded) {
        if (!u[0].is_zero()) {
            throw std::invalid_argument("X^0 coefficient of an unbounded series must be constant");
        }
        return static_cast<unsigned>(u.x_trunc()) + 1;
    }
    return static_cast<unsigned>(u.x_trunc() + trunc) + 1;
}

} // namespace

XSeries xs_log(const XSeries &f)
{
    const auto &c0 = f[0];
    if (c0.trunc_x2() == 0 || c0.coeff_x2(0) != 1) {
        throw std::invalid_argument("xs_log: X^0 q^0 coefficient must be 1");
    }
    XSeries u = f;
    u[0].add_term(0, -1);

    XSeries result(f.x_trunc(), min_trunc(f));
    XSeries power = u;
    const unsigned bound = nilpotency_bound(u);
    for (unsigned k = 1; k <= bound && !power.is_zero(); ++k) {
        const Rational coeff(Integer(k % 2 == 1 ? 1 : -1), Integer(k));
        result += power * coeff;
        power = power * u;
    }
    return result;
}

XSeries xs_exp(const XSeries &g)
{
    if (g[0].trunc_x2() > 0 && g[0].coeff_x2(0) != 0) {
        throw std::invalid_argument("xs_exp: X^0 q^0 coefficient must be 0");
    }
    XSeries result(g.x_trunc(), min_trunc(g));
    result[0].add_term(0, 1);
    XSeries term = result;
    const unsigned bound = nilpotency_bound(g);
    for (unsigned k = 1; k <= bound; ++k) {
        term = term * g;
        term *= Rational(Integer(1), Integer(k));
        if (term.is_zero()) {
            break;
        }
        result += term;
    }
    return result;
}

} // namespace qmf
