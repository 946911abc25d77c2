#ifndef QMF_SERIES_HPP
#define QMF_SERIES_HPP

#include <qmf/numeric.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qmf
{

// Truncated power series in q with exact rational coefficients.
//
// Exponents are stored in half-units: the key 2e holds the coefficient of
// q^e, so q^{1/2} is key 1. The series is exact for every exponent strictly
// below the truncation bound (also in half-units). A bound of `unbounded`
// means the series is an exact polynomial.
//
// Canonical form: no stored zeros, every stored key k has 0 <= k < trunc.
// Binary operations take the smaller of the two bounds.
class QSeries
{
public:
    using Key = std::int64_t;
    static constexpr Key unbounded = std::numeric_limits<Key>::max();

    QSeries() = default;
    explicit QSeries(Key trunc_x2);

    // Integer-exponent series: coeffs[i] is the coefficient of q^i, exact
    // below q^order.
    static QSeries from_integer_coeffs(std::span<const Rational> coeffs, Key order);
    static QSeries from_integer_coeffs(std::span<const Integer> coeffs, Key order);
    static QSeries constant(const Rational &c, Key trunc_x2 = unbounded);
    // c * q^{key/2}
    static QSeries monomial(const Rational &c, Key key, Key trunc_x2 = unbounded);

    Key trunc_x2() const noexcept { return trunc_x2_; }
    bool bounded() const noexcept { return trunc_x2_ != unbounded; }
    // Integer exponent bound; only meaningful when trunc_x2() is even.
    Key order() const;

    // Coefficient of q^{key/2}. Asking at or beyond the bound is an error,
    // since the value is unknown there.
    Rational coeff_x2(Key key) const;
    // Coefficient of q^n, n an integer.
    Rational coeff(Key n) const { return coeff_x2(2 * n); }

    const std::map<Key, Rational> &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool has_half_integer_exponents() const;
    bool has_integer_coefficients() const;

    void add_term(Key key, const Rational &c);

    QSeries truncated(Key trunc_x2) const;

    QSeries &operator+=(const QSeries &other);
    QSeries &operator-=(const QSeries &other);
    QSeries &operator*=(const Rational &c);

    friend QSeries operator+(QSeries a, const QSeries &b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries &b) { return a -= b; }
    friend QSeries operator*(QSeries a, const Rational &c) { return a *= c; }
    friend QSeries operator*(const Rational &c, QSeries a) { return a *= c; }
    friend QSeries operator-(QSeries a) { return a *= Rational(-1); }
    friend QSeries operator*(const QSeries &a, const QSeries &b);

    // Equal bounds and equal terms.
    friend bool operator==(const QSeries &a, const QSeries &b) = default;

private:
    Key trunc_x2_ = unbounded;
    std::map<Key, Rational> terms_;
};

QSeries qs_add(const QSeries &a, const QSeries &b);
QSeries qs_mul(const QSeries &a, const QSeries &b);
QSeries pow(const QSeries &a, unsigned e);

// prod_{m >= 1} (1 - q^m), exact below q^order. Throws std::invalid_argument
// for order <= 0.
QSeries eta_like_product(std::int64_t order);

// Polynomial in X of degree <= x_trunc whose coefficients are q-series.
class XSeries
{
public:
    XSeries() = default;
    // Zero series; every X-coefficient has the given q-bound.
    XSeries(int x_trunc, QSeries::Key trunc_x2);
    explicit XSeries(std::vector<QSeries> coeffs);

    int x_trunc() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const QSeries &operator[](int degree) const { return coeffs_.at(static_cast<std::size_t>(degree)); }
    QSeries &operator[](int degree) { return coeffs_.at(static_cast<std::size_t>(degree)); }
    const std::vector<QSeries> &coeffs() const noexcept { return coeffs_; }

    bool is_zero() const;
    bool odd_part_is_zero() const;

    XSeries &operator+=(const XSeries &other);
    XSeries &operator-=(const XSeries &other);
    XSeries &operator*=(const Rational &c);

    friend XSeries operator+(XSeries a, const XSeries &b) { return a += b; }
    friend XSeries operator-(XSeries a, const XSeries &b) { return a -= b; }
    friend XSeries operator*(XSeries a, const Rational &c) { return a *= c; }
    // Degrees above min(x_trunc) are dropped.
    friend XSeries operator*(const XSeries &a, const XSeries &b);

    friend bool operator==(const XSeries &a, const XSeries &b) = default;

private:
    std::vector<QSeries> coeffs_;
};

// Formal logarithm via log(1 + u) = u - u^2/2 + ... . The X^0 q^0
// coefficient must be exactly 1; std::invalid_argument otherwise.
XSeries xs_log(const XSeries &f);

// Formal exponential via the Taylor series; the X^0 q^0 coefficient of g
// must vanish.
XSeries xs_exp(const XSeries &g);

// Laurent polynomial in zeta with coefficients of type Coeff (QSeries or
// XSeries). Degrees outside [-band, band] are discarded on insertion; the
// caller picks the band so that those terms are provably zero below the
// working truncation.
template <typename Coeff>
class ZetaLaurent
{
public:
    ZetaLaurent(int band, Coeff zero) : band_(band), zero_(std::move(zero))
    {
        if (band < 0) {
            throw std::invalid_argument("zeta band must be nonnegative");
        }
    }

    int band() const noexcept { return band_; }
    const std::map<int, Coeff> &terms() const noexcept { return terms_; }

    void add(int degree, const Coeff &c)
    {
        if (degree < -band_ || degree > band_) {
            return;
        }
        auto it = terms_.find(degree);
        if (it == terms_.end()) {
            if (!c.is_zero()) {
                terms_.emplace(degree, c);
            }
            return;
        }
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }

    Coeff coefficient(int degree) const
    {
        auto it = terms_.find(degree);
        return it == terms_.end() ? zero_ : it->second;
    }

    friend ZetaLaurent operator*(const ZetaLaurent &a, const ZetaLaurent &b)
    {
        ZetaLaurent out(std::min(a.band_, b.band_), a.zero_);
        for (const auto &[da, ca] : a.terms_) {
            for (const auto &[db, cb] : b.terms_) {
                out.add(da + db, ca * cb);
            }
        }
        return out;
    }

private:
    int band_;
    Coeff zero_;
    std::map<int, Coeff> terms_;
};

template <typename Coeff>
Coeff zl_coefficient(const ZetaLaurent<Coeff> &f, int degree)
{
    return f.coefficient(degree);
}

// Smallest band that cannot lose a zeta^c term with q-exponent below
// `order`: c distinct positive half-integers sum to at least c^2/2, so a
// zeta^c term needs q-order >= c^2/2 and |c| <= ceil(sqrt(2 * order)).
int safe_zeta_band(std::int64_t order);

} // namespace qmf

#endif
