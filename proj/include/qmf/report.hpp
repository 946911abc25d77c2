#ifndef QMF_REPORT_HPP
#define QMF_REPORT_HPP

// JSON encodings of the library's results. Big integers and rationals are
// always strings so no consumer has to worry about 64-bit overflow.

#include <qmf/arith.hpp>
#include <qmf/eisenstein.hpp>
#include <qmf/series.hpp>

#include <json.hpp>

#include <string>

namespace qmf
{

// Human-readable form, e.g. "q^2 + 80q^3 - (1/2)q^(7/2) + O(q^9)".
std::string series_to_text(const QSeries &s);

// {"trunc_order_x2": int, "coeffs": [[exponent_x2, "num/den"], ...]}
// sorted by exponent. An unbounded series writes trunc_order_x2 = null.
nlohmann::json series_to_json(const QSeries &s);
QSeries series_from_json(const nlohmann::json &j);

// {"weight": w, "denominator": "D", "terms": [{"a", "b", "c", "num"}]} in
// basis order; num / D is the coefficient.
nlohmann::json decomposition_to_json(const EisensteinDecomposition &d);
EisensteinDecomposition decomposition_from_json(const nlohmann::json &j);

// {"weight", "p", "terms": [{"a", "b", "c", "residue"}]} nonzero residues.
nlohmann::json reduced_decomposition_to_json(const ReducedDecomposition &d);

nlohmann::json congruence_report_to_json(const CongruenceReport &r);
CongruenceReport congruence_report_from_json(const nlohmann::json &j);

// Zero coefficients have valuation "∞".
nlohmann::json valuation_table_to_json(const ValuationTable &t);
ValuationTable valuation_table_from_json(const nlohmann::json &j);

} // namespace qmf

#endif
