#include <qmf/report.hpp>

#include <stdexcept>

namespace qmf
{

using nlohmann::json;

namespace
{

Integer parse_integer(const json &j)
{
    const auto text = j.get<std::string>();
    Integer z;
    if (text.empty() || z.set_str(text, 10) != 0) {
        throw std::invalid_argument("malformed integer string: '" + text + "'");
    }
    return z;
}

json monomial_fields(const EisensteinMonomial &m)
{
    return json{{"a", m.e2}, {"b", m.e4}, {"c", m.e6}};
}

EisensteinMonomial monomial_from(const json &j)
{
    return {j.at("a").get<int>(), j.at("b").get<int>(), j.at("c").get<int>()};
}

std::string exponent_text(QSeries::Key key)
{
    if (key % 2 == 0) {
        return std::to_string(key / 2);
    }
    return "(" + std::to_string(key) + "/2)";
}

} // namespace

std::string series_to_text(const QSeries &s)
{
    std::string out;
    for (const auto &[key, c] : s.terms()) {
        const bool negative = c < 0;
        const Rational magnitude = abs(c);
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string coeff;
        if (is_integer(magnitude)) {
            coeff = magnitude == 1 && key != 0 ? "" : magnitude.get_num().get_str();
        } else {
            coeff = key == 0 ? magnitude.get_str() : "(" + magnitude.get_str() + ")";
        }
        out += coeff;
        if (key == 2) {
            out += "q";
        } else if (key != 0) {
            out += "q^" + exponent_text(key);
        }
    }
    if (s.bounded()) {
        out += (out.empty() ? "O(q^" : " + O(q^") + exponent_text(s.trunc_x2()) + ")";
    } else if (out.empty()) {
        out = "0";
    }
    return out;
}

json series_to_json(const QSeries &s)
{
    json coeffs = json::array();
    for (const auto &[k, c] : s.terms()) {
        coeffs.push_back(json::array({k, to_fraction_string(c)}));
    }
    json out;
    out["trunc_order_x2"] = s.bounded() ? json(s.trunc_x2()) : json(nullptr);
    out["coeffs"] = std::move(coeffs);
    return out;
}

QSeries series_from_json(const json &j)
{
    const auto &t = j.at("trunc_order_x2");
    QSeries s(t.is_null() ? QSeries::unbounded : t.get<QSeries::Key>());
    QSeries::Key previous = -1;
    for (const auto &entry : j.at("coeffs")) {
        const auto key = entry.at(0).get<QSeries::Key>();
        if (key <= previous) {
            throw std::invalid_argument("series JSON: exponents must be strictly increasing");
        }
        if (key >= s.trunc_x2()) {
            throw std::invalid_argument("series JSON: exponent beyond the truncation order");
        }
        const Rational c = parse_fraction_string(entry.at(1).get<std::string>());
        if (c == 0) {
            throw std::invalid_argument("series JSON: explicit zero coefficient");
        }
        s.add_term(key, c);
        previous = key;
    }
    return s;
}

json decomposition_to_json(const EisensteinDecomposition &d)
{
    const Integer den = d.common_denominator();
    json terms = json::array();
    for (const auto &[mono, c] : d.terms) {
        json t = monomial_fields(mono);
        t["num"] = to_decimal_string(Rational(c * den).get_num());
        terms.push_back(std::move(t));
    }
    return json{{"weight", d.weight}, {"denominator", to_decimal_string(den)}, {"terms", std::move(terms)}};
}

EisensteinDecomposition decomposition_from_json(const json &j)
{
    EisensteinDecomposition d;
    d.weight = j.at("weight").get<int>();
    const Integer den = parse_integer(j.at("denominator"));
    if (den <= 0) {
        throw std::invalid_argument("decomposition JSON: denominator must be positive");
    }
    for (const auto &t : j.at("terms")) {
        const auto mono = monomial_from(t);
        if (mono.weight() != d.weight) {
            throw std::invalid_argument("decomposition JSON: monomial weight mismatch");
        }
        Rational c(parse_integer(t.at("num")), den);
        c.canonicalize();
        d.terms.emplace_back(mono, c);
    }
    return d;
}

json reduced_decomposition_to_json(const ReducedDecomposition &d)
{
    json terms = json::array();
    for (const auto &[mono, r] : d.nonzero_terms()) {
        json t = monomial_fields(mono);
        t["residue"] = r;
        terms.push_back(std::move(t));
    }
    return json{{"weight", d.weight}, {"p", d.p}, {"terms", std::move(terms)}};
}

json congruence_report_to_json(const CongruenceReport &r)
{
    json out{{"i", r.i},
             {"j", r.j},
             {"p", r.p},
             {"s", r.s},
             {"modulus", to_decimal_string(r.modulus())},
             {"order", r.order},
             {"holds", r.holds}};
    if (r.first_failure) {
        out["first_failure"] = json{{"exponent", r.first_failure->exponent},
                                    {"residue_i", to_decimal_string(r.first_failure->residue_i)},
                                    {"residue_j", to_decimal_string(r.first_failure->residue_j)}};
    } else {
        out["first_failure"] = nullptr;
    }
    return out;
}

CongruenceReport congruence_report_from_json(const json &j)
{
    CongruenceReport r;
    r.i = j.at("i").get<int>();
    r.j = j.at("j").get<int>();
    r.p = j.at("p").get<std::uint64_t>();
    r.s = j.at("s").get<unsigned>();
    r.order = j.at("order").get<int>();
    r.holds = j.at("holds").get<bool>();
    const auto &f = j.at("first_failure");
    if (!f.is_null()) {
        r.first_failure = CongruenceFailure{f.at("exponent").get<int>(), parse_integer(f.at("residue_i")),
                                            parse_integer(f.at("residue_j"))};
    }
    if (r.holds == r.first_failure.has_value()) {
        throw std::invalid_argument("congruence JSON: holds and first_failure disagree");
    }
    return r;
}

json valuation_table_to_json(const ValuationTable &t)
{
    json rows = json::array();
    for (const auto &row : t.rows) {
        rows.push_back(json{{"n", row.n},
                            {"coefficient", to_decimal_string(row.coefficient)},
                            {"valuation", row.valuation ? json(*row.valuation) : json("∞")}});
    }
    return json{{"k", t.k}, {"p", t.p}, {"hypothesis_holds", t.hypothesis_holds}, {"rows", std::move(rows)}};
}

ValuationTable valuation_table_from_json(const json &j)
{
    ValuationTable t;
    t.k = j.at("k").get<int>();
    t.p = j.at("p").get<std::uint64_t>();
    t.hypothesis_holds = j.at("hypothesis_holds").get<bool>();
    for (const auto &r : j.at("rows")) {
        ValuationRow row;
        row.n = r.at("n").get<int>();
        row.coefficient = parse_integer(r.at("coefficient"));
        const auto &v = r.at("valuation");
        if (v.is_string()) {
            if (v.get<std::string>() != "∞") {
                throw std::invalid_argument("valuation JSON: unknown sentinel");
            }
        } else {
            row.valuation = v.get<unsigned>();
        }
        if (row.valuation.has_value() == (row.coefficient == 0)) {
            throw std::invalid_argument("valuation JSON: infinite valuation must go with a zero coefficient");
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

} // namespace qmf
