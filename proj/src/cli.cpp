#include <qmf/arith.hpp>
#include <qmf/cli.hpp>
#include <qmf/eisenstein.hpp>
#include <qmf/forms.hpp>
#include <qmf/partitions.hpp>
#include <qmf/report.hpp>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include <array>
#include <ostream>
#include <vector>

namespace qmf::cli
{

using nlohmann::json;

namespace
{

constexpr int max_order = LambdaDistribution::max_supported_degree + 1;

[[noreturn]] void fail(const std::string &flag, const std::string &message)
{
    throw ValidationError{flag, message};
}

template <typename T>
const T &require(const std::optional<T> &value, const std::string &flag, const std::string &command)
{
    if (!value) {
        fail(flag, "required by '" + command + "'");
    }
    return *value;
}

void check_order(const CliConfig &c, int minimum)
{
    if (c.order < minimum || c.order > max_order) {
        fail("--order", fmt::format("must lie in [{}, {}], got {}", minimum, max_order, c.order));
    }
}

void check_prime(const CliConfig &c)
{
    const auto p = require(c.p, "--p", c.command);
    if (!is_prime(p)) {
        fail("--p", fmt::format("{} is not prime", p));
    }
}

std::string monomial_text(const EisensteinMonomial &m)
{
    std::string out;
    const std::array<std::pair<int, int>, 3> factors{{{2, m.e2}, {4, m.e4}, {6, m.e6}}};
    for (const auto &[k, e] : factors) {
        if (e == 0) {
            continue;
        }
        if (!out.empty()) {
            out += " ";
        }
        out += e == 1 ? fmt::format("E{}", k) : fmt::format("E{}^{}", k, e);
    }
    return out.empty() ? "1" : out;
}

void emit_json(std::ostream &out, const json &j)
{
    out << j.dump() << '\n';
}

int run_series(const CliConfig &c, std::ostream &out)
{
    const int n = *c.n;
    QSeries series;
    std::string name;
    if (c.command == "abar") {
        series = abar(n, c.order).series;
        name = fmt::format("Abar_{}(q)", n);
    } else {
        series = a_form(n, c.order).series;
        name = fmt::format("A_{}(q)", n);
    }
    if (c.format == Format::json) {
        emit_json(out, json{{"command", c.command}, {"n", n}, {"weight", 6 * n}, {"series", series_to_json(series)}});
    } else {
        fmt::print(out, "{} = {}\n", name, series_to_text(series));
    }
    return exit_ok;
}

int run_theta0(const CliConfig &c, std::ostream &out)
{
    const int x_trunc = *c.x_trunc;
    const XSeries theta = c.method == "direct" ? theta0_direct(x_trunc, c.order) : theta0_partition(x_trunc, c.order);
    if (c.format == Format::json) {
        json coeffs = json::array();
        for (const auto &q : theta.coeffs()) {
            coeffs.push_back(series_to_json(q));
        }
        emit_json(out, json{{"command", "theta0"}, {"method", c.method}, {"x_trunc", x_trunc}, {"x_coeffs", coeffs}});
    } else {
        for (int k = 0; k <= x_trunc; ++k) {
            fmt::print(out, "X^{}: {}\n", k, series_to_text(theta[k]));
        }
    }
    return exit_ok;
}

int run_fg(const CliConfig &c, std::ostream &out)
{
    const QSeries series = f_g(*c.g, c.order);
    if (c.format == Format::json) {
        emit_json(out, json{{"command", "fg"}, {"g", *c.g}, {"series", series_to_json(series)}});
    } else {
        fmt::print(out, "F_{}(q) = {}\n", *c.g, series_to_text(series));
    }
    return exit_ok;
}

int run_decompose(const CliConfig &c, std::ostream &out)
{
    EisensteinDecomposition d;
    std::string subject;
    if (c.n) {
        d = decompose(abar(*c.n, c.order).series, 6 * *c.n);
        subject = fmt::format("Abar_{}", *c.n);
    } else {
        d = decompose_kummer_difference(*c.i, *c.j, c.order);
        subject = fmt::format("Abar_{} - E4^{} Abar_{}", *c.j, 3 * (*c.j - *c.i) / 2, *c.i);
    }
    std::optional<ReducedDecomposition> reduced;
    if (c.p) {
        reduced = reduce_decomposition_mod(d, static_cast<unsigned long>(*c.p));
    }

    if (c.format == Format::json) {
        json j = decomposition_to_json(d);
        if (reduced) {
            j["reduced"] = reduced_decomposition_to_json(*reduced);
            json collapsed = json::array();
            for (const auto &[deg, r] : substitute_e4_one_e6_e2(*reduced)) {
                collapsed.push_back(json{{"e2_degree", deg}, {"residue", r}});
            }
            j["reduced"]["e4_one_e6_e2"] = std::move(collapsed);
        }
        emit_json(out, j);
        return exit_ok;
    }

    const Integer den = d.common_denominator();
    fmt::print(out, "{} at weight {} = (sum below) / {}\n", subject, d.weight, to_decimal_string(den));
    for (const auto &[mono, coeff] : d.terms) {
        fmt::print(out, "  {:>24}  {}\n", to_decimal_string(Rational(coeff * den).get_num()), monomial_text(mono));
    }
    if (reduced) {
        fmt::print(out, "renormalized, mod {}:\n", reduced->p);
        for (const auto &[mono, r] : reduced->nonzero_terms()) {
            fmt::print(out, "  {:>24}  {}\n", r, monomial_text(mono));
        }
        if (reduced->is_zero()) {
            fmt::print(out, "  0\n");
        }
        const auto collapsed = substitute_e4_one_e6_e2(*reduced);
        fmt::print(out, "with E4 -> 1, E6 -> E2: {}\n", collapsed.empty() ? "0" : "nonzero");
    }
    return exit_ok;
}

int run_kummer(const CliConfig &c, std::ostream &out)
{
    const auto report = check_kummer(*c.i, *c.j, *c.p, *c.s, c.order);
    if (c.format == Format::json) {
        emit_json(out, congruence_report_to_json(report));
        return exit_ok;
    }
    const std::string modulus = to_decimal_string(report.modulus());
    fmt::print(out, "Abar_{} = Abar_{} (mod {}) through q^{}: {}\n", report.i, report.j, modulus, report.order - 1,
               report.holds ? "holds" : "fails");
    if (report.first_failure) {
        const auto &f = *report.first_failure;
        fmt::print(out, "first failure at q^{}: {} vs {}\n", f.exponent, to_decimal_string(f.residue_i),
                   to_decimal_string(f.residue_j));
    }
    return exit_ok;
}

int run_padic(const CliConfig &c, std::ostream &out, std::ostream &err)
{
    const auto table = padic_valuations(*c.k, *c.p, *c.n_max);
    if (!table.hypothesis_holds) {
        fmt::print(err, "warning: (k, p) = ({}, {}) is outside the hypothesis of the p-power decay result\n", table.k, table.p);
    }
    if (c.format == Format::json) {
        emit_json(out, valuation_table_to_json(table));
        return exit_ok;
    }
    fmt::print(out, "{:>3}  {:>32}  {}\n", "n", fmt::format("a_{}({}^n)", table.k, table.p), fmt::format("v_{}", table.p));
    for (const auto &row : table.rows) {
        fmt::print(out, "{:>3}  {:>32}  {}\n", row.n, to_decimal_string(row.coefficient),
                   row.valuation ? std::to_string(*row.valuation) : "∞");
    }
    return exit_ok;
}

int run_powersum(const CliConfig &c, std::ostream &out)
{
    const LambdaDistribution dist(*c.d);
    const Integer value = dist.power_sum(*c.d, static_cast<unsigned>(*c.k));
    if (c.format == Format::json) {
        emit_json(out, json{{"command", "powersum"}, {"d", *c.d}, {"k", *c.k}, {"value", to_decimal_string(value)}});
    } else {
        fmt::print(out, "S_{}({}) = {}\n", *c.k, *c.d, to_decimal_string(value));
    }
    return exit_ok;
}

} // namespace

void validate(const CliConfig &c)
{
    const auto &cmd = c.command;
    if (cmd == "an" || cmd == "abar") {
        const int n = require(c.n, "--n", cmd);
        if (n < (cmd == "abar" ? 1 : 0)) {
            fail("--n", fmt::format("must be >= {} for '{}', got {}", cmd == "abar" ? 1 : 0, cmd, n));
        }
        check_order(c, cmd == "abar" ? 3 : 1);
    } else if (cmd == "theta0") {
        const int x = require(c.x_trunc, "--x-trunc", cmd);
        if (x < 0 || x % 2 != 0) {
            fail("--x-trunc", fmt::format("must be a nonnegative even integer, got {}", x));
        }
        if (c.method != "partition" && c.method != "direct") {
            fail("--method", "must be 'partition' or 'direct'");
        }
        check_order(c, 1);
    } else if (cmd == "fg") {
        const int g = require(c.g, "--g", cmd);
        if (g < 2) {
            fail("--g", fmt::format("must be >= 2, got {}", g));
        }
        check_order(c, 1);
    } else if (cmd == "decompose") {
        int weight = 0;
        if (c.n) {
            if (c.i || c.j) {
                fail("--n", "give either --n or the pair --i/--j, not both");
            }
            if (*c.n < 1) {
                fail("--n", fmt::format("must be >= 1, got {}", *c.n));
            }
            weight = 6 * *c.n;
        } else {
            if (!c.i || !c.j) {
                fail("--n", "'decompose' needs --n, or both --i and --j");
            }
            const int i = *c.i;
            const int j = *c.j;
            if (i < 1 || j <= i || (j - i) % 2 != 0) {
                fail("--j", "need 1 <= i < j with j - i even");
            }
            weight = 6 * j;
        }
        if (c.p) {
            check_prime(c);
        }
        const auto needed = static_cast<int>(monomial_basis(weight).size()) + 2;
        check_order(c, needed);
    } else if (cmd == "kummer") {
        const int i = require(c.i, "--i", cmd);
        const int j = require(c.j, "--j", cmd);
        if (i < 1) {
            fail("--i", "must be >= 1");
        }
        if (j < 1) {
            fail("--j", "must be >= 1");
        }
        check_prime(c);
        const unsigned s = require(c.s, "--s", cmd);
        if (s < 1 || s > 60) {
            fail("--s", "must lie in [1, 60]");
        }
        check_order(c, 3);
    } else if (cmd == "padic") {
        const int k = require(c.k, "--k", cmd);
        if (k < 1) {
            fail("--k", "must be >= 1");
        }
        check_prime(c);
        const int n_max = require(c.n_max, "--n-max", cmd);
        if (n_max < 1) {
            fail("--n-max", "must be >= 1");
        }
        std::uint64_t top = 1;
        for (int e = 0; e < n_max && top <= static_cast<std::uint64_t>(max_order); ++e) {
            top *= *c.p;
        }
        if (top > static_cast<std::uint64_t>(LambdaDistribution::max_supported_degree)) {
            fail("--n-max", fmt::format("{}^{} exceeds the largest supported coefficient index {}", *c.p, n_max,
                                        LambdaDistribution::max_supported_degree));
        }
    } else if (cmd == "powersum") {
        const int d = require(c.d, "--d", cmd);
        if (d < 0 || d > LambdaDistribution::max_supported_degree) {
            fail("--d", fmt::format("must lie in [0, {}]", LambdaDistribution::max_supported_degree));
        }
        if (require(c.k, "--k", cmd) < 0) {
            fail("--k", "must be >= 0");
        }
    } else {
        fail("command", "unknown command '" + cmd + "'");
    }
}

int run(const CliConfig &config, std::ostream &out, std::ostream &err)
{
    try {
        validate(config);
    } catch (const ValidationError &e) {
        fmt::print(err, "error: {}: {}\n", e.flag, e.message);
        return exit_validation_error;
    }
    try {
        const auto &cmd = config.command;
        if (cmd == "an" || cmd == "abar") {
            return run_series(config, out);
        }
        if (cmd == "theta0") {
            return run_theta0(config, out);
        }
        if (cmd == "fg") {
            return run_fg(config, out);
        }
        if (cmd == "decompose") {
            return run_decompose(config, out);
        }
        if (cmd == "kummer") {
            return run_kummer(config, out);
        }
        if (cmd == "padic") {
            return run_padic(config, out, err);
        }
        return run_powersum(config, out);
    } catch (const std::exception &e) {
        fmt::print(err, "error: {}\n", e.what());
        return exit_computation_error;
    }
}

int main(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact q-expansions of the quasimodular forms A_n, their Eisenstein decompositions, and "
                 "congruence / p-adic checks"};
    app.require_subcommand(1);

    CliConfig config;
    int n = 0, i = 0, j = 0, k = 0, g = 0, d = 0, n_max = 0, x_trunc = 0;
    std::uint64_t p = 0;
    unsigned s = 0;
    std::string format = "text";

    struct Spec
    {
        const char *name;
        const char *help;
        std::vector<const char *> flags;
    };
    const std::vector<Spec> commands{
        {"an", "A_n(q), rational coefficients", {"n"}},
        {"abar", "normalized Abar_n(q), coprime integer coefficients", {"n"}},
        {"theta0", "Theta_0(X, q) through X^x-trunc", {"x-trunc", "method"}},
        {"fg", "F_g(q): coefficient of X^{2g-2} in log Theta_0", {"g"}},
        {"decompose", "Eisenstein decomposition of Abar_n, or of the lifted difference Abar_j - E4^e Abar_i",
         {"n", "i", "j", "p"}},
        {"kummer", "compare Abar_i and Abar_j mod p^s", {"i", "j", "p", "s"}},
        {"padic", "a_k(p^n) and p-adic valuations for n = 1..n-max", {"k", "p", "n-max"}},
        {"powersum", "S_k(d) = sum of lambda^k over partitions of d", {"d", "k"}},
    };

    std::vector<std::pair<CLI::App *, std::vector<std::pair<std::string, CLI::Option *>>>> subs;
    for (const auto &spec : commands) {
        CLI::App *sub = app.add_subcommand(spec.name, spec.help);
        std::vector<std::pair<std::string, CLI::Option *>> opts;
        for (const std::string flag : spec.flags) {
            const std::string name = "--" + flag;
            CLI::Option *opt = nullptr;
            if (flag == "n") {
                opt = sub->add_option(name, n, "form index");
            } else if (flag == "i") {
                opt = sub->add_option(name, i, "first form index");
            } else if (flag == "j") {
                opt = sub->add_option(name, j, "second form index");
            } else if (flag == "k") {
                opt = sub->add_option(name, k, spec.name == std::string("powersum") ? "power" : "form index");
            } else if (flag == "g") {
                opt = sub->add_option(name, g, "genus");
            } else if (flag == "d") {
                opt = sub->add_option(name, d, "partition size");
            } else if (flag == "p") {
                opt = sub->add_option(name, p, "prime");
            } else if (flag == "s") {
                opt = sub->add_option(name, s, "prime-power exponent");
            } else if (flag == "n-max") {
                opt = sub->add_option(name, n_max, "largest n");
            } else if (flag == "x-trunc") {
                opt = sub->add_option(name, x_trunc, "largest X-degree (even)");
            } else if (flag == "method") {
                opt = sub->add_option(name, config.method, "partition (default) or direct");
            }
            opts.emplace_back(flag, opt);
        }
        if (spec.name != std::string("padic") && spec.name != std::string("powersum")) {
            sub->add_option("--order", config.order, "q-truncation order (default 30)");
        }
        sub->add_option("--format", format, "text (default) or json")->check(CLI::IsMember({"text", "json"}));
        subs.emplace_back(sub, std::move(opts));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp &e) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        // CLI11 messages name the flag, e.g. "--order: Value x not ...".
        fmt::print(err, "error: {}\n", e.what());
        return exit_validation_error;
    }

    for (const auto &[sub, opts] : subs) {
        if (!sub->parsed()) {
            continue;
        }
        config.command = sub->get_name();
        for (const auto &[flag, opt] : opts) {
            if (opt->count() == 0) {
                continue;
            }
            if (flag == "n") {
                config.n = n;
            } else if (flag == "i") {
                config.i = i;
            } else if (flag == "j") {
                config.j = j;
            } else if (flag == "k") {
                config.k = k;
            } else if (flag == "g") {
                config.g = g;
            } else if (flag == "d") {
                config.d = d;
            } else if (flag == "p") {
                config.p = p;
            } else if (flag == "s") {
                config.s = s;
            } else if (flag == "n-max") {
                config.n_max = n_max;
            } else if (flag == "x-trunc") {
                config.x_trunc = x_trunc;
            }
        }
    }
    config.format = format == "json" ? Format::json : Format::text;
    return run(config, out, err);
}

} // namespace qmf::cli
