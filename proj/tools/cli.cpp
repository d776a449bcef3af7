#include "trigroups/cli.hpp"

#include "trigroups/arithmetic_scan.hpp"
#include "trigroups/calabi_yau.hpp"
#include "trigroups/classical.hpp"
#include "trigroups/forms.hpp"
#include "trigroups/halphen.hpp"
#include "trigroups/halphen_identities.hpp"
#include "trigroups/schwarz.hpp"
#include "trigroups/special_functions.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <sstream>

namespace tg::cli {

namespace {

using json = nlohmann::ordered_json;

class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Output {
    json doc;
    std::string table; // key of the array rendered as rows in csv/text
    bool checks_failed = false;
};

struct Options {
    std::string format = "json";
    int order_cap = 1000;
    std::string type;
    int order = 10;
    std::string point = "cusp";
    std::string variable = "normalized";
    bool symbolic = false;
    int weight = 4;
    int digits = 30;
    std::string suite;
    std::string series = "J";
    long prime_bound = 100;
    std::string model;
};

json header(const std::string& command)
{
    json d;
    d["schema"] = "1";
    d["command"] = command;
    return d;
}

std::string real_str(const Real& x, int digits)
{
    if (x == 0) return "0";
    // digits counts significant digits
    return x.str(digits - 1, std::ios_base::scientific);
}

std::string complex_str(const Complex& z, int digits)
{
    std::string re = real_str(z.real(), digits), im = real_str(abs(z.imag()), digits);
    return re + (z.imag() < 0 ? "-" : "+") + im + "i";
}

std::string type_token(const TriangleType& t)
{
    std::string s;
    for (int i = 0; i < 3; ++i) {
        if (i) s += ",";
        s += t.is_cusp(i) ? "inf" : std::to_string(t.m[static_cast<std::size_t>(i)]);
    }
    return s;
}

template <class T>
json series_rows(const FormalSeries<T>& s)
{
    json rows = json::array();
    for (int n = s.offset(); n <= s.order(); ++n) {
        rows.push_back({{"n", n}, {"value", scalar_traits<T>::str(s.coeff(n))}});
    }
    return rows;
}

json string_list(const RSeries& s)
{
    json a = json::array();
    for (int n = s.offset(); n <= s.order(); ++n) a.push_back(to_string(s.coeff(n)));
    return a;
}

json matrix_json(const IMat4& m)
{
    json a = json::array();
    for (const auto& r : m) {
        json row = json::array();
        for (const auto& e : r) row.push_back(e.get_str());
        a.push_back(row);
    }
    return a;
}

TriangleType need_type(const Options& o)
{
    if (o.type.empty()) throw input_error("--type is required");
    return parse_type(o.type);
}

void need_order(const Options& o)
{
    if (o.order < 0) throw input_error("--order must be non-negative");
    if (o.order > o.order_cap) {
        throw input_error("order " + std::to_string(o.order) + " exceeds the cap " + std::to_string(o.order_cap));
    }
}

void need_digits(const Options& o)
{
    if (o.digits < 2 || o.digits > 38) throw input_error("--digits must be in 2..38 (128-bit arithmetic)");
}

void need_cusp(const TriangleType& t)
{
    if (!t.is_cusp(2)) throw input_error("type " + t.to_string() + " needs m3 = inf here");
}

Output cmd_expand(const Options& o)
{
    auto t = need_type(o);
    need_order(o);
    Point p = o.point == "z1" ? Point::z1 : o.point == "z2" ? Point::z2 : Point::z3;
    if (p != Point::z3 && t.is_cusp(static_cast<int>(p) - 1)) {
        throw input_error("zeta_" + std::to_string(static_cast<int>(p)) + " is a cusp of " + t.to_string());
    }
    auto e = expansion_at(t, p, o.order);
    Output out{header("expand"), "coefficients"};
    out.doc["type"] = type_token(t);
    out.doc["point"] = o.point;
    out.doc["variable"] = o.variable;
    out.doc["local_variable"] = tag_name(e.series.tag());
    out.doc["order"] = o.order;
    if (o.variable == "normalized") {
        out.doc["coefficients"] = series_rows(e.series);
        return out;
    }
    // raw: J in q3 = qt3 / alpha_3, only at a cusp where alpha_3 is known
    if (p != Point::z3 || !t.is_cusp(2)) throw input_error("--variable raw is available only at a cusp zeta_3");
    need_digits(o);
    auto ac = alpha_constants(t);
    out.doc["alpha3"] = real_str(ac.alpha[2], o.digits);
    json rows = json::array();
    Real scale = pow(ac.alpha[2], e.series.offset());
    for (int n = e.series.offset(); n <= e.series.order(); ++n) {
        rows.push_back({{"n", n}, {"value", real_str(to_real(e.series.coeff(n)) * scale, o.digits)}});
        scale *= ac.alpha[2];
    }
    out.doc["coefficients"] = rows;
    return out;
}

Output cmd_halphen(const Options& o)
{
    auto t = need_type(o);
    need_order(o);
    need_cusp(t);
    Output out{header("halphen"), "coefficients"};
    out.doc["type"] = type_token(t);
    out.doc["order"] = o.order;
    if (o.symbolic) {
        auto tt = symbolic_t_coeffs(o.order);
        out.doc["variables"] = "m1, m2";
        json rows = json::array();
        for (int j = 1; j <= o.order; ++j) {
            auto js = static_cast<std::size_t>(j);
            rows.push_back({{"j", j},
                            {"t1", tt[0][js].to_string("m1", "m2")},
                            {"t2", tt[1][js].to_string("m1", "m2")},
                            {"t3", tt[2][js].to_string("m1", "m2")}});
        }
        out.doc["coefficients"] = rows;
        return out;
    }
    auto h = solve_cusp(t, o.order);
    out.doc["a"] = to_string(h.params.a);
    out.doc["b"] = to_string(h.params.b);
    out.doc["c"] = to_string(h.params.c);
    out.doc["alpha3_over_nu"] = to_string(h.alpha3_over_nu);
    out.doc["local_variable"] = tag_name(h.s[0].tag());
    json rows = json::array();
    for (int n = 0; n <= o.order; ++n) {
        rows.push_back({{"n", n},
                        {"s1", to_string(h.s[0].coeff(n))},
                        {"s2", to_string(h.s[1].coeff(n))},
                        {"s3", to_string(h.s[2].coeff(n))}});
    }
    out.doc["coefficients"] = rows;
    return out;
}

Output cmd_basis(const Options& o)
{
    auto t = need_type(o);
    need_order(o);
    need_cusp(t);
    if (o.weight < 0 || o.weight % 2) throw input_error("--weight must be a non-negative even integer");
    auto b = basis(t, o.weight / 2, o.order);
    Output out{header("basis"), "coefficients"};
    out.doc["type"] = type_token(t);
    out.doc["weight"] = o.weight;
    out.doc["order"] = o.order;
    out.doc["dimension"] = static_cast<int>(b.elements.size());
    out.doc["d"] = b.d;
    json rows = json::array();
    for (std::size_t l = 0; l < b.elements.size(); ++l) {
        const auto& s = b.elements[l];
        for (int n = s.offset(); n <= s.order(); ++n) {
            rows.push_back({{"l", static_cast<int>(l)}, {"n", n}, {"value", to_string(s.coeff(n))}});
        }
    }
    out.doc["coefficients"] = rows;
    return out;
}

Output cmd_constants(const Options& o)
{
    auto t = need_type(o);
    need_digits(o);
    auto g = group_data(t);
    Output out{header("constants"), "constants"};
    out.doc["type"] = type_token(t);
    out.doc["digits"] = o.digits;
    json rows = json::array();
    auto add = [&](const std::string& name, const std::string& value) {
        rows.push_back({{"name", name}, {"value", value}});
    };
    for (int i = 0; i < 3; ++i) add("v" + std::to_string(i + 1), to_string(g.v[static_cast<std::size_t>(i)]));
    add("a", to_string(g.a));
    add("b", to_string(g.b));
    add("c", to_string(g.c));
    add("zeta1", complex_str(g.zeta1, o.digits));
    add("zeta2", complex_str(g.zeta2, o.digits));
    if (t.is_cusp(2)) {
        add("h3", real_str(g.h3_real, o.digits));
        if (g.h3) add("h3_exact", g.h3->to_string());
        add("arithmetic", is_arithmetic(t) ? "true" : "false");
        auto ac = alpha_constants(t);
        for (int i = 0; i < 3; ++i) add("alpha" + std::to_string(i + 1), real_str(ac.alpha[static_cast<std::size_t>(i)], o.digits));
        add("mu", real_str(ac.mu, o.digits));
        add("nu", real_str(ac.nu, o.digits));
        add("alpha3_over_nu", to_string(ac.alpha3_over_nu));
    }
    out.doc["constants"] = rows;
    return out;
}

json check_row(const std::string& name, bool ok, const std::string& detail)
{
    return {{"check", name}, {"ok", ok}, {"detail", detail}};
}

Output cmd_verify(const Options& o)
{
    auto t = need_type(o);
    need_order(o);
    Output out{header("verify"), "checks"};
    out.doc["suite"] = o.suite;
    out.doc["type"] = type_token(t);
    out.doc["order"] = o.order;
    json rows = json::array();
    if (o.suite == "ode") {
        for (Point p : {Point::z1, Point::z2, Point::z3}) {
            if (t.is_cusp(static_cast<int>(p) - 1) && p != Point::z3) continue;
            auto e = expansion_at(t, p, o.order);
            auto r = schwarz_residual(e.series, schwarz_coeffs(t, p));
            rows.push_back(check_row("schwarz residual at zeta_" + std::to_string(static_cast<int>(p)), r.is_zero(),
                                     r.is_zero() ? "" : "first nonzero at " + std::to_string(r.valuation())));
        }
        if (t.is_cusp(2)) {
            auto res = halphen_residual(solve_cusp(t, o.order));
            for (int i = 0; i < 3; ++i) {
                const auto& r = res[static_cast<std::size_t>(i)];
                rows.push_back(check_row("halphen residual " + std::to_string(i + 1), r.is_zero(),
                                         r.is_zero() ? "" : "first nonzero at " + std::to_string(r.valuation())));
            }
        }
    } else if (o.suite == "identities") {
        need_cusp(t);
        for (const auto& c : identity_suite(t, o.order).checks) rows.push_back(check_row(c.name, c.ok, c.detail));
    } else if (o.suite == "cross-engine") {
        need_cusp(t);
        auto h = solve_cusp(t, o.order);
        auto hm = hauptmodul_from_halphen(h);
        auto sub = cusp_expansion(t, o.order).series.rescaled(h.alpha3_over_nu, Tag{Var::qhat, 1});
        int up_to = std::min(hm.J.order(), sub.order());
        auto c = compare_series("Halphen J = Schwarz J at qt3 = (alpha3/nu) qhat", hm.J, sub, up_to);
        rows.push_back(check_row(c.name, c.ok, c.detail));
    } else if (o.suite == "classical") {
        need_cusp(t);
        if (!is_arithmetic(t)) throw input_error("suite classical needs one of the nine arithmetic types");
        auto a = classical_hauptmodul(t, o.order);
        auto b = schwarz_in_classical_variable(t, o.order);
        bool ok = agree(a, b, o.order);
        rows.push_back(check_row("classical Hauptmodul = Schwarz expansion", ok, ok ? "" : "series differ"));
    } else if (o.suite == "proposition1") {
        need_cusp(t);
        if (!is_arithmetic(t)) throw input_error("suite proposition1 needs one of the nine arithmetic types");
        auto rep = proposition1_check(t, 24, o.order);
        std::string detail;
        if (!rep.ok()) {
            const auto& v = rep.violations.front();
            detail = "weight " + std::to_string(v.weight) + " l=" + std::to_string(v.l) + " exponent " +
                     std::to_string(v.exponent) + ": " + v.coefficient;
        }
        rows.push_back(check_row("integral bases up to weight 24 (" + std::to_string(rep.forms_checked) + " forms)",
                                 rep.ok(), detail));
    } else {
        throw input_error("unknown suite '" + o.suite + "'");
    }
    bool all = std::all_of(rows.begin(), rows.end(), [](const json& r) { return r["ok"].get<bool>(); });
    out.doc["ok"] = all;
    out.doc["checks"] = rows;
    out.checks_failed = !all;
    return out;
}

Output cmd_scan(const Options& o)
{
    auto t = need_type(o);
    need_order(o);
    if (o.prime_bound < 2) throw input_error("--prime-bound must be at least 2");
    auto which = parse_scan_series(o.series);
    if ((which == ScanSeries::J || which == ScanSeries::t1 || which == ScanSeries::t2 || which == ScanSeries::t3)) {
        need_cusp(t);
    }
    if (which == ScanSeries::a && t.is_cusp(0)) throw input_error("series a needs m1 finite");
    if (which == ScanSeries::b && t.is_cusp(1)) throw input_error("series b needs m2 finite");
    auto r = scan_denominators(t, which, o.order, o.prime_bound);
    Output out{header("scan"), "denominators"};
    out.doc["type"] = type_token(t);
    out.doc["series"] = r.series;
    out.doc["order"] = o.order;
    out.doc["prime_bound"] = o.prime_bound;
    out.doc["complete"] = r.complete;
    json appearing = json::array(), absent = json::array(), first = json::object();
    for (const auto& p : r.primes_appearing) appearing.push_back(p.get_str());
    for (long p : r.primes_absent) absent.push_back(std::to_string(p));
    for (const auto& [p, n] : r.first_appearance) first[p.get_str()] = n;
    out.doc["primes_appearing"] = appearing;
    out.doc["primes_absent"] = absent;
    out.doc["first_appearance"] = first;
    json rows = json::array();
    for (const auto& e : r.entries) {
        std::string f;
        for (const auto& [p, k] : e.factorization.factors) {
            if (!f.empty()) f += "*";
            f += p.get_str() + (k > 1 ? "^" + std::to_string(k) : "");
        }
        if (!e.factorization.complete()) f += (f.empty() ? "" : "*") + ("(" + e.factorization.cofactor.get_str() + ")");
        rows.push_back({{"n", e.n}, {"denominator", e.denominator.get_str()}, {"factorization", f.empty() ? "1" : f}});
    }
    out.doc["denominators"] = rows;
    return out;
}

Output cmd_cy(const Options& o)
{
    need_order(o);
    if (o.model.empty()) throw input_error("--model is required");
    const auto& m = find_cy_model(o.model);
    if (o.order < 1) throw input_error("cy needs --order >= 1");
    auto fp = frobenius(m, o.order);
    auto mm = mirror_map(m, o.order);
    auto y = yukawa(m, o.order);
    auto mo = cy_monodromy(m);
    Output out{header("cy"), "instantons"};
    out.doc["model"] = m.name;
    out.doc["a1"] = to_string(m.a1);
    out.doc["a2"] = to_string(m.a2);
    out.doc["n1"] = std::to_string(m.n1);
    out.doc["n2"] = std::to_string(m.n2);
    out.doc["type"] = type_token(m.type);
    out.doc["n0"] = std::to_string(m.n0);
    out.doc["n0_inferred"] = m.n0_inferred;
    out.doc["order"] = o.order;
    out.doc["mu"] = mm.mu.get_str();
    out.doc["psi0"] = string_list(fp.psi0);
    out.doc["sigma"] = string_list(fp.sigma);
    out.doc["mirror"] = string_list(mm.Z_of_Q);
    out.doc["yukawa"] = string_list(y.Y_Q);
    json inst = json::array();
    for (std::size_t d = 0; d < y.n.size(); ++d) inst.push_back({{"d", static_cast<int>(d)}, {"n_d", to_string(y.n[d])}});
    out.doc["instantons"] = inst;
    out.doc["monodromy"] = {{"M0", matrix_json(mo.M0)},
                            {"M1", matrix_json(mo.M1)},
                            {"Minf", matrix_json(mo.Minf)},
                            {"conifold", matrix_json(mo.conifold)}};
    out.doc["mInfOrder"] = mo.minf_order == 0 ? "inf" : std::to_string(mo.minf_order);
    return out;
}

Output cmd_table1(const Options&)
{
    Output out{header("table1"), "rows"};
    json rows = json::array();
    for (const auto& r : table1()) {
        rows.push_back({{"type", type_token(r.type)},
                        {"realization", r.realization},
                        {"g", r.g},
                        {"zeta1", r.zeta1},
                        {"gamma1", r.gamma1},
                        {"zeta2", r.zeta2},
                        {"gamma2", r.gamma2},
                        {"zeta3", r.zeta3},
                        {"gamma3", r.gamma3},
                        {"alpha3", r.alpha3.to_string()},
                        {"h3", r.h3},
                        {"q_sub", r.q_sub.to_string()},
                        {"lambda", to_string(r.lambda)},
                        {"Q", r.Q}});
    }
    out.doc["rows"] = rows;
    return out;
}

std::string scalar_text(const json& v)
{
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

std::string csv_cell(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

void render(const Output& o, const std::string& format, std::ostream& out)
{
    if (format == "json") {
        out << o.doc.dump(2) << "\n";
        return;
    }
    const json& rows = o.doc.at(o.table);
    std::vector<std::string> keys;
    if (!rows.empty()) {
        for (auto it = rows[0].begin(); it != rows[0].end(); ++it) keys.push_back(it.key());
    }
    if (format == "csv") {
        for (std::size_t k = 0; k < keys.size(); ++k) out << (k ? "," : "") << csv_cell(keys[k]);
        out << "\n";
        for (const auto& r : rows) {
            for (std::size_t k = 0; k < keys.size(); ++k) out << (k ? "," : "") << csv_cell(scalar_text(r.at(keys[k])));
            out << "\n";
        }
        return;
    }
    for (auto it = o.doc.begin(); it != o.doc.end(); ++it) {
        if (it.key() == o.table) continue;
        out << it.key() << ": " << scalar_text(it.value()) << "\n";
    }
    out << "\n";
    for (std::size_t k = 0; k < keys.size(); ++k) out << (k ? "\t" : "") << keys[k];
    out << "\n";
    for (const auto& r : rows) {
        for (std::size_t k = 0; k < keys.size(); ++k) out << (k ? "\t" : "") << scalar_text(r.at(keys[k]));
        out << "\n";
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Hauptmoduln, Halphen systems and automorphic forms of triangle groups", "trigroups"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--order-cap", o.order_cap, "largest accepted --order")->check(CLI::PositiveNumber);

    auto type_opt = [&](CLI::App* s) { s->add_option("--type", o.type, "m1,m2,m3 with inf for a cusp")->required(); };
    auto order_opt = [&](CLI::App* s) { s->add_option("--order", o.order, "truncation order")->required(); };

    std::function<Output(const Options&)> command;
    auto on = [&](CLI::App* s, Output (*f)(const Options&)) { s->callback([&command, f] { command = f; }); };

    auto* expand = app.add_subcommand("expand", "Hauptmodul expansion at a vertex");
    type_opt(expand);
    order_opt(expand);
    expand->add_option("--point", o.point)->check(CLI::IsMember({"cusp", "z1", "z2"}));
    expand->add_option("--variable", o.variable)->check(CLI::IsMember({"normalized", "raw"}));
    expand->add_option("--digits", o.digits);
    on(expand, cmd_expand);

    auto* halphen = app.add_subcommand("halphen", "normalized Halphen solution at the cusp");
    type_opt(halphen);
    order_opt(halphen);
    halphen->add_flag("--symbolic", o.symbolic, "coefficients as polynomials in m1, m2");
    on(halphen, cmd_halphen);

    auto* basis_cmd = app.add_subcommand("basis", "basis of holomorphic forms of a weight");
    type_opt(basis_cmd);
    order_opt(basis_cmd);
    basis_cmd->add_option("--weight", o.weight)->required();
    on(basis_cmd, cmd_basis);

    auto* constants = app.add_subcommand("constants", "group constants and alpha_i");
    type_opt(constants);
    constants->add_option("--digits", o.digits);
    on(constants, cmd_constants);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    type_opt(verify);
    order_opt(verify);
    verify->add_option("--suite", o.suite)
        ->required()
        ->check(CLI::IsMember({"ode", "identities", "cross-engine", "classical", "proposition1"}));
    on(verify, cmd_verify);

    auto* scan = app.add_subcommand("scan", "denominator primes of an expansion");
    type_opt(scan);
    order_opt(scan);
    scan->add_option("--series", o.series)->check(CLI::IsMember({"J", "t1", "t2", "t3", "a", "b"}));
    scan->add_option("--prime-bound", o.prime_bound);
    on(scan, cmd_scan);

    auto* cy = app.add_subcommand("cy", "hypergeometric Calabi-Yau model");
    cy->add_option("--model", o.model, "name (quintic, a1,a2) or 1-based index")->required();
    order_opt(cy);
    on(cy, cmd_cy);

    auto* t1 = app.add_subcommand("table1", "the nine arithmetic types");
    on(t1, cmd_table1);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return EXIT_OK;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return EXIT_OK;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return EXIT_INPUT;
    }

    try {
        Output result = command(o);
        render(result, o.format, out);
        return result.checks_failed ? EXIT_CHECK : EXIT_OK;
    } catch (const input_error& e) {
        err << "error: " << e.what() << "\n";
        return EXIT_INPUT;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return EXIT_INPUT;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return EXIT_INPUT;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return EXIT_CHECK;
    }
}

} // namespace tg::cli
