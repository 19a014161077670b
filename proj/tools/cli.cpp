#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "numfun/arakelov.hpp"
#include "numfun/completions.hpp"
#include "numfun/heights.hpp"
#include "numfun/parse.hpp"
#include "numfun/places.hpp"
#include "numfun/poly_factor.hpp"
#include "numfun/surface.hpp"
#include "numfun/symbols.hpp"
#include "suites.hpp"

namespace numfun::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public Error {
public:
    using Error::Error;
};

struct Context {
    std::vector<std::string> args;
    std::optional<std::string> at;
    std::optional<std::uint64_t> mod;
    std::optional<long> m;
    double tol = 1e-8;
    std::uint64_t seed = suites::Options{}.seed;
    QuadConfig quad;
    json inputs = json::object();
    json results = json::object();
    std::optional<bool> passed;
};

struct Command {
    CommandInfo info;
    std::size_t min_args, max_args;
    std::vector<std::string> options;  // "at", "mod", "m"
    std::function<void(Context&)> run;
};

// ---- input helpers ---------------------------------------------------------

Rational parse_q(const std::string& s)
{
    QRatFunc f = parse_rational_function(s);
    if (f.num().degree() > 0 || f.den().degree() > 0)
        throw UsageError("expected a rational number, got '" + s + "'");
    return f.is_zero() ? Rational(0) : Rational(f.num().coeff(0) / f.den().coeff(0));
}

Integer parse_z(const std::string& s)
{
    Rational q = parse_q(s);
    if (q.get_den() != 1)
        throw UsageError("expected an integer, got '" + s + "'");
    return Integer(q.get_num());
}

long parse_long(const std::string& s)
{
    Integer z = parse_z(s);
    if (!z.fits_slong_p())
        throw UsageError("integer out of range: " + s);
    return z.get_si();
}

bool is_inf(const std::string& s) { return s == "inf" || s == "t=inf" || s == "infinity"; }

std::optional<Rational> parse_point(const std::string& s)
{
    if (is_inf(s))
        return std::nullopt;
    return parse_q(s.rfind("t=", 0) == 0 ? s.substr(2) : s);
}

Place parse_q_place(const std::string& s)
{
    if (is_inf(s))
        return ArchimedeanQ{};
    return finite_prime(parse_z(s.rfind("p=", 0) == 0 ? s.substr(2) : s));
}

FpPoly to_fp(const QPoly& f, std::uint64_t p) { return reduce_mod_p(f, PrimeField(p)); }

FpRatFunc parse_fp_ratfunc(const std::string& s, std::uint64_t p)
{
    QRatFunc f = parse_rational_function(s);
    return FpRatFunc(to_fp(f.num(), p), to_fp(f.den(), p));
}

// "P" is an irreducible polynomial over F_p or inf
Place parse_ff_place(const std::string& s, std::uint64_t p)
{
    if (is_inf(s))
        return function_field_infinity(p);
    return function_field_point(to_fp(parse_polynomial(s), p));
}

ProjectiveCurve parse_curve(const std::string& s)
{
    if (is_inf(s))
        return ProjectiveCurve::infinity();
    if (s.rfind("t=", 0) == 0)
        return ProjectiveCurve::section(parse_q(s.substr(2)));
    return ProjectiveCurve(HorizontalCurve(parse_polynomial(s)));
}

SpherePoint parse_sphere_point(const std::string& s)
{
    if (is_inf(s))
        return SpherePoint::at_infinity();
    auto comma = s.find(',');
    try {
        if (comma == std::string::npos)
            return SpherePoint::at({parse_q(s).get_d(), 0});
        return SpherePoint::at({std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))});
    } catch (const std::logic_error&) {
        throw UsageError("expected a complex point 'x,y', a rational or inf, got '" + s + "'");
    }
}

// divisor := term { ('+'|'-') term } ; term := [coef ['*']] ( 'C(' poly | inf ')' | 'X_inf' | 'X_' prime )
ArakelovDivisor parse_divisor(const std::string& text)
{
    ArakelovDivisor D;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    auto fail = [&](const std::string& why) {
        throw UsageError("bad divisor '" + text + "' at position " + std::to_string(i) + ": " + why);
    };
    bool first = true;
    for (;;) {
        skip();
        if (i >= text.size()) {
            if (first)
                fail("empty divisor");
            break;
        }
        double sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!first) {
            fail("expected + or -");
        }
        first = false;
        std::size_t start = i;
        while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '.' ||
                                   text[i] == 'e' || (i > start && (text[i] == '-' || text[i] == '+') &&
                                                      text[i - 1] == 'e')))
            ++i;
        std::string coef = text.substr(start, i - start);
        skip();
        if (i < text.size() && text[i] == '*') {
            ++i;
            skip();
        }
        if (text.compare(i, 2, "C(") == 0) {
            std::size_t depth = 0, close = i + 1;
            for (; close < text.size(); ++close) {
                depth += text[close] == '(';
                depth -= text[close] == ')';
                if (depth == 0)
                    break;
            }
            if (close >= text.size())
                fail("missing )");
            long n = coef.empty() ? 1 : parse_long(coef);
            auto C = parse_curve(text.substr(i + 2, close - i - 2));
            if ((D.horizontal[C] += static_cast<long>(sign) * n) == 0)
                D.horizontal.erase(C);
            i = close + 1;
        } else if (text.compare(i, 2, "X_") == 0) {
            i += 2;
            std::size_t s2 = i;
            while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i])))
                ++i;
            std::string what = text.substr(s2, i - s2);
            if (what == "inf") {
                D.a_inf += sign * (coef.empty() ? 1.0 : std::stod(coef));
            } else {
                Integer p = parse_z(what);
                finite_prime(p);
                if ((D.vertical[p] += static_cast<long>(sign) * (coef.empty() ? 1 : parse_long(coef))) == 0)
                    D.vertical.erase(p);
            }
        } else {
            fail("expected C(curve), X_inf or X_p");
        }
    }
    return D;
}

// ---- output helpers --------------------------------------------------------

json exact(const ExactLog& x) { return x.to_string(); }

json pairing_json(const PairingValue& v)
{
    return {{"finite_part", exact(v.finite_part)},
            {"archimedean", v.archimedean},
            {"degree_terms", v.degree_terms},
            {"total", v.total},
            {"error_bound", v.error_bound}};
}

json divisor_json(const ArakelovDivisor& D)
{
    json h = json::array(), v = json::array();
    for (const auto& [C, n] : D.horizontal)
        h.push_back({{"curve", to_string(C)}, {"multiplicity", n}});
    for (const auto& [p, n] : D.vertical)
        v.push_back({{"prime", p.get_str()}, {"multiplicity", n}});
    return {{"divisor", to_string(D)},
            {"horizontal", h},
            {"vertical", v},
            {"a_inf", D.a_inf},
            {"a_inf_error", D.a_inf_error},
            {"degree", D.degree()}};
}

json terms_json(const std::vector<LocalTerm>& terms)
{
    json a = json::array();
    for (const auto& t : terms)
        a.push_back({{"place", t.place}, {"order", t.order}, {"degree", t.degree}});
    return a;
}

json suite_json(const suites::Suite& s, const suites::Result& r)
{
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return {{"suite", s.name}, {"criterion", s.criterion}, {"title", s.title}, {"passed", r.passed()},
            {"checks", checks}};
}

std::string scalar(const json& j)
{
    if (j.is_string())
        return j.get<std::string>();
    return j.dump();
}

bool flat(const json& j)
{
    if (j.is_array())
        return std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_primitive(); });
    return j.is_primitive();
}

std::string flat_text(const json& j)
{
    if (!j.is_array())
        return scalar(j);
    std::string s = "[";
    for (std::size_t i = 0; i < j.size(); ++i)
        s += (i ? ", " : "") + scalar(j[i]);
    return s + "]";
}

void render(std::ostream& out, const json& j, int indent)
{
    std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        std::size_t w = 0;
        for (auto it = j.begin(); it != j.end(); ++it)
            if (flat(it.value()))
                w = std::max(w, it.key().size());
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (flat(it.value())) {
                out << pad << it.key() << std::string(w - it.key().size() + 2, ' ') << flat_text(it.value()) << '\n';
            } else {
                out << pad << it.key() << ":\n";
                render(out, it.value(), indent + 2);
            }
        }
    } else if (j.is_array()) {
        for (const auto& e : j) {
            if (flat(e)) {
                out << pad << "- " << flat_text(e) << '\n';
            } else {
                out << pad << "-\n";
                render(out, e, indent + 2);
            }
        }
    } else {
        out << pad << scalar(j) << '\n';
    }
}

// ---- commands --------------------------------------------------------------

void set_inputs(Context& c, std::initializer_list<const char*> names)
{
    std::size_t i = 0;
    for (const char* n : names)
        if (i < c.args.size())
            c.inputs[n] = c.args[i++];
}

std::vector<Command> build_table()
{
    std::vector<Command> t;
    auto add = [&](std::string path, std::string usage, std::vector<std::string> reaches, std::size_t lo,
                   std::size_t hi, std::vector<std::string> options, std::function<void(Context&)> fn) {
        t.push_back({{std::move(path), std::move(usage), std::move(reaches)}, lo, hi, std::move(options), std::move(fn)});
    };

    // core
    add("gcd", "a b", {"gcd"}, 2, 2, {}, [](Context& c) {
        set_inputs(c, {"a", "b"});
        c.results["gcd"] = gcd(parse_z(c.args[0]), parse_z(c.args[1])).get_str();
    });
    add("factor", "n", {"factor_integer"}, 1, 1, {}, [](Context& c) {
        set_inputs(c, {"n"});
        auto f = factor_integer(parse_z(c.args[0]));
        json a = json::array();
        for (const auto& [p, e] : f.factors)
            a.push_back({{"prime", p.get_str()}, {"exponent", e}});
        c.results["sign"] = f.sign;
        c.results["factors"] = a;
    });
    add("factor-poly", "f", {"factor_poly_mod_p", "factor_over_q"}, 1, 1, {"mod"}, [](Context& c) {
        set_inputs(c, {"f"});
        json a = json::array();
        if (c.mod) {
            c.inputs["mod"] = *c.mod;
            auto f = factor_poly_mod_p(to_fp(parse_polynomial(c.args[0]), *c.mod));
            c.results["leading"] = to_string(f.leading);
            for (const auto& [g, e] : f.factors)
                a.push_back({{"factor", to_string(g)}, {"multiplicity", e}});
        } else {
            auto f = factor_over_q(parse_polynomial(c.args[0]));
            c.results["unit"] = f.unit.get_str();
            for (const auto& [g, e] : f.factors)
                a.push_back({{"factor", to_string(g)}, {"multiplicity", e}});
        }
        c.results["factors"] = a;
    });
    add("resultant", "f g", {"resultant"}, 2, 2, {}, [](Context& c) {
        set_inputs(c, {"f", "g"});
        c.results["resultant"] = resultant(parse_polynomial(c.args[0]), parse_polynomial(c.args[1])).get_str();
    });
    add("poly-gcd", "f g", {"poly_gcd"}, 2, 2, {"mod"}, [](Context& c) {
        set_inputs(c, {"f", "g"});
        QPoly f = parse_polynomial(c.args[0]), g = parse_polynomial(c.args[1]);
        if (c.mod) {
            c.inputs["mod"] = *c.mod;
            c.results["gcd"] = to_string(poly_gcd(to_fp(f, *c.mod), to_fp(g, *c.mod)));
        } else {
            c.results["gcd"] = to_string(poly_gcd(f, g));
        }
    });
    add("reduce", "f p", {"reduce_mod_p"}, 2, 2, {}, [](Context& c) {
        set_inputs(c, {"f", "p"});
        c.results["reduction"] = to_string(reduce_mod_p(parse_polynomial(c.args[0]), PrimeField(parse_z(c.args[1]))));
    });

    // places
    add("val", "f v", {"val", "norm"}, 2, 2, {"mod"}, [](Context& c) {
        set_inputs(c, {"f", "v"});
        const auto& f = c.args[0];
        const auto& v = c.args[1];
        ValuationResult r;
        Rational nrm;
        std::string where;
        if (c.mod) {
            c.inputs["mod"] = *c.mod;
            Place P = parse_ff_place(v, *c.mod);
            auto F = parse_fp_ratfunc(f, *c.mod);
            r = numfun::val(F, P);
            nrm = norm(F, P);
            where = describe(P);
        } else if (v.rfind("t", 0) == 0 || v == "inf") {
            auto pt = parse_point(v);
            Place P = pt ? Place(RationalPoint{*pt}) : Place(RationalInfinity{});
            auto F = parse_rational_function(f);
            r = numfun::val(F, P);
            nrm = norm(F, P);
            where = describe(P);
        } else {
            Place P = parse_q_place(v);
            auto q = parse_q(f);
            r = numfun::val(q, P);
            nrm = norm(q, P);
            where = describe(P);
        }
        c.results["place"] = where;
        c.results["valuation"] = r.value;
        c.results["residue_degree"] = r.residue_degree;
        c.results["norm"] = nrm.get_str();
    });
    add("product-formula q", "f", {"product_formula_check_q"}, 1, 1, {}, [](Context& c) {
        set_inputs(c, {"f"});
        auto w = product_formula_check_q(parse_q(c.args[0]));
        c.results["terms"] = terms_json(w.terms);
        c.results["nonarchimedean_product"] = w.nonarchimedean_product.get_str();
        c.results["archimedean"] = w.archimedean.get_str();
        c.results["log_witness"] = exact(w.log_witness());
        c.passed = w.holds;
    });
    add("product-formula ff", "F", {"sum_formula_check_ff"}, 1, 1, {"mod"}, [](Context& c) {
        set_inputs(c, {"F"});
        if (!c.mod)
            throw UsageError("product-formula ff needs --mod p");
        c.inputs["mod"] = *c.mod;
        auto w = sum_formula_check_ff(parse_fp_ratfunc(c.args[0], *c.mod));
        c.results["terms"] = terms_json(w.terms);
        c.results["total"] = w.total;
        c.passed = w.holds;
    });
    add("product-formula rat", "F", {"sum_formula_check_rational_coeff"}, 1, 1, {}, [](Context& c) {
        set_inputs(c, {"F"});
        auto w = sum_formula_check_rational_coeff(parse_rational_function(c.args[0]));
        c.results["terms"] = terms_json(w.terms);
        c.results["total"] = w.total;
        c.passed = w.holds;
    });

    // completions
    add("expand", "f p n", {"p_adic_digits"}, 3, 3, {"mod"}, [](Context& c) {
        set_inputs(c, {"f", "p", "n"});
        long n = parse_long(c.args[2]);
        if (c.mod) {
            c.inputs["mod"] = *c.mod;
            auto e = p_adic_digits(parse_fp_ratfunc(c.args[0], *c.mod), to_fp(parse_polynomial(c.args[1]), *c.mod), n);
            json d = json::array();
            for (const auto& g : e.digits)
                d.push_back(to_string(g));
            c.results["zero"] = e.zero;
            c.results["start"] = e.start;
            c.results["digits"] = d;
            c.results["partial_sum"] = to_string(e.partial_sum());
        } else {
            auto e = p_adic_digits(parse_q(c.args[0]), parse_z(c.args[1]), n);
            json d = json::array();
            for (const auto& g : e.digits)
                d.push_back(g.get_si());
            c.results["zero"] = e.zero;
            c.results["start"] = e.start;
            c.results["digits"] = d;
            c.results["partial_sum"] = e.partial_sum().get_str();
        }
    });
    add("laurent", "F t0 n", {"laurent_at"}, 3, 3, {}, [](Context& c) {
        set_inputs(c, {"F", "t0", "n"});
        auto e = laurent_at(parse_rational_function(c.args[0]), parse_point(c.args[1]), parse_long(c.args[2]));
        json d = json::array();
        for (const auto& a : e.coefficients)
            d.push_back(a.get_str());
        c.results["zero"] = e.zero;
        c.results["start"] = e.start;
        c.results["coefficients"] = d;
        c.results["partial_sum"] = to_string(e.partial_sum());
    });
    add("metric", "x y v", {"metric"}, 3, 3, {"mod"}, [](Context& c) {
        set_inputs(c, {"x", "y", "v"});
        const auto& v = c.args[2];
        if (c.mod) {
            c.inputs["mod"] = *c.mod;
            c.results["distance"] = metric(parse_fp_ratfunc(c.args[0], *c.mod), parse_fp_ratfunc(c.args[1], *c.mod),
                                           parse_ff_place(v, *c.mod))
                                        .get_str();
        } else if (v.rfind("t", 0) == 0 || v == "inf") {
            auto pt = parse_point(v);
            Place P = pt ? Place(RationalPoint{*pt}) : Place(RationalInfinity{});
            c.results["distance"] =
                metric(parse_rational_function(c.args[0]), parse_rational_function(c.args[1]), P).get_str();
        } else {
            c.results["distance"] = metric(parse_q(c.args[0]), parse_q(c.args[1]), parse_q_place(v)).get_str();
        }
    });

    // symbols
    add("legendre", "a p", {"legendre"}, 2, 2, {}, [](Context& c) {
        set_inputs(c, {"a", "p"});
        c.results["legendre"] = legendre(parse_z(c.args[0]), parse_z(c.args[1]));
    });
    add("hilbert", "a b v", {"hilbert_quadratic"}, 3, 3, {}, [](Context& c) {
        set_inputs(c, {"a", "b", "v"});
        Rational a = parse_q(c.args[0]), b = parse_q(c.args[1]);
        Place v = parse_q_place(c.args[2]);
        int closed = hilbert_quadratic(a, b, v), oracle = hilbert_oracle(a, b, v);
        c.results["symbol"] = closed;
        c.results["solvability_oracle"] = oracle;
        c.passed = closed == oracle;
    });
    add("hilbert-product", "a b", {"hilbert_product_check"}, 2, 2, {}, [](Context& c) {
        set_inputs(c, {"a", "b"});
        auto w = hilbert_product_check(parse_q(c.args[0]), parse_q(c.args[1]));
        json s = json::array();
        for (const auto& [place, v] : w.symbols)
            s.push_back({{"place", place}, {"symbol", v}});
        c.results["symbols"] = s;
        c.results["minus_one_at"] = w.places;
        c.passed = w.holds;
    });
    add("reciprocity", "a b", {"gauss_reciprocity_check"}, 2, 2, {}, [](Context& c) {
        set_inputs(c, {"a", "b"});
        auto w = gauss_reciprocity_check(parse_z(c.args[0]), parse_z(c.args[1]));
        auto sgn = [](int s) { return std::string(s > 0 ? "+1" : "-1"); };
        c.results["legendre_ab"] = sgn(w.legendre_ab);
        c.results["legendre_ba"] = sgn(w.legendre_ba);
        c.results["lhs"] = sgn(w.legendre_ab * w.legendre_ba);
        c.results["rhs"] = sgn(w.sign);
        c.results["hilbert_at_a"] = sgn(w.hilbert_at_a);
        c.results["hilbert_at_b"] = sgn(w.hilbert_at_b);
        c.results["hilbert_at_2"] = sgn(w.hilbert_at_2);
        c.results["direct"] = w.direct_holds ? "PASS" : "FAIL";
        c.results["via_hilbert"] = w.hilbert_holds ? "PASS" : "FAIL";
        c.passed = w.holds();
    });
    add("tame", "f g", {"tame_symbol"}, 2, 2, {"at"}, [](Context& c) {
        set_inputs(c, {"f", "g"});
        std::string at = c.at.value_or("0");
        c.inputs["at"] = at;
        c.results["tame_symbol"] =
            tame_symbol(parse_rational_function(c.args[0]), parse_rational_function(c.args[1]), parse_point(at)).get_str();
    });
    add("residue", "f g point", {"residue"}, 3, 3, {}, [](Context& c) {
        set_inputs(c, {"f", "g", "point"});
        c.results["residue"] =
            residue(parse_rational_function(c.args[0]), parse_rational_function(c.args[1]), parse_point(c.args[2]))
                .get_str();
    });
    add("residue-sum", "f g", {"residue_sum_check"}, 2, 2, {}, [](Context& c) {
        set_inputs(c, {"f", "g"});
        auto w = residue_sum_check(parse_rational_function(c.args[0]), parse_rational_function(c.args[1]));
        json a = json::array();
        for (const auto& t : w.terms)
            a.push_back({{"point", t.point}, {"degree", t.degree}, {"residue", t.residue.get_str()}});
        c.results["terms"] = a;
        c.results["total"] = w.total.get_str();
        c.passed = w.holds;
    });
    add("residue-pairing", "A B t0 n", {"residue_pairing"}, 4, 4, {}, [](Context& c) {
        set_inputs(c, {"A", "B", "t0", "n"});
        auto t0 = parse_point(c.args[2]);
        long n = parse_long(c.args[3]);
        auto series = [&](const std::string& s) {
            auto F = parse_rational_function(s);
            return t0 ? series_at(F, *t0, n) : series_at_infinity(F, n);
        };
        auto A = series(c.args[0]), B = series(c.args[1]);
        Rational ab = residue_pairing(A, B), ba = residue_pairing(B, A);
        c.results["res_A_dB"] = ab.get_str();
        c.results["res_B_dA"] = ba.get_str();
        c.passed = ab + ba == 0;
    });

    // surface
    add("intersect", "f g", {"total_intersection", "common_points", "local_index"}, 2, 2, {"at"}, [](Context& c) {
        set_inputs(c, {"f", "g"});
        HorizontalCurve C(parse_polynomial(c.args[0])), D(parse_polynomial(c.args[1]));
        std::optional<Integer> only;
        if (c.at) {
            only = parse_z(*c.at);
            finite_prime(*only);
            c.inputs["at"] = *c.at;
        }
        auto cyc = total_intersection(C, D);
        json pts = json::array();
        for (const auto& x : common_points(C, D)) {
            if (only && x.p != *only)
                continue;
            json e = {{"point", to_string(x)}, {"residue_degree", x.residue_degree()}};
            if (C.is_section() || D.is_section()) {
                const auto& sec = D.is_section() ? D : C;
                const auto& other = D.is_section() ? C : D;
                e["multiplicity"] = local_multiplicity(other, sec, x);
                e["index"] = exact(local_index(other, sec, x));
            }
            pts.push_back(e);
        }
        json per = json::array(), inf = json::array();
        ExactLog total;
        for (const auto& pm : cyc.per_prime)
            if (!only || pm.p == *only) {
                per.push_back({{"p", pm.p.get_str()}, {"multiplicity", pm.multiplicity}});
                total += ExactLog::of_prime_power(pm.p, pm.multiplicity);
            }
        for (const auto& pm : cyc.at_fiber_infinity)
            if (!only || pm.p == *only)
                inf.push_back({{"p", pm.p.get_str()}, {"multiplicity", pm.multiplicity}});
        c.results["resultant"] = cyc.resultant.get_str();
        c.results["points"] = pts;
        c.results["per_prime"] = per;
        c.results["at_fiber_infinity"] = inf;
        c.results["index"] = exact(total);
    });
    add("tangency", "a b p", {"tangency_order"}, 3, 3, {}, [](Context& c) {
        set_inputs(c, {"a", "b", "p"});
        c.results["order"] = tangency_order(parse_q(c.args[0]), parse_q(c.args[1]), parse_z(c.args[2]));
    });

    // heights
    add("height", "x0 x1 ...", {"naive_height", "multi_place_height"}, 2, 64, {}, [](Context& c) {
        std::vector<Rational> coords;
        json in = json::array();
        for (const auto& s : c.args) {
            coords.push_back(parse_q(s));
            in.push_back(s);
        }
        c.inputs["coordinates"] = in;
        auto P = ProjectivePoint::from_rationals(coords);
        auto h = naive_height(P);
        auto m = multi_place_height(coords);
        json loc = json::array();
        for (const auto& l : m.local)
            loc.push_back({{"place", l.place}, {"max", l.value.get_str()}});
        c.results["point"] = to_string(P);
        c.results["height"] = exact(*h.exact);
        c.results["local_maxima"] = loc;
        c.results["product"] = m.product.get_str();
        c.passed = m.product == Rational(P.max_abs());
    });
    add("enumerate", "n bound", {"enumerate_points"}, 2, 2, {}, [](Context& c) {
        set_inputs(c, {"n", "bound"});
        long n = parse_long(c.args[0]);
        if (n < 1)
            throw UsageError("dimension must be >= 1");
        auto pts = enumerate_points(static_cast<std::size_t>(n), parse_long(c.args[1]));
        json a = json::array();
        for (const auto& P : pts)
            a.push_back(to_string(P));
        c.results["count"] = pts.size();
        c.results["points"] = a;
    });
    add("functoriality", "x y d", {"power_map_functoriality_check"}, 3, 3, {}, [](Context& c) {
        set_inputs(c, {"x", "y", "d"});
        auto w = power_map_functoriality_check(ProjectivePoint({parse_z(c.args[0]), parse_z(c.args[1])}),
                                               parse_long(c.args[2]));
        c.results["image"] = to_string(w.image);
        c.results["lhs"] = exact(w.lhs);
        c.results["rhs"] = exact(w.rhs);
        c.passed = w.holds;
    });
    add("ec-add", "a b x1 y1 x2 y2", {"ec_add"}, 6, 6, {}, [](Context& c) {
        set_inputs(c, {"a", "b", "x1", "y1", "x2", "y2"});
        EllipticCurve E(parse_q(c.args[0]), parse_q(c.args[1]));
        auto pt = [&](std::size_t i) {
            return is_inf(c.args[i]) ? ECPoint::at_infinity() : ECPoint::affine(parse_q(c.args[i]), parse_q(c.args[i + 1]));
        };
        c.results["sum"] = to_string(ec_add(E, pt(2), pt(4)));
    });
    add("ec-canonical-height", "a b x y", {"canonical_height"}, 4, 4, {}, [](Context& c) {
        set_inputs(c, {"a", "b", "x", "y"});
        c.inputs["tol"] = c.tol;
        EllipticCurve E(parse_q(c.args[0]), parse_q(c.args[1]));
        auto h = canonical_height(E, ECPoint::affine(parse_q(c.args[2]), parse_q(c.args[3])), c.tol);
        c.results["canonical_height"] = h.value.approx;
        c.results["error_bound"] = h.value.error_bound;
        c.results["torsion"] = h.torsion;
        c.results["iterations"] = h.iterations;
    });

    // arakelov
    add("arakelov green", "P Q", {"green"}, 2, 2, {}, [](Context& c) {
        set_inputs(c, {"P", "Q"});
        c.results["log_green"] = log_green(parse_sphere_point(c.args[0]), parse_sphere_point(c.args[1]));
        c.results["constant"] = kGreenConstant;
    });
    add("arakelov arch", "C D", {"arch_pairing"}, 2, 2, {}, [](Context& c) {
        set_inputs(c, {"C", "D"});
        auto a = arch_pairing(parse_curve(c.args[0]), parse_curve(c.args[1]));
        c.results["archimedean"] = a.value;
        c.results["error_bound"] = a.error;
    });
    add("arakelov pair", "C D", {"arakelov_pairing"}, 2, 2, {}, [](Context& c) {
        set_inputs(c, {"C", "D"});
        c.results = pairing_json(arakelov_pairing(parse_divisor(c.args[0]), parse_divisor(c.args[1])));
    });
    add("arakelov divisor-of", "F", {"divisor_of_function"}, 1, 1, {}, [](Context& c) {
        set_inputs(c, {"F"});
        c.results = divisor_json(divisor_of_function(parse_rational_function(c.args[0]), c.quad));
    });
    add("arakelov invariance", "C D F", {"linear_equiv_invariance_check"}, 3, 3, {}, [](Context& c) {
        set_inputs(c, {"C", "D", "F"});
        auto w = linear_equiv_invariance_check(parse_divisor(c.args[0]), parse_divisor(c.args[1]),
                                               parse_rational_function(c.args[2]), 1e-6, c.quad);
        c.results["before"] = pairing_json(w.before);
        c.results["after"] = pairing_json(w.after);
        c.results["residual"] = w.residual;
        c.results["error_bound"] = w.bound;
        c.passed = w.holds;
    });
    add("arakelov canonical", "[h]", {"canonical_divisor"}, 0, 1, {}, [](Context& c) {
        set_inputs(c, {"h"});
        QRatFunc h = c.args.empty() ? QRatFunc(QPoly::constant(Rational(1))) : parse_rational_function(c.args[0]);
        c.results = divisor_json(canonical_divisor(h, c.quad));
    });
    add("arakelov self", "C", {"self_intersection"}, 1, 1, {"m"}, [](Context& c) {
        set_inputs(c, {"C"});
        long m = c.m.value_or(7);
        c.inputs["m"] = m;
        c.results = pairing_json(self_intersection(parse_divisor(c.args[0]), m, c.quad));
    });
    add("arakelov adjunction", "C", {"adjunction_check"}, 1, 1, {}, [](Context& c) {
        set_inputs(c, {"C"});
        auto w = adjunction_check(parse_curve(c.args[0]), 1e-5, c.quad);
        c.results["with_canonical"] = pairing_json(w.with_canonical);
        c.results["self_intersection"] = pairing_json(w.self);
        c.results["residual"] = w.residual;
        c.passed = w.holds;
    });

    // verification suites
    add("verify", "suite|all|list", {"run"}, 1, 1, {}, [](Context& c) {
        set_inputs(c, {"suite"});
        const std::string& name = c.args[0];
        if (name == "list") {
            json a = json::array();
            for (const auto& s : suites::registry())
                a.push_back({{"suite", s.name}, {"criterion", s.criterion}, {"title", s.title}});
            c.results["suites"] = a;
            return;
        }
        suites::Options opt;
        opt.seed = c.seed;
        opt.tol = c.tol;
        opt.quad = c.quad;
        c.inputs["seed"] = c.seed;
        c.inputs["tol"] = c.tol;
        std::vector<const suites::Suite*> chosen;
        if (name == "all") {
            for (const auto& s : suites::registry())
                chosen.push_back(&s);
        } else if (const auto* s = suites::find(name)) {
            chosen.push_back(s);
        } else {
            throw UsageError("unknown suite '" + name + "'; try 'verify list'");
        }
        json a = json::array();
        bool ok = true;
        for (const auto* s : chosen) {
            auto r = s->run(opt);
            ok = ok && r.passed();
            a.push_back(suite_json(*s, r));
        }
        c.results["suites"] = a;
        c.passed = ok;
    });
    return t;
}

const std::vector<Command>& table()
{
    static const std::vector<Command> t = build_table();
    return t;
}

}  // namespace

const std::vector<CommandInfo>& command_table()
{
    static const std::vector<CommandInfo> info = [] {
        std::vector<CommandInfo> v;
        for (const auto& c : table())
            v.push_back(c.info);
        return v;
    }();
    return info;
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Valuations, symbols, intersections and heights on the number/function-field dictionary", "numfun"};
    app.require_subcommand(1);
    bool as_json = false;
    std::uint64_t seed = suites::Options{}.seed;
    double tol = 1e-8;
    int quad_res = QuadConfig{}.points;
    app.add_flag("--json", as_json, "emit the report as JSON");
    app.add_option("--seed", seed, "seed for randomized suites");
    app.add_option("--tol", tol, "tolerance for the canonical height");
    app.add_option("--quad-res", quad_res, "Gauss points per quadrature panel (2..64)");

    std::vector<std::string> positional;
    std::string at;
    std::uint64_t mod = 0;
    long m = 0;
    const Command* chosen = nullptr;
    std::map<std::string, CLI::App*> parents;
    for (const auto& cmd : table()) {
        CLI::App* parent = &app;
        std::string leaf = cmd.info.path;
        auto space = leaf.find(' ');
        if (space != std::string::npos) {
            std::string group = leaf.substr(0, space);
            leaf = leaf.substr(space + 1);
            if (!parents.count(group)) {
                parents[group] = app.add_subcommand(group, group + " subcommands");
                parents[group]->require_subcommand(1);
                parents[group]->fallthrough();
            }
            parent = parents[group];
        }
        CLI::App* sub = parent->add_subcommand(leaf, cmd.info.usage);
        sub->fallthrough();
        sub->add_option("args", positional, cmd.info.usage);
        for (const auto& o : cmd.options) {
            if (o == "at")
                sub->add_option("--at", at, "point or prime");
            else if (o == "mod")
                sub->add_option("--mod", mod, "work over F_p");
            else if (o == "m")
                sub->add_option("--m", m, "moving-function parameter");
        }
        sub->callback([&chosen, &cmd] { chosen = &cmd; });
    }

    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return 2;
    }
    if (!chosen) {
        err << "usage error: no command given\n" << app.help();
        return 2;
    }
    if (positional.size() < chosen->min_args || positional.size() > chosen->max_args) {
        err << "usage error: " << chosen->info.path << " expects " << chosen->info.usage << "\n";
        return 2;
    }

    Context ctx;
    ctx.args = positional;
    if (!at.empty())
        ctx.at = at;
    if (mod)
        ctx.mod = mod;
    if (m)
        ctx.m = m;
    ctx.tol = tol;
    ctx.seed = seed;
    try {
        ctx.quad = quad_config_from_resolution(quad_res);
        if (!(tol > 0))
            throw UsageError("--tol must be positive");
        chosen->run(ctx);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    std::string echo = chosen->info.path;
    for (const auto& a : positional)
        echo += " " + a;
    json report = {{"command", echo}, {"inputs", ctx.inputs}, {"results", ctx.results}};
    if (ctx.passed)
        report["verdict"] = *ctx.passed ? "PASS" : "FAIL";
    if (as_json)
        out << report.dump(2) << "\n";
    else
        render(out, report, 0);
    return ctx.passed.value_or(true) ? 0 : 1;
}

}  // namespace numfun::cli
