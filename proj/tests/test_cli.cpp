#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "cli.hpp"

using numfun::cli::command_table;
using numfun::cli::run;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome call(std::vector<std::string> argv)
{
    std::ostringstream out, err;
    int code = run(argv, out, err);
    return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& what) { return text.find(what) != std::string::npos; }

}  // namespace

TEST_CASE("every library operation is reachable")
{
    const std::set<std::string> operations{
        "gcd", "factor_integer", "factor_poly_mod_p", "resultant", "poly_gcd", "reduce_mod_p",
        "val", "norm", "product_formula_check_q", "sum_formula_check_ff", "sum_formula_check_rational_coeff",
        "p_adic_digits", "laurent_at", "metric",
        "legendre", "hilbert_quadratic", "hilbert_product_check", "gauss_reciprocity_check", "tame_symbol",
        "residue", "residue_sum_check", "residue_pairing",
        "common_points", "local_index", "total_intersection", "tangency_order",
        "naive_height", "multi_place_height", "enumerate_points", "power_map_functoriality_check", "ec_add",
        "canonical_height",
        "green", "arch_pairing", "arakelov_pairing", "divisor_of_function", "linear_equiv_invariance_check",
        "canonical_divisor", "self_intersection", "adjunction_check", "run"};
    std::set<std::string> reached;
    for (const auto& c : command_table())
        reached.insert(c.reaches.begin(), c.reaches.end());
    for (const auto& op : operations) {
        INFO(op);
        CHECK(reached.count(op) == 1);
    }
}

TEST_CASE("every command runs on a sample input")
{
    const std::map<std::string, std::vector<std::string>> samples{
        {"gcd", {"gcd", "12", "18"}},
        {"factor", {"factor", "-360"}},
        {"factor-poly", {"factor-poly", "t^4-1", "--mod", "5"}},
        {"resultant", {"resultant", "t^2+1", "t-2"}},
        {"poly-gcd", {"poly-gcd", "t^2-1", "t^2+2*t+1"}},
        {"reduce", {"reduce", "5*t^2+7*t+1/2", "3"}},
        {"val", {"val", "12/5", "5"}},
        {"product-formula q", {"product-formula", "q", "12/5"}},
        {"product-formula ff", {"product-formula", "ff", "(t^2+1)/t", "--mod", "3"}},
        {"product-formula rat", {"product-formula", "rat", "(t^2+1)/(t-3)"}},
        {"expand", {"expand", "1/5", "3", "3"}},
        {"laurent", {"laurent", "1/(t^2-t)", "0", "4"}},
        {"metric", {"metric", "1", "10", "3"}},
        {"legendre", {"legendre", "2", "7"}},
        {"hilbert", {"hilbert", "2", "3", "3"}},
        {"hilbert-product", {"hilbert-product", "-6", "10"}},
        {"reciprocity", {"reciprocity", "3", "5"}},
        {"tame", {"tame", "t", "t-1"}},
        {"residue", {"residue", "1/(t^2+1)", "t", "inf"}},
        {"residue-sum", {"residue-sum", "t/(t^2+1)", "t"}},
        {"residue-pairing", {"residue-pairing", "1/t", "t^2+t", "0", "5"}},
        {"intersect", {"intersect", "t", "t-2"}},
        {"tangency", {"tangency", "1/5", "2", "3"}},
        {"height", {"height", "12/5", "2"}},
        {"enumerate", {"enumerate", "1", "3"}},
        {"functoriality", {"functoriality", "3", "5", "4"}},
        {"ec-add", {"ec-add", "0", "17", "-2", "3", "-1", "4"}},
        {"ec-canonical-height", {"ec-canonical-height", "0", "-2", "3", "5"}},
        {"arakelov green", {"arakelov", "green", "0", "1"}},
        {"arakelov arch", {"arakelov", "arch", "t", "t^2+1"}},
        {"arakelov pair", {"arakelov", "pair", "C(t)", "C(t-2)"}},
        {"arakelov divisor-of", {"arakelov", "divisor-of", "t-2"}},
        {"arakelov invariance", {"arakelov", "invariance", "C(t)", "C(t-1)", "(t-2)/(t-3)"}},
        {"arakelov canonical", {"arakelov", "canonical"}},
        {"arakelov self", {"arakelov", "self", "C(t=0)"}},
        {"arakelov adjunction", {"arakelov", "adjunction", "inf"}},
        {"verify", {"verify", "padic-example"}},
    };
    for (const auto& c : command_table()) {
        INFO(c.path);
        auto it = samples.find(c.path);
        REQUIRE(it != samples.end());
        auto r = call(it->second);
        CHECK(r.code == 0);
        CHECK(r.err.empty());
        CHECK(has(r.out, "command"));
    }
}

TEST_CASE("documented examples")
{
    auto a = call({"intersect", "5*t-1", "t-2"});
    CHECK(a.code == 0);
    CHECK(has(a.out, "(3, t + 1)"));
    CHECK(has(a.out, "2 * log(3)"));
    auto b = call({"--json", "expand", "1/5", "3", "3"});
    CHECK(has(b.out, "\"digits\": [\n      2,\n      0,\n      1\n    ]"));
    CHECK(has(b.out, "\"start\": 0"));
    auto c = call({"reciprocity", "3", "5"});
    CHECK(c.code == 0);
    CHECK(has(c.out, "lhs           +1"));
    CHECK(has(c.out, "rhs           +1"));
    CHECK(has(c.out, "verdict  PASS"));
    // exact values never print as decimals
    auto d = call({"intersect", "t^2+1", "t^2+5"});
    CHECK(has(d.out, "index              4 * log(2)"));
    auto e = call({"intersect", "5*t-1", "t-2", "--at", "2"});
    CHECK(has(e.out, "index              0"));
}

TEST_CASE("exit codes")
{
    CHECK(call({}).code == 2);
    CHECK(call({"no-such-command"}).code == 2);
    CHECK(call({"gcd", "1"}).code == 2);
    CHECK(call({"gcd", "1", "t"}).code == 2);
    CHECK(call({"val", "0", "3"}).code == 2);
    CHECK(call({"legendre", "3", "9"}).code == 2);
    CHECK(call({"intersect", "t^2-1", "t"}).code == 2);  // reducible
    CHECK(call({"arakelov", "pair", "C(t)", "C(t)"}).code == 2);
    CHECK(call({"arakelov", "pair", "t", "C(t)"}).code == 2);
    CHECK(call({"verify", "nonsense"}).code == 2);
    CHECK(call({"--quad-res", "1", "arakelov", "canonical"}).code == 2);
    CHECK(!call({"gcd", "1"}).err.empty());
    CHECK(call({"--help"}).code == 0);
    auto f = call({"ec-canonical-height", "0", "1", "2", "3"});
    CHECK(f.code == 0);
    CHECK(has(f.out, "torsion           true"));
}

TEST_CASE("json output is byte-identical across runs")
{
    for (std::vector<std::string> argv : {
             std::vector<std::string>{"--json", "verify", "residue-theorem"},
             std::vector<std::string>{"--json", "--seed", "7", "verify", "residue-antisymmetry"},
             std::vector<std::string>{"--json", "arakelov", "adjunction", "t=1"},
             std::vector<std::string>{"--json", "ec-canonical-height", "0", "17", "-2", "3", "--tol", "1e-10"},
         }) {
        auto a = call(argv), b = call(argv);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
    auto s1 = call({"--json", "--seed", "1", "verify", "residue-antisymmetry"});
    CHECK(has(s1.out, "\"seed\": 1"));
}
