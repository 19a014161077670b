#include "numfun/places.hpp"

#include "numfun/poly_factor.hpp"

namespace numfun {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void mismatch(const std::string& what, const Place& v)
{
    throw WorldMismatchError(what + " has no valuation at " + describe(v));
}

template <class K>
long order_at_infinity(const RationalFunction<K>& f)
{
    return f.den().degree() - f.num().degree();
}

}  // namespace

Place finite_prime(const Integer& p)
{
    if (!is_prime(p))
        throw NotPrimeError(p.get_str() + " is not prime");
    return FinitePrimeQ{p};
}

Place function_field_point(const FpPoly& P)
{
    if (P.degree() < 1 || P.leading() != P.one() || !is_irreducible_mod_p(P))
        throw Error("function-field point needs a monic irreducible polynomial, got " + to_string(P));
    return FunctionFieldPoint{P};
}

Place function_field_infinity(std::uint64_t p)
{
    PrimeField check(p);
    (void)check;
    return FunctionFieldInfinity{p};
}

std::string describe(const Place& v)
{
    return std::visit(overloaded{
                          [](const FinitePrimeQ& x) { return "p=" + x.p.get_str(); },
                          [](const ArchimedeanQ&) { return std::string("inf"); },
                          [](const FunctionFieldPoint& x) {
                              return "P=" + to_string(x.P) + " over F_" + std::to_string(x.P.one().modulus());
                          },
                          [](const FunctionFieldInfinity& x) { return "inf over F_" + std::to_string(x.p); },
                          [](const RationalPoint& x) { return "t=" + x.t0.get_str(); },
                          [](const RationalInfinity&) { return std::string("t=inf"); },
                      },
                      v);
}

ValuationResult val(const Rational& f, const Place& v)
{
    if (sgn(f) == 0)
        throw ZeroInputError("valuation of zero is undefined");
    if (const auto* fp = std::get_if<FinitePrimeQ>(&v))
        return {valuation(f, fp->p), 1};
    mismatch("a rational number", v);
}

ValuationResult val(const FpRatFunc& f, const Place& v)
{
    if (f.is_zero())
        throw ZeroInputError("valuation of zero is undefined");
    const std::uint64_t p = f.one().modulus();
    if (const auto* pt = std::get_if<FunctionFieldPoint>(&v)) {
        if (pt->P.one().modulus() != p)
            mismatch("a function over F_" + std::to_string(p), v);
        return {order_at(f.num(), pt->P) - order_at(f.den(), pt->P), pt->P.degree()};
    }
    if (const auto* inf = std::get_if<FunctionFieldInfinity>(&v)) {
        if (inf->p != p)
            mismatch("a function over F_" + std::to_string(p), v);
        return {order_at_infinity(f), 1};
    }
    mismatch("a function over F_" + std::to_string(p), v);
}

ValuationResult val(const QRatFunc& f, const Place& v)
{
    if (f.is_zero())
        throw ZeroInputError("valuation of zero is undefined");
    if (const auto* pt = std::get_if<RationalPoint>(&v)) {
        QPoly P({Rational(-pt->t0), Rational(1)}, Rational(1));
        return {order_at(f.num(), P) - order_at(f.den(), P), 1};
    }
    if (std::holds_alternative<RationalInfinity>(v))
        return {order_at_infinity(f), 1};
    mismatch("a rational function over Q", v);
}

Rational norm(const Rational& f, const Place& v)
{
    if (sgn(f) == 0)
        throw ZeroInputError("norm of zero");
    if (std::holds_alternative<ArchimedeanQ>(v))
        return abs(f);
    const auto& fp = std::get<FinitePrimeQ>(v);  // val() already rejected other worlds
    return pow(Rational(fp.p), -val(f, v).value);
}

Rational norm(const FpRatFunc& f, const Place& v)
{
    auto r = val(f, v);
    Integer residue_field = pow(Integer(static_cast<unsigned long>(f.one().modulus())),
                                static_cast<unsigned long>(r.residue_degree));
    return pow(Rational(residue_field), -r.value);
}

Rational norm(const QRatFunc& f, const Place& v, const Rational& c)
{
    if (c <= 1)
        throw Error("norm base must exceed 1");
    return pow(c, -val(f, v).value);
}

ProductFormulaWitness product_formula_check_q(const Rational& f)
{
    if (sgn(f) == 0)
        throw ZeroInputError("product formula needs a nonzero rational");
    ProductFormulaWitness w;
    w.nonarchimedean_product = 1;
    auto add_primes = [&](const Integer& n) {
        for (const auto& [p, e] : factor_integer(n).factors) {
            long order = valuation(f, p);
            w.terms.push_back({"p=" + p.get_str(), order, 1});
            w.nonarchimedean_product *= norm(f, FinitePrimeQ{p});
        }
    };
    add_primes(Integer(f.get_num()));
    add_primes(Integer(f.get_den()));
    w.archimedean = norm(f, ArchimedeanQ{});
    w.holds = (w.nonarchimedean_product * w.archimedean == 1);
    return w;
}

SumFormulaWitness sum_formula_check_ff(const FpRatFunc& F)
{
    if (F.is_zero())
        throw ZeroInputError("sum formula needs a nonzero function");
    SumFormulaWitness w;
    auto add = [&](const FpPoly& poly) {
        for (const auto& [P, e] : factor_poly_mod_p(poly).factors) {
            auto r = val(F, FunctionFieldPoint{P});
            w.terms.push_back({describe(FunctionFieldPoint{P}), r.value, r.residue_degree});
            w.total += r.value * r.residue_degree;
        }
    };
    add(F.num());
    add(F.den());
    auto inf = val(F, FunctionFieldInfinity{F.one().modulus()});
    w.terms.push_back({describe(FunctionFieldInfinity{F.one().modulus()}), inf.value, 1});
    w.total += inf.value;
    w.holds = (w.total == 0);
    return w;
}

SumFormulaWitness sum_formula_check_rational_coeff(const QRatFunc& F)
{
    if (F.is_zero())
        throw ZeroInputError("sum formula needs a nonzero function");
    SumFormulaWitness w;
    auto add = [&](const QPoly& poly) {
        for (const auto& [P, e] : factor_over_q(poly).factors) {
            long order = order_at(F.num(), P) - order_at(F.den(), P);
            std::string where = P.degree() == 1 ? "t=" + Rational(-P.coeff(0) / P.coeff(1)).get_str()
                                                : "P=" + to_string(P);
            w.terms.push_back({where, order, P.degree()});
            w.total += order * P.degree();
        }
    };
    add(F.num());
    add(F.den());
    auto inf = val(F, RationalInfinity{});
    w.terms.push_back({"t=inf", inf.value, 1});
    w.total += inf.value;
    w.holds = (w.total == 0);
    return w;
}

}  // namespace numfun
