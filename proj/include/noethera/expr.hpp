#pragma once

#include "noethera/affine_exponent.hpp"
#include "noethera/context.hpp"
#include "noethera/param_rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace noethera {

// What has to hold on the parameters for an expression to vanish
// identically in the variables, plus where it is undefined.
struct ParameterConditions {
    // Content-normalized coefficient numerators; their common vanishing is
    // equivalent to the expression being zero. Empty means already zero.
    std::vector<ParamPoly> vanishing;
    // Explicit rational roots of the gcd (single-parameter case only).
    std::vector<Rational> roots;
    // Factors whose roots were not found rationally, or the whole system
    // when several parameters are involved.
    std::vector<ParamPoly> unsolved;
    // Parameter values where some denominator in the expression vanishes.
    std::vector<Rational> excluded;

    bool always_zero() const { return vanishing.empty(); }
    bool never_zero() const;
    // There is (or may be) a special parameter value achieving zero.
    bool conditionally_zero() const {
        return !always_zero() && !never_zero() && (!roots.empty() || !unsolved.empty());
    }
};

// Canonical sum of monomials: coefficients in the parameter rational-function
// field, powers of space/jet symbols with affine exponents. Two expressions
// are equal as functions of the variables (for parameter values off the
// denominators' zero sets) exactly when their term maps coincide.
class Expr {
public:
    using Powers = std::map<Sym, AffineExp>;
    struct PowersLess {
        bool operator()(const Powers& a, const Powers& b) const;
    };
    using TermMap = std::map<Powers, ParamRational, PowersLess>;

    Expr() = default; // invalid until assigned; every factory sets a context

    static Expr zero(ContextPtr ctx);
    static Expr constant(ContextPtr ctx, const Rational& value);
    static Expr coefficient(ContextPtr ctx, ParamRational value);
    static Expr symbol(ContextPtr ctx, const Sym& s);
    static Expr space_var(ContextPtr ctx, const std::string& name);
    static Expr jet_var(ContextPtr ctx, const std::vector<std::string>& index);
    static Expr dependent_var(ContextPtr ctx);
    static Expr parameter(ContextPtr ctx, const std::string& name);
    static Expr monomial(ContextPtr ctx, Powers powers, ParamRational coef);

    bool valid() const { return ctx_ != nullptr; }
    const ContextPtr& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_coefficient() const; // no variable content at all
    // The value as a field element when is_coefficient().
    std::optional<ParamRational> coefficient_value() const;

    Expr operator-() const;
    Expr operator+(const Expr& o) const;
    Expr operator-(const Expr& o) const;
    Expr operator*(const Expr& o) const;
    Expr& operator+=(const Expr& o) { return *this = *this + o; }
    Expr& operator-=(const Expr& o) { return *this = *this - o; }
    Expr& operator*=(const Expr& o) { return *this = *this * o; }

    bool operator==(const Expr& o) const;
    bool operator!=(const Expr& o) const { return !(*this == o); }

    // Highest derivative order occurring (0 when no jet variable occurs).
    int jet_order() const;
    // Distinct jet symbols occurring, sorted.
    std::vector<Sym> jet_symbols() const;
    // Terms free of the dependent variable and all its derivatives.
    Expr jet_free_part() const;
    // Each term as a one-monomial expression, in canonical order.
    std::vector<Expr> monomials() const;
    // Total degree in u and its derivatives of one monomial key.
    static AffineExp u_degree(const Powers& powers);
    // Coefficient of the given monomial key (zero if absent).
    ParamRational coefficient_of(const Powers& powers) const;

    friend Expr pow(const Expr& base, const AffineExp& exponent);
    friend Expr pdiff(const Expr& a, const Sym& v);
    friend Expr substitute(const Expr& a, const Sym& v, const Expr& replacement);

private:
    ContextPtr ctx_;
    TermMap terms_;

    static void accumulate(TermMap& tm, Powers powers, ParamRational coef);
    static Expr mono_pow(const ContextPtr& ctx, const Powers& powers, const ParamRational& coef,
                         const AffineExp& e);
};

Expr pow(const Expr& base, const AffineExp& exponent);
Expr pdiff(const Expr& a, const Sym& v);
Expr substitute(const Expr& a, const Sym& v, const Expr& replacement);

// Necessary-and-sufficient parameter conditions for a == 0 identically,
// explicit rational roots in the single-parameter case, and the parameter
// values excluded by denominators.
ParameterConditions solve_zero_conditions(const Expr& a);

// Exact evaluation: space/jet symbols from `vars`, parameters by index from
// `params`. nullopt at denominator poles, non-integer exponents, or 0 raised
// to a negative power.
std::optional<Rational> eval_expr(const Expr& a, const std::map<Sym, Rational>& vars,
                                  const std::vector<Rational>& params);

} // namespace noethera
