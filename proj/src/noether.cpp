#include "noethera/noether.hpp"

#include "noethera/parser.hpp"

#include <set>
#include <sstream>

namespace noethera {

const char* to_string(SymmetryStatus s) {
    switch (s) {
    case SymmetryStatus::variational: return "variational";
    case SymmetryStatus::divergence: return "divergence";
    case SymmetryStatus::conditional: return "conditional";
    case SymmetryStatus::neither: return "neither";
    }
    return "?";
}

Expr variational_residual(const Expr& lagrangian, const VectorField& w) {
    if (lagrangian.jet_order() > 1)
        throw JetOrderError("the variational criterion is stated for first-order Lagrangians");
    require_same_context(lagrangian.context(), w.ctx);
    ProlongedField w1 = prolong(w, 1);
    Expr div_xi = Expr::zero(w.ctx);
    for (int i = 0; i < w.ctx->n_independent(); ++i)
        div_xi += total_derivative(w.xi[static_cast<std::size_t>(i)], i);
    return apply_prolonged(w1, lagrangian) + lagrangian * div_xi;
}

namespace {

void require_no_jet_free_part(const Expr& r) {
    Expr stray = r.jet_free_part();
    if (!stray.is_zero())
        throw OutOfScopeError("residual has terms without u or its derivatives: " +
                              print_expr(stray));
}

} // namespace

bool is_total_divergence(const Expr& residual) {
    if (residual.jet_order() > 1)
        throw JetOrderError("divergence test implemented for first-order residuals");
    require_no_jet_free_part(residual);
    return euler_operator(residual).is_zero();
}

DivergenceCertificate homotopy_potentials(const Expr& residual) {
    const ContextPtr& ctx = residual.context();
    if (residual.jet_order() > 1)
        throw JetOrderError("homotopy potentials implemented for first-order residuals");
    if (!euler_operator(residual).is_zero())
        throw NotADivergenceError("the Euler operator does not annihilate the residual");

    DivergenceCertificate cert;
    std::set<Rational> excluded;
    const int n = ctx->n_independent();
    Expr u = Expr::dependent_var(ctx);
    cert.potentials.assign(static_cast<std::size_t>(n), Expr::zero(ctx));

    for (const Expr& mono : residual.monomials()) {
        AffineExp d = Expr::u_degree(mono.terms().begin()->first);
        if (d.is_zero())
            throw HomotopyDegeneracyError("monomial " + print_expr(mono) +
                                          " has scaling degree zero");
        ParamRational factor = d.to_param_rational().inverse();
        if (!factor.denominator().is_constant())
            for (const Rational& r : factor.denominator().rational_roots()) excluded.insert(r);
        Expr scale = Expr::coefficient(ctx, factor);
        for (int i = 0; i < n; ++i)
            cert.potentials[static_cast<std::size_t>(i)] +=
                scale * u * higher_euler_first(mono, i);
    }
    cert.excluded.assign(excluded.begin(), excluded.end());

    if (divergence(cert.potentials) != residual)
        throw NotADivergenceError("constructed potentials do not reproduce the residual");
    return cert;
}

SymmetryVerdict check_symmetry(const Expr& lagrangian, const VectorField& w) {
    SymmetryVerdict v;
    v.residual = variational_residual(lagrangian, w);
    if (v.residual.is_zero()) {
        v.status = SymmetryStatus::variational;
        return v;
    }
    if (v.residual.jet_free_part().is_zero() && euler_operator(v.residual).is_zero()) {
        v.status = SymmetryStatus::divergence;
        v.certificate = homotopy_potentials(v.residual);
        return v;
    }
    ParameterConditions cond = solve_zero_conditions(v.residual);
    // Poles of the generator's own coefficients stay excluded even if the
    // residual happens to cancel them.
    std::set<Rational> excl(cond.excluded.begin(), cond.excluded.end());
    auto add_poles = [&](const Expr& e) {
        for (const auto& [pw, c] : e.terms())
            if (!c.denominator().is_constant())
                for (const Rational& r : c.denominator().rational_roots()) excl.insert(r);
    };
    for (const Expr& x : w.xi) add_poles(x);
    add_poles(w.eta);
    cond.excluded.assign(excl.begin(), excl.end());
    std::erase_if(cond.roots, [&](const Rational& r) { return excl.count(r) > 0; });

    if (cond.conditionally_zero()) {
        v.status = SymmetryStatus::conditional;
        v.conditions = std::move(cond);
    } else {
        v.status = SymmetryStatus::neither;
    }
    return v;
}

Sym default_solved_variable(const Expr& equation) {
    for (const Sym& j : equation.jet_symbols()) {
        if (j.jet_order() != 2) continue;
        Expr::Powers key;
        key.emplace(j, AffineExp(1));
        ParamRational c = equation.coefficient_of(key);
        if (!c.is_zero() && c.is_constant()) return j;
    }
    throw CannotSolveError("no second-order jet variable with a nonzero constant coefficient");
}

PdeAdmittance check_pde_symmetry_report(const Expr& equation, const VectorField& w,
                                        const Sym& solved) {
    const ContextPtr& ctx = equation.context();
    require_same_context(ctx, w.ctx);
    if (equation.jet_order() > 2)
        throw JetOrderError("equations of jet order > 2 are not supported");
    if (solved.jet_order() != 2)
        throw CannotSolveError("the solved variable must be a second-order jet variable");

    // eq must be affine in `solved` with a nonzero rational constant slope,
    // so the on-shell substitution is exact.
    Expr slope = pdiff(equation, solved);
    auto c = slope.coefficient_value();
    if (!c || c->is_zero() || !c->is_constant())
        throw CannotSolveError("coefficient of " + solved.str(*ctx) +
                               " is not a nonzero rational constant");
    Expr rest = substitute(equation, solved, Expr::zero(ctx));
    Expr solved_value = Expr::coefficient(ctx, -c->inverse()) * rest;

    PdeAdmittance out;
    Expr action = apply_prolonged(prolong(w, 2), equation);
    out.onshell_residual = substitute(action, solved, solved_value);
    out.conditions = solve_zero_conditions(out.onshell_residual);
    out.admitted = out.onshell_residual.is_zero();
    return out;
}

bool check_pde_symmetry(const Expr& equation, const VectorField& w, const Sym& solved) {
    return check_pde_symmetry_report(equation, w, solved).admitted;
}

} // namespace noethera
