// Acceptance suite: runs every top-level reproduction criterion with exact
// arithmetic (zero tolerance) and prints one PASS/FAIL line per criterion.

#include "test_support.hpp"

#include "noethera/heisenberg.hpp"
#include "noethera/noether.hpp"
#include "noethera/parser.hpp"

#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace noethera;
using namespace noethera::heisenberg;
using testsup::Rng;

namespace {

int failures = 0;

void criterion(int number, const std::string& title, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (") + e.what() + ")";
    }
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << title << note
              << "\n";
    if (!ok) ++failures;
}

Expr::Powers key_of(const Expr& single_monomial) {
    return single_monomial.terms().begin()->first;
}

bool c1_euler_lagrange() {
    HeisenbergProblem prob = build(1, symbolic_exponent());
    Expr eq = parse_expr("u_xx + u_yy + 4*(x^2+y^2)*u_tt + 4*y*u_xt - 4*x*u_yt + u^p", prob.ctx);
    return -euler_operator(prob.lagrangian) == eq && prob.equation == eq;
}

bool c2_theorem1() {
    HeisenbergProblem prob = build(1, symbolic_exponent());
    const ContextPtr& ctx = prob.ctx;
    for (const char* name : {"T", "R", "Xtilde", "Ytilde"})
        if (!variational_residual(prob.lagrangian, prob.generator(name)).is_zero()) return false;

    Expr res = variational_residual(prob.lagrangian, prob.generator("Z"));
    // Self-consistent residual; the quadratic block carries (3-p)/(1-p) and
    // the potential term 2(3-p)/(p^2-1), with the cross terms at twice the
    // weight the source derivation displays (verified by exact evaluation).
    Expr golden = parse_expr("(3-p)/(1-p)*(u_x^2 + u_y^2 + 4*(x^2+y^2)*u_t^2)"
                             " + 2*(3-p)/(1-p)*(2*y*u_x*u_t - 2*x*u_y*u_t)"
                             " + 2*(3-p)/(p^2-1)*u^(p+1)",
                             ctx);
    if (res != golden) return false;

    ParamRational lead = *parse_expr("(3-p)/(1-p)", ctx).coefficient_value();
    ParamRational pot = *parse_expr("2*(3-p)/(p^2-1)", ctx).coefficient_value();
    if (res.coefficient_of(key_of(parse_expr("u_x^2", ctx))) != lead) return false;
    if (res.coefficient_of(key_of(parse_expr("u_y^2", ctx))) != lead) return false;
    if (res.coefficient_of(key_of(parse_expr("u^(p+1)", ctx))) != pot) return false;

    ParameterConditions cond = solve_zero_conditions(res);
    return cond.roots == std::vector<Rational>{Rational(3)} &&
           cond.excluded == std::vector<Rational>{Rational(-1), Rational(1)} &&
           cond.unsolved.empty();
}

bool c3_theorem2() {
    HeisenbergProblem prob = build(1, Rational(3));
    const ContextPtr& ctx = prob.ctx;
    for (const char* name : {"T", "R", "Xtilde", "Ytilde", "Z"})
        if (check_symmetry(prob.lagrangian, prob.generator(name)).status !=
            SymmetryStatus::variational)
            return false;

    auto expect = [&](const char* name, const char* p1, const char* p2, const char* p3) {
        SymmetryVerdict v = check_symmetry(prob.lagrangian, prob.generator(name));
        return v.status == SymmetryStatus::divergence && v.certificate &&
               v.certificate->potentials ==
                   std::vector<Expr>{parse_expr(p1, ctx), parse_expr(p2, ctx),
                                     parse_expr(p3, ctx)};
    };
    return expect("V1", "-y*u^2", "x*u^2", "-2*(x^2+y^2)*u^2") &&
           expect("V2", "0", "u^2", "-2*x*u^2") && expect("V3", "-u^2", "0", "-2*y*u^2");
}

bool c4_residual_goldens() {
    HeisenbergProblem prob = build(1, Rational(3));
    const ContextPtr& ctx = prob.ctx;
    auto residual = [&](const char* name) {
        return variational_residual(prob.lagrangian, prob.generator(name));
    };
    return residual("V1") == parse_expr("2*x*u*u_y - 2*y*u*u_x - 4*(x^2+y^2)*u*u_t", ctx) &&
           residual("V2") == parse_expr("2*u*u_y - 4*x*u*u_t", ctx) &&
           residual("V3") == parse_expr("-2*u*u_x - 4*y*u*u_t", ctx);
}

bool c5_generalization() {
    for (int n = 1; n <= 4; ++n) {
        SuiteReport rep = theorem1_suite(n);
        if (!rep.pass) return false;
        bool saw_z = false;
        for (const auto& r : rep.results) {
            if (r.name != "Z") continue;
            saw_z = true;
            if (r.verdict.status != SymmetryStatus::conditional || !r.verdict.conditions ||
                r.verdict.conditions->roots != std::vector<Rational>{critical_exponent(n)})
                return false;
        }
        if (!saw_z) return false;
        Rational q(homogeneous_dimension(n));
        if ((q + 2) / (q - 2) != critical_exponent(n)) return false;
        if (critical_exponent(n) != Rational(n + 2, n)) return false;
    }
    return true;
}

bool c6_pde_admittance() {
    HeisenbergProblem crit = build(1, Rational(3));
    Sym solved = Sym::jet_var({0, 0});
    if (crit.catalog.size() != 8) return false;
    for (const auto& g : crit.catalog)
        if (!check_pde_symmetry(crit.equation, g, solved)) return false;

    HeisenbergProblem sym = build(1, symbolic_exponent());
    if (!check_pde_symmetry(sym.equation, sym.generator("Z"), solved)) return false;

    VectorField vertical = VectorField::make(
        "N", crit.ctx,
        {Expr::zero(crit.ctx), Expr::zero(crit.ctx), Expr::zero(crit.ctx)},
        Expr::dependent_var(crit.ctx));
    return !check_pde_symmetry(crit.equation, vertical, solved);
}

bool c7_property_suites() {
    ContextPtr ctx = testsup::h1_ctx();
    Rng rng(20260810);

    // Euler annihilates divergences of first-order potentials.
    for (int i = 0; i < 50; ++i) {
        std::vector<Expr> phi = {testsup::random_expr(rng, ctx, 3, 3, false, true),
                                 testsup::random_expr(rng, ctx, 3, 3, false, true),
                                 testsup::random_expr(rng, ctx, 3, 3, false, true)};
        if (!euler_operator(divergence(phi)).is_zero()) return false;
    }

    // The homotopy inverts divergences of derivative-free potentials.
    for (int i = 0; i < 50; ++i) {
        std::vector<Expr> phi = {testsup::random_potential(rng, ctx),
                                 testsup::random_potential(rng, ctx),
                                 testsup::random_potential(rng, ctx)};
        Expr div = divergence(phi);
        if (divergence(homotopy_potentials(div).potentials) != div) return false;
    }

    // Total derivatives commute.
    for (int i = 0; i < 50; ++i) {
        Expr a = testsup::random_expr(rng, ctx, 4, 3);
        int v = rng.pick(0, 2), w = rng.pick(0, 2);
        if (total_derivative(total_derivative(a, v), w) !=
            total_derivative(total_derivative(a, w), v))
            return false;
    }

    // Parser round trip.
    for (int i = 0; i < 200; ++i) {
        Expr e = testsup::random_expr(rng, ctx);
        if (parse_expr(print_expr(e), ctx) != e) return false;
    }

    // Canonical equality coincides with exact evaluation.
    for (int i = 0; i < 50; ++i) {
        Expr a = testsup::random_expr(rng, ctx);
        Expr b = testsup::random_expr(rng, ctx);
        if ((a + b - b) != a) return false;
        if (!testsup::eval_equal(a, a + b - b, rng)) return false;
        if ((a == b) != testsup::eval_equal(a, b, rng)) return false;
    }
    return true;
}

} // namespace

int main() {
    criterion(1, "Euler-Lagrange reproduction (n=1, symbolic exponent)", c1_euler_lagrange);
    criterion(2, "dilation residual, root p=3, excluded {1,-1}", c2_theorem1);
    criterion(3, "critical-case verdicts and divergence certificates", c3_theorem2);
    criterion(4, "V1/V2/V3 residual golden values", c4_residual_goldens);
    criterion(5, "critical exponent (n+2)/n for n in 1..4", c5_generalization);
    criterion(6, "equation admittance of the catalog and rejection of eta=u", c6_pde_admittance);
    criterion(7, "property suites (exact, >= 50 cases each)", c7_property_suites);

    if (failures == 0) {
        std::cout << "acceptance: all criteria PASS\n";
        return 0;
    }
    std::cout << "acceptance: " << failures << " criterion(s) FAILED\n";
    return 1;
}
