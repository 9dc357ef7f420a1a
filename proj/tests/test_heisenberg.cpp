#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

#include "noethera/heisenberg.hpp"
#include "noethera/parser.hpp"

using namespace noethera;
using namespace noethera::heisenberg;

TEST_CASE("critical exponent") {
    CHECK(critical_exponent(1) == Rational(3));
    CHECK(critical_exponent(2) == Rational(2));
    CHECK(critical_exponent(4) == Rational(3, 2));
    for (int n = 1; n <= 6; ++n) {
        Rational q(homogeneous_dimension(n));
        CHECK(q == 2 * n + 2);
        CHECK((q + 2) / (q - 2) == critical_exponent(n));
    }
    CHECK_THROWS_AS(critical_exponent(0), Error);
}

TEST_CASE("build H^1") {
    HeisenbergProblem prob = build(1, symbolic_exponent());
    const ContextPtr& ctx = prob.ctx;
    CHECK(prob.lagrangian ==
          parse_expr("1/2*u_x^2 + 1/2*u_y^2 + 2*(x^2+y^2)*u_t^2 + 2*y*u_x*u_t - 2*x*u_y*u_t"
                     " - 1/(p+1)*u^(p+1)",
                     ctx));
    CHECK(prob.equation ==
          parse_expr("u_xx + u_yy + 4*(x^2+y^2)*u_tt + 4*y*u_xt - 4*x*u_yt + u^p", ctx));
    CHECK(prob.equation == -euler_operator(prob.lagrangian));

    std::vector<std::string> names;
    for (const auto& g : prob.catalog) names.push_back(g.name);
    CHECK(names == std::vector<std::string>{"T", "R", "Xtilde", "Ytilde", "Z"});
    CHECK(prob.generator("Z").eta == parse_expr("2/(1-p)*u", ctx));
}

TEST_CASE("build H^1 at the critical exponent") {
    HeisenbergProblem prob = build(1, Rational(3));
    CHECK(prob.equation ==
          parse_expr("u_xx + u_yy + 4*(x^2+y^2)*u_tt + 4*y*u_xt - 4*x*u_yt + u^3", prob.ctx));
    CHECK(prob.catalog.size() == 8);
    CHECK(prob.generator("Z").eta == parse_expr("-u", prob.ctx));
    CHECK(prob.generator("V2").xi[0] == parse_expr("t - 4*x*y", prob.ctx));

    // A fixed non-critical exponent drops the V generators.
    CHECK(build(1, Rational(5)).catalog.size() == 5);
    CHECK_THROWS_AS(build(1, Rational(1)), Error);
    CHECK_THROWS_AS(build(1, Rational(-1)), Error);
    CHECK_THROWS_AS(build(0, symbolic_exponent()), Error);
}

TEST_CASE("equation equals the negated variational derivative for n up to 4") {
    for (int n = 1; n <= 4; ++n) {
        HeisenbergProblem prob = build(n, symbolic_exponent());
        CHECK(prob.equation == -euler_operator(prob.lagrangian));
        CHECK(prob.ctx->n_independent() == 2 * n + 1);
        // n=1 also carries the rotation R; n>1 has T, Xtilde_i, Ytilde_i, Z.
        CHECK(static_cast<int>(prob.catalog.size()) == (n == 1 ? 5 : 2 * n + 2));
    }
}

TEST_CASE("build matches the shipped problem files") {
    ProblemSpec sym = load_problem(testsup::data_file("h1_p_symbolic.json"));
    HeisenbergProblem prob = build(1, symbolic_exponent());
    CHECK(*sym.lagrangian == prob.lagrangian);
    CHECK(*sym.equation == prob.equation);
    for (const auto& g : prob.catalog) {
        const VectorField& loaded = sym.generator(g.name);
        CHECK(loaded.xi == g.xi);
        CHECK(loaded.eta == g.eta);
    }

    ProblemSpec crit = load_problem(testsup::data_file("h1_critical.json"));
    HeisenbergProblem prob3 = build(1, Rational(3));
    CHECK(*crit.lagrangian == prob3.lagrangian);
    CHECK(*crit.equation == prob3.equation);
    CHECK(crit.generators.size() == prob3.catalog.size());
    for (const auto& g : prob3.catalog) {
        const VectorField& loaded = crit.generator(g.name);
        CHECK(loaded.xi == g.xi);
        CHECK(loaded.eta == g.eta);
    }

    ProblemSpec hn = load_problem(testsup::data_file("hn_template.json"));
    HeisenbergProblem prob2 = build(2, symbolic_exponent());
    CHECK(*hn.lagrangian == prob2.lagrangian);
    CHECK(*hn.equation == prob2.equation);
}

TEST_CASE("theorem1 suite") {
    for (int n : {1, 2, 3}) {
        SuiteReport rep = theorem1_suite(n);
        CHECK(rep.pass);
        CHECK(rep.critical == critical_exponent(n));
        bool saw_z = false;
        for (const auto& r : rep.results) {
            CHECK(r.ok);
            if (r.name == "Z") {
                saw_z = true;
                CHECK(r.verdict.status == SymmetryStatus::conditional);
                REQUIRE(r.verdict.conditions);
                CHECK(r.verdict.conditions->roots ==
                      std::vector<Rational>{critical_exponent(n)});
            } else {
                CHECK(r.verdict.status == SymmetryStatus::variational);
            }
        }
        CHECK(saw_z);
    }
}

TEST_CASE("theorem2 suite") {
    SuiteReport rep = theorem2_suite();
    CHECK(rep.pass);
    CHECK(rep.results.size() == 8);
    auto find = [&](const std::string& name) -> const GeneratorResult& {
        for (const auto& r : rep.results)
            if (r.name == name) return r;
        throw std::runtime_error("missing " + name);
    };
    for (const char* name : {"T", "R", "Xtilde", "Ytilde", "Z"})
        CHECK(find(name).verdict.status == SymmetryStatus::variational);
    for (const char* name : {"V1", "V2", "V3"}) {
        const GeneratorResult& r = find(name);
        CHECK(r.verdict.status == SymmetryStatus::divergence);
        CHECK(r.pde_checked);
        CHECK(r.pde_admitted);
    }
    ContextPtr ctx = build(1, Rational(3)).ctx;
    CHECK(find("V1").verdict.certificate->potentials ==
          std::vector<Expr>{parse_expr("-y*u^2", ctx), parse_expr("x*u^2", ctx),
                            parse_expr("-2*(x^2+y^2)*u^2", ctx)});
    CHECK(find("V3").verdict.residual == parse_expr("-2*u*u_x - 4*y*u*u_t", ctx));
}
