#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

#include "noethera/heisenberg.hpp"
#include "noethera/jet.hpp"
#include "noethera/parser.hpp"

using namespace noethera;
using testsup::Rng;

namespace {

ContextPtr ctx = testsup::h1_ctx();
Expr E(const std::string& s) { return parse_expr(s, ctx); }

VectorField field(const std::string& name, const char* xi_x, const char* xi_y, const char* xi_t,
                  const char* eta) {
    return VectorField::make(name, ctx, {E(xi_x), E(xi_y), E(xi_t)}, E(eta));
}

} // namespace

TEST_CASE("total derivative") {
    CHECK(total_derivative(E("-2*(x^2+y^2)*u^2"), "t") == E("-4*(x^2+y^2)*u*u_t"));
    CHECK(total_derivative(E("x"), "x") == E("1"));
    CHECK(total_derivative(E("y"), "x").is_zero());
    CHECK(total_derivative(E("u^p"), "x") == E("p*u^(p-1)*u_x"));

    // Chain-rule oracle: D_x of a matches d/dx of a evaluated along a
    // concrete solution jet, at p = 3.
    Rng rng(55);
    std::vector<Rational> params = {Rational(3)};
    for (const char* src : {"u^p", "2*y*u_x*u_t - u^p*x", "u*u_y + x^2*u_t"}) {
        Expr a = E(src);
        Expr da = total_derivative(a, "x");
        for (int i = 0; i < 10; ++i) {
            Rational y(rng.pick(-4, 4)), t(rng.pick(-4, 4)), x0(rng.pick(-4, 4));
            auto f = [&](const Rational& xv) {
                return *eval_expr(a, testsup::sample_solution_jet(xv, y, t), params);
            };
            auto jet = testsup::sample_solution_jet(x0, y, t);
            CHECK(testsup::derivative_oracle(f, x0, 14) == *eval_expr(da, jet, params));
        }
    }
}

TEST_CASE("total derivatives commute") {
    Rng rng(77);
    for (int i = 0; i < 100; ++i) {
        Expr a = testsup::random_expr(rng, ctx, 4, 3);
        int v = rng.pick(0, 2), w = rng.pick(0, 2);
        CHECK(total_derivative(total_derivative(a, v), w) ==
              total_derivative(total_derivative(a, w), v));
    }
}

TEST_CASE("total derivative obeys the Leibniz rule") {
    Rng rng(78);
    for (int i = 0; i < 50; ++i) {
        Expr a = testsup::random_expr(rng, ctx, 3, 3);
        Expr b = testsup::random_expr(rng, ctx, 3, 3);
        int v = rng.pick(0, 2);
        CHECK(total_derivative(a * b, v) ==
              total_derivative(a, v) * b + a * total_derivative(b, v));
    }
}

TEST_CASE("divergence") {
    CHECK(divergence({E("-y*u^2"), E("x*u^2"), E("-2*(x^2+y^2)*u^2")}) ==
          E("-2*y*u*u_x + 2*x*u*u_y - 4*(x^2+y^2)*u*u_t"));
    CHECK(divergence({E("0"), E("0"), E("0")}).is_zero());
    CHECK(divergence({E("0"), E("u^2"), E("-2*x*u^2")}) == E("2*u*u_y - 4*x*u*u_t"));
    CHECK_THROWS_AS(divergence({E("u"), E("u")}), SizeMismatchError);
}

TEST_CASE("prolongation formulas") {
    SUBCASE("rotation") {
        ProlongedField r1 = prolong(field("R", "y", "-x", "0", "0"), 1);
        CHECK(r1.eta_at(Sym::jet_var({0})) == E("u_y"));
        CHECK(r1.eta_at(Sym::jet_var({1})) == E("-u_x"));
        CHECK(r1.eta_at(Sym::jet_var({2})).is_zero());
    }
    SUBCASE("dilation") {
        ProlongedField z1 = prolong(field("Z", "x", "y", "2*t", "2/(1-p)*u"), 1);
        CHECK(z1.eta_at(Sym::jet_var({0})) == E("(1+p)/(1-p)*u_x"));
        CHECK(z1.eta_at(Sym::jet_var({1})) == E("(1+p)/(1-p)*u_y"));
        CHECK(z1.eta_at(Sym::jet_var({2})) == E("2*p/(1-p)*u_t"));
    }
    SUBCASE("cubic-case extra generator") {
        VectorField v1 = field("V1", "x*t - x^2*y - y^3", "y*t + x^3 + x*y^2",
                               "t^2 - (x^2+y^2)^2", "-t*u");
        ProlongedField p1 = prolong(v1, 1);
        CHECK(p1.eta_at(Sym::jet_var({0})) ==
              E("2*(x*y-t)*u_x - (3*x^2+y^2)*u_y + 4*x*(x^2+y^2)*u_t"));
        CHECK(p1.eta_at(Sym::jet_var({1})) ==
              E("(x^2+3*y^2)*u_x - 2*(t+x*y)*u_y + 4*y*(x^2+y^2)*u_t"));
        CHECK(p1.eta_at(Sym::jet_var({2})) == E("-u - x*u_x - y*u_y - 3*t*u_t"));
    }
    SUBCASE("translation needs no correction") {
        ProlongedField t1 = prolong(field("T", "0", "0", "1", "0"), 2);
        for (const auto& [j, e] : t1.eta_jet) CHECK(e.is_zero());
    }
}

TEST_CASE("prolongation is linear over rational weights") {
    Rng rng(91);
    for (int i = 0; i < 20; ++i) {
        auto rand_field = [&](const std::string& name) {
            auto coef = [&]() {
                // space variables and u only, per the point-field contract
                Expr e = Expr::zero(ctx);
                for (int k = 0; k < 3; ++k) {
                    Expr::Powers pw;
                    for (int d = rng.pick(0, 2); d > 0; --d) {
                        Sym s = rng.chance(25) ? Sym::dependent() : Sym::space_var(rng.pick(0, 2));
                        auto it = pw.find(s);
                        if (it == pw.end())
                            pw.emplace(s, AffineExp(1));
                        else
                            it->second = it->second + AffineExp(1);
                    }
                    e += Expr::monomial(ctx, std::move(pw), ParamRational(rng.rational()));
                }
                return e;
            };
            return VectorField::make(name, ctx, {coef(), coef(), coef()}, coef());
        };
        VectorField w1 = rand_field("W1");
        VectorField w2 = rand_field("W2");
        Rational a = rng.rational(), b = rng.rational();
        Expr ea = Expr::constant(ctx, a), eb = Expr::constant(ctx, b);
        VectorField sum = VectorField::make(
            "S", ctx,
            {ea * w1.xi[0] + eb * w2.xi[0], ea * w1.xi[1] + eb * w2.xi[1],
             ea * w1.xi[2] + eb * w2.xi[2]},
            ea * w1.eta + eb * w2.eta);
        ProlongedField ps = prolong(sum, 2);
        ProlongedField p1 = prolong(w1, 2);
        ProlongedField p2 = prolong(w2, 2);
        for (const auto& [j, e] : ps.eta_jet)
            CHECK(e == ea * p1.eta_at(j) + eb * p2.eta_at(j));
    }
}

TEST_CASE("generators may not depend on derivatives") {
    CHECK_THROWS_AS(field("BAD", "u_x", "0", "0", "0"), JetOrderError);
    CHECK_THROWS_AS(field("BAD", "0", "0", "0", "u_t"), JetOrderError);
}

TEST_CASE("euler operator") {
    SUBCASE("one-dimensional Dirichlet integrand") {
        CHECK(euler_operator(E("1/2*u_x^2")) == E("-u_xx"));
    }
    SUBCASE("paper Lagrangian gives the negated equation") {
        Expr L = E("1/2*u_x^2 + 1/2*u_y^2 + 2*(x^2+y^2)*u_t^2 + 2*y*u_x*u_t - 2*x*u_y*u_t"
                   " - 1/(p+1)*u^(p+1)");
        Expr eq = E("u_xx + u_yy + 4*(x^2+y^2)*u_tt + 4*y*u_xt - 4*x*u_yt + u^p");
        CHECK(euler_operator(L) == -eq);
    }
    SUBCASE("divergences are annihilated") {
        CHECK(euler_operator(divergence({E("x*u^3"), E("u*u_y"), E("0")})).is_zero());
        Rng rng(123);
        for (int i = 0; i < 50; ++i) {
            std::vector<Expr> phi = {testsup::random_expr(rng, ctx, 3, 3, false),
                                     testsup::random_expr(rng, ctx, 3, 3, false),
                                     testsup::random_expr(rng, ctx, 3, 3, false)};
            CHECK(euler_operator(divergence(phi)).is_zero());
        }
    }
    SUBCASE("order cap") {
        Expr third = Expr::symbol(ctx, Sym::jet_var({0, 0, 0}));
        CHECK_THROWS_AS(euler_operator(third), JetOrderError);
    }
}

TEST_CASE("first higher Euler operator") {
    CHECK(higher_euler_first(E("2*x*u*u_y - 2*y*u*u_x - 4*(x^2+y^2)*u*u_t"), 0) == E("-2*y*u"));
    CHECK(higher_euler_first(E("u_y^2"), 0).is_zero());
    CHECK(higher_euler_first(E("-4*(x^2+y^2)*u*u_t"), 2) == E("-4*(x^2+y^2)*u"));
    // On first-order input it reduces to the plain partial derivative.
    Rng rng(321);
    for (int i = 0; i < 30; ++i) {
        Expr a = testsup::random_expr(rng, ctx, 3, 3);
        int v = rng.pick(0, 2);
        CHECK(higher_euler_first(a, v) == pdiff(a, Sym::jet_var({v})));
    }
}

TEST_CASE("apply prolonged field") {
    Expr L = E("1/2*u_x^2 + 1/2*u_y^2 + 2*(x^2+y^2)*u_t^2 + 2*y*u_x*u_t - 2*x*u_y*u_t"
               " - 1/(p+1)*u^(p+1)");
    SUBCASE("translation kills an autonomous Lagrangian") {
        CHECK(apply_prolonged(prolong(field("T", "0", "0", "1", "0"), 1), L).is_zero());
    }
    SUBCASE("dilation scales the potential term") {
        ProlongedField z1 = prolong(field("Z", "x", "y", "2*t", "2/(1-p)*u"), 1);
        CHECK(apply_prolonged(z1, E("u^(p+1)")) == E("2*(p+1)/(1-p)*u^(p+1)"));
        CHECK(apply_prolonged(z1, E("x")) == E("x"));
    }
    SUBCASE("right multiplication acts through space") {
        ProlongedField x1 = prolong(field("Xtilde", "1", "0", "-2*y", "0"), 1);
        CHECK(apply_prolonged(x1, E("x")) == E("1"));
    }
    SUBCASE("insufficient order is rejected") {
        ProlongedField t1 = prolong(field("T", "0", "0", "1", "0"), 1);
        CHECK_THROWS_AS(apply_prolonged(t1, E("u_xx")), JetOrderError);
    }
}
