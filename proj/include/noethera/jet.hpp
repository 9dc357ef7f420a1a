#pragma once

#include "noethera/expr.hpp"

#include <map>
#include <string>
#include <vector>

namespace noethera {

// Infinitesimal generator of a point transformation: one coefficient per
// independent variable plus one for the dependent variable. Coefficients may
// depend on the space variables and on u itself, not on derivatives.
struct VectorField {
    std::string name;
    ContextPtr ctx;
    std::vector<Expr> xi; // one per independent variable, in declaration order
    Expr eta;

    static VectorField make(std::string name, ContextPtr ctx, std::vector<Expr> xi, Expr eta);
};

// A vector field extended to act on jet variables up to a given order.
struct ProlongedField {
    VectorField base;
    int order = 0;
    // Coefficient of d/du_J per multi-index J, 1 <= |J| <= order. The empty
    // index is base.eta.
    std::map<Sym, Expr> eta_jet;

    const Expr& eta_at(const Sym& jet) const;
};

// D_v(a) = da/dv + sum_J u_{J,v} * da/du_J.
Expr total_derivative(const Expr& a, int var);
Expr total_derivative(const Expr& a, const std::string& var_name);

// Sum of D_i(phi_i); the list carries one entry per independent variable.
Expr divergence(const std::vector<Expr>& phi);

// Standard prolongation recursion eta^{J,i} = D_i(eta^J) - sum_k u_{J,k} D_i(xi_k).
ProlongedField prolong(const VectorField& w, int order);

// Variational derivative E(a) = sum_J (-1)^|J| D_J(da/du_J); input order <= 2.
Expr euler_operator(const Expr& a);

// First higher Euler operator E^v(a) = da/du_v - sum_j D_j(da/du_{v,j});
// input order <= 2.
Expr higher_euler_first(const Expr& a, int var);

// W^(order) applied to a: sum_i xi_i da/dx_i + sum_J eta^J da/du_J.
Expr apply_prolonged(const ProlongedField& wp, const Expr& a);

} // namespace noethera
