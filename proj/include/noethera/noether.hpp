#pragma once

#include "noethera/jet.hpp"

#include <optional>
#include <string>
#include <vector>

namespace noethera {

// Potentials whose total divergence equals a residual; verified exactly at
// construction. `excluded` lists parameter values where a scaling degree in
// the homotopy integral made a coefficient singular.
struct DivergenceCertificate {
    std::vector<Expr> potentials;
    std::vector<Rational> excluded;
};

enum class SymmetryStatus { variational, divergence, conditional, neither };

const char* to_string(SymmetryStatus s);

struct SymmetryVerdict {
    SymmetryStatus status = SymmetryStatus::neither;
    Expr residual;
    std::optional<ParameterConditions> conditions;     // iff conditional
    std::optional<DivergenceCertificate> certificate;  // iff divergence
};

// Left-hand side of the variational criterion: W^(1)L + L * sum_i D_i(xi_i).
// The generator is variational exactly when this vanishes.
Expr variational_residual(const Expr& lagrangian, const VectorField& w);

// Euler-operator test: a first-order residual with zero jet-free part is a
// total divergence iff E(residual) == 0 identically.
bool is_total_divergence(const Expr& residual);

// Constructive inverse of `divergence` for residuals annihilated by the
// Euler operator: scales u and its derivatives by lambda and integrates,
// which per monomial is a factor 1/d with d the monomial's u-degree.
DivergenceCertificate homotopy_potentials(const Expr& residual);

// Full classification of one generator against one Lagrangian.
SymmetryVerdict check_symmetry(const Expr& lagrangian, const VectorField& w);

struct PdeAdmittance {
    bool admitted = false;
    Expr onshell_residual;
    ParameterConditions conditions;
};

// Infinitesimal invariance of eq == 0: applies the second prolongation and
// reduces on-shell by solving eq for the designated second-order jet
// variable (which must appear affinely with a nonzero rational constant
// coefficient).
bool check_pde_symmetry(const Expr& equation, const VectorField& w, const Sym& solved);
PdeAdmittance check_pde_symmetry_report(const Expr& equation, const VectorField& w,
                                        const Sym& solved);

// First second-order jet variable of eq with a nonzero rational constant
// coefficient; errors when none qualifies.
Sym default_solved_variable(const Expr& equation);

} // namespace noethera
