#pragma once

#include "noethera/noether.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace noethera {
namespace heisenberg {

// Exponent of the power nonlinearity: symbolic (a parameter named "p") or a
// fixed rational value.
using Exponent = std::variant<std::monostate, Rational>;
inline Exponent symbolic_exponent() { return std::monostate{}; }

// The H^n Kohn-Laplace problem: variables x_1..x_n, y_1..y_n, t; Lagrangian
// (1/2)(X_i u)^2 + (1/2)(Y_i u)^2 - u^(p+1)/(p+1); the equation is the
// negated variational derivative of the Lagrangian (checked at build time).
struct HeisenbergProblem {
    int n = 1;
    Exponent exponent;
    ContextPtr ctx;
    Expr lagrangian;
    Expr equation;
    std::vector<VectorField> catalog;

    bool symbolic() const { return std::holds_alternative<std::monostate>(exponent); }
    const VectorField& generator(const std::string& name) const;
};

// n >= 1; a fixed exponent of 1 or -1 is rejected (the dilation coefficient
// and the potential term are singular there).
HeisenbergProblem build(int n, const Exponent& exponent);

// (n+2)/n; equals (Q+2)/(Q-2) with homogeneous dimension Q = 2n+2.
Rational critical_exponent(int n);
int homogeneous_dimension(int n);

struct GeneratorResult {
    std::string name;
    SymmetryVerdict verdict;
    bool pde_admitted = false;
    bool pde_checked = false;
    bool ok = false;            // matched the expected outcome
    std::string expected;
    std::string detail;         // human-readable mismatch description
};

struct SuiteReport {
    std::string suite;
    int n = 1;
    std::string exponent;       // "p" or a rational literal
    std::vector<GeneratorResult> results;
    Rational critical;
    bool pass = false;
};

// Symbolic-exponent suite: translations / rotations / right multiplications
// are variational outright; the dilation is conditional exactly at the
// critical exponent.
SuiteReport theorem1_suite(int n);

// Critical-case suite on H^1 (exponent 3): the five-parameter group is
// variational, V1-V3 are divergence symmetries with explicit potentials, and
// every catalog generator is admitted by the equation.
SuiteReport theorem2_suite();

} // namespace heisenberg
} // namespace noethera
