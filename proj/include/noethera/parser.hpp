#pragma once

#include "noethera/jet.hpp"

#include <optional>
#include <string>
#include <vector>

namespace noethera {

// A fully validated problem document: declarations, optional Lagrangian and
// equation, and a name-sorted generator list.
struct ProblemSpec {
    ContextPtr ctx;
    std::optional<Expr> lagrangian;
    std::optional<Expr> equation;
    std::vector<VectorField> generators; // sorted by name

    const VectorField& generator(const std::string& name) const;
    bool operator==(const ProblemSpec& o) const;
};

// Grammar: + - * / ^ with standard precedence, unary minus binding looser
// than ^, parentheses, integer and a/b literals, derivative shorthand u_xy
// (single-character independents only) and the general d(u,x1,y1) form.
// Division only by parameter polynomials or rational literals.
Expr parse_expr(const std::string& src, const ContextPtr& ctx);

// Deterministic canonical form; parse_expr(print_expr(a)) == a.
std::string print_expr(const Expr& a);

ProblemSpec load_problem_text(const std::string& json_text);
ProblemSpec load_problem(const std::string& path);

} // namespace noethera
