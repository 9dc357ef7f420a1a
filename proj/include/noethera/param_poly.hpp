#pragma once

#include "noethera/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace noethera {

// Multivariate polynomial with integer coefficients over the declared
// parameters (variables are identified by their parameter index in the
// problem context). Monomials are sparse, sorted graded-lex; the zero
// polynomial has no terms.
class ParamPoly {
public:
    // (parameter index, exponent > 0), sorted by index.
    using Mono = std::vector<std::pair<int, int>>;

    struct MonoLess {
        bool operator()(const Mono& a, const Mono& b) const;
    };
    using TermMap = std::map<Mono, BigInt, MonoLess>;

    ParamPoly() = default;
    explicit ParamPoly(BigInt constant);
    static ParamPoly constant(BigInt c) { return ParamPoly(std::move(c)); }
    static ParamPoly parameter(int index, int exponent = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    // Constant term when is_constant(), otherwise meaningless.
    BigInt constant_value() const;

    int total_degree() const;
    int degree_in(int index) const;
    bool uses(int index) const;
    // Largest parameter index occurring, or -1 for constants.
    int max_param() const;
    // The single parameter index when exactly one occurs.
    std::optional<int> single_param() const;

    const TermMap& terms() const { return terms_; }

    ParamPoly operator-() const;
    ParamPoly operator+(const ParamPoly& o) const;
    ParamPoly operator-(const ParamPoly& o) const;
    ParamPoly operator*(const ParamPoly& o) const;
    bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const ParamPoly& o) const { return !(*this == o); }
    bool operator<(const ParamPoly& o) const { return terms_ < o.terms_; }

    ParamPoly pow(unsigned e) const;

    // GCD of coefficients, carrying the sign of the leading term; 0 for zero.
    BigInt content() const;
    // this / content(); leading coefficient positive.
    ParamPoly primitive_part() const;

    // Exact division; throws Error if the divisor does not divide.
    ParamPoly divexact(const ParamPoly& divisor) const;
    // True gcd including integer content, leading coefficient positive.
    static ParamPoly gcd(const ParamPoly& a, const ParamPoly& b);

    Rational eval(const std::vector<Rational>& point) const;

    // Rational roots of a univariate polynomial (rational root theorem).
    // `remaining` receives the primitive cofactor after dividing the roots
    // out; degree >= 1 means irrational/complex roots remain unsolved.
    std::vector<Rational> rational_roots(ParamPoly* remaining = nullptr) const;

    std::string str(const std::vector<std::string>& param_names) const;

    // Builds from a map; drops zero coefficients.
    static ParamPoly from_terms(TermMap terms);

private:
    TermMap terms_;

    // Univariate view in one parameter: coefficient polynomials by exponent.
    std::map<int, ParamPoly> coeffs_in(int index) const;
    static ParamPoly content_in(const ParamPoly& f, int index);
    static ParamPoly pseudo_rem(const ParamPoly& f, const ParamPoly& g, int index);
};

} // namespace noethera
