#pragma once

#include "noethera/param_rational.hpp"
#include "noethera/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace noethera {

// Exponent of the form c + sum_i s_i * p_i with rational c and slopes s_i.
// Closed under addition and rational scaling, which is exactly what powers
// like p+1, p-1 or 2p need.
class AffineExp {
public:
    AffineExp() = default;
    AffineExp(Rational constant) : constant_(std::move(constant)) {}
    AffineExp(int constant) : constant_(constant) {}
    static AffineExp parameter(int index, Rational slope = Rational(1));

    const Rational& constant() const { return constant_; }
    const std::map<int, Rational>& slopes() const { return slopes_; }

    bool is_zero() const { return constant_ == 0 && slopes_.empty(); }
    bool is_constant() const { return slopes_.empty(); }
    bool is_integer_constant() const { return slopes_.empty() && is_integer(constant_); }
    // Integer value when is_integer_constant().
    std::optional<BigInt> integer_value() const;

    AffineExp operator-() const;
    AffineExp operator+(const AffineExp& o) const;
    AffineExp operator-(const AffineExp& o) const;
    AffineExp scaled(const Rational& k) const;

    bool operator==(const AffineExp& o) const {
        return constant_ == o.constant_ && slopes_ == o.slopes_;
    }
    bool operator!=(const AffineExp& o) const { return !(*this == o); }
    bool operator<(const AffineExp& o) const;

    // The exponent as an element of the coefficient field (power rule moves
    // exponents into coefficients).
    ParamRational to_param_rational() const;

    Rational eval(const std::vector<Rational>& params) const;

    std::string str(const std::vector<std::string>& param_names) const;

private:
    Rational constant_ = Rational(0);
    std::map<int, Rational> slopes_; // no zero entries
    void prune();
    friend class Expr;
};

} // namespace noethera
