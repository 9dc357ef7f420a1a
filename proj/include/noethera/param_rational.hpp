#pragma once

#include "noethera/param_poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace noethera {

// Element of the rational-function field over the parameters: a reduced
// ratio of integer-coefficient polynomials. Canonical: gcd(num, den) is a
// unit, the denominator's leading coefficient (graded-lex) is positive,
// zero is 0/1 and one is 1/1.
class ParamRational {
public:
    ParamRational() : num_(BigInt(0)), den_(BigInt(1)) {}
    ParamRational(const Rational& q);
    ParamRational(const BigInt& n) : ParamRational(Rational(n)) {}
    ParamRational(int n) : ParamRational(Rational(n)) {}
    explicit ParamRational(ParamPoly p) : num_(std::move(p)), den_(BigInt(1)) {}
    ParamRational(ParamPoly numerator, ParamPoly denominator);

    const ParamPoly& numerator() const { return num_; }
    const ParamPoly& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    // Value as a plain rational when parameter-free.
    std::optional<Rational> rational_value() const;

    ParamRational operator-() const;
    ParamRational operator+(const ParamRational& o) const;
    ParamRational operator-(const ParamRational& o) const;
    ParamRational operator*(const ParamRational& o) const;
    ParamRational operator/(const ParamRational& o) const;
    ParamRational& operator+=(const ParamRational& o) { return *this = *this + o; }
    ParamRational& operator*=(const ParamRational& o) { return *this = *this * o; }

    ParamRational inverse() const;
    ParamRational pow(long e) const;

    bool operator==(const ParamRational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const ParamRational& o) const { return !(*this == o); }
    bool operator<(const ParamRational& o) const;

    // Sign of the numerator's leading coefficient; used to print "a - b".
    bool is_negative_leading() const;

    // nullopt when the denominator vanishes at the point.
    std::optional<Rational> eval(const std::vector<Rational>& point) const;

private:
    ParamPoly num_, den_;
    void normalize();
};

} // namespace noethera
