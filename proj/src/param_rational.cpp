#include "noethera/param_rational.hpp"

#include "noethera/errors.hpp"

namespace noethera {

ParamRational::ParamRational(const Rational& q)
    : num_(ParamPoly(num(q))), den_(ParamPoly(den(q))) {}

ParamRational::ParamRational(ParamPoly numerator, ParamPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw Error("zero denominator in parameter fraction");
    normalize();
}

void ParamRational::normalize() {
    if (num_.is_zero()) {
        den_ = ParamPoly(BigInt(1));
        return;
    }
    ParamPoly g = ParamPoly::gcd(num_, den_);
    num_ = num_.divexact(g);
    den_ = den_.divexact(g);
    if (den_.terms().rbegin()->second < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

std::optional<Rational> ParamRational::rational_value() const {
    if (!is_constant()) return std::nullopt;
    if (num_.is_zero()) return Rational(0);
    return Rational(num_.constant_value(), den_.constant_value());
}

ParamRational ParamRational::operator-() const {
    ParamRational out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
}

ParamRational ParamRational::operator+(const ParamRational& o) const {
    return ParamRational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

ParamRational ParamRational::operator-(const ParamRational& o) const { return *this + (-o); }

ParamRational ParamRational::operator*(const ParamRational& o) const {
    return ParamRational(num_ * o.num_, den_ * o.den_);
}

ParamRational ParamRational::operator/(const ParamRational& o) const {
    return *this * o.inverse();
}

ParamRational ParamRational::inverse() const {
    if (is_zero()) throw Error("inverse of the zero parameter fraction");
    return ParamRational(den_, num_);
}

ParamRational ParamRational::pow(long e) const {
    if (e == 0) return ParamRational(1);
    const ParamRational& base = e < 0 ? inverse() : *this;
    long k = e < 0 ? -e : e;
    ParamRational acc(1);
    for (long i = 0; i < k; ++i) acc = acc * base;
    return acc;
}

bool ParamRational::operator<(const ParamRational& o) const {
    if (num_ != o.num_) return num_ < o.num_;
    return den_ < o.den_;
}

bool ParamRational::is_negative_leading() const {
    return !num_.is_zero() && num_.terms().rbegin()->second < 0;
}

std::optional<Rational> ParamRational::eval(const std::vector<Rational>& point) const {
    Rational d = den_.eval(point);
    if (d == 0) return std::nullopt;
    return num_.eval(point) / d;
}

} // namespace noethera
