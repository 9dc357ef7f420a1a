#include "noethera/affine_exponent.hpp"

#include <sstream>

namespace noethera {

AffineExp AffineExp::parameter(int index, Rational slope) {
    AffineExp e;
    if (slope != 0) e.slopes_[index] = std::move(slope);
    return e;
}

std::optional<BigInt> AffineExp::integer_value() const {
    if (!is_integer_constant()) return std::nullopt;
    return num(constant_);
}

void AffineExp::prune() {
    for (auto it = slopes_.begin(); it != slopes_.end();)
        it = it->second == 0 ? slopes_.erase(it) : std::next(it);
}

AffineExp AffineExp::operator-() const { return scaled(Rational(-1)); }

AffineExp AffineExp::operator+(const AffineExp& o) const {
    AffineExp out = *this;
    out.constant_ += o.constant_;
    for (const auto& [i, s] : o.slopes_) out.slopes_[i] += s;
    out.prune();
    return out;
}

AffineExp AffineExp::operator-(const AffineExp& o) const { return *this + (-o); }

AffineExp AffineExp::scaled(const Rational& k) const {
    AffineExp out;
    out.constant_ = constant_ * k;
    if (k != 0)
        for (const auto& [i, s] : slopes_) out.slopes_[i] = s * k;
    return out;
}

bool AffineExp::operator<(const AffineExp& o) const {
    if (constant_ != o.constant_) return constant_ < o.constant_;
    return slopes_ < o.slopes_;
}

ParamRational AffineExp::to_param_rational() const {
    BigInt lcm = den(constant_);
    for (const auto& [i, s] : slopes_) lcm = boost::multiprecision::lcm(lcm, den(s));
    ParamPoly n(num(constant_) * (lcm / den(constant_)));
    for (const auto& [i, s] : slopes_)
        n = n + ParamPoly(num(s) * (lcm / den(s))) * ParamPoly::parameter(i);
    return ParamRational(n, ParamPoly(lcm));
}

Rational AffineExp::eval(const std::vector<Rational>& params) const {
    Rational acc = constant_;
    for (const auto& [i, s] : slopes_) acc += s * params.at(static_cast<std::size_t>(i));
    return acc;
}

std::string AffineExp::str(const std::vector<std::string>& param_names) const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, s] : slopes_) {
        if (!first) os << (s < 0 ? "-" : "+");
        Rational a = (!first && s < 0) ? -s : s;
        if (a == -1 && first)
            os << "-";
        else if (a != 1)
            os << rational_str(a) << "*";
        os << param_names.at(static_cast<std::size_t>(i));
        first = false;
    }
    if (constant_ != 0 || first) {
        if (first)
            os << rational_str(constant_);
        else {
            os << (constant_ < 0 ? "-" : "+");
            os << rational_str(constant_ < 0 ? -constant_ : constant_);
        }
    }
    return os.str();
}

} // namespace noethera
