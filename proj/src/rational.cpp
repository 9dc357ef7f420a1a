#include "noethera/rational.hpp"

#include "noethera/errors.hpp"

#include <cctype>

namespace noethera {

Rational rational_pow(const Rational& q, long e) {
    if (e == 0) return Rational(1);
    if (q == 0) {
        if (e < 0) throw Error("zero raised to a negative power");
        return Rational(0);
    }
    bool invert = e < 0;
    unsigned long k = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    BigInt n = boost::multiprecision::pow(num(q), static_cast<unsigned>(k));
    BigInt d = boost::multiprecision::pow(den(q), static_cast<unsigned>(k));
    return invert ? Rational(d, n) : Rational(n, d);
}

std::string rational_str(const Rational& q) {
    if (is_integer(q)) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

std::optional<Rational> rational_parse(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::size_t i = 0;
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
        negative = text[i] == '-';
        ++i;
    }
    auto digits = [&](BigInt& out) -> bool {
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) return false;
        out = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            out = out * 10 + (text[i] - '0');
            ++i;
        }
        return true;
    };
    BigInt n, d = 1;
    if (!digits(n)) return std::nullopt;
    if (i < text.size() && text[i] == '/') {
        ++i;
        if (!digits(d) || d == 0) return std::nullopt;
    }
    if (i != text.size()) return std::nullopt;
    Rational q(n, d);
    return negative ? -q : q;
}

} // namespace noethera
