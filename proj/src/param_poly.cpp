#include "noethera/param_poly.hpp"

#include "noethera/errors.hpp"

#include <algorithm>
#include <sstream>

namespace noethera {

namespace {

int mono_degree(const ParamPoly::Mono& m) {
    int d = 0;
    for (const auto& [idx, e] : m) d += e;
    return d;
}

// Componentwise max/merge helpers on sorted sparse exponent vectors.
ParamPoly::Mono mono_mul(const ParamPoly::Mono& a, const ParamPoly::Mono& b) {
    ParamPoly::Mono out;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    return out;
}

// a / b when b divides a componentwise; nullopt otherwise.
std::optional<ParamPoly::Mono> mono_div(const ParamPoly::Mono& a, const ParamPoly::Mono& b) {
    ParamPoly::Mono out;
    std::size_t i = 0;
    for (const auto& [idx, e] : b) {
        while (i < a.size() && a[i].first < idx) out.push_back(a[i++]);
        if (i == a.size() || a[i].first != idx || a[i].second < e) return std::nullopt;
        if (a[i].second > e) out.emplace_back(idx, a[i].second - e);
        ++i;
    }
    while (i < a.size()) out.push_back(a[i++]);
    return out;
}

int mono_exponent_of(const ParamPoly::Mono& m, int index) {
    for (const auto& [idx, e] : m)
        if (idx == index) return e;
    return 0;
}

ParamPoly::Mono mono_erase(const ParamPoly::Mono& m, int index) {
    ParamPoly::Mono out;
    for (const auto& pr : m)
        if (pr.first != index) out.push_back(pr);
    return out;
}

} // namespace

bool ParamPoly::MonoLess::operator()(const Mono& a, const Mono& b) const {
    int da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da < db;
    // Same total degree: lex with lower parameter index more significant.
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first != b[j].first) {
            // The side owning the smaller index has positive exponent there.
            return a[i].first > b[j].first;
        }
        if (a[i].second != b[j].second) return a[i].second < b[j].second;
        ++i;
        ++j;
    }
    return i == a.size() && j != b.size();
}

ParamPoly::ParamPoly(BigInt constant) {
    if (constant != 0) terms_[Mono{}] = std::move(constant);
}

ParamPoly ParamPoly::parameter(int index, int exponent) {
    ParamPoly p;
    if (exponent == 0) return ParamPoly(BigInt(1));
    p.terms_[Mono{{index, exponent}}] = 1;
    return p;
}

bool ParamPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second == 1;
}

bool ParamPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

BigInt ParamPoly::constant_value() const {
    if (terms_.empty()) return 0;
    auto it = terms_.find(Mono{});
    return it == terms_.end() ? BigInt(0) : it->second;
}

int ParamPoly::total_degree() const {
    return terms_.empty() ? 0 : mono_degree(terms_.rbegin()->first);
}

int ParamPoly::degree_in(int index) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, mono_exponent_of(m, index));
    return d;
}

bool ParamPoly::uses(int index) const { return degree_in(index) > 0; }

int ParamPoly::max_param() const {
    int hi = -1;
    for (const auto& [m, c] : terms_)
        for (const auto& [idx, e] : m) hi = std::max(hi, idx);
    return hi;
}

std::optional<int> ParamPoly::single_param() const {
    std::optional<int> found;
    for (const auto& [m, c] : terms_)
        for (const auto& [idx, e] : m) {
            if (found && *found != idx) return std::nullopt;
            found = idx;
        }
    return found;
}

ParamPoly ParamPoly::from_terms(TermMap terms) {
    ParamPoly p;
    for (auto& [m, c] : terms)
        if (c != 0) p.terms_.emplace(m, std::move(c));
    return p;
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
    TermMap out = terms_;
    for (const auto& [m, c] : o.terms_) {
        auto [it, inserted] = out.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) out.erase(it);
        }
    }
    ParamPoly p;
    p.terms_ = std::move(out);
    return p;
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const { return *this + (-o); }

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
    TermMap out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Mono m = mono_mul(ma, mb);
            auto [it, inserted] = out.emplace(std::move(m), ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second == 0) out.erase(it);
            }
        }
    ParamPoly p;
    p.terms_ = std::move(out);
    return p;
}

ParamPoly ParamPoly::pow(unsigned e) const {
    ParamPoly acc(BigInt(1));
    for (unsigned i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

BigInt ParamPoly::content() const {
    if (terms_.empty()) return 0;
    BigInt g = 0;
    for (const auto& [m, c] : terms_) g = boost::multiprecision::gcd(g, c);
    if (terms_.rbegin()->second < 0) g = -g;
    return g;
}

ParamPoly ParamPoly::primitive_part() const {
    if (terms_.empty()) return *this;
    BigInt c = content();
    ParamPoly out;
    for (const auto& [m, coef] : terms_) out.terms_.emplace(m, coef / c);
    return out;
}

ParamPoly ParamPoly::divexact(const ParamPoly& divisor) const {
    if (divisor.is_zero()) throw Error("polynomial division by zero");
    ParamPoly rem = *this, quot;
    const auto& lead = *divisor.terms_.rbegin();
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms_.rbegin();
        auto m = mono_div(rlead.first, lead.first);
        if (!m || rlead.second % lead.second != 0)
            throw Error("inexact polynomial division");
        ParamPoly t;
        t.terms_.emplace(*m, rlead.second / lead.second);
        quot = quot + t;
        rem = rem - t * divisor;
    }
    return quot;
}

std::map<int, ParamPoly> ParamPoly::coeffs_in(int index) const {
    std::map<int, ParamPoly> out;
    for (const auto& [m, c] : terms_) {
        int e = mono_exponent_of(m, index);
        ParamPoly t;
        t.terms_.emplace(mono_erase(m, index), c);
        out[e] = out[e] + t;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

ParamPoly ParamPoly::content_in(const ParamPoly& f, int index) {
    ParamPoly g;
    for (const auto& [e, c] : f.coeffs_in(index)) g = gcd(g, c);
    return g;
}

// Fraction-free pseudo-remainder of f by g in the given parameter.
ParamPoly ParamPoly::pseudo_rem(const ParamPoly& f, const ParamPoly& g, int index) {
    auto gc = g.coeffs_in(index);
    int dg = gc.rbegin()->first;
    ParamPoly lg = gc.rbegin()->second;
    ParamPoly r = f;
    while (!r.is_zero()) {
        auto rc = r.coeffs_in(index);
        int dr = rc.rbegin()->first;
        if (dr < dg) break;
        ParamPoly lr = rc.rbegin()->second;
        // r <- lg*r - lr*x^(dr-dg)*g
        ParamPoly shift = parameter(index, dr - dg);
        r = lg * r - lr * shift * g;
    }
    return r;
}

ParamPoly ParamPoly::gcd(const ParamPoly& a, const ParamPoly& b) {
    if (a.is_zero()) {
        ParamPoly r = b.primitive_part();
        BigInt c = b.content();
        return r * ParamPoly(c < 0 ? -c : c);
    }
    if (b.is_zero()) return gcd(b, a);

    BigInt ca = a.content(), cb = b.content();
    BigInt c = boost::multiprecision::gcd(ca, cb);
    if (c < 0) c = -c;
    ParamPoly pa = a.primitive_part(), pb = b.primitive_part();
    if (pa.is_constant() || pb.is_constant()) return ParamPoly(c);

    int v = std::max(pa.max_param(), pb.max_param());
    if (!pa.uses(v)) return ParamPoly(c) * gcd(pa, content_in(pb, v));
    if (!pb.uses(v)) return ParamPoly(c) * gcd(pb, content_in(pa, v));

    ParamPoly conta = content_in(pa, v), contb = content_in(pb, v);
    ParamPoly f = pa.divexact(conta), g = pb.divexact(contb);
    if (f.coeffs_in(v).rbegin()->first < g.coeffs_in(v).rbegin()->first) std::swap(f, g);

    // Primitive polynomial remainder sequence in v.
    while (true) {
        ParamPoly r = pseudo_rem(f, g, v);
        if (r.is_zero()) break;
        if (!r.uses(v)) {
            g = ParamPoly(BigInt(1));
            break;
        }
        f = g;
        g = r.divexact(content_in(r, v)).primitive_part();
    }
    ParamPoly result = ParamPoly(c) * gcd(conta, contb) * g.primitive_part();
    if (!result.is_zero() && result.terms_.rbegin()->second < 0) result = -result;
    return result;
}

Rational ParamPoly::eval(const std::vector<Rational>& point) const {
    Rational acc = 0;
    for (const auto& [m, c] : terms_) {
        Rational term(c);
        for (const auto& [idx, e] : m) {
            if (idx >= static_cast<int>(point.size()))
                throw Error("evaluation point missing a parameter value");
            term *= rational_pow(point[idx], e);
        }
        acc += term;
    }
    return acc;
}

std::vector<Rational> ParamPoly::rational_roots(ParamPoly* remaining) const {
    std::vector<Rational> roots;
    auto sp = single_param();
    if (!sp || is_constant()) {
        if (remaining) *remaining = primitive_part();
        return roots;
    }
    int v = *sp;
    // Dense rational coefficient vector c[0..d].
    std::vector<BigInt> c(static_cast<std::size_t>(degree_in(v)) + 1, BigInt(0));
    for (const auto& [m, coef] : terms_) c[static_cast<std::size_t>(mono_exponent_of(m, v))] = coef;

    auto eval_at = [&](const Rational& r) {
        Rational acc = 0, pw = 1;
        for (const auto& ci : c) {
            acc += Rational(ci) * pw;
            pw *= r;
        }
        return acc;
    };
    auto deflate = [&](const Rational& r) {
        // Synthetic division by (x - r) over the rationals, then clear
        // denominators back to integers.
        std::size_t d = c.size() - 1;
        std::vector<Rational> q(d);
        Rational carry = Rational(c[d]);
        for (std::size_t k = d; k-- > 0;) {
            q[k] = carry;
            carry = Rational(c[k]) + carry * r;
        }
        BigInt lcm = 1;
        for (const auto& qi : q) lcm = boost::multiprecision::lcm(lcm, den(qi));
        c.assign(d, BigInt(0));
        for (std::size_t k = 0; k < d; ++k) c[k] = num(q[k]) * (lcm / den(q[k]));
    };

    // x^k factor: root 0.
    while (c.size() > 1 && c[0] == 0) {
        if (roots.empty() || roots.back() != 0) roots.push_back(Rational(0));
        c.erase(c.begin());
    }

    auto divisors = [](BigInt n) {
        std::vector<BigInt> out;
        if (n < 0) n = -n;
        if (n > 1000000000) return out; // give up, the factor stays unsolved
        for (BigInt d = 1; d * d <= n; ++d)
            if (n % d == 0) {
                out.push_back(d);
                out.push_back(n / d);
            }
        return out;
    };

    bool progressed = true;
    while (progressed && c.size() > 1) {
        progressed = false;
        BigInt a0 = c.front(), ad = c.back();
        if (a0 == 0) {
            roots.push_back(Rational(0));
            c.erase(c.begin());
            progressed = true;
            continue;
        }
        for (const BigInt& u : divisors(a0)) {
            for (const BigInt& w : divisors(ad)) {
                for (int sign : {1, -1}) {
                    Rational cand(sign * u, w);
                    if (eval_at(cand) == 0) {
                        roots.push_back(cand);
                        deflate(cand);
                        progressed = true;
                    }
                    if (progressed) break;
                }
                if (progressed) break;
            }
            if (progressed) break;
        }
    }

    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    if (remaining) {
        TermMap rem;
        for (std::size_t k = 0; k < c.size(); ++k)
            if (c[k] != 0)
                rem.emplace(k == 0 ? Mono{} : Mono{{v, static_cast<int>(k)}}, c[k]);
        *remaining = from_terms(std::move(rem)).primitive_part();
    }
    return roots;
}

std::string ParamPoly::str(const std::vector<std::string>& param_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Descending order reads naturally: p^2 - 1, 2*p + 3.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        BigInt a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? "-" : "+");
            if (a < 0) a = -a;
        }
        bool coef_printed = false;
        if (a != 1 || m.empty()) {
            os << a.str();
            coef_printed = true;
        }
        for (const auto& [idx, e] : m) {
            if (coef_printed) os << "*";
            os << param_names.at(static_cast<std::size_t>(idx));
            if (e != 1) os << "^" << e;
            coef_printed = true;
        }
        first = false;
    }
    return os.str();
}

} // namespace noethera
