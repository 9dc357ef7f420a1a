#include "noethera/expr.hpp"

#include <algorithm>
#include <set>

namespace noethera {

bool Expr::PowersLess::operator()(const Powers& a, const Powers& b) const {
    auto ia = a.begin(), ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first;
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ia == a.end() && ib != b.end();
}

void Expr::accumulate(TermMap& tm, Powers powers, ParamRational coef) {
    if (coef.is_zero()) return;
    for (auto it = powers.begin(); it != powers.end();) {
        if (it->second.is_zero()) {
            it = powers.erase(it);
            continue;
        }
        if (it->first.kind == Sym::Kind::param) {
            // Integer powers of a parameter live in the coefficient field;
            // only genuinely symbolic or fractional ones stay as symbols.
            if (auto n = it->second.integer_value()) {
                long e = static_cast<long>(*n);
                coef *= ParamRational(ParamPoly::parameter(it->first.index)).pow(e);
                it = powers.erase(it);
                continue;
            }
        }
        ++it;
    }
    if (coef.is_zero()) return;
    auto it = tm.find(powers);
    if (it == tm.end()) {
        tm.emplace(std::move(powers), std::move(coef));
    } else {
        it->second += coef;
        if (it->second.is_zero()) tm.erase(it);
    }
}

Expr Expr::zero(ContextPtr ctx) {
    Expr e;
    e.ctx_ = std::move(ctx);
    return e;
}

Expr Expr::constant(ContextPtr ctx, const Rational& value) {
    return coefficient(std::move(ctx), ParamRational(value));
}

Expr Expr::coefficient(ContextPtr ctx, ParamRational value) {
    Expr e = zero(std::move(ctx));
    accumulate(e.terms_, Powers{}, std::move(value));
    return e;
}

Expr Expr::symbol(ContextPtr ctx, const Sym& s) {
    Expr e = zero(std::move(ctx));
    Powers pw;
    pw.emplace(s, AffineExp(1));
    accumulate(e.terms_, std::move(pw), ParamRational(1));
    return e;
}

Expr Expr::space_var(ContextPtr ctx, const std::string& name) {
    auto idx = ctx->independent_index(name);
    if (!idx) throw Error("'" + name + "' is not an independent variable");
    return symbol(std::move(ctx), Sym::space_var(*idx));
}

Expr Expr::jet_var(ContextPtr ctx, const std::vector<std::string>& index) {
    std::vector<int> idx;
    for (const auto& name : index) {
        auto i = ctx->independent_index(name);
        if (!i) throw Error("'" + name + "' is not an independent variable");
        idx.push_back(*i);
    }
    return symbol(std::move(ctx), Sym::jet_var(std::move(idx)));
}

Expr Expr::dependent_var(ContextPtr ctx) { return symbol(std::move(ctx), Sym::dependent()); }

Expr Expr::parameter(ContextPtr ctx, const std::string& name) {
    auto idx = ctx->parameter_index(name);
    if (!idx) throw Error("'" + name + "' is not a declared parameter");
    return coefficient(std::move(ctx), ParamRational(ParamPoly::parameter(*idx)));
}

Expr Expr::monomial(ContextPtr ctx, Powers powers, ParamRational coef) {
    Expr e = zero(std::move(ctx));
    accumulate(e.terms_, std::move(powers), std::move(coef));
    return e;
}

bool Expr::is_coefficient() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

std::optional<ParamRational> Expr::coefficient_value() const {
    if (!is_coefficient()) return std::nullopt;
    if (terms_.empty()) return ParamRational(0);
    return terms_.begin()->second;
}

Expr Expr::operator-() const {
    Expr out = zero(ctx_);
    for (const auto& [pw, c] : terms_) out.terms_.emplace(pw, -c);
    return out;
}

Expr Expr::operator+(const Expr& o) const {
    require_same_context(ctx_, o.ctx_);
    Expr out = *this;
    for (const auto& [pw, c] : o.terms_) accumulate(out.terms_, pw, c);
    return out;
}

Expr Expr::operator-(const Expr& o) const { return *this + (-o); }

Expr Expr::operator*(const Expr& o) const {
    require_same_context(ctx_, o.ctx_);
    Expr out = zero(ctx_);
    for (const auto& [pa, ca] : terms_)
        for (const auto& [pb, cb] : o.terms_) {
            Powers pw = pa;
            for (const auto& [s, e] : pb) {
                auto it = pw.find(s);
                if (it == pw.end())
                    pw.emplace(s, e);
                else
                    it->second = it->second + e;
            }
            accumulate(out.terms_, std::move(pw), ca * cb);
        }
    return out;
}

bool Expr::operator==(const Expr& o) const {
    return same_context(ctx_, o.ctx_) && terms_ == o.terms_;
}

int Expr::jet_order() const {
    int order = 0;
    for (const auto& [pw, c] : terms_)
        for (const auto& [s, e] : pw)
            if (s.is_jet()) order = std::max(order, s.jet_order());
    return order;
}

std::vector<Sym> Expr::jet_symbols() const {
    std::set<Sym> seen;
    for (const auto& [pw, c] : terms_)
        for (const auto& [s, e] : pw)
            if (s.is_jet()) seen.insert(s);
    return {seen.begin(), seen.end()};
}

Expr Expr::jet_free_part() const {
    Expr out = zero(ctx_);
    for (const auto& [pw, c] : terms_) {
        bool has_jet = std::any_of(pw.begin(), pw.end(),
                                   [](const auto& kv) { return kv.first.is_jet(); });
        if (!has_jet) out.terms_.emplace(pw, c);
    }
    return out;
}

std::vector<Expr> Expr::monomials() const {
    std::vector<Expr> out;
    for (const auto& [pw, c] : terms_) {
        Expr m = zero(ctx_);
        m.terms_.emplace(pw, c);
        out.push_back(std::move(m));
    }
    return out;
}

AffineExp Expr::u_degree(const Powers& powers) {
    AffineExp d(0);
    for (const auto& [s, e] : powers)
        if (s.is_jet()) d = d + e;
    return d;
}

ParamRational Expr::coefficient_of(const Powers& powers) const {
    auto it = terms_.find(powers);
    return it == terms_.end() ? ParamRational(0) : it->second;
}

Expr Expr::mono_pow(const ContextPtr& ctx, const Powers& powers, const ParamRational& coef,
                    const AffineExp& e) {
    Powers out;
    for (const auto& [s, f] : powers) {
        AffineExp scaled;
        if (f.is_constant())
            scaled = e.scaled(f.constant());
        else if (e.is_constant())
            scaled = f.scaled(e.constant());
        else
            throw UnsupportedPowerError("product of two symbolic exponents leaves the affine class");
        if (!scaled.is_zero()) out.emplace(s, scaled);
    }

    ParamRational c(1);
    if (!coef.is_one()) {
        if (auto n = e.integer_value()) {
            c = coef.pow(static_cast<long>(*n));
        } else {
            // c^e is representable only when c is a pure parameter monomial
            // with unit coefficient on both sides of the fraction.
            auto unit_mono = [](const ParamPoly& p) -> std::optional<ParamPoly::Mono> {
                if (p.terms().size() != 1 || p.terms().begin()->second != 1) return std::nullopt;
                return p.terms().begin()->first;
            };
            auto nm = unit_mono(coef.numerator());
            auto dm = unit_mono(coef.denominator());
            if (!nm || !dm)
                throw UnsupportedPowerError(
                    "symbolic power of a coefficient that is not a parameter monomial");
            auto raise = [&](const ParamPoly::Mono& m, bool inverted) {
                for (const auto& [idx, k] : m) {
                    AffineExp add = e.scaled(Rational(inverted ? -k : k));
                    Sym s = Sym::parameter(idx);
                    auto it = out.find(s);
                    if (it == out.end())
                        out.emplace(s, add);
                    else
                        it->second = it->second + add;
                }
            };
            raise(*nm, false);
            raise(*dm, true);
        }
    }
    Expr r = Expr::zero(ctx);
    accumulate(r.terms_, std::move(out), std::move(c));
    return r;
}

Expr pow(const Expr& base, const AffineExp& exponent) {
    if (!base.valid()) throw Error("pow on an uninitialized expression");
    if (auto n = exponent.integer_value(); n && *n >= 0) {
        if (*n > 1000) throw UnsupportedPowerError("integer exponent too large to expand");
        Expr acc = Expr::constant(base.ctx_, Rational(1));
        for (BigInt i = 0; i < *n; ++i) acc = acc * base;
        return acc;
    }
    if (base.terms_.size() != 1)
        throw UnsupportedPowerError(
            "symbolic or negative exponents require a single-monomial base");
    const auto& [pw, c] = *base.terms_.begin();
    return Expr::mono_pow(base.ctx_, pw, c, exponent);
}

Expr pdiff(const Expr& a, const Sym& v) {
    if (v.kind == Sym::Kind::param)
        throw Error("partial derivative with respect to a parameter is not defined here");
    Expr out = Expr::zero(a.ctx_);
    for (const auto& [pw, c] : a.terms_) {
        auto it = pw.find(v);
        if (it == pw.end()) continue;
        Expr::Powers reduced = pw;
        AffineExp e = it->second;
        AffineExp down = e - AffineExp(1);
        if (down.is_zero())
            reduced.erase(v);
        else
            reduced[v] = down;
        Expr::accumulate(out.terms_, std::move(reduced), c * e.to_param_rational());
    }
    return out;
}

Expr substitute(const Expr& a, const Sym& v, const Expr& replacement) {
    require_same_context(a.context(), replacement.context());
    if (v.kind == Sym::Kind::param)
        throw Error("parameters are fixed symbols; substitute variables instead");
    Expr out = Expr::zero(a.ctx_);
    for (const auto& [pw, c] : a.terms_) {
        auto it = pw.find(v);
        if (it == pw.end()) {
            Expr::accumulate(out.terms_, pw, c);
            continue;
        }
        Expr::Powers rest = pw;
        AffineExp e = it->second;
        rest.erase(v);
        Expr factor = pow(replacement, e);
        Expr term = Expr::monomial(a.ctx_, std::move(rest), c) * factor;
        for (const auto& [tpw, tc] : term.terms_) Expr::accumulate(out.terms_, tpw, tc);
    }
    return out;
}

bool ParameterConditions::never_zero() const {
    if (vanishing.empty()) return false;
    // A nonzero constant requirement can never be met.
    for (const auto& p : vanishing)
        if (p.is_constant() && !p.is_zero()) return true;
    // Constant gcd in the single-parameter case: no common root.
    return roots.empty() && unsolved.empty();
}

ParameterConditions solve_zero_conditions(const Expr& a) {
    ParameterConditions out;
    std::set<ParamPoly> vanishing;
    std::set<Rational> excluded;

    for (const auto& [pw, c] : a.terms()) {
        vanishing.insert(c.numerator().primitive_part());
        const ParamPoly& d = c.denominator();
        if (!d.is_constant()) {
            for (const auto& r : d.rational_roots()) excluded.insert(r);
        }
    }
    out.vanishing.assign(vanishing.begin(), vanishing.end());
    out.excluded.assign(excluded.begin(), excluded.end());
    if (out.vanishing.empty()) return out;

    std::set<int> params_used;
    for (const auto& p : out.vanishing) {
        for (const auto& [m, coef] : p.terms())
            for (const auto& [idx, e] : m) params_used.insert(idx);
    }
    if (params_used.empty()) return out; // nonzero constants only: never zero

    bool impossible = std::any_of(out.vanishing.begin(), out.vanishing.end(),
                                  [](const ParamPoly& p) { return p.is_constant(); });
    if (impossible) return out; // a nonzero constant can never vanish

    if (params_used.size() > 1) {
        out.unsolved = out.vanishing; // multi-parameter systems stay unsolved
        return out;
    }

    ParamPoly g;
    for (const auto& p : out.vanishing) g = ParamPoly::gcd(g, p);
    if (g.is_constant()) return out;

    ParamPoly remaining;
    std::vector<Rational> roots = g.rational_roots(&remaining);
    for (const auto& r : roots)
        if (!excluded.count(r)) out.roots.push_back(r);
    if (!remaining.is_constant()) out.unsolved.push_back(remaining);
    return out;
}

std::optional<Rational> eval_expr(const Expr& a, const std::map<Sym, Rational>& vars,
                                  const std::vector<Rational>& params) {
    Rational acc = 0;
    for (const auto& [pw, c] : a.terms()) {
        auto cv = c.eval(params);
        if (!cv) return std::nullopt;
        Rational term = *cv;
        for (const auto& [s, e] : pw) {
            Rational ev = e.eval(params);
            if (!is_integer(ev)) return std::nullopt;
            long k = static_cast<long>(num(ev));
            Rational base;
            if (s.kind == Sym::Kind::param)
                base = params.at(static_cast<std::size_t>(s.index));
            else {
                auto it = vars.find(s);
                if (it == vars.end()) return std::nullopt;
                base = it->second;
            }
            if (base == 0 && k < 0) return std::nullopt;
            term *= rational_pow(base, k);
        }
        acc += term;
    }
    return acc;
}

} // namespace noethera
