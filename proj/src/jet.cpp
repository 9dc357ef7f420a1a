#include "noethera/jet.hpp"

#include <functional>

namespace noethera {

VectorField VectorField::make(std::string name, ContextPtr ctx, std::vector<Expr> xi, Expr eta) {
    if (static_cast<int>(xi.size()) != ctx->n_independent())
        throw SizeMismatchError("generator '" + name + "' needs one xi per independent variable");
    auto check_point = [&](const Expr& e, const std::string& what) {
        require_same_context(ctx, e.context());
        for (const Sym& s : e.jet_symbols())
            if (s.jet_order() > 0)
                throw JetOrderError("generator '" + name + "' " + what +
                                    " depends on derivatives; only point transformations are supported");
    };
    for (const auto& c : xi) check_point(c, "xi");
    check_point(eta, "eta");
    VectorField w;
    w.name = std::move(name);
    w.ctx = std::move(ctx);
    w.xi = std::move(xi);
    w.eta = std::move(eta);
    return w;
}

const Expr& ProlongedField::eta_at(const Sym& jet) const {
    if (jet.jet_order() == 0) return base.eta;
    auto it = eta_jet.find(jet);
    if (it == eta_jet.end())
        throw JetOrderError("prolongation of '" + base.name + "' has no coefficient for order " +
                            std::to_string(jet.jet_order()));
    return it->second;
}

Expr total_derivative(const Expr& a, int var) {
    Expr out = pdiff(a, Sym::space_var(var));
    for (const Sym& j : a.jet_symbols())
        out += Expr::symbol(a.context(), j.extended_by(var)) * pdiff(a, j);
    return out;
}

Expr total_derivative(const Expr& a, const std::string& var_name) {
    auto idx = a.context()->independent_index(var_name);
    if (!idx) throw Error("'" + var_name + "' is not an independent variable");
    return total_derivative(a, *idx);
}

Expr divergence(const std::vector<Expr>& phi) {
    if (phi.empty()) throw SizeMismatchError("divergence of an empty potential list");
    const ContextPtr& ctx = phi.front().context();
    if (static_cast<int>(phi.size()) != ctx->n_independent())
        throw SizeMismatchError("potential list has " + std::to_string(phi.size()) +
                                " entries for " + std::to_string(ctx->n_independent()) +
                                " independent variables");
    Expr out = Expr::zero(ctx);
    for (std::size_t i = 0; i < phi.size(); ++i) {
        require_same_context(ctx, phi[i].context());
        out += total_derivative(phi[i], static_cast<int>(i));
    }
    return out;
}

namespace {

// All sorted multi-indices of the given order over n variables.
std::vector<std::vector<int>> multi_indices(int n, int order) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == order) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            rec(i);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

} // namespace

ProlongedField prolong(const VectorField& w, int order) {
    if (order < 1) throw Error("prolongation order must be at least 1");
    const ContextPtr& ctx = w.ctx;
    const int n = ctx->n_independent();

    ProlongedField out;
    out.base = w;
    out.order = order;

    std::vector<Expr> dxi(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Expr());
    // dxi[i*n+k] = D_i(xi_k), reused across indices of every order.
    auto dxi_at = [&](int i, int k) -> Expr& {
        return dxi[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                   static_cast<std::size_t>(k)];
    };

    for (int o = 1; o <= order; ++o) {
        for (const auto& idx : multi_indices(n, o)) {
            Sym target = Sym::jet_var(idx);
            // Split J,i with i the last (largest) entry; any split agrees.
            std::vector<int> parent(idx.begin(), idx.end() - 1);
            int i = idx.back();
            const Expr& eta_parent =
                parent.empty() ? w.eta : out.eta_jet.at(Sym::jet_var(parent));
            Expr value = total_derivative(eta_parent, i);
            for (int k = 0; k < n; ++k) {
                Expr& d = dxi_at(i, k);
                if (!d.valid()) d = total_derivative(w.xi[static_cast<std::size_t>(k)], i);
                Sym uk = Sym::jet_var(parent).extended_by(k);
                value -= Expr::symbol(ctx, uk) * d;
            }
            out.eta_jet.emplace(std::move(target), std::move(value));
        }
    }
    return out;
}

Expr euler_operator(const Expr& a) {
    if (a.jet_order() > 2)
        throw JetOrderError("variational derivative implemented for jet order <= 2, got " +
                            std::to_string(a.jet_order()));
    Expr out = pdiff(a, Sym::dependent());
    for (const Sym& j : a.jet_symbols()) {
        if (j.jet_order() == 0) continue;
        Expr d = pdiff(a, j);
        for (int v : j.jet) d = total_derivative(d, v);
        if (j.jet_order() % 2 == 1)
            out -= d;
        else
            out += d;
    }
    return out;
}

Expr higher_euler_first(const Expr& a, int var) {
    if (a.jet_order() > 2)
        throw JetOrderError("first higher Euler operator implemented for jet order <= 2");
    const ContextPtr& ctx = a.context();
    Expr out = pdiff(a, Sym::jet_var({var}));
    for (int j = 0; j < ctx->n_independent(); ++j) {
        Expr inner = pdiff(a, Sym::jet_var({var, j}));
        if (inner.is_zero()) continue;
        out -= total_derivative(inner, j);
    }
    return out;
}

Expr apply_prolonged(const ProlongedField& wp, const Expr& a) {
    if (a.jet_order() > wp.order)
        throw JetOrderError("expression has jet order " + std::to_string(a.jet_order()) +
                            " but the prolongation stops at " + std::to_string(wp.order));
    const ContextPtr& ctx = wp.base.ctx;
    require_same_context(ctx, a.context());
    Expr out = Expr::zero(ctx);
    for (int i = 0; i < ctx->n_independent(); ++i)
        out += wp.base.xi[static_cast<std::size_t>(i)] * pdiff(a, Sym::space_var(i));
    out += wp.base.eta * pdiff(a, Sym::dependent());
    for (const auto& [j, eta] : wp.eta_jet) out += eta * pdiff(a, j);
    return out;
}

} // namespace noethera
