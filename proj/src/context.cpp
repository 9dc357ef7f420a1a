#include "noethera/context.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace noethera {

namespace {

bool valid_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

} // namespace

ContextPtr Context::make(std::vector<std::string> independent, std::string dependent,
                         std::vector<std::string> parameters) {
    if (independent.empty()) throw SchemaError("at least one independent variable is required", "independent");
    std::set<std::string> seen;
    auto check = [&](const std::string& name, const std::string& field) {
        if (!valid_identifier(name))
            throw SchemaError("invalid identifier '" + name + "'", field);
        if (!seen.insert(name).second)
            throw SchemaError("name '" + name + "' declared more than once", field);
    };
    for (const auto& v : independent) check(v, "independent");
    check(dependent, "dependent");
    for (const auto& p : parameters) check(p, "parameters");

    auto ctx = std::make_shared<Context>();
    ctx->indep_ = std::move(independent);
    ctx->dep_ = std::move(dependent);
    ctx->params_ = std::move(parameters);
    return ctx;
}

std::optional<int> Context::independent_index(const std::string& name) const {
    for (std::size_t i = 0; i < indep_.size(); ++i)
        if (indep_[i] == name) return static_cast<int>(i);
    return std::nullopt;
}

std::optional<int> Context::parameter_index(const std::string& name) const {
    for (std::size_t i = 0; i < params_.size(); ++i)
        if (params_[i] == name) return static_cast<int>(i);
    return std::nullopt;
}

bool Context::single_char_independent() const {
    return std::all_of(indep_.begin(), indep_.end(),
                       [](const std::string& v) { return v.size() == 1; });
}

bool same_context(const ContextPtr& a, const ContextPtr& b) {
    if (a == b) return a != nullptr;
    return a && b && *a == *b;
}

void require_same_context(const ContextPtr& a, const ContextPtr& b) {
    if (!same_context(a, b))
        throw ContextMismatchError("expressions belong to different problem declarations");
}

Sym Sym::jet_var(std::vector<int> idx) {
    std::sort(idx.begin(), idx.end());
    return Sym{Kind::jet, 0, std::move(idx)};
}

Sym Sym::extended_by(int var) const {
    std::vector<int> idx = jet;
    idx.push_back(var);
    return jet_var(std::move(idx));
}

bool operator<(const Sym& a, const Sym& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    if (a.kind == Sym::Kind::jet) {
        if (a.jet.size() != b.jet.size()) return a.jet.size() < b.jet.size();
        return a.jet < b.jet;
    }
    return a.index < b.index;
}

std::string Sym::str(const Context& ctx) const {
    switch (kind) {
    case Kind::space:
        return ctx.independent().at(static_cast<std::size_t>(index));
    case Kind::param:
        return ctx.parameters().at(static_cast<std::size_t>(index));
    case Kind::jet:
        break;
    }
    if (jet.empty()) return ctx.dependent();
    std::ostringstream os;
    if (ctx.single_char_independent()) {
        os << ctx.dependent() << "_";
        for (int i : jet) os << ctx.independent().at(static_cast<std::size_t>(i));
    } else {
        os << "d(" << ctx.dependent();
        for (int i : jet) os << "," << ctx.independent().at(static_cast<std::size_t>(i));
        os << ")";
    }
    return os.str();
}

} // namespace noethera
