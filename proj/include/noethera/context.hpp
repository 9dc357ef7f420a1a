#pragma once

#include "noethera/errors.hpp"

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace noethera {

class Context;
using ContextPtr = std::shared_ptr<const Context>;

// Declarations a problem computes over: ordered independent variables, one
// dependent variable, and the symbolic parameters. Immutable and shared by
// every expression built against it.
class Context {
public:
    static ContextPtr make(std::vector<std::string> independent, std::string dependent,
                           std::vector<std::string> parameters);

    const std::vector<std::string>& independent() const { return indep_; }
    const std::string& dependent() const { return dep_; }
    const std::vector<std::string>& parameters() const { return params_; }

    int n_independent() const { return static_cast<int>(indep_.size()); }
    int n_parameters() const { return static_cast<int>(params_.size()); }

    std::optional<int> independent_index(const std::string& name) const;
    std::optional<int> parameter_index(const std::string& name) const;
    bool is_dependent(const std::string& name) const { return name == dep_; }

    // u_xy shorthand is only unambiguous when every independent variable is
    // a single character.
    bool single_char_independent() const;

    bool operator==(const Context& o) const {
        return indep_ == o.indep_ && dep_ == o.dep_ && params_ == o.params_;
    }

private:
    std::vector<std::string> indep_;
    std::string dep_;
    std::vector<std::string> params_;
};

// True when both pointers refer to equal declarations.
bool same_context(const ContextPtr& a, const ContextPtr& b);
void require_same_context(const ContextPtr& a, const ContextPtr& b);

// A multiplicand in a monomial: an independent variable, a jet variable
// (dependent variable with a derivative multi-index, mixed partials
// identified by keeping the index sorted), or a parameter appearing with a
// symbolic exponent.
struct Sym {
    enum class Kind { space, jet, param };

    Kind kind;
    int index = 0;          // space: variable index; param: parameter index
    std::vector<int> jet;   // jet: sorted independent-variable indices

    static Sym space_var(int i) { return Sym{Kind::space, i, {}}; }
    static Sym jet_var(std::vector<int> idx);
    static Sym dependent() { return Sym{Kind::jet, 0, {}}; }
    static Sym parameter(int i) { return Sym{Kind::param, i, {}}; }

    int jet_order() const { return static_cast<int>(jet.size()); }
    bool is_jet() const { return kind == Kind::jet; }

    // Derivative of this jet variable along one more independent variable.
    Sym extended_by(int var) const;

    friend bool operator==(const Sym& a, const Sym& b) {
        return a.kind == b.kind && a.index == b.index && a.jet == b.jet;
    }
    friend bool operator<(const Sym& a, const Sym& b);

    std::string str(const Context& ctx) const;
};

} // namespace noethera
