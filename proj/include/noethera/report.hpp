#pragma once

#include "noethera/heisenberg.hpp"
#include "noethera/parser.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace noethera {

// Flat, diff-able view of one problem run. Everything is a string so the
// JSON form is exact and stable.
struct ConditionsReport {
    std::vector<std::string> vanishing;
    std::vector<std::string> roots;
    std::vector<std::string> unsolved;
    std::vector<std::string> excluded;
    bool operator==(const ConditionsReport&) const = default;
};

struct GeneratorReport {
    std::string name;
    std::string status;
    std::string residual;
    std::optional<ConditionsReport> conditions;
    std::optional<std::vector<std::string>> potentials;
    std::optional<std::string> expected; // suite runs
    std::optional<bool> ok;              // suite runs
    std::optional<bool> pde_admitted;    // suite runs that exercise the equation
    bool operator==(const GeneratorReport&) const = default;
};

struct Report {
    std::string source;
    std::vector<std::string> independent;
    std::string dependent;
    std::vector<std::string> parameters;
    std::vector<GeneratorReport> generators; // sorted by name
    bool pass = false;
    int exit_code = 1;
    bool operator==(const Report&) const = default;

    nlohmann::ordered_json to_json() const;
    static Report from_json(const nlohmann::json& j);
    std::string to_text(bool color) const;
};

GeneratorReport describe(const std::string& name, const SymmetryVerdict& verdict,
                         const Context& ctx);

// check: every generator must be variational or divergence; conditional
// passes only when allowed.
Report run_check(const ProblemSpec& spec, bool allow_conditional, const std::string& source);

Report suite_report(const heisenberg::SuiteReport& suite, const ContextPtr& ctx,
                    const std::string& source);

// NOETHERA_COLOR={auto|never|always}; auto means "stdout is a tty".
bool color_enabled();

} // namespace noethera
