#include "noethera/report.hpp"

#include <unistd.h>

#include <cstdlib>
#include <sstream>

namespace noethera {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::vector<std::string> poly_strings(const std::vector<ParamPoly>& ps,
                                      const std::vector<std::string>& params) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(p.str(params));
    return out;
}

std::vector<std::string> rational_strings(const std::vector<Rational>& rs) {
    std::vector<std::string> out;
    for (const auto& r : rs) out.push_back(rational_str(r));
    return out;
}

const char* kReset = "\033[0m";
const char* kGreen = "\033[32m";
const char* kRed = "\033[31m";
const char* kYellow = "\033[33m";

std::string paint(const std::string& s, const char* color, bool enabled) {
    if (!enabled) return s;
    return std::string(color) + s + kReset;
}

std::string status_paint(const std::string& status, bool color) {
    if (status == "variational" || status == "divergence") return paint(status, kGreen, color);
    if (status == "conditional") return paint(status, kYellow, color);
    return paint(status, kRed, color);
}

} // namespace

bool color_enabled() {
    const char* v = std::getenv("NOETHERA_COLOR");
    std::string mode = v ? v : "auto";
    if (mode == "always") return true;
    if (mode == "never") return false;
    return isatty(STDOUT_FILENO) != 0;
}

GeneratorReport describe(const std::string& name, const SymmetryVerdict& verdict,
                         const Context& ctx) {
    GeneratorReport g;
    g.name = name;
    g.status = to_string(verdict.status);
    g.residual = print_expr(verdict.residual);
    if (verdict.conditions) {
        ConditionsReport c;
        c.vanishing = poly_strings(verdict.conditions->vanishing, ctx.parameters());
        c.roots = rational_strings(verdict.conditions->roots);
        c.unsolved = poly_strings(verdict.conditions->unsolved, ctx.parameters());
        c.excluded = rational_strings(verdict.conditions->excluded);
        g.conditions = std::move(c);
    }
    if (verdict.certificate) {
        std::vector<std::string> pots;
        for (const auto& p : verdict.certificate->potentials) pots.push_back(print_expr(p));
        g.potentials = std::move(pots);
    }
    return g;
}

Report run_check(const ProblemSpec& spec, bool allow_conditional, const std::string& source) {
    if (!spec.lagrangian)
        throw SchemaError("this check needs a Lagrangian", "lagrangian");
    Report rep;
    rep.source = source;
    rep.independent = spec.ctx->independent();
    rep.dependent = spec.ctx->dependent();
    rep.parameters = spec.ctx->parameters();
    bool all_ok = true;
    for (const auto& g : spec.generators) {
        SymmetryVerdict v = check_symmetry(*spec.lagrangian, g);
        bool ok = v.status == SymmetryStatus::variational ||
                  v.status == SymmetryStatus::divergence ||
                  (allow_conditional && v.status == SymmetryStatus::conditional);
        all_ok = all_ok && ok;
        rep.generators.push_back(describe(g.name, v, *spec.ctx));
    }
    rep.pass = all_ok;
    rep.exit_code = all_ok ? 0 : 1;
    return rep;
}

Report suite_report(const heisenberg::SuiteReport& suite, const ContextPtr& ctx,
                    const std::string& source) {
    Report rep;
    rep.source = source;
    rep.independent = ctx->independent();
    rep.dependent = ctx->dependent();
    rep.parameters = ctx->parameters();
    for (const auto& r : suite.results) {
        GeneratorReport g = describe(r.name, r.verdict, *ctx);
        g.expected = r.expected;
        g.ok = r.ok;
        if (r.pde_checked) g.pde_admitted = r.pde_admitted;
        rep.generators.push_back(std::move(g));
    }
    rep.pass = suite.pass;
    rep.exit_code = suite.pass ? 0 : 1;
    return rep;
}

ordered_json Report::to_json() const {
    ordered_json j;
    j["problem"] = {{"source", source},
                    {"independent", independent},
                    {"dependent", dependent},
                    {"parameters", parameters}};
    j["generators"] = ordered_json::array();
    for (const auto& g : generators) {
        ordered_json jg;
        jg["name"] = g.name;
        jg["status"] = g.status;
        jg["residual"] = g.residual;
        if (g.conditions) {
            jg["conditions"] = {{"vanishing", g.conditions->vanishing},
                                {"roots", g.conditions->roots},
                                {"unsolved", g.conditions->unsolved},
                                {"excluded", g.conditions->excluded}};
        }
        if (g.potentials) jg["potentials"] = *g.potentials;
        if (g.expected) jg["expected"] = *g.expected;
        if (g.ok) jg["ok"] = *g.ok;
        if (g.pde_admitted) jg["pde_admitted"] = *g.pde_admitted;
        j["generators"].push_back(std::move(jg));
    }
    j["overall"] = {{"pass", pass}, {"exit_code", exit_code}};
    return j;
}

Report Report::from_json(const json& j) {
    Report rep;
    const auto& p = j.at("problem");
    rep.source = p.at("source").get<std::string>();
    rep.independent = p.at("independent").get<std::vector<std::string>>();
    rep.dependent = p.at("dependent").get<std::string>();
    rep.parameters = p.at("parameters").get<std::vector<std::string>>();
    for (const auto& jg : j.at("generators")) {
        GeneratorReport g;
        g.name = jg.at("name").get<std::string>();
        g.status = jg.at("status").get<std::string>();
        g.residual = jg.at("residual").get<std::string>();
        if (jg.contains("conditions")) {
            ConditionsReport c;
            const auto& jc = jg.at("conditions");
            c.vanishing = jc.at("vanishing").get<std::vector<std::string>>();
            c.roots = jc.at("roots").get<std::vector<std::string>>();
            c.unsolved = jc.at("unsolved").get<std::vector<std::string>>();
            c.excluded = jc.at("excluded").get<std::vector<std::string>>();
            g.conditions = std::move(c);
        }
        if (jg.contains("potentials"))
            g.potentials = jg.at("potentials").get<std::vector<std::string>>();
        if (jg.contains("expected")) g.expected = jg.at("expected").get<std::string>();
        if (jg.contains("ok")) g.ok = jg.at("ok").get<bool>();
        if (jg.contains("pde_admitted")) g.pde_admitted = jg.at("pde_admitted").get<bool>();
        rep.generators.push_back(std::move(g));
    }
    rep.pass = j.at("overall").at("pass").get<bool>();
    rep.exit_code = j.at("overall").at("exit_code").get<int>();
    return rep;
}

std::string Report::to_text(bool color) const {
    std::ostringstream os;
    os << "problem: " << source << "\n";
    os << "  variables: ";
    for (std::size_t i = 0; i < independent.size(); ++i)
        os << (i ? ", " : "") << independent[i];
    os << "; dependent: " << dependent;
    if (!parameters.empty()) {
        os << "; parameters: ";
        for (std::size_t i = 0; i < parameters.size(); ++i) os << (i ? ", " : "") << parameters[i];
    }
    os << "\n\n";

    std::size_t width = 4;
    for (const auto& g : generators) width = std::max(width, g.name.size());
    for (const auto& g : generators) {
        os << "  " << g.name << std::string(width - g.name.size() + 2, ' ')
           << status_paint(g.status, color);
        if (g.ok) os << "  [" << paint(*g.ok ? "ok" : "MISMATCH", *g.ok ? kGreen : kRed, color) << "]";
        os << "\n";
        if (g.expected && !(g.ok && *g.ok))
            os << "      expected: " << *g.expected << "\n";
        if (g.status != "variational") os << "      residual: " << g.residual << "\n";
        if (g.potentials) {
            os << "      potentials: (";
            for (std::size_t i = 0; i < g.potentials->size(); ++i)
                os << (i ? ", " : "") << (*g.potentials)[i];
            os << ")\n";
        }
        if (g.conditions) {
            auto join = [](const std::vector<std::string>& v) {
                std::string s;
                for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
                return s;
            };
            if (!g.conditions->roots.empty())
                os << "      zero when parameter in {" << join(g.conditions->roots) << "}\n";
            if (!g.conditions->unsolved.empty())
                os << "      unsolved conditions: " << join(g.conditions->unsolved) << "\n";
            if (!g.conditions->excluded.empty())
                os << "      excluded parameter values: {" << join(g.conditions->excluded)
                   << "}\n";
        }
        if (g.pde_admitted)
            os << "      admitted by the equation: " << (*g.pde_admitted ? "yes" : "no") << "\n";
    }
    os << "\noverall: " << paint(pass ? "PASS" : "FAIL", pass ? kGreen : kRed, color) << "\n";
    return os.str();
}

} // namespace noethera
