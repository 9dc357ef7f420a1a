#include "noethera/heisenberg.hpp"
#include "noethera/noether.hpp"
#include "noethera/parser.hpp"
#include "noethera/report.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace noethera;

struct FormatOpt {
    std::string value = "text";
};

void add_format(CLI::App* cmd, FormatOpt& fmt) {
    cmd->add_option("--format", fmt.value, "Report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->multi_option_policy(CLI::MultiOptionPolicy::Throw);
}

void emit(const Report& rep, const FormatOpt& fmt) {
    if (fmt.value == "json")
        std::cout << rep.to_json().dump(2) << "\n";
    else
        std::cout << rep.to_text(color_enabled());
}

// Parses a --solved spec like "u_xx" or "d(u,x1,x1)" down to the jet symbol.
Sym parse_solved(const std::string& text, const ContextPtr& ctx) {
    Expr e = parse_expr(text, ctx);
    if (e.terms().size() == 1 && e.terms().begin()->second.is_one()) {
        const auto& pw = e.terms().begin()->first;
        if (pw.size() == 1 && pw.begin()->first.is_jet() &&
            pw.begin()->second == AffineExp(1))
            return pw.begin()->first;
    }
    throw CannotSolveError("--solved must name a single jet variable");
}

int cmd_check(const std::string& file, bool allow_conditional, const FormatOpt& fmt) {
    ProblemSpec spec = load_problem(file);
    Report rep = run_check(spec, allow_conditional, file);
    emit(rep, fmt);
    return rep.exit_code;
}

int cmd_heisenberg(int n, const std::string& p, const std::string& suite, const FormatOpt& fmt) {
    if (n < 1) throw SchemaError("--n must be a positive integer");
    bool want1 = suite == "theorem1" || suite == "both";
    bool want2 = suite == "theorem2" || suite == "both";
    if (want1 && p != "symbolic")
        throw SchemaError("the theorem1 suite studies the symbolic exponent; drop --p");
    if (want2 && n != 1)
        throw SchemaError("the theorem2 suite needs --n 1: the full generator catalog is "
                          "available only on the first Heisenberg group");
    if (want2 && !(p == "symbolic" || p == "3"))
        throw SchemaError("the theorem2 suite runs at the critical exponent 3");

    std::vector<Report> reports;
    if (want1) {
        auto s = heisenberg::theorem1_suite(n);
        auto prob = heisenberg::build(n, heisenberg::symbolic_exponent());
        reports.push_back(suite_report(s, prob.ctx,
                                       "heisenberg n=" + std::to_string(n) + " suite=theorem1"));
    }
    if (want2) {
        auto s = heisenberg::theorem2_suite();
        auto prob = heisenberg::build(1, Rational(3));
        reports.push_back(suite_report(s, prob.ctx, "heisenberg n=1 suite=theorem2"));
    }

    if (fmt.value == "json") {
        nlohmann::ordered_json out = nlohmann::ordered_json::array();
        for (const auto& r : reports) out.push_back(r.to_json());
        std::cout << (reports.size() == 1 ? reports[0].to_json() : out).dump(2) << "\n";
    } else {
        for (const auto& r : reports) std::cout << r.to_text(color_enabled()) << "\n";
    }
    for (const auto& r : reports)
        if (!r.pass) return 1;
    return 0;
}

Expr problem_equation(const ProblemSpec& spec) {
    if (spec.equation) return *spec.equation;
    return -euler_operator(*spec.lagrangian);
}

int cmd_tools_prolong(const ProblemSpec& spec, const std::string& gen, int order) {
    const VectorField& w = spec.generator(gen);
    ProlongedField wp = prolong(w, order);
    const Context& ctx = *spec.ctx;
    for (int i = 0; i < ctx.n_independent(); ++i)
        std::cout << "xi[" << ctx.independent()[static_cast<std::size_t>(i)]
                  << "] = " << print_expr(w.xi[static_cast<std::size_t>(i)]) << "\n";
    std::cout << "eta = " << print_expr(w.eta) << "\n";
    for (const auto& [j, e] : wp.eta_jet)
        std::cout << "eta[" << j.str(ctx) << "] = " << print_expr(e) << "\n";
    return 0;
}

int cmd_tools_homotopy(const ProblemSpec& spec, const std::string& expr_text) {
    Expr r = parse_expr(expr_text, spec.ctx);
    DivergenceCertificate cert = homotopy_potentials(r);
    const Context& ctx = *spec.ctx;
    for (std::size_t i = 0; i < cert.potentials.size(); ++i)
        std::cout << "phi[" << ctx.independent()[i] << "] = " << print_expr(cert.potentials[i])
                  << "\n";
    if (!cert.excluded.empty()) {
        std::cout << "excluded parameter values:";
        for (const auto& v : cert.excluded) std::cout << " " << rational_str(v);
        std::cout << "\n";
    }
    return 0;
}

int cmd_tools_divergence(const ProblemSpec& spec, const std::vector<std::string>& exprs) {
    std::vector<Expr> phi;
    for (const auto& s : exprs) phi.push_back(parse_expr(s, spec.ctx));
    std::cout << print_expr(divergence(phi)) << "\n";
    return 0;
}

int cmd_tools_euler(const ProblemSpec& spec) {
    if (!spec.lagrangian) throw SchemaError("the problem file declares no Lagrangian", "lagrangian");
    std::cout << print_expr(euler_operator(*spec.lagrangian)) << "\n";
    return 0;
}

int cmd_tools_pde(const ProblemSpec& spec, const std::string& gen, const std::string& solved) {
    Expr eq = problem_equation(spec);
    Sym sv = solved.empty() ? default_solved_variable(eq) : parse_solved(solved, spec.ctx);
    PdeAdmittance res = check_pde_symmetry_report(eq, spec.generator(gen), sv);
    std::cout << "admitted: " << (res.admitted ? "yes" : "no") << "\n";
    if (!res.admitted) {
        std::cout << "on-shell residual: " << print_expr(res.onshell_residual) << "\n";
        if (res.conditions.conditionally_zero() && !res.conditions.roots.empty()) {
            std::cout << "vanishes at parameter values:";
            for (const auto& r : res.conditions.roots) std::cout << " " << rational_str(r);
            std::cout << "\n";
        }
    }
    return res.admitted ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"noethera: variational and divergence symmetry analysis, exactly"};
    app.require_subcommand(1);

    // check
    auto* check = app.add_subcommand("check", "Classify every generator of a problem file");
    std::string check_file;
    bool allow_conditional = false;
    FormatOpt check_fmt;
    check->add_option("file", check_file, "Problem file (JSON)")->required();
    check->add_flag("--allow-conditional", allow_conditional,
                    "Count conditional verdicts as passing");
    add_format(check, check_fmt);

    // heisenberg
    auto* heis = app.add_subcommand("heisenberg", "Built-in Kohn-Laplace suites on H^n");
    int n = 1;
    std::string p = "symbolic";
    std::string suite = "both";
    FormatOpt heis_fmt;
    heis->add_option("--n", n, "Group index (H^n)")
        ->multi_option_policy(CLI::MultiOptionPolicy::Throw);
    heis->add_option("--p", p, "Exponent: 'symbolic' or a rational")
        ->multi_option_policy(CLI::MultiOptionPolicy::Throw);
    heis->add_option("--suite", suite, "theorem1, theorem2 or both")
        ->check(CLI::IsMember({"theorem1", "theorem2", "both"}))
        ->multi_option_policy(CLI::MultiOptionPolicy::Throw);
    add_format(heis, heis_fmt);

    // tools
    auto* tools = app.add_subcommand("tools", "One-off jet-calculus utilities");
    tools->require_subcommand(1);
    std::string t_problem, t_gen, t_expr, t_solved;
    std::vector<std::string> t_exprs;
    int t_order = 1;

    auto add_problem = [&](CLI::App* cmd) {
        cmd->add_option("--problem,--file", t_problem, "Problem file (JSON)")->required();
    };
    auto* tp = tools->add_subcommand("prolong", "Prolong a generator to a given order");
    add_problem(tp);
    tp->add_option("--gen", t_gen, "Generator name")->required();
    tp->add_option("--order", t_order, "Prolongation order")->check(CLI::PositiveNumber);

    auto* te = tools->add_subcommand("euler-lagrange",
                                     "Variational derivative of the problem's Lagrangian");
    add_problem(te);

    auto* td = tools->add_subcommand("divergence", "Total divergence of a potential list");
    add_problem(td);
    td->add_option("--expr", t_exprs, "One potential per independent variable")->required();

    auto* th = tools->add_subcommand("homotopy", "Potentials for a total-divergence residual");
    add_problem(th);
    th->add_option("--expr", t_expr, "Residual expression")->required();

    auto* ts = tools->add_subcommand("pde-symmetry", "Is the generator admitted by the equation?");
    add_problem(ts);
    ts->add_option("--gen", t_gen, "Generator name")->required();
    ts->add_option("--solved", t_solved, "Second-order jet variable to solve for");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (check->parsed()) return cmd_check(check_file, allow_conditional, check_fmt);
        if (heis->parsed()) return cmd_heisenberg(n, p, suite, heis_fmt);
        ProblemSpec spec = load_problem(t_problem);
        if (tp->parsed()) return cmd_tools_prolong(spec, t_gen, t_order);
        if (te->parsed()) return cmd_tools_euler(spec);
        if (td->parsed()) return cmd_tools_divergence(spec, t_exprs);
        if (th->parsed()) return cmd_tools_homotopy(spec, t_expr);
        if (ts->parsed()) return cmd_tools_pde(spec, t_gen, t_solved);
    } catch (const SchemaError& e) {
        std::cerr << "error: " << e.what();
        if (!e.field.empty()) std::cerr << " (at " << e.field << ")";
        std::cerr << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what();
        if (e.position >= 0) std::cerr << " (column " << e.position + 1 << ")";
        std::cerr << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
