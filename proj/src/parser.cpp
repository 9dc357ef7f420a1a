#include "noethera/parser.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace noethera {

namespace {

// ---------------------------------------------------------------- lexer --

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, comma, end };

struct Token {
    Tok kind;
    std::string text;
    int pos;
};

std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        int pos = static_cast<int>(i);
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string t;
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) t += src[i++];
            out.push_back({Tok::number, t, pos});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string t;
            while (i < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_'))
                t += src[i++];
            out.push_back({Tok::ident, t, pos});
            continue;
        }
        Tok k;
        switch (c) {
        case '+': k = Tok::plus; break;
        case '-': k = Tok::minus; break;
        case '*': k = Tok::star; break;
        case '/': k = Tok::slash; break;
        case '^': k = Tok::caret; break;
        case '(': k = Tok::lparen; break;
        case ')': k = Tok::rparen; break;
        case ',': k = Tok::comma; break;
        default:
            throw ParseError(std::string("unexpected character '") + c + "'", pos);
        }
        out.push_back({k, std::string(1, c), pos});
        ++i;
    }
    out.push_back({Tok::end, "", static_cast<int>(src.size())});
    return out;
}

// --------------------------------------------------------------- parser --

class Parser {
public:
    Parser(const std::string& src, ContextPtr ctx)
        : tokens_(lex(src)), ctx_(std::move(ctx)) {}

    Expr parse() {
        Expr e = sum();
        expect(Tok::end, "end of input");
        return e;
    }

private:
    std::vector<Token> tokens_;
    std::size_t at_ = 0;
    ContextPtr ctx_;

    const Token& peek() const { return tokens_[at_]; }
    Token next() { return tokens_[at_++]; }
    bool accept(Tok k) {
        if (peek().kind != k) return false;
        ++at_;
        return true;
    }
    void expect(Tok k, const std::string& what) {
        if (!accept(k))
            throw ParseError("expected " + what + ", found '" +
                                 (peek().kind == Tok::end ? "end of input" : peek().text) + "'",
                             peek().pos);
    }

    Expr sum() {
        Expr e = product();
        while (true) {
            if (accept(Tok::plus))
                e += product();
            else if (accept(Tok::minus))
                e -= product();
            else
                return e;
        }
    }

    Expr product() {
        Expr e = unary();
        while (true) {
            if (accept(Tok::star)) {
                e *= unary();
            } else if (peek().kind == Tok::slash) {
                int pos = peek().pos;
                next();
                Expr d = unary();
                auto c = d.coefficient_value();
                if (!c)
                    throw ParseError("division only by parameter polynomials or rational literals",
                                     pos);
                if (c->is_zero()) throw ParseError("division by zero", pos);
                e *= Expr::coefficient(ctx_, c->inverse());
            } else {
                return e;
            }
        }
    }

    Expr unary() {
        if (accept(Tok::minus)) return -unary();
        if (accept(Tok::plus)) return unary();
        return power();
    }

    Expr power() {
        Expr base = primary();
        if (!accept(Tok::caret)) return base;
        int pos = peek().pos;
        Expr e = exponent_operand();
        return pow(base, to_affine(e, pos));
    }

    // Exponents are unary-prefixed primaries, right-associative: u^-2,
    // u^(p+1), x^2^3 == x^(2^3).
    Expr exponent_operand() {
        if (accept(Tok::minus)) return -exponent_operand();
        if (accept(Tok::plus)) return exponent_operand();
        Expr base = primary();
        if (!accept(Tok::caret)) return base;
        int pos = peek().pos;
        Expr e = exponent_operand();
        return pow(base, to_affine(e, pos));
    }

    AffineExp to_affine(const Expr& e, int pos) {
        auto c = e.coefficient_value();
        if (!c) throw ParseError("exponent contains variables", pos);
        auto dc = c->denominator().constant_value();
        if (!c->denominator().is_constant() || c->numerator().total_degree() > 1)
            throw ParseError("exponent is not affine in the parameters", pos);
        AffineExp out(Rational(0));
        Rational d(dc);
        for (const auto& [m, coef] : c->numerator().terms()) {
            if (m.empty())
                out = out + AffineExp(Rational(coef) / d);
            else
                out = out + AffineExp::parameter(m[0].first, Rational(coef) / d);
        }
        return out;
    }

    Expr primary() {
        const Token& t = peek();
        switch (t.kind) {
        case Tok::number: {
            next();
            return Expr::constant(ctx_, Rational(BigInt(t.text)));
        }
        case Tok::lparen: {
            next();
            Expr e = sum();
            expect(Tok::rparen, "')'");
            return e;
        }
        case Tok::ident:
            return identifier();
        default:
            throw ParseError("expected a number, name or '('", t.pos);
        }
    }

    Expr identifier() {
        Token t = next();
        // d(u, x, y): explicit derivative form, required once any
        // independent variable has a multi-character name.
        if (t.text == "d" && peek().kind == Tok::lparen) return derivative_form(t.pos);

        if (auto i = ctx_->independent_index(t.text)) return Expr::space_var(ctx_, t.text);
        if (ctx_->is_dependent(t.text)) return Expr::dependent_var(ctx_);
        if (ctx_->parameter_index(t.text)) return Expr::parameter(ctx_, t.text);

        // u_xy shorthand.
        const std::string& dep = ctx_->dependent();
        if (ctx_->single_char_independent() && t.text.size() > dep.size() + 1 &&
            t.text.compare(0, dep.size(), dep) == 0 && t.text[dep.size()] == '_') {
            std::vector<int> idx;
            for (std::size_t k = dep.size() + 1; k < t.text.size(); ++k) {
                auto i = ctx_->independent_index(std::string(1, t.text[k]));
                if (!i)
                    throw ParseError("'" + std::string(1, t.text[k]) +
                                         "' in derivative suffix is not an independent variable",
                                     t.pos);
                idx.push_back(*i);
            }
            return Expr::symbol(ctx_, Sym::jet_var(std::move(idx)));
        }
        throw ParseError("undeclared identifier '" + t.text + "'", t.pos);
    }

    Expr derivative_form(int pos) {
        expect(Tok::lparen, "'('");
        Token dep = next();
        if (dep.kind != Tok::ident || !ctx_->is_dependent(dep.text))
            throw ParseError("d(...) must start with the dependent variable", dep.pos);
        std::vector<int> idx;
        while (accept(Tok::comma)) {
            Token v = next();
            if (v.kind != Tok::ident)
                throw ParseError("expected an independent variable name", v.pos);
            auto i = ctx_->independent_index(v.text);
            if (!i)
                throw ParseError("'" + v.text + "' is not an independent variable", v.pos);
            idx.push_back(*i);
        }
        expect(Tok::rparen, "')'");
        if (idx.empty())
            throw ParseError("d(...) needs at least one differentiation variable", pos);
        return Expr::symbol(ctx_, Sym::jet_var(std::move(idx)));
    }
};

// -------------------------------------------------------------- printer --

bool needs_parens(const ParamPoly& p) { return p.terms().size() > 1; }

std::string coefficient_str(const ParamRational& c, const std::vector<std::string>& params) {
    const ParamPoly& n = c.numerator();
    const ParamPoly& d = c.denominator();
    std::string ns = needs_parens(n) ? "(" + n.str(params) + ")" : n.str(params);
    if (d.is_one()) return ns;
    std::string ds = d.str(params);
    bool datom = d.is_constant() && d.constant_value() > 0;
    return ns + "/" + (datom ? ds : "(" + ds + ")");
}

// An exponent prints bare when it is a nonnegative integer or a single
// parameter; everything else gets parentheses.
std::string exponent_str(const AffineExp& e, const std::vector<std::string>& params) {
    std::string body = e.str(params);
    bool atom = false;
    if (e.is_integer_constant() && e.constant() >= 0)
        atom = true;
    else if (e.constant() == 0 && e.slopes().size() == 1 && e.slopes().begin()->second == 1)
        atom = true;
    return atom ? body : "(" + body + ")";
}

} // namespace

Expr parse_expr(const std::string& src, const ContextPtr& ctx) {
    return Parser(src, ctx).parse();
}

std::string print_expr(const Expr& a) {
    if (!a.valid()) return "<invalid>";
    if (a.is_zero()) return "0";
    const Context& ctx = *a.context();
    const auto& params = ctx.parameters();

    std::ostringstream os;
    bool first = true;
    for (const auto& [pw, c] : a.terms()) {
        ParamRational coef = c;
        bool negative = coef.is_negative_leading();
        if (negative) coef = -coef;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;

        std::string cs = coefficient_str(coef, params);
        bool unit_coef = coef.is_one();
        if (pw.empty()) {
            os << cs;
            continue;
        }
        bool lead = true;
        if (!unit_coef) {
            os << cs;
            lead = false;
        }
        for (const auto& [s, e] : pw) {
            if (!lead) os << "*";
            lead = false;
            os << s.str(ctx);
            if (!(e.is_integer_constant() && e.constant() == 1))
                os << "^" << exponent_str(e, params);
        }
    }
    return os.str();
}

// ------------------------------------------------------------- problems --

namespace {

using nlohmann::json;

std::string string_field(const json& j, const std::string& path, const std::string& key) {
    if (!j.contains(key)) throw SchemaError("missing field", path + "." + key);
    if (!j.at(key).is_string()) throw SchemaError("expected a string", path + "." + key);
    return j.at(key).get<std::string>();
}

std::vector<std::string> string_list(const json& j, const std::string& path,
                                     const std::string& key, bool required) {
    if (!j.contains(key)) {
        if (required) throw SchemaError("missing field", path + "." + key);
        return {};
    }
    if (!j.at(key).is_array()) throw SchemaError("expected an array of strings", path + "." + key);
    std::vector<std::string> out;
    for (const auto& v : j.at(key)) {
        if (!v.is_string()) throw SchemaError("expected a string", path + "." + key);
        out.push_back(v.get<std::string>());
    }
    return out;
}

Expr parse_field(const std::string& text, const ContextPtr& ctx, const std::string& path) {
    try {
        return parse_expr(text, ctx);
    } catch (const ParseError& e) {
        throw SchemaError(std::string(e.what()), path);
    }
}

} // namespace

ProblemSpec load_problem_text(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw SchemaError("problem document must be a JSON object");

    ProblemSpec spec;
    spec.ctx = Context::make(string_list(doc, "", "independent", true),
                             string_field(doc, "", "dependent"),
                             string_list(doc, "", "parameters", false));

    if (doc.contains("lagrangian"))
        spec.lagrangian = parse_field(string_field(doc, "", "lagrangian"), spec.ctx, "lagrangian");
    if (doc.contains("equation"))
        spec.equation = parse_field(string_field(doc, "", "equation"), spec.ctx, "equation");
    if (!spec.lagrangian && !spec.equation)
        throw SchemaError("at least one of 'lagrangian' or 'equation' is required");

    if (!doc.contains("generators") || !doc.at("generators").is_array())
        throw SchemaError("expected an array", "generators");
    std::size_t gi = 0;
    for (const auto& g : doc.at("generators")) {
        std::string path = "generators[" + std::to_string(gi++) + "]";
        if (!g.is_object()) throw SchemaError("expected an object", path);
        std::string name = string_field(g, path, "name");
        if (!g.contains("xi") || !g.at("xi").is_object())
            throw SchemaError("expected an object mapping variable -> expression", path + ".xi");
        std::vector<Expr> xi;
        for (const auto& v : spec.ctx->independent()) {
            if (!g.at("xi").contains(v))
                throw SchemaError("missing entry for independent variable '" + v + "'",
                                  path + ".xi");
            xi.push_back(parse_field(g.at("xi").at(v).get<std::string>(), spec.ctx,
                                     path + ".xi." + v));
        }
        for (auto it = g.at("xi").begin(); it != g.at("xi").end(); ++it)
            if (!spec.ctx->independent_index(it.key()))
                throw SchemaError("undeclared variable '" + it.key() + "'", path + ".xi");
        Expr eta = parse_field(string_field(g, path, "eta"), spec.ctx, path + ".eta");
        try {
            spec.generators.push_back(VectorField::make(name, spec.ctx, std::move(xi), eta));
        } catch (const Error& e) {
            throw SchemaError(e.what(), path);
        }
    }
    std::sort(spec.generators.begin(), spec.generators.end(),
              [](const VectorField& a, const VectorField& b) { return a.name < b.name; });
    for (std::size_t i = 1; i < spec.generators.size(); ++i)
        if (spec.generators[i].name == spec.generators[i - 1].name)
            throw SchemaError("duplicate generator name '" + spec.generators[i].name + "'",
                              "generators");
    return spec;
}

ProblemSpec load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open problem file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_problem_text(buf.str());
}

const VectorField& ProblemSpec::generator(const std::string& name) const {
    for (const auto& g : generators)
        if (g.name == name) return g;
    throw Error("no generator named '" + name + "'");
}

bool ProblemSpec::operator==(const ProblemSpec& o) const {
    if (!same_context(ctx, o.ctx) || lagrangian != o.lagrangian || equation != o.equation ||
        generators.size() != o.generators.size())
        return false;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (generators[i].name != o.generators[i].name || generators[i].xi != o.generators[i].xi ||
            generators[i].eta != o.generators[i].eta)
            return false;
    }
    return true;
}

} // namespace noethera
