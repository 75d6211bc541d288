#include "nalg/parser.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <sstream>

namespace nalg {

std::string Identity::render() const
{
    auto namer = [this](Gen g) -> std::string {
        std::size_t i = static_cast<std::size_t>(g) - 1;
        return i < variables.size() ? variables[i] : "v" + std::to_string(g);
    };
    std::string s = poly.render(namer) + " = 0";
    if (!name.empty())
        s = name + ": " + s;
    return s;
}

bool compute_multilinear(const Polynomial& poly, int variable_count)
{
    for (const auto& [m, c] : poly.terms()) {
        std::vector<int> seen(static_cast<std::size_t>(variable_count), 0);
        for (auto s : m.code()) {
            if (s == 0)
                continue;
            if (s > variable_count)
                return false;
            ++seen[static_cast<std::size_t>(s) - 1];
        }
        for (int n : seen)
            if (n != 1)
                return false;
    }
    return true;
}

namespace {

enum class Tok {
    ident,
    integer,
    lparen,
    rparen,
    lbracket,
    rbracket,
    lbrace,
    rbrace,
    comma,
    star,
    plus,
    minus,
    equals,
    slash,
    semicolon,
    end
};

struct Token {
    Tok kind;
    std::string text;
    int line = 1, col = 1;
};

class Lexer {
  public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }
    Token take()
    {
        Token t = tok_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& msg, const Token& at) const
    {
        std::ostringstream os;
        os << "syntax error at " << at.line << ":" << at.col << ": " << msg;
        throw Error(os.str());
    }

  private:
    void advance()
    {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n')
                    ++pos_;
                continue;
            }
            if (c == '\n') {
                ++line_;
                col_ = 1;
                ++pos_;
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++col_;
                ++pos_;
                continue;
            }
            break;
        }
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= text_.size()) {
            tok_ = {Tok::end, "", line_, col_};
            return;
        }
        char c = text_[pos_];
        auto single = [&](Tok k) {
            tok_ = {k, std::string(1, c), line_, col_};
            ++pos_;
            ++col_;
        };
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            tok_ = {Tok::ident, text_.substr(start, pos_ - start), line_, col_};
            col_ += static_cast<int>(pos_ - start);
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            tok_ = {Tok::integer, text_.substr(start, pos_ - start), line_, col_};
            col_ += static_cast<int>(pos_ - start);
            return;
        }
        switch (c) {
        case '(': single(Tok::lparen); return;
        case ')': single(Tok::rparen); return;
        case '[': single(Tok::lbracket); return;
        case ']': single(Tok::rbracket); return;
        case '{': single(Tok::lbrace); return;
        case '}': single(Tok::rbrace); return;
        case ',': single(Tok::comma); return;
        case '*': single(Tok::star); return;
        case '+': single(Tok::plus); return;
        case '-': single(Tok::minus); return;
        case '=': single(Tok::equals); return;
        case '/': single(Tok::slash); return;
        case ';': single(Tok::semicolon); return;
        default: {
            Token bad{Tok::end, std::string(1, c), line_, col_};
            fail("unknown symbol '" + std::string(1, c) + "'", bad);
        }
        }
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

class ExprParser {
  public:
    ExprParser(Lexer& lx, ParseContext& ctx) : lx_(lx), ctx_(ctx) {}

    Polynomial expr()
    {
        Polynomial out;
        Rat sign(1);
        if (lx_.peek().kind == Tok::plus)
            lx_.take();
        else if (lx_.peek().kind == Tok::minus) {
            lx_.take();
            sign = -1;
        }
        out += sign * term();
        while (lx_.peek().kind == Tok::plus || lx_.peek().kind == Tok::minus) {
            sign = lx_.take().kind == Tok::plus ? 1 : -1;
            out += sign * term();
        }
        return out;
    }

  private:
    Polynomial term()
    {
        Rat coef(1);
        bool have_coef = false;
        if (lx_.peek().kind == Tok::integer) {
            Token num = lx_.take();
            Int n(num.text);
            Int d(1);
            if (lx_.peek().kind == Tok::slash) {
                lx_.take();
                Token den = lx_.peek();
                if (den.kind != Tok::integer)
                    lx_.fail("expected denominator", den);
                lx_.take();
                d = Int(den.text);
                if (d == 0)
                    lx_.fail("zero denominator", den);
            }
            coef = Rat(n, d);
            coef.canonicalize();
            have_coef = true;
            if (lx_.peek().kind == Tok::star)
                lx_.take();
            if (!starts_primary(lx_.peek().kind)) {
                if (coef != 0)
                    lx_.fail("constant terms are not elements of the free algebra", num);
                return Polynomial::zero();
            }
        }
        Polynomial p = primary();
        if (lx_.peek().kind == Tok::star) {
            Token star = lx_.take();
            Polynomial q = primary();
            if (lx_.peek().kind == Tok::star)
                lx_.fail("unparenthesized product of three factors (the product is "
                         "nonassociative; add parentheses)",
                         lx_.peek());
            p = p * q;
            (void)star;
        }
        return have_coef ? coef * p : p;
    }

    static bool starts_primary(Tok k)
    {
        return k == Tok::ident || k == Tok::lparen || k == Tok::lbracket || k == Tok::lbrace;
    }

    Polynomial primary()
    {
        Token t = lx_.peek();
        switch (t.kind) {
        case Tok::ident: {
            lx_.take();
            if (t.text == "J" && lx_.peek().kind == Tok::lparen)
                return jacobian();
            return Polynomial(Monomial::leaf(variable(t.text)));
        }
        case Tok::lparen: {
            lx_.take();
            Polynomial a = expr();
            Token next = lx_.peek();
            if (next.kind == Tok::rparen) {
                lx_.take();
                return a;
            }
            if (next.kind == Tok::comma) {
                lx_.take();
                Polynomial b = expr();
                expect(Tok::comma, "associator takes exactly 3 arguments");
                Polynomial c = expr();
                expect(Tok::rparen, "associator takes exactly 3 arguments");
                return (a * b) * c - a * (b * c);
            }
            lx_.fail("expected ')' or ','", next);
        }
        case Tok::lbracket: {
            lx_.take();
            Polynomial a = expr();
            expect(Tok::comma, "commutator takes exactly 2 arguments");
            Polynomial b = expr();
            expect(Tok::rbracket, "commutator takes exactly 2 arguments");
            if (ctx_.mode == SugarMode::bracket_as_product)
                return a * b;
            return a * b - b * a;
        }
        case Tok::lbrace: {
            lx_.take();
            Polynomial a = expr();
            expect(Tok::comma, "anti-commutator takes exactly 2 arguments");
            Polynomial b = expr();
            expect(Tok::rbrace, "anti-commutator takes exactly 2 arguments");
            if (ctx_.mode == SugarMode::bracket_as_product)
                return a * b;
            return a * b + b * a;
        }
        default:
            lx_.fail("expected a variable, bracket or parenthesized product", t);
        }
    }

    Polynomial jacobian()
    {
        expect(Tok::lparen, "J takes exactly 3 arguments");
        Polynomial a = expr();
        expect(Tok::comma, "J takes exactly 3 arguments");
        Polynomial b = expr();
        expect(Tok::comma, "J takes exactly 3 arguments");
        Polynomial c = expr();
        expect(Tok::rparen, "J takes exactly 3 arguments");
        if (ctx_.mode == SugarMode::bracket_as_product)
            return (a * b) * c + (b * c) * a + (c * a) * b;
        auto br = [](const Polynomial& x, const Polynomial& y) { return x * y - y * x; };
        return br(br(a, b), c) + br(br(b, c), a) + br(br(c, a), b);
    }

    void expect(Tok k, const std::string& msg)
    {
        if (lx_.peek().kind != k)
            lx_.fail(msg, lx_.peek());
        lx_.take();
    }

    Gen variable(const std::string& name)
    {
        for (std::size_t i = 0; i < ctx_.variables.size(); ++i)
            if (ctx_.variables[i] == name)
                return static_cast<Gen>(i + 1);
        ctx_.variables.push_back(name);
        return static_cast<Gen>(ctx_.variables.size());
    }

    Lexer& lx_;
    ParseContext& ctx_;
};

Identity parse_identity_tokens(Lexer& lx, SugarMode mode, const std::string& name)
{
    ParseContext ctx;
    ctx.mode = mode;
    ExprParser p(lx, ctx);
    Polynomial lhs = p.expr();
    if (lx.peek().kind != Tok::equals)
        lx.fail("expected '=' between the two sides of an identity", lx.peek());
    lx.take();
    Polynomial rhs = p.expr();
    Identity id;
    id.name = name;
    id.variables = ctx.variables;
    id.poly = lhs - rhs;
    id.multilinear = compute_multilinear(id.poly, id.variable_count());
    return id;
}

} // namespace

Polynomial parse_expression(const std::string& text, ParseContext& ctx)
{
    Lexer lx(text);
    ExprParser p(lx, ctx);
    Polynomial out = p.expr();
    if (lx.peek().kind != Tok::end)
        lx.fail("trailing input after expression", lx.peek());
    return out;
}

Polynomial parse_expression(const std::string& text, SugarMode mode)
{
    ParseContext ctx;
    ctx.mode = mode;
    return parse_expression(text, ctx);
}

Identity parse_identity(const std::string& text, SugarMode mode, const std::string& name)
{
    Lexer lx(text);
    Identity id = parse_identity_tokens(lx, mode, name);
    if (lx.peek().kind != Tok::end)
        lx.fail("trailing input after identity", lx.peek());
    return id;
}

std::vector<VarietyDef> parse_variety_file(const std::string& text)
{
    Lexer lx(text);
    std::vector<VarietyDef> out;
    while (lx.peek().kind != Tok::end) {
        Token kw = lx.peek();
        if (kw.kind != Tok::ident || kw.text != "variety")
            lx.fail("expected 'variety'", kw);
        lx.take();
        // Names may contain '-' (e.g. binary-perm): joined ident/int runs.
        Token first = lx.peek();
        if (first.kind != Tok::ident)
            lx.fail("expected variety name", first);
        std::string name = lx.take().text;
        while (lx.peek().kind == Tok::minus) {
            lx.take();
            Token part = lx.peek();
            if (part.kind != Tok::ident && part.kind != Tok::integer)
                lx.fail("expected name continuation after '-'", part);
            name += "-" + lx.take().text;
        }
        for (const auto& d : out)
            if (d.name == name)
                lx.fail("duplicate variety name '" + name + "'", first);
        if (lx.peek().kind != Tok::lbrace)
            lx.fail("expected '{'", lx.peek());
        lx.take();
        VarietyDef def;
        def.name = name;
        if (lx.peek().kind == Tok::ident && lx.peek().text == "free") {
            lx.take();
            if (lx.peek().kind != Tok::rbrace)
                lx.fail("expected '}' after 'free'", lx.peek());
            lx.take();
        } else {
            if (lx.peek().kind == Tok::rbrace)
                lx.fail("empty identity body: write 'free' for the free magma", lx.peek());
            while (lx.peek().kind != Tok::rbrace) {
                Identity id = parse_identity_tokens(
                    lx, SugarMode::expand,
                    name + "." + std::to_string(def.identities.size() + 1));
                if (lx.peek().kind != Tok::semicolon)
                    lx.fail("expected ';' after identity", lx.peek());
                lx.take();
                def.identities.push_back(std::move(id));
            }
            lx.take();
        }
        out.push_back(std::move(def));
    }
    if (out.empty())
        throw Error("variety file declares no varieties");
    return out;
}

const std::string& builtin_registry_text()
{
    static const std::string text = R"(# Built-in variety registry.
# Each block defines a variety of nonassociative algebras by identities
# over the single binary product '*'; 'free' means no identities.

variety magma { free }

variety associative {
    (a*b)*c = a*(b*c);
}

variety commutative-magma {
    a*b = b*a;
}

variety anticommutative-magma {
    a*b = -(b*a);
}

variety lie {
    a*b = -(b*a);
    (a*b)*c + (b*c)*a + (c*a)*b = 0;
}

variety metabelian-lie {
    a*b = -(b*a);
    (a*b)*c + (b*c)*a + (c*a)*b = 0;
    (a*b)*(c*d) = 0;
}

variety perm {
    (a*b)*c = a*(b*c);
    (a*b)*c = (a*c)*b;
}

variety alternative {
    (a,b,c) + (a,c,b) = 0;
    (a,b,c) + (b,a,c) = 0;
}

variety binary-perm {
    (a,b,c) + (a,c,b) = 0;
    (a,b,c) + (b,a,c) = 0;
    (a*b)*c + (c*b)*a = (a*c)*b + (c*a)*b;
}

variety nap {
    (a*b)*c = (a*c)*b;
}

variety pre-lie {
    (a,b,c) = (b,a,c);
}

variety novikov {
    (a,b,c) = (b,a,c);
    (a*b)*c = (a*c)*b;
}

# The product of a Malcev algebra is the bracket itself, so the defining
# identity J(a,b,[a,c]) = [J(a,b,c),a] is written out in '*' directly.
variety malcev {
    a*b = -(b*a);
    (a*b)*(a*c) + (b*(a*c))*a + ((a*c)*a)*b
        = ((a*b)*c)*a + ((b*c)*a)*a + ((c*a)*b)*a;
}

variety jordan {
    a*b = b*a;
    ((a*a)*b)*a = (a*a)*(b*a);
}
)";
    return text;
}

const std::vector<VarietyDef>& builtin_varieties()
{
    static const std::vector<VarietyDef> defs = parse_variety_file(builtin_registry_text());
    return defs;
}

const VarietyDef& builtin_variety(const std::string& name)
{
    for (const auto& d : builtin_varieties())
        if (d.name == name)
            return d;
    throw Error("unknown variety '" + name + "'");
}

const std::vector<NamedIdentity>& builtin_identities()
{
    static const std::vector<NamedIdentity> ids = {
        {"anticom", {"[a,b] = -[b,a]"}},
        {"comm", {"{a,b} = {b,a}"}},
        {"jacobi", {"J(a,b,c) = 0"}},
        {"metabelian-law", {"[[a,b],[c,d]] = 0"}},
        // The metabelian Lie laws on top of anti-commutativity.
        {"metabelian", {"J(a,b,c) = 0", "[[a,b],[c,d]] = 0"}},
        {"c1",
         {"[[a,b],[c,d]] = [a,[[d,b],c]] + [d,[[b,c],a]] + [b,[[c,a],d]] + [c,[[a,d],b]]"}},
        {"c2", {"[[[a,d],c],b] = [[[a,d],b],c] + [[[a,b],d],c] - [[[a,b],c],d]"}},
        {"c3", {"[[[[a,b],c],d],e] = [[[[a,b],d],c],e]",
                "[[[[a,b],c],d],e] = [[[[a,b],c],e],d]"}},
        {"c4", {"[[J(a,b,c),d],e] = 0"}},
        {"malcev", {"J(a,b,[a,c]) = [J(a,b,c),a]"}},
        {"jordan", {"{{{a,a},b},a} = {{a,a},{b,a}}"}},
        {"square-exchange", {"{{a,b},{c,d}} = {{a,d},{b,c}}"}},
    };
    return ids;
}

std::vector<Identity> resolve_identity_name(const std::string& name, SugarMode mode)
{
    for (const auto& ni : builtin_identities()) {
        if (ni.name != name)
            continue;
        std::vector<Identity> out;
        for (std::size_t i = 0; i < ni.texts.size(); ++i) {
            std::string label = ni.texts.size() == 1 ? ni.name
                                                     : ni.name + "." + std::to_string(i + 1);
            out.push_back(parse_identity(ni.texts[i], mode, label));
        }
        return out;
    }
    throw Error("unknown identity '" + name + "'");
}

} // namespace nalg
