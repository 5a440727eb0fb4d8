#include "homsuper/identity.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace homsuper {

namespace ast {
namespace {
ExprPtr make(auto node) { return std::make_shared<const Expr>(Expr{std::move(node)}); }
} // namespace

ExprPtr zero() { return make(ZeroNode{}); }
ExprPtr var(std::string name) { return make(VariableNode{std::move(name)}); }
ExprPtr alpha(unsigned power, ExprPtr operand) { return make(AlphaNode{power, std::move(operand)}); }
ExprPtr star(ExprPtr l, ExprPtr r) { return make(ProductNode{OpSlot::Star, std::move(l), std::move(r)}); }
ExprPtr bracket(ExprPtr l, ExprPtr r) { return make(ProductNode{OpSlot::Bracket, std::move(l), std::move(r)}); }
ExprPtr brace(ExprPtr a, ExprPtr b, ExprPtr c) { return make(TernaryNode{std::move(a), std::move(b), std::move(c)}); }
ExprPtr scale(Scalar factor, ExprPtr operand) { return make(ScaleNode{std::move(factor), std::move(operand)}); }
ExprPtr sign(SignFactor s, ExprPtr operand) { return make(SignNode{std::move(s), std::move(operand)}); }
ExprPtr sum(std::vector<SumTerm> terms) { return make(SumNode{std::move(terms)}); }
ExprPtr cyclic(std::array<std::string, 3> vars, std::vector<SignFactor> leading, ExprPtr body) {
    return make(CyclicNode{std::move(vars), std::move(leading), std::move(body)});
}
} // namespace ast

// ---------------------------------------------------------------------------
// Structural equality

namespace {

bool same(const ExprPtr& a, const ExprPtr& b) {
    if (!a || !b)
        return !a && !b;
    return *a == *b;
}

struct EqualVisitor {
    const Expr& other;

    bool operator()(const ZeroNode&) const { return std::holds_alternative<ZeroNode>(other.node); }
    bool operator()(const VariableNode& n) const {
        auto* o = std::get_if<VariableNode>(&other.node);
        return o && o->name == n.name;
    }
    bool operator()(const AlphaNode& n) const {
        auto* o = std::get_if<AlphaNode>(&other.node);
        return o && o->power == n.power && same(o->operand, n.operand);
    }
    bool operator()(const ProductNode& n) const {
        auto* o = std::get_if<ProductNode>(&other.node);
        return o && o->slot == n.slot && same(o->left, n.left) && same(o->right, n.right);
    }
    bool operator()(const TernaryNode& n) const {
        auto* o = std::get_if<TernaryNode>(&other.node);
        return o && same(o->a, n.a) && same(o->b, n.b) && same(o->c, n.c);
    }
    bool operator()(const ScaleNode& n) const {
        auto* o = std::get_if<ScaleNode>(&other.node);
        return o && o->factor == n.factor && same(o->operand, n.operand);
    }
    bool operator()(const SignNode& n) const {
        auto* o = std::get_if<SignNode>(&other.node);
        return o && o->sign == n.sign && same(o->operand, n.operand);
    }
    bool operator()(const SumNode& n) const {
        auto* o = std::get_if<SumNode>(&other.node);
        if (!o || o->terms.size() != n.terms.size())
            return false;
        for (std::size_t i = 0; i < n.terms.size(); ++i)
            if (o->terms[i].negated != n.terms[i].negated || !same(o->terms[i].expr, n.terms[i].expr))
                return false;
        return true;
    }
    bool operator()(const CyclicNode& n) const {
        auto* o = std::get_if<CyclicNode>(&other.node);
        return o && o->vars == n.vars && o->leading == n.leading && same(o->body, n.body);
    }
};

} // namespace

bool operator==(const Expr& a, const Expr& b) { return std::visit(EqualVisitor{b}, a.node); }

bool operator==(const Identity& a, const Identity& b) { return same(a.lhs, b.lhs) && same(a.rhs, b.rhs); }

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok { Ident, Number, Punct, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        const unsigned char ch = static_cast<unsigned char>(src[i]);
        if (std::isspace(ch)) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isalpha(ch) || ch == '_') {
            while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_'))
                ++i;
            out.push_back({Tok::Ident, std::string(src.substr(start, i - start)), start});
        } else if (std::isdigit(ch)) {
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i])))
                ++i;
            out.push_back({Tok::Number, std::string(src.substr(start, i - start)), start});
        } else if (std::string_view("()[]{},;+-*/=").find(static_cast<char>(ch)) != std::string_view::npos) {
            out.push_back({Tok::Punct, std::string(1, static_cast<char>(ch)), start});
            ++i;
        } else {
            throw ParseError("unexpected character '" + std::string(1, static_cast<char>(ch)) + "' at offset " +
                                 std::to_string(start),
                             start);
        }
    }
    out.push_back({Tok::End, "", src.size()});
    return out;
}

bool is_alpha_name(std::string_view s) {
    return !s.empty() && s[0] == 'a' &&
           std::all_of(s.begin() + 1, s.end(), [](unsigned char ch) { return std::isdigit(ch); });
}

bool is_reserved(std::string_view s) { return is_alpha_name(s) || s == "s" || s == "cyc"; }

class Parser {
public:
    explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

    Identity parse() {
        Identity id;
        id.lhs = expr();
        expect("=");
        id.rhs = expr();
        if (peek().kind != Tok::End)
            fail("trailing input '" + peek().text + "'");
        return id;
    }

private:
    const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
    bool at_punct(std::string_view p, std::size_t ahead = 0) const {
        return peek(ahead).kind == Tok::Punct && peek(ahead).text == p;
    }
    const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("syntax error at offset " + std::to_string(peek().pos) + ": " + msg, peek().pos);
    }

    void expect(std::string_view p) {
        if (!at_punct(p))
            fail("expected '" + std::string(p) + "'" +
                 (peek().kind == Tok::End ? std::string(" before end of input") : ", found '" + peek().text + "'"));
        next();
    }

    std::string ident() {
        if (peek().kind != Tok::Ident)
            fail("expected identifier");
        if (is_reserved(peek().text))
            fail("'" + peek().text + "' is reserved and cannot name a variable");
        return next().text;
    }

    bool starts_term() const {
        const Token& t = peek();
        if (t.kind == Tok::Ident || t.kind == Tok::Number)
            return true;
        return t.kind == Tok::Punct && (t.text == "(" || t.text == "[" || t.text == "{");
    }

    ExprPtr expr() {
        std::vector<SumTerm> terms;
        bool negated = false;
        if (at_punct("-")) {
            next();
            negated = true;
        }
        terms.push_back({negated, term()});
        while (at_punct("+") || at_punct("-")) {
            negated = next().text == "-";
            terms.push_back({negated, term()});
        }
        if (terms.size() == 1 && !terms.front().negated)
            return terms.front().expr;
        return ast::sum(std::move(terms));
    }

    ExprPtr term() {
        if (peek().kind == Tok::Number) {
            Scalar c = rational();
            if (starts_term())
                return ast::scale(std::move(c), term());
            if (sgn(c) != 0)
                fail("a constant must multiply a term");
            return ast::zero();
        }
        if (peek().kind == Tok::Ident && peek().text == "s" && at_punct("(", 1)) {
            SignFactor s = sign_factor();
            if (!starts_term())
                fail("sign factor must be followed by a term");
            return ast::sign(std::move(s), term());
        }
        return product();
    }

    Scalar rational() {
        std::string text = next().text;
        if (at_punct("/")) {
            next();
            if (peek().kind != Tok::Number)
                fail("expected denominator");
            text += "/" + next().text;
        }
        try {
            return parse_scalar(text);
        } catch (const ParseError& e) {
            fail(e.what());
        }
    }

    SignFactor sign_factor() {
        next();  // s
        expect("(");
        SignFactor f;
        f.left = parity_sum();
        expect(",");
        f.right = parity_sum();
        expect(")");
        return f;
    }

    ParitySum parity_sum() {
        ParitySum ps;
        if (at_punct("(")) {
            next();
            ps.vars.push_back(ident());
            while (at_punct("+")) {
                next();
                ps.vars.push_back(ident());
            }
            expect(")");
        } else {
            ps.vars.push_back(ident());
        }
        return ps;
    }

    ExprPtr product() {
        ExprPtr lhs = atom();
        while (at_punct("*")) {
            next();
            lhs = ast::star(std::move(lhs), atom());
        }
        return lhs;
    }

    ExprPtr atom() {
        const Token& t = peek();
        if (t.kind == Tok::Ident) {
            if (t.text == "cyc" && at_punct("[", 1))
                return cyclic();
            if (is_alpha_name(t.text) && at_punct("(", 1)) {
                const unsigned power = t.text.size() == 1 ? 1u : static_cast<unsigned>(std::stoul(t.text.substr(1)));
                next();
                expect("(");
                ExprPtr operand = expr();
                expect(")");
                return ast::alpha(power, std::move(operand));
            }
            if (t.text == "s" && at_punct("(", 1))
                fail("sign factor must prefix a term");
            if (at_punct("(", 1))
                fail("unknown op-slot '" + t.text + "'");
            return ast::var(ident());
        }
        if (at_punct("[")) {
            next();
            ExprPtr l = expr();
            expect(",");
            ExprPtr r = expr();
            expect("]");
            return ast::bracket(std::move(l), std::move(r));
        }
        if (at_punct("{")) {
            next();
            ExprPtr a = expr();
            expect(",");
            ExprPtr b = expr();
            expect(",");
            ExprPtr c = expr();
            expect("}");
            return ast::brace(std::move(a), std::move(b), std::move(c));
        }
        if (at_punct("(")) {
            next();
            ExprPtr inner = expr();
            expect(")");
            return inner;
        }
        if (t.kind == Tok::End)
            fail("unexpected end of input");
        fail("unexpected '" + t.text + "'");
    }

    ExprPtr cyclic() {
        next();  // cyc
        expect("[");
        std::array<std::string, 3> vars;
        vars[0] = ident();
        expect(",");
        vars[1] = ident();
        expect(",");
        vars[2] = ident();
        std::vector<SignFactor> leading;
        if (at_punct(";")) {
            next();
            do {
                if (!(peek().kind == Tok::Ident && peek().text == "s" && at_punct("(", 1)))
                    fail("expected sign factor s(.,.)");
                leading.push_back(sign_factor());
            } while (!at_punct("]"));
        }
        expect("]");
        if (vars[0] == vars[1] || vars[1] == vars[2] || vars[0] == vars[2])
            fail("cyclic sum variables must be distinct");
        expect("(");
        ExprPtr body = expr();
        expect(")");
        return ast::cyclic(std::move(vars), std::move(leading), std::move(body));
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Traversal helpers

template <class F>
void walk(const Expr& e, F&& f) {
    f(e);
    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, AlphaNode> || std::is_same_v<T, ScaleNode> ||
                          std::is_same_v<T, SignNode>) {
                walk(*n.operand, f);
            } else if constexpr (std::is_same_v<T, ProductNode>) {
                walk(*n.left, f);
                walk(*n.right, f);
            } else if constexpr (std::is_same_v<T, TernaryNode>) {
                walk(*n.a, f);
                walk(*n.b, f);
                walk(*n.c, f);
            } else if constexpr (std::is_same_v<T, SumNode>) {
                for (const auto& t : n.terms)
                    walk(*t.expr, f);
            } else if constexpr (std::is_same_v<T, CyclicNode>) {
                walk(*n.body, f);
            }
        },
        e.node);
}

template <class F>
void walk(const Identity& id, F&& f) {
    walk(*id.lhs, f);
    walk(*id.rhs, f);
}

void validate(const Identity& id) {
    std::set<std::string> operands;
    walk(id, [&](const Expr& e) {
        if (auto* v = std::get_if<VariableNode>(&e.node))
            operands.insert(v->name);
    });
    auto check = [&](const std::string& name) {
        if (!operands.count(name))
            throw ParseError("undeclared variable '" + name + "' (it never appears as an operand)");
    };
    auto check_sign = [&](const SignFactor& s) {
        for (const auto& v : s.left.vars)
            check(v);
        for (const auto& v : s.right.vars)
            check(v);
    };
    walk(id, [&](const Expr& e) {
        if (auto* s = std::get_if<SignNode>(&e.node))
            check_sign(s->sign);
        if (auto* c = std::get_if<CyclicNode>(&e.node)) {
            for (const auto& v : c->vars)
                check(v);
            for (const auto& s : c->leading)
                check_sign(s);
        }
    });
}

// ---------------------------------------------------------------------------
// Printer

std::string print_psum(const ParitySum& ps) {
    if (ps.vars.size() == 1)
        return ps.vars.front();
    std::string out = "(";
    for (std::size_t i = 0; i < ps.vars.size(); ++i)
        out += (i ? "+" : "") + ps.vars[i];
    return out + ")";
}

std::string print_sign(const SignFactor& s) { return "s(" + print_psum(s.left) + "," + print_psum(s.right) + ")"; }

bool is_term_level(const Expr& e) {
    return std::holds_alternative<ZeroNode>(e.node) || std::holds_alternative<ScaleNode>(e.node) ||
           std::holds_alternative<SignNode>(e.node) || std::holds_alternative<SumNode>(e.node);
}

std::string print_star_operand(const Expr& e) {
    const auto* p = std::get_if<ProductNode>(&e.node);
    // Nested '*' is parenthesised on both sides even though the grammar is
    // left associative.
    const bool parens = is_term_level(e) || (p && p->slot == OpSlot::Star);
    return parens ? "(" + print_expr(e) + ")" : print_expr(e);
}

std::string print_term(const Expr& e) {
    return std::holds_alternative<SumNode>(e.node) ? "(" + print_expr(e) + ")" : print_expr(e);
}

} // namespace

std::string print_expr(const Expr& expr) {
    return std::visit(
        [](const auto& n) -> std::string {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, ZeroNode>) {
                return "0";
            } else if constexpr (std::is_same_v<T, VariableNode>) {
                return n.name;
            } else if constexpr (std::is_same_v<T, AlphaNode>) {
                return (n.power == 1 ? std::string("a") : "a" + std::to_string(n.power)) + "(" +
                       print_expr(*n.operand) + ")";
            } else if constexpr (std::is_same_v<T, ProductNode>) {
                if (n.slot == OpSlot::Bracket)
                    return "[" + print_expr(*n.left) + "," + print_expr(*n.right) + "]";
                return print_star_operand(*n.left) + "*" + print_star_operand(*n.right);
            } else if constexpr (std::is_same_v<T, TernaryNode>) {
                return "{" + print_expr(*n.a) + "," + print_expr(*n.b) + "," + print_expr(*n.c) + "}";
            } else if constexpr (std::is_same_v<T, ScaleNode>) {
                return to_string(n.factor) + " " + print_term(*n.operand);
            } else if constexpr (std::is_same_v<T, SignNode>) {
                return print_sign(n.sign) + " " + print_term(*n.operand);
            } else if constexpr (std::is_same_v<T, SumNode>) {
                std::string out;
                for (std::size_t i = 0; i < n.terms.size(); ++i) {
                    if (i == 0)
                        out += n.terms[i].negated ? "-" : "";
                    else
                        out += n.terms[i].negated ? " - " : " + ";
                    out += print_term(*n.terms[i].expr);
                }
                return out;
            } else {
                std::string out = "cyc[" + n.vars[0] + "," + n.vars[1] + "," + n.vars[2];
                for (std::size_t i = 0; i < n.leading.size(); ++i)
                    out += (i ? " " : "; ") + print_sign(n.leading[i]);
                return out + "](" + print_expr(*n.body) + ")";
            }
        },
        expr.node);
}

std::string print_identity(const Identity& identity) {
    return print_expr(*identity.lhs) + " = " + print_expr(*identity.rhs);
}

Identity parse_identity(std::string_view text) {
    Identity id = Parser(text).parse();
    validate(id);
    return id;
}

std::vector<std::string> identity_variables(const Identity& identity) {
    std::vector<std::string> vars;
    walk(identity, [&](const Expr& e) {
        if (auto* v = std::get_if<VariableNode>(&e.node))
            if (std::find(vars.begin(), vars.end(), v->name) == vars.end())
                vars.push_back(v->name);
    });
    return vars;
}

bool uses_slot(const Identity& identity, OpSlot slot) {
    bool found = false;
    walk(identity, [&](const Expr& e) {
        if (auto* p = std::get_if<ProductNode>(&e.node); p && p->slot == slot)
            found = true;
        if (slot == OpSlot::Brace && std::holds_alternative<TernaryNode>(e.node))
            found = true;
    });
    return found;
}

bool uses_signs(const Identity& identity) {
    bool found = false;
    walk(identity, [&](const Expr& e) {
        if (std::holds_alternative<SignNode>(e.node))
            found = true;
        if (auto* c = std::get_if<CyclicNode>(&e.node); c && !c->leading.empty())
            found = true;
    });
    return found;
}

} // namespace homsuper
