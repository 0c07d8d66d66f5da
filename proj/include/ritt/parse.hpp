#ifndef RITT_PARSE_HPP
#define RITT_PARSE_HPP

#include <cctype>
#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <ritt/error.hpp>
#include <ritt/rational.hpp>

namespace ritt {

/// Half-open byte range [begin, end) with the 1-based line/column of begin.
struct Span {
    std::size_t begin = 0;
    std::size_t end = 0;
    std::size_t line = 1;
    std::size_t column = 1;
};

enum class NodeKind { number, zeta, variable, exp, add, sub, mul, pow, neg, group };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

/// number: value. zeta: n = order. variable: name. pow: n = exponent.
/// exp, neg, group, pow: one child. add, sub, mul: two children.
struct Node {
    NodeKind kind = NodeKind::number;
    Span span;
    Rational value;
    unsigned long n = 0;
    std::string name;
    std::vector<NodePtr> kids;
};

struct SourceExpr {
    std::string text;
    NodePtr root;
};

namespace detail {

enum class Tok { number, ident, plus, minus, star, caret, lparen, rparen, end };

struct Token {
    Tok kind = Tok::end;
    std::string text;
    Span span;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    std::vector<Token> run()
    {
        std::vector<Token> out;
        for (;;) {
            skip_space();
            Token t;
            t.span = here();
            if (i_ == s_.size()) {
                t.kind = Tok::end;
                out.push_back(t);
                return out;
            }
            const char c = s_[i_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                t.kind = Tok::number;
                t.text = digits();
                // a/b with no blanks is one rational literal
                if (i_ + 1 < s_.size() && s_[i_] == '/' && std::isdigit(static_cast<unsigned char>(s_[i_ + 1]))) {
                    advance();
                    t.text += "/" + digits();
                }
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                t.kind = Tok::ident;
                while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
                    t.text += s_[i_], advance();
            } else {
                switch (c) {
                case '+': t.kind = Tok::plus; break;
                case '-': t.kind = Tok::minus; break;
                case '*': t.kind = Tok::star; break;
                case '^': t.kind = Tok::caret; break;
                case '(': t.kind = Tok::lparen; break;
                case ')': t.kind = Tok::rparen; break;
                default:
                    throw ParseError(std::string("unexpected character '") + c + "'", t.span.line, t.span.column);
                }
                t.text = std::string(1, c);
                advance();
            }
            t.span.end = i_;
            out.push_back(std::move(t));
        }
    }

private:
    Span here() const { return Span{i_, i_, line_, col_}; }

    void advance()
    {
        if (s_[i_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++i_;
    }

    void skip_space()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
            advance();
    }

    std::string digits()
    {
        std::string d;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
            d += s_[i_], advance();
        return d;
    }

    const std::string& s_;
    std::size_t i_ = 0, line_ = 1, col_ = 1;
};

// expr  := term (('+' | '-') term)*
// term  := unary ('*' unary)*
// unary := '-' unary | power
// power := atom ('^' natural)*
// atom  := number | ident | 'zeta' '(' natural ')' | 'E' '(' expr ')' | '(' expr ')'
class Parser {
public:
    explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

    NodePtr run()
    {
        auto e = expr();
        if (peek().kind != Tok::end)
            fail("unexpected '" + peek().text + "'");
        return e;
    }

private:
    const Token& peek() const { return t_[k_]; }
    const Token& take() { return t_[k_ == t_.size() - 1 ? k_ : k_++]; }

    [[noreturn]] void fail(const std::string& what) const
    {
        const Span& s = peek().span;
        throw ParseError(what, s.line, s.column);
    }

    const Token& expect(Tok kind, const char* what)
    {
        if (peek().kind != kind)
            fail(std::string("expected ") + what);
        return take();
    }

    static NodePtr make(NodeKind k, Span s, std::vector<NodePtr> kids)
    {
        auto n = std::make_shared<Node>();
        n->kind = k;
        n->span = s;
        n->kids = std::move(kids);
        return n;
    }

    static Span join(const Span& a, const Span& b) { return Span{a.begin, b.end, a.line, a.column}; }

    NodePtr expr()
    {
        auto lhs = term();
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            const NodeKind k = take().kind == Tok::plus ? NodeKind::add : NodeKind::sub;
            auto rhs = term();
            lhs = make(k, join(lhs->span, rhs->span), {lhs, rhs});
        }
        return lhs;
    }

    NodePtr term()
    {
        auto lhs = unary();
        while (peek().kind == Tok::star) {
            take();
            auto rhs = unary();
            lhs = make(NodeKind::mul, join(lhs->span, rhs->span), {lhs, rhs});
        }
        return lhs;
    }

    NodePtr unary()
    {
        if (peek().kind == Tok::minus) {
            const Span s = take().span;
            auto x = unary();
            return make(NodeKind::neg, join(s, x->span), {x});
        }
        return power();
    }

    unsigned long natural(const char* what)
    {
        const Token& t = peek();
        if (t.kind != Tok::number || t.text.find('/') != std::string::npos)
            fail(std::string("expected ") + what);
        Integer v(t.text);
        if (!v.fits_ulong_p() || v > Integer(1000000))
            fail(std::string(what) + " too large");
        take();
        return v.get_ui();
    }

    NodePtr power()
    {
        auto base = atom();
        while (peek().kind == Tok::caret) {
            take();
            const Span s = peek().span;
            const unsigned long e = natural("natural exponent");
            auto n = std::make_shared<Node>();
            n->kind = NodeKind::pow;
            n->span = join(base->span, s);
            n->n = e;
            n->kids = {base};
            base = n;
        }
        return base;
    }

    NodePtr atom()
    {
        const Token t = peek();
        switch (t.kind) {
        case Tok::number: {
            take();
            auto n = std::make_shared<Node>();
            n->kind = NodeKind::number;
            n->span = t.span;
            n->value = Rational(t.text);
            if (n->value.get_den() == 0)
                throw ParseError("zero denominator", t.span.line, t.span.column);
            n->value.canonicalize();
            return n;
        }
        case Tok::ident: {
            take();
            if (t.text == "zeta" || t.text == "E") {
                expect(Tok::lparen, "'('");
                auto n = std::make_shared<Node>();
                if (t.text == "zeta") {
                    const Token arg = peek();
                    n->kind = NodeKind::zeta;
                    n->n = natural("root of unity order");
                    if (n->n == 0)
                        throw ParseError("zeta(0) is not a root of unity", arg.span.line, arg.span.column);
                } else {
                    n->kind = NodeKind::exp;
                    n->kids = {expr()};
                }
                const Token& close = expect(Tok::rparen, "')'");
                n->span = join(t.span, close.span);
                return n;
            }
            auto n = std::make_shared<Node>();
            n->kind = NodeKind::variable;
            n->span = t.span;
            n->name = t.text;
            return n;
        }
        case Tok::lparen: {
            take();
            auto inner = expr();
            const Token& close = expect(Tok::rparen, "')'");
            return make(NodeKind::group, join(t.span, close.span), {inner});
        }
        case Tok::end:
            fail("unexpected end of input");
        default:
            fail("unexpected '" + t.text + "'");
        }
    }

    std::vector<Token> t_;
    std::size_t k_ = 0;
};

inline int precedence(const Node& n)
{
    switch (n.kind) {
    case NodeKind::add:
    case NodeKind::sub: return 1;
    case NodeKind::mul: return 2;
    case NodeKind::neg: return 3;
    case NodeKind::pow: return 4;
    default: return 5;
    }
}

inline std::string print_node(const Node& n);

inline std::string print_child(const Node& c, int min_prec)
{
    const std::string s = print_node(c);
    return precedence(c) < min_prec ? "(" + s + ")" : s;
}

inline std::string print_node(const Node& n)
{
    switch (n.kind) {
    case NodeKind::number: return n.value.get_str();
    case NodeKind::zeta: return "zeta(" + std::to_string(n.n) + ")";
    case NodeKind::variable: return n.name;
    case NodeKind::exp: return "E(" + print_node(*n.kids[0]) + ")";
    case NodeKind::group: return "(" + print_node(*n.kids[0]) + ")";
    case NodeKind::add: return print_child(*n.kids[0], 1) + " + " + print_child(*n.kids[1], 2);
    case NodeKind::sub: return print_child(*n.kids[0], 1) + " - " + print_child(*n.kids[1], 2);
    case NodeKind::mul: return print_child(*n.kids[0], 2) + "*" + print_child(*n.kids[1], 3);
    case NodeKind::neg: return "-" + print_child(*n.kids[0], 3);
    case NodeKind::pow: return print_child(*n.kids[0], 4) + "^" + std::to_string(n.n);
    }
    return {};
}

} // namespace detail

inline SourceExpr parse(const std::string& text)
{
    detail::Parser p(detail::Lexer(text).run());
    return SourceExpr{text, p.run()};
}

/// Canonical printed form; parse(print(e)) has the same tree as e.
inline std::string print(const Node& n) { return detail::print_node(n); }
inline std::string print(const SourceExpr& e) { return print(*e.root); }

/// Structural equality ignoring spans.
inline bool same_tree(const Node& a, const Node& b)
{
    if (a.kind != b.kind || a.value != b.value || a.n != b.n || a.name != b.name || a.kids.size() != b.kids.size())
        return false;
    for (std::size_t i = 0; i < a.kids.size(); ++i)
        if (!same_tree(*a.kids[i], *b.kids[i]))
            return false;
    return true;
}

} // namespace ritt

#endif // RITT_PARSE_HPP
