#include "monoci/dsl.hpp"

#include <cctype>
#include <limits>
#include <optional>

#include "monoci/decomposition.hpp"
#include "monoci/errors.hpp"

namespace monoci {

namespace {

enum class Tok { ident, number, punct, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1, i = 0;
    auto advance = [&](std::size_t k) {
        for (std::size_t j = 0; j < k; ++j, ++i) {
            if (s[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < s.size()) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (std::isspace(c)) {
            advance(1);
        } else if (c == '#') {
            while (i < s.size() && s[i] != '\n') advance(1);
        } else if (std::isalpha(c) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            out.push_back({Tok::ident, std::string(s.substr(i, j - i)), line, col});
            advance(j - i);
        } else if (std::isdigit(c)) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Tok::number, std::string(s.substr(i, j - i)), line, col});
            advance(j - i);
        } else if (std::string_view("(),;&+*^[]").find(static_cast<char>(c)) != std::string_view::npos) {
            out.push_back({Tok::punct, std::string(1, static_cast<char>(c)), line, col});
            advance(1);
        } else {
            throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'", line, col);
        }
    }
    out.push_back({Tok::end, "", line, col});
    return out;
}

class Parser {
public:
    Parser(std::vector<Token> tokens, FieldSpec field) : toks_(std::move(tokens)), field_(std::move(field)) {}

    Program program() {
        const Token& kw = peek();
        if (kw.kind != Tok::ident || kw.text != "ring") fail("expected 'ring'", kw);
        ++pos_;
        std::vector<std::string> names;
        while (true) {
            const Token& t = peek();
            if (t.kind != Tok::ident) fail("expected a variable name", t);
            if (t.text == "ring") fail("'ring' cannot be a variable name", t);
            for (const auto& n : names)
                if (n == t.text) fail("variable '" + t.text + "' declared twice", t);
            names.push_back(t.text);
            ++pos_;
            if (!accept(",")) break;
        }
        expect(";");
        ring_ = RingContext(names, field_);
        for (std::size_t i = 0; i < names.size(); ++i) index_.emplace_back(names[i], i);
        auto e = expr();
        if (peek().kind != Tok::end) fail("unexpected '" + peek().text + "' after the expression", peek());
        return Program{*ring_, e};
    }

private:
    using Node = std::shared_ptr<const IdealExpression>;

    const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }

    [[noreturn]] static void fail(const std::string& msg, const Token& t) { throw ParseError(msg, t.line, t.column); }

    bool is(const char* p, std::size_t ahead = 0) const {
        return peek(ahead).kind == Tok::punct && peek(ahead).text == p;
    }

    bool accept(const char* p) {
        if (!is(p)) return false;
        ++pos_;
        return true;
    }

    void expect(const char* p) {
        if (!accept(p)) {
            const Token& t = peek();
            fail(std::string("expected '") + p + "'" + (t.kind == Tok::end ? " before end of input" : ""), t);
        }
    }

    static Node binary(IdealExpression::Kind kind, Node l, Node r, const Token& at) {
        auto n = std::make_shared<IdealExpression>();
        n->kind = kind;
        n->left = std::move(l);
        n->right = std::move(r);
        n->line = at.line;
        n->column = at.column;
        return n;
    }

    Node expr() {
        Node n = term();
        while (is("&")) {
            const Token& op = peek();
            ++pos_;
            n = binary(IdealExpression::Kind::intersection, n, term(), op);
        }
        return n;
    }

    Node term() {
        Node n = atom();
        while (is("+") || is("*")) {
            const Token& op = peek();
            auto kind = op.text == "+" ? IdealExpression::Kind::sum : IdealExpression::Kind::product;
            ++pos_;
            n = binary(kind, n, atom(), op);
        }
        return n;
    }

    Node atom() {
        const Token& start = peek();
        Node n;
        if (accept("[")) {
            n = expr();
            expect("]");
        } else if (is("(")) {
            n = literal();
        } else {
            fail(start.kind == Tok::end ? "expected an ideal before end of input" : "expected '(' or '['", start);
        }
        if (is("^")) {
            const Token& caret = peek();
            ++pos_;
            IdealExpression::Kind kind = IdealExpression::Kind::power;
            const char* close = nullptr;
            if (accept("[")) {
                kind = IdealExpression::Kind::bracket_power;
                close = "]";
            } else if (accept("(")) {
                kind = IdealExpression::Kind::symbolic_power;
                close = ")";
            }
            unsigned e = positive();
            if (close) expect(close);
            auto p = std::make_shared<IdealExpression>();
            p->kind = kind;
            p->left = n;
            p->exponent = e;
            p->line = caret.line;
            p->column = caret.column;
            n = p;
        }
        return n;
    }

    unsigned positive() {
        const Token& t = peek();
        if (t.kind != Tok::number) fail("malformed power: expected a positive integer exponent", t);
        unsigned long long v = 0;
        for (char c : t.text) {
            v = v * 10 + static_cast<unsigned>(c - '0');
            if (v > std::numeric_limits<unsigned>::max()) fail("malformed power: exponent too large", t);
        }
        if (v == 0) fail("malformed power: exponent must be at least 1", t);
        ++pos_;
        return static_cast<unsigned>(v);
    }

    Node literal() {
        const Token& open = peek();
        expect("(");
        auto n = std::make_shared<IdealExpression>();
        n->kind = IdealExpression::Kind::literal;
        n->line = open.line;
        n->column = open.column;
        if (is(")")) fail("empty generator list", peek());
        do {
            n->generators.push_back(monomial());
        } while (accept(","));
        expect(")");
        return n;
    }

    Monomial monomial() {
        const std::size_t nvars = ring_->num_variables();
        std::vector<Exponent> e(nvars, 0);
        const Token& first = peek();
        if (first.kind == Tok::number) {
            if (first.text != "1") fail("only 1 may appear as a constant monomial", first);
            ++pos_;
            return Monomial(e);
        }
        do {
            const Token& t = peek();
            if (t.kind != Tok::ident) fail(t.kind == Tok::end ? "expected a variable before end of input" : "expected a variable", t);
            std::size_t idx = lookup(t);
            ++pos_;
            unsigned k = 1;
            if (accept("^")) k = positive();
            if (static_cast<unsigned long long>(e[idx]) + k > std::numeric_limits<Exponent>::max())
                fail("exponent too large", t);
            e[idx] += k;
        } while (accept("*"));
        return Monomial(e);
    }

    std::size_t lookup(const Token& t) const {
        for (const auto& [name, i] : index_)
            if (name == t.text) return i;
        fail("undeclared variable '" + t.text + "'", t);
    }

    std::vector<Token> toks_;
    FieldSpec field_;
    std::optional<RingContext> ring_;
    std::vector<std::pair<std::string, std::size_t>> index_;
    std::size_t pos_ = 0;
};

std::string where(const IdealExpression& e) {
    return "line " + std::to_string(e.line) + ", column " + std::to_string(e.column) + ": ";
}

bool is_term(IdealExpression::Kind k) {
    return k == IdealExpression::Kind::sum || k == IdealExpression::Kind::product;
}

void print_expr(std::string& out, const RingContext& ring, const IdealExpression& e);

void print_bracketed(std::string& out, const RingContext& ring, const IdealExpression& e) {
    out += '[';
    print_expr(out, ring, e);
    out += ']';
}

void print_atom(std::string& out, const RingContext& ring, const IdealExpression& e) {
    using K = IdealExpression::Kind;
    switch (e.kind) {
    case K::literal:
        out += '(';
        for (std::size_t i = 0; i < e.generators.size(); ++i) {
            if (i) out += ", ";
            out += ring.format(e.generators[i]);
        }
        out += ')';
        return;
    case K::power:
    case K::bracket_power:
    case K::symbolic_power: {
        // One suffix per atom, so any other base goes in brackets.
        if (e.left->kind == K::literal) print_atom(out, ring, *e.left);
        else print_bracketed(out, ring, *e.left);
        std::string n = std::to_string(e.exponent);
        if (e.kind == K::power) out += "^" + n;
        else if (e.kind == K::bracket_power) out += "^[" + n + "]";
        else out += "^(" + n + ")";
        return;
    }
    default:
        print_bracketed(out, ring, e);
    }
}

void print_term(std::string& out, const RingContext& ring, const IdealExpression& e) {
    if (!is_term(e.kind)) {
        print_atom(out, ring, e);
        return;
    }
    print_term(out, ring, *e.left);
    out += e.kind == IdealExpression::Kind::sum ? " + " : " * ";
    print_atom(out, ring, *e.right);
}

void print_expr(std::string& out, const RingContext& ring, const IdealExpression& e) {
    if (e.kind != IdealExpression::Kind::intersection) {
        print_term(out, ring, e);
        return;
    }
    print_expr(out, ring, *e.left);
    out += " & ";
    if (e.right->kind == IdealExpression::Kind::intersection) print_bracketed(out, ring, *e.right);
    else print_term(out, ring, *e.right);
}

}  // namespace

Program parse(std::string_view text, const FieldSpec& field) {
    return Parser(tokenize(text), field).program();
}

MonomialIdeal evaluate(const RingContext& ring, const IdealExpression& e) {
    using K = IdealExpression::Kind;
    switch (e.kind) {
    case K::literal:
        return MonomialIdeal(ring, e.generators);
    case K::sum:
        return sum(evaluate(ring, *e.left), evaluate(ring, *e.right));
    case K::product:
        return product(evaluate(ring, *e.left), evaluate(ring, *e.right));
    case K::intersection:
        return intersection(evaluate(ring, *e.left), evaluate(ring, *e.right));
    case K::power:
        return power(evaluate(ring, *e.left), e.exponent);
    case K::bracket_power:
        return bracket_power(evaluate(ring, *e.left), e.exponent);
    case K::symbolic_power: {
        auto base = evaluate(ring, *e.left);
        if (!base.is_squarefree())
            throw DomainError(where(e) + "symbolic power requires a squarefree ideal, got " + base.to_string());
        if (!base.is_proper_nonzero()) return base;
        return symbolic_power(base, e.exponent);
    }
    }
    throw InternalError("unknown expression node");
}

MonomialIdeal evaluate(const Program& program) { return evaluate(program.ring, *program.expr); }

std::string print(const RingContext& ring, const IdealExpression& expr) {
    std::string out;
    print_expr(out, ring, expr);
    return out;
}

std::string print(const Program& program) {
    std::string out = "ring ";
    const auto& vars = program.ring.variables();
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (i) out += ", ";
        out += vars[i];
    }
    out += "; ";
    out += print(program.ring, *program.expr);
    return out;
}

}  // namespace monoci
