#include "gradedgeom/dsl.hpp"

#include <cctype>
#include <sstream>

namespace gg::dsl {

std::string Diagnostic::str() const {
    std::ostringstream os;
    os << "error at " << span.line << ":" << span.col << ": " << message;
    return os.str();
}

const std::vector<std::string> &command_keywords() {
    static const std::vector<std::string> kw = {
        "deg",      "lead",    "grmul",     "rees",   "eval",      "interp",
        "zoom",     "morph",   "ranks",     "dual",   "tensor",    "shift",
        "pullback", "secdeg",  "approx",    "secinterp", "order",  "linearize",
        "opinterp", "recover", "clmul",     "cldeg",  "grsym",     "getzler",
        "symbol",   "severa",  "pathcheck"};
    return kw;
}

namespace {

enum class Tok { ident, integer, lbrace, rbrace, lparen, rparen, lbracket, rbracket,
                 colon, comma, semi, plus, minus, star, slash, caret, eof, bad };

struct Token {
    Tok kind = Tok::eof;
    std::string text;
    long value = 0;
    Span span;
};

class Lexer {
public:
    explicit Lexer(const std::string &src) : src_(src) { advance(); }

    const Token &peek() const { return cur_; }
    Token next() {
        Token t = cur_;
        advance();
        return t;
    }

private:
    const std::string &src_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token cur_;

    void bump() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else
            ++col_;
        ++pos_;
    }

    void advance() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                bump();
            } else if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') bump();
            } else
                break;
        }
        cur_ = Token{};
        cur_.span = {line_, col_, 1};
        if (pos_ >= src_.size()) {
            cur_.kind = Tok::eof;
            return;
        }
        char c = src_[pos_];
        auto single = [&](Tok k) {
            cur_.kind = k;
            cur_.text = std::string(1, c);
            bump();
        };
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_' ||
                    src_[pos_] == '~' || src_[pos_] == '\''))
                bump();
            cur_.kind = Tok::ident;
            cur_.text = src_.substr(start, pos_ - start);
            cur_.span.len = static_cast<int>(pos_ - start);
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                bump();
            cur_.kind = Tok::integer;
            cur_.text = src_.substr(start, pos_ - start);
            cur_.value = std::stol(cur_.text);
            cur_.span.len = static_cast<int>(pos_ - start);
            return;
        }
        switch (c) {
        case '{': single(Tok::lbrace); return;
        case '}': single(Tok::rbrace); return;
        case '(': single(Tok::lparen); return;
        case ')': single(Tok::rparen); return;
        case '[': single(Tok::lbracket); return;
        case ']': single(Tok::rbracket); return;
        case ':': single(Tok::colon); return;
        case ',': single(Tok::comma); return;
        case ';': single(Tok::semi); return;
        case '+': single(Tok::plus); return;
        case '-': single(Tok::minus); return;
        case '*': single(Tok::star); return;
        case '/': single(Tok::slash); return;
        case '^': single(Tok::caret); return;
        default:
            cur_.kind = Tok::bad;
            cur_.text = std::string(1, c);
            bump();
        }
    }
};

struct ParseError {
    Diagnostic diag;
};

class Parser {
public:
    explicit Parser(const std::string &src) : lex_(src) {}

    ParseResult run() {
        ParseResult out;
        while (lex_.peek().kind != Tok::eof) {
            try {
                parse_item(out.script);
            } catch (const ParseError &e) {
                out.diagnostics.push_back(e.diag);
                recover();
            }
        }
        return out;
    }

private:
    Lexer lex_;

    [[noreturn]] void fail(const Span &span, const std::string &msg) {
        throw ParseError{Diagnostic{Diagnostic::Severity::error, span, msg}};
    }

    void recover() {
        // Skip to just past the next statement boundary.
        while (true) {
            Token t = lex_.next();
            if (t.kind == Tok::eof || t.kind == Tok::semi || t.kind == Tok::rbrace) return;
        }
    }

    Token expect(Tok kind, const std::string &what) {
        if (lex_.peek().kind != kind)
            fail(lex_.peek().span, "expected " + what + ", found '" +
                                       (lex_.peek().kind == Tok::eof ? "end of input"
                                                                     : lex_.peek().text) +
                                       "'");
        return lex_.next();
    }

    std::string expect_ident(const std::string &what) { return expect(Tok::ident, what).text; }

    std::vector<std::pair<std::string, int>> parse_weight_list() {
        std::vector<std::pair<std::string, int>> out;
        expect(Tok::lbrace, "'{'");
        while (true) {
            std::string name = expect_ident("a name");
            expect(Tok::colon, "':'");
            bool neg = false;
            if (lex_.peek().kind == Tok::minus) {
                lex_.next();
                neg = true;
            }
            Token w = expect(Tok::integer, "an integer weight");
            out.emplace_back(name, neg ? -static_cast<int>(w.value) : static_cast<int>(w.value));
            if (lex_.peek().kind == Tok::comma) {
                lex_.next();
                continue;
            }
            expect(Tok::rbrace, "',' or '}'");
            return out;
        }
    }

    void parse_item(Script &script) {
        Token head = expect(Tok::ident, "a declaration or command keyword");
        if (head.text == "chart") {
            ChartDecl d;
            d.span = head.span;
            d.name = expect_ident("a chart name");
            d.coords = parse_weight_list();
            script.items.emplace_back(std::move(d));
            return;
        }
        if (head.text == "bundle") {
            BundleDecl d;
            d.span = head.span;
            d.name = expect_ident("a bundle name");
            if (expect_ident("'over'") != "over") fail(head.span, "expected 'over'");
            d.base = expect_ident("a chart name");
            d.frames = parse_weight_list();
            script.items.emplace_back(std::move(d));
            return;
        }
        if (head.text == "cl") {
            ClDecl d;
            d.span = head.span;
            d.dim = static_cast<int>(expect(Tok::integer, "a dimension").value);
            expect(Tok::semi, "';'");
            script.items.emplace_back(std::move(d));
            return;
        }
        const auto &kws = command_keywords();
        bool known = false;
        for (const auto &k : kws) known = known || k == head.text;
        if (!known) fail(head.span, "unknown keyword '" + head.text + "'");
        Command cmd;
        cmd.keyword = head.text;
        cmd.span = head.span;
        while (lex_.peek().kind != Tok::semi) {
            if (lex_.peek().kind == Tok::eof)
                fail(lex_.peek().span, "expected ';' before end of input");
            cmd.args.push_back(parse_arg());
        }
        lex_.next(); // ';'
        script.items.emplace_back(std::move(cmd));
    }

    Arg parse_arg() {
        Arg a;
        const Token &t = lex_.peek();
        a.span = t.span;
        if (t.kind == Tok::lparen) {
            lex_.next();
            a.kind = Arg::Kind::expr;
            a.expr = parse_expr();
            expect(Tok::rparen, "')'");
            return a;
        }
        if (t.kind == Tok::ident) {
            a.kind = Arg::Kind::ident;
            a.ident = lex_.next().text;
            return a;
        }
        if (t.kind == Tok::integer || t.kind == Tok::minus) {
            bool neg = false;
            if (t.kind == Tok::minus) {
                lex_.next();
                neg = true;
            }
            Token n = expect(Tok::integer, "an integer");
            Integer num = neg ? -Integer(n.value) : Integer(n.value);
            if (lex_.peek().kind == Tok::slash) {
                lex_.next();
                Token d = expect(Tok::integer, "a denominator");
                if (d.value == 0) fail(d.span, "zero denominator");
                a.kind = Arg::Kind::rational;
                a.rational = Rational(num, Integer(d.value));
            } else {
                a.kind = Arg::Kind::integer;
                a.integer = neg ? -n.value : n.value;
            }
            return a;
        }
        fail(t.span, "expected a command argument, found '" + t.text + "'");
    }

    ExprPtr make_node(Expr::Kind kind, Span span) {
        auto e = std::make_unique<Expr>();
        e->kind = kind;
        e->span = span;
        return e;
    }

    ExprPtr parse_expr() { return parse_add(); }

    ExprPtr parse_add() {
        ExprPtr lhs = parse_mul();
        while (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus) {
            Token op = lex_.next();
            ExprPtr node =
                make_node(op.kind == Tok::plus ? Expr::Kind::add : Expr::Kind::sub, op.span);
            node->lhs = std::move(lhs);
            node->rhs = parse_mul();
            lhs = std::move(node);
        }
        return lhs;
    }

    ExprPtr parse_mul() {
        ExprPtr lhs = parse_unary();
        while (lex_.peek().kind == Tok::star || lex_.peek().kind == Tok::slash) {
            Token op = lex_.next();
            ExprPtr node =
                make_node(op.kind == Tok::star ? Expr::Kind::mul : Expr::Kind::div, op.span);
            node->lhs = std::move(lhs);
            node->rhs = parse_unary();
            lhs = std::move(node);
        }
        return lhs;
    }

    ExprPtr parse_unary() {
        if (lex_.peek().kind == Tok::minus) {
            Token op = lex_.next();
            ExprPtr node = make_node(Expr::Kind::neg, op.span);
            node->lhs = parse_unary();
            return node;
        }
        return parse_pow();
    }

    ExprPtr parse_pow() {
        ExprPtr base = parse_atom();
        if (lex_.peek().kind == Tok::caret) {
            Token op = lex_.next();
            Token e = expect(Tok::integer, "an integer exponent");
            ExprPtr node = make_node(Expr::Kind::pow, op.span);
            node->lhs = std::move(base);
            node->exponent = static_cast<int>(e.value);
            return node;
        }
        return base;
    }

    ExprPtr parse_atom() {
        const Token &t = lex_.peek();
        if (t.kind == Tok::integer) {
            Token n = lex_.next();
            ExprPtr node = make_node(Expr::Kind::number, n.span);
            node->number = Rational(n.value);
            return node;
        }
        if (t.kind == Tok::ident) {
            Token id = lex_.next();
            if (id.text == "d" && lex_.peek().kind == Tok::lbracket) {
                lex_.next();
                Token var = expect(Tok::ident, "a coordinate name");
                expect(Tok::rbracket, "']'");
                ExprPtr node = make_node(Expr::Kind::deriv, id.span);
                node->name = var.text;
                return node;
            }
            ExprPtr node = make_node(Expr::Kind::ident, id.span);
            node->name = id.text;
            return node;
        }
        if (t.kind == Tok::lparen) {
            lex_.next();
            ExprPtr inner = parse_expr();
            expect(Tok::rparen, "')'");
            return inner;
        }
        fail(t.span, "expected an expression, found '" +
                         (t.kind == Tok::eof ? "end of input" : t.text) + "'");
    }
};

int precedence(Expr::Kind k) {
    switch (k) {
    case Expr::Kind::add:
    case Expr::Kind::sub: return 1;
    case Expr::Kind::mul:
    case Expr::Kind::div: return 2;
    case Expr::Kind::neg: return 3;
    case Expr::Kind::pow: return 4;
    default: return 5;
    }
}

void print_expr(std::ostream &os, const Expr &e, int parent) {
    int prec = precedence(e.kind);
    bool wrap = prec < parent;
    if (wrap) os << "(";
    switch (e.kind) {
    case Expr::Kind::number: os << rat_str(e.number); break;
    case Expr::Kind::ident: os << e.name; break;
    case Expr::Kind::deriv: os << "d[" << e.name << "]"; break;
    case Expr::Kind::add:
        print_expr(os, *e.lhs, prec);
        os << " + ";
        print_expr(os, *e.rhs, prec + 1);
        break;
    case Expr::Kind::sub:
        print_expr(os, *e.lhs, prec);
        os << " - ";
        print_expr(os, *e.rhs, prec + 1);
        break;
    case Expr::Kind::mul:
        print_expr(os, *e.lhs, prec);
        os << "*";
        print_expr(os, *e.rhs, prec + 1);
        break;
    case Expr::Kind::div:
        print_expr(os, *e.lhs, prec);
        os << "/";
        print_expr(os, *e.rhs, prec + 1);
        break;
    case Expr::Kind::neg:
        os << "-";
        print_expr(os, *e.lhs, prec);
        break;
    case Expr::Kind::pow:
        print_expr(os, *e.lhs, prec + 1);
        os << "^" << e.exponent;
        break;
    }
    if (wrap) os << ")";
}

void print_weight_list(std::ostream &os, const std::vector<std::pair<std::string, int>> &ws) {
    os << "{ ";
    for (size_t i = 0; i < ws.size(); ++i) {
        if (i) os << ", ";
        os << ws[i].first << ":" << ws[i].second;
    }
    os << " }";
}

} // namespace

ParseResult parse(const std::string &input) { return Parser(input).run(); }

std::string pretty_print(const Expr &e) {
    std::ostringstream os;
    print_expr(os, e, 0);
    return os.str();
}

std::string pretty_print(const Script &script) {
    std::ostringstream os;
    for (const auto &item : script.items) {
        if (const auto *c = std::get_if<ChartDecl>(&item)) {
            os << "chart " << c->name << " ";
            print_weight_list(os, c->coords);
        } else if (const auto *b = std::get_if<BundleDecl>(&item)) {
            os << "bundle " << b->name << " over " << b->base << " ";
            print_weight_list(os, b->frames);
        } else if (const auto *d = std::get_if<ClDecl>(&item)) {
            os << "cl " << d->dim << ";";
        } else {
            const auto &cmd = std::get<Command>(item);
            os << cmd.keyword;
            for (const auto &a : cmd.args) {
                os << " ";
                switch (a.kind) {
                case Arg::Kind::ident: os << a.ident; break;
                case Arg::Kind::integer: os << a.integer; break;
                case Arg::Kind::rational: os << rat_str(a.rational); break;
                case Arg::Kind::expr:
                    os << "(";
                    print_expr(os, *a.expr, 0);
                    os << ")";
                    break;
                }
            }
            os << ";";
        }
        os << "\n";
    }
    return os.str();
}

} // namespace gg::dsl
