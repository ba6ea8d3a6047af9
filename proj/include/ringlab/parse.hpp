#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ringlab/fixtures.hpp"
#include "ringlab/ideal.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

class ParseError : public Error {
public:
    ParseError(int line, int col, const std::string& msg)
        : Error("parse error at " + std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
          line_(line),
          col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_, col_;
};

class ElaborateError : public Error {
public:
    ElaborateError(const std::string& path, const std::string& msg)
        : Error("at " + path + ": " + msg), path_(path) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

/// Element literal: a residue, a table index, or a tuple.
struct ElemLit {
    bool is_tuple = false;
    std::uint64_t nat = 0;
    std::vector<ElemLit> items;

    bool operator==(const ElemLit& o) const {
        return is_tuple == o.is_tuple && nat == o.nat && items == o.items;
    }
    std::string str() const {
        if (!is_tuple) return std::to_string(nat);
        std::string out = "(";
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (i) out += ",";
            out += items[i].str();
        }
        return out + ")";
    }
};

/// AST of the ring-description language.
struct RingExpr {
    enum class Node { ZMod, Prod, Quot, Fixture };

    Node node = Node::ZMod;
    std::uint64_t modulus = 0;       // ZMod
    std::vector<RingExpr> children;  // Prod factors, or the Quot base (size 1)
    std::vector<ElemLit> gens;       // Quot
    std::string fixture;             // Fixture

    static RingExpr zmod(std::uint64_t n) {
        RingExpr e;
        e.node = Node::ZMod;
        e.modulus = n;
        return e;
    }
    static RingExpr prod(std::vector<RingExpr> factors) {
        RingExpr e;
        e.node = Node::Prod;
        e.children = std::move(factors);
        return e;
    }
    static RingExpr quot(RingExpr base, std::vector<ElemLit> gens) {
        RingExpr e;
        e.node = Node::Quot;
        e.children.push_back(std::move(base));
        e.gens = std::move(gens);
        return e;
    }
    static RingExpr named(std::string name) {
        RingExpr e;
        e.node = Node::Fixture;
        e.fixture = std::move(name);
        return e;
    }

    bool operator==(const RingExpr& o) const {
        return node == o.node && modulus == o.modulus && children == o.children &&
               gens == o.gens && fixture == o.fixture;
    }
};

inline std::string to_string(const RingExpr& e) {
    switch (e.node) {
        case RingExpr::Node::ZMod:
            return "Z/" + std::to_string(e.modulus);
        case RingExpr::Node::Prod: {
            std::string out;
            for (std::size_t i = 0; i < e.children.size(); ++i) {
                if (i) out += " x ";
                const bool parens = e.children[i].node == RingExpr::Node::Prod;
                if (parens) out += "(";
                out += to_string(e.children[i]);
                if (parens) out += ")";
            }
            return out;
        }
        case RingExpr::Node::Quot: {
            const auto& base = e.children[0];
            const bool parens =
                base.node == RingExpr::Node::Prod || base.node == RingExpr::Node::Quot;
            std::string out = parens ? "(" + to_string(base) + ")" : to_string(base);
            out += "/(";
            for (std::size_t i = 0; i < e.gens.size(); ++i) {
                if (i) out += ",";
                out += e.gens[i].str();
            }
            return out + ")";
        }
        case RingExpr::Node::Fixture:
            return e.fixture;
    }
    return {};
}

namespace detail {

struct Token {
    enum class Type { Ident, Nat, Slash, LParen, RParen, Comma, End };
    Type type = Type::End;
    std::string text;
    std::uint64_t value = 0;
    int line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                       text_[pos_] == '\n' || text_[pos_] == '\r')) {
            if (text_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
        tok_ = Token{};
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= text_.size()) {
            tok_.type = Token::Type::End;
            return;
        }
        const char c = text_[pos_];
        auto single = [&](Token::Type t) {
            tok_.type = t;
            tok_.text = std::string(1, c);
            ++pos_;
            ++col_;
        };
        if (c == '/') return single(Token::Type::Slash);
        if (c == '(') return single(Token::Type::LParen);
        if (c == ')') return single(Token::Type::RParen);
        if (c == ',') return single(Token::Type::Comma);
        if (c >= '0' && c <= '9') {
            std::uint64_t v = 0;
            while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
                v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
                if (v > (std::uint64_t{1} << 40))
                    throw ParseError(line_, col_, "number literal too large");
                ++pos_;
                ++col_;
            }
            tok_.type = Token::Type::Nat;
            tok_.value = v;
            return;
        }
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') {
            std::string s;
            while (pos_ < text_.size() &&
                   ((text_[pos_] >= 'a' && text_[pos_] <= 'z') ||
                    (text_[pos_] >= 'A' && text_[pos_] <= 'Z') ||
                    (text_[pos_] >= '0' && text_[pos_] <= '9') || text_[pos_] == '_')) {
                s += text_[pos_];
                ++pos_;
                ++col_;
            }
            tok_.type = Token::Type::Ident;
            tok_.text = std::move(s);
            return;
        }
        throw ParseError(line_, col_, std::string("unexpected character '") + c + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) {}

    RingExpr expr() {
        std::vector<RingExpr> terms{term()};
        while (lex_.peek().type == Token::Type::Ident && lex_.peek().text == "x") {
            lex_.take();
            terms.push_back(term());
        }
        if (terms.size() == 1) return std::move(terms[0]);
        return RingExpr::prod(std::move(terms));
    }

    RingExpr term() {
        RingExpr a = atom();
        if (lex_.peek().type == Token::Type::Slash) {
            lex_.take();
            expect(Token::Type::LParen, "'(' after '/'");
            std::vector<ElemLit> gens{elem()};
            while (lex_.peek().type == Token::Type::Comma) {
                lex_.take();
                gens.push_back(elem());
            }
            expect(Token::Type::RParen, "')' closing the generator list");
            return RingExpr::quot(std::move(a), std::move(gens));
        }
        return a;
    }

    RingExpr atom() {
        const Token t = lex_.take();
        if (t.type == Token::Type::Ident) {
            if (t.text == "Z") {
                expect(Token::Type::Slash, "'/' after Z");
                const Token n = lex_.take();
                if (n.type != Token::Type::Nat)
                    throw ParseError(n.line, n.col, "expected modulus after Z/");
                return RingExpr::zmod(n.value);
            }
            if (t.text == "x")
                throw ParseError(t.line, t.col, "'x' is the product operator, not a ring");
            return RingExpr::named(t.text);
        }
        if (t.type == Token::Type::LParen) {
            RingExpr inner = expr();
            expect(Token::Type::RParen, "')'");
            return inner;
        }
        throw ParseError(t.line, t.col, "expected a ring atom");
    }

    ElemLit elem() {
        const Token t = lex_.take();
        if (t.type == Token::Type::Nat) {
            ElemLit e;
            e.nat = t.value;
            return e;
        }
        if (t.type == Token::Type::LParen) {
            ElemLit e;
            e.is_tuple = true;
            e.items.push_back(elem());
            while (lex_.peek().type == Token::Type::Comma) {
                lex_.take();
                e.items.push_back(elem());
            }
            expect(Token::Type::RParen, "')' closing the tuple");
            return e;
        }
        throw ParseError(t.line, t.col, "expected an element literal");
    }

    void expect(Token::Type type, const char* what) {
        const Token t = lex_.take();
        if (t.type != type)
            throw ParseError(t.line, t.col, std::string("expected ") + what);
    }

    void expect_end() {
        const Token& t = lex_.peek();
        if (t.type != Token::Type::End)
            throw ParseError(t.line, t.col, "trailing input after ring expression");
    }

    bool at_comma() const { return lex_.peek().type == Token::Type::Comma; }
    void take_comma() { lex_.take(); }

private:
    Lexer lex_;
};

}  // namespace detail

inline RingExpr parse_ring_expr(std::string_view text) {
    detail::Parser p(text);
    RingExpr e = p.expr();
    p.expect_end();
    return e;
}

/// Comma-separated element literals ("2,3" or "(2,1),(0,1)").
inline std::vector<ElemLit> parse_elem_list(std::string_view text) {
    detail::Parser p(text);
    std::vector<ElemLit> out{p.elem()};
    while (p.at_comma()) {
        p.take_comma();
        out.push_back(p.elem());
    }
    p.expect_end();
    return out;
}

/// Resolve an element literal against a ring; tuple arity and residue
/// ranges are checked. Quotient literals name a base representative.
inline EIdx elaborate_elem(const Ring& r, const ElemLit& lit, const std::string& path) {
    switch (r.kind()) {
        case Ring::Kind::Modular:
        case Ring::Kind::Table:
            if (lit.is_tuple)
                throw ElaborateError(path, "tuple literal for non-product ring " + r.str());
            if (lit.nat >= r.size())
                throw ElaborateError(path, "element " + std::to_string(lit.nat) +
                                               " out of range for " + r.str());
            return lit.nat;
        case Ring::Kind::Product: {
            if (!lit.is_tuple)
                throw ElaborateError(path, "product ring " + r.str() + " needs a tuple literal");
            if (lit.items.size() != r.arity())
                throw ElaborateError(path, "tuple arity " + std::to_string(lit.items.size()) +
                                               " does not match product arity " +
                                               std::to_string(r.arity()));
            std::vector<EIdx> comps(r.arity());
            for (std::size_t k = 0; k < r.arity(); ++k)
                comps[k] = elaborate_elem(*r.factors()[k], lit.items[k],
                                          path + ".component" + std::to_string(k + 1));
            return r.compose(comps);
        }
        case Ring::Kind::Quotient:
            return r.coset_of(elaborate_elem(*r.base(), lit, path));
    }
    throw ElaborateError(path, "unreachable");
}

inline RingPtr elaborate(const RingExpr& e, const std::string& path = "ring") {
    switch (e.node) {
        case RingExpr::Node::ZMod:
            if (e.modulus == 0) throw ElaborateError(path, "modulus must be >= 1");
            try {
                return Ring::modular(e.modulus);
            } catch (const ConstructionError& err) {
                throw ElaborateError(path, err.what());
            }
        case RingExpr::Node::Prod: {
            std::vector<RingPtr> fs;
            for (std::size_t i = 0; i < e.children.size(); ++i) {
                const std::string sub = path + ".factor" + std::to_string(i + 1);
                RingPtr f = elaborate(e.children[i], sub);
                if (f->is_zero_ring())
                    throw ElaborateError(sub, "zero ring cannot be a product factor");
                fs.push_back(std::move(f));
            }
            try {
                return Ring::product(std::move(fs));
            } catch (const ConstructionError& err) {
                throw ElaborateError(path, err.what());
            }
        }
        case RingExpr::Node::Quot: {
            RingPtr base = elaborate(e.children[0], path + ".base");
            if (base->size() > kScanGuard)
                throw ElaborateError(path, "quotient base too large for ideal closure");
            std::vector<EIdx> gens;
            for (std::size_t i = 0; i < e.gens.size(); ++i)
                gens.push_back(elaborate_elem(*base, e.gens[i],
                                              path + ".gen" + std::to_string(i + 1)));
            Ideal ideal = Ideal::from_generators(base, std::move(gens));
            return quotient_ring(ideal);
        }
        case RingExpr::Node::Fixture:
            try {
                return fixtures::by_name(e.fixture);
            } catch (const PreconditionError& err) {
                throw ElaborateError(path, err.what());
            }
    }
    throw ElaborateError(path, "unreachable");
}

}  // namespace ringlab
