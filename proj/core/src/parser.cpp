#include "q0u/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "q0u/abbrev.hpp"
#include "q0u/errors.hpp"

namespace q0u {

namespace {

enum class Tok {
    Ident,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Lambda,
    Dot,
    OpAnd,
    OpOr,
    OpNot,
    OpImplies,
    OpEq,
    OpNeq,
    OpQeq,
    End,
};

struct Token {
    Tok kind;
    std::string name;          // Ident
    std::optional<Type> type;  // Ident's _suffix, if any
    int line = 1, col = 1;
};

class Lexer {
  public:
    explicit Lexer(std::string_view text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_ws();
            Token t = next();
            out.push_back(t);
            if (t.kind == Tok::End) break;
        }
        return out;
    }

  private:
    std::string_view text_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;

    bool done() const { return pos_ >= text_.size(); }
    char peek(size_t ahead = 0) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }
    char advance() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }
    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, line_, col_); }

    Token tok(Tok kind) const { return Token{kind, {}, {}, line_, col_}; }

    Token next() {
        if (done()) return tok(Tok::End);
        const int line = line_, col = col_;
        const char c = peek();
        auto out = [&](Tok kind) {
            Token t{kind, {}, {}, line, col};
            return t;
        };
        switch (c) {
            case '(': advance(); return out(Tok::LParen);
            case ')': advance(); return out(Tok::RParen);
            case '[': advance(); return out(Tok::LBracket);
            case ']': advance(); return out(Tok::RBracket);
            case '.': advance(); return out(Tok::Dot);
            case '/':
                advance();
                if (peek() == '\\') {
                    advance();
                    return out(Tok::OpAnd);
                }
                if (peek() == '=') {
                    advance();
                    return out(Tok::OpNeq);
                }
                fail("stray '/'");
            case '\\':
                advance();
                if (peek() == '/') {
                    advance();
                    return out(Tok::OpOr);
                }
                return out(Tok::Lambda);
            case '~':
                advance();
                if (peek() == '=') {
                    advance();
                    return out(Tok::OpQeq);
                }
                return out(Tok::OpNot);
            case '=':
                advance();
                if (peek() == '>') {
                    advance();
                    return out(Tok::OpImplies);
                }
                return out(Tok::OpEq);
            default: break;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) return lex_ident(line, col);
        fail(std::string("unexpected character '") + c + "'");
    }

    Token lex_ident(int line, int col) {
        std::string name;
        while (!done() && std::isalnum(static_cast<unsigned char>(peek()))) name += advance();
        if (peek() == '^') {
            name += advance();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("superscript digit expected");
            while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) name += advance();
        }
        Token t{Tok::Ident, name, {}, line, col};
        if (peek() == '_') {
            advance();
            t.type = lex_type_suffix();
        }
        return t;
    }

    Type lex_type_suffix() {
        if (peek() == 'i' || peek() == 'o') {
            const char base = advance();
            if (std::isalnum(static_cast<unsigned char>(peek())))
                fail("compound type annotations must be parenthesized, as in f_(oi)");
            return base == 'i' ? Type::iota() : Type::omicron();
        }
        if (peek() == '(') {
            advance();
            std::string inner;
            int depth = 1;
            while (depth > 0) {
                if (done()) fail("unbalanced parenthesis in type annotation");
                const char c = advance();
                if (c == '(') ++depth;
                if (c == ')') --depth;
                if (depth > 0) inner += c;
            }
            try {
                return parse_type(inner);
            } catch (const parse_error& e) {
                fail(std::string("bad type annotation: ") + e.what());
            }
        }
        fail("type annotation expected after '_'");
    }
};

bool is_keyword(const std::string& name) {
    return name == "T" || name == "F" || name == "forall" || name == "exists" ||
           name == "exists1" || name == "def" || name == "undef" || name == "I" ||
           name == "bot" || name == "Q" || name == "iota";
}

class Parser {
  public:
    Parser(std::vector<Token> tokens, const Signature& sig)
        : tokens_(std::move(tokens)), sig_(sig) {}

    Wff run() {
        Wff w = wff();
        expect(Tok::End, "end of input");
        return w;
    }

  private:
    std::vector<Token> tokens_;
    const Signature& sig_;
    size_t pos_ = 0;
    std::vector<Variable> scope_;

    const Token& cur() const { return tokens_[pos_]; }
    const Token& peek(size_t ahead) const {
        return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
    }
    Token take() { return tokens_[pos_++]; }
    bool at(Tok kind) const { return cur().kind == kind; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(msg, cur().line, cur().col);
    }
    void expect(Tok kind, const std::string& what) {
        if (!at(kind)) fail("expected " + what);
        ++pos_;
    }

    Wff wff() { return implication(); }

    Wff implication() {
        Wff lhs = disjunction();
        if (at(Tok::OpImplies)) {
            take();
            return make_abbrev(AbbrevName::Implies, {lhs, implication()});
        }
        return lhs;
    }

    Wff disjunction() {
        Wff w = conjunction();
        while (at(Tok::OpOr)) {
            take();
            w = make_abbrev(AbbrevName::Or, {w, conjunction()});
        }
        return w;
    }

    Wff conjunction() {
        Wff w = equality();
        while (at(Tok::OpAnd)) {
            take();
            w = make_abbrev(AbbrevName::And, {w, equality()});
        }
        return w;
    }

    Wff equality() {
        Wff w = negation();
        while (at(Tok::OpEq) || at(Tok::OpNeq) || at(Tok::OpQeq)) {
            const Tok op = take().kind;
            Wff rhs = negation();
            const AbbrevName name = op == Tok::OpEq    ? AbbrevName::Equals
                                    : op == Tok::OpNeq ? AbbrevName::NotEquals
                                                       : AbbrevName::QuasiEquals;
            w = make_abbrev(name, {w, rhs});
        }
        return w;
    }

    Wff negation() {
        if (at(Tok::OpNot)) {
            take();
            return make_abbrev(AbbrevName::Not, {negation()});
        }
        return binder_or_application();
    }

    Wff binder_or_application() {
        if (at(Tok::Lambda)) {
            const Variable v = binder_variable("\\");
            scope_.push_back(v);
            Wff body = wff();
            scope_.pop_back();
            return Wff::abs(v, body);
        }
        if (at(Tok::Ident) && cur().type == std::nullopt) {
            const std::string& n = cur().name;
            if (n == "forall" || n == "exists" || n == "exists1" || n == "I") {
                take();
                const Variable v = binder_variable(n);
                scope_.push_back(v);
                Wff body = wff();
                scope_.pop_back();
                const AbbrevName name = n == "forall"    ? AbbrevName::Forall
                                        : n == "exists"  ? AbbrevName::Exists
                                        : n == "exists1" ? AbbrevName::ExistsUnique
                                                         : AbbrevName::DefiniteDescription;
                return make_abbrev(name, {v, body});
            }
        }
        return application();
    }

    Variable binder_variable(const std::string& binder_kind) {
        if (at(Tok::Lambda)) take();  // caller for \ leaves the token
        if (!at(Tok::Ident)) fail("variable expected after '" + binder_kind + "'");
        Token t = take();
        if (!is_variable_name(t.name)) fail("'" + t.name + "' is not a variable name");
        if (!t.type) fail("binder '" + t.name + "' needs a type annotation");
        expect(Tok::Dot, "'.' after the binder variable");
        return Variable{t.name, *t.type};
    }

    bool starts_atom() const {
        switch (cur().kind) {
            case Tok::LParen:
            case Tok::LBracket: return true;
            case Tok::Ident: {
                const std::string& n = cur().name;
                return !(n == "forall" || n == "exists" || n == "exists1" || n == "I");
            }
            default: return false;
        }
    }

    Wff application() {
        Wff w = atom();
        while (starts_atom()) {
            const Token at_tok = cur();
            Wff arg = atom();
            try {
                w = Wff::app(w, arg);
            } catch (const type_error& e) {
                throw parse_error(e.what(), at_tok.line, at_tok.col);
            }
        }
        return w;
    }

    // The bare connective constants are written as sections: (~) (/\) (\/) (=>).
    std::optional<Wff> try_section() {
        if (!at(Tok::LParen)) return std::nullopt;
        const Tok op = peek(1).kind;
        if (peek(2).kind != Tok::RParen) return std::nullopt;
        AbbrevName name;
        switch (op) {
            case Tok::OpNot: name = AbbrevName::NotConst; break;
            case Tok::OpAnd: name = AbbrevName::AndConst; break;
            case Tok::OpOr: name = AbbrevName::OrConst; break;
            case Tok::OpImplies: name = AbbrevName::ImpliesConst; break;
            default: return std::nullopt;
        }
        take();
        take();
        take();
        return make_abbrev(name, {});
    }

    Wff atom() {
        if (auto section = try_section()) return *section;
        if (at(Tok::LParen)) {
            take();
            Wff w = wff();
            expect(Tok::RParen, "')'");
            return w;
        }
        if (at(Tok::LBracket)) {
            take();
            Wff w = wff();
            expect(Tok::RBracket, "']'");
            return w;
        }
        if (!at(Tok::Ident)) fail("wff expected");
        Token t = take();
        return resolve_ident(t);
    }

    Wff resolve_ident(const Token& t) {
        const std::string& n = t.name;
        auto no_suffix = [&] {
            if (t.type) throw parse_error("'" + n + "' takes no type annotation", t.line, t.col);
        };
        auto need_suffix = [&] {
            if (!t.type)
                throw parse_error("'" + n + "' needs a type parameter, as in " + n + "_i", t.line,
                                  t.col);
            return *t.type;
        };
        if (n == "T") {
            no_suffix();
            return make_abbrev(AbbrevName::True, {});
        }
        if (n == "F") {
            no_suffix();
            return make_abbrev(AbbrevName::False, {});
        }
        if (n == "def" || n == "undef") {
            no_suffix();
            expect(Tok::LParen, "'(' after " + n);
            Wff inner = wff();
            expect(Tok::RParen, "')'");
            return make_abbrev(n == "def" ? AbbrevName::IsDefined : AbbrevName::IsUndefined,
                               {inner});
        }
        if (n == "bot") {
            Type alpha = need_suffix();
            try {
                return make_abbrev(AbbrevName::Bottom, {alpha});
            } catch (const type_error& e) {
                throw parse_error(e.what(), t.line, t.col);
            }
        }
        if (n == "Q") return Wff::q_const(need_suffix());
        if (n == "iota") {
            Type alpha = need_suffix();
            try {
                return Wff::iota_const(alpha);
            } catch (const type_error& e) {
                throw parse_error(e.what(), t.line, t.col);
            }
        }
        if (is_keyword(n)) fail("keyword '" + n + "' cannot appear here");
        if (is_variable_name(n)) {
            if (t.type) return Wff::var(n, *t.type);
            for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
                if (it->name == n) return Wff::var(*it);
            throw parse_error("free variable '" + n + "' needs a type annotation", t.line, t.col);
        }
        auto declared = sig_.lookup(n);
        if (!declared)
            throw parse_error("unknown constant '" + n + "' (not declared in the signature)",
                              t.line, t.col);
        if (t.type && !(*t.type == *declared))
            throw parse_error("constant '" + n + "' is declared with type " +
                                  print_type(*declared) + ", not " + print_type(*t.type),
                              t.line, t.col);
        return Wff::constant(n, *declared, ConstKind::Nonlogical);
    }
};

}  // namespace

Wff parse_wff(std::string_view text, const Signature& sig) {
    Lexer lexer(text);
    Parser parser(lexer.run(), sig);
    return parser.run();
}

}  // namespace q0u
