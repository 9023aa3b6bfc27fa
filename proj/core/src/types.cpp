#include "q0u/types.hpp"

#include <cctype>
#include <vector>

#include "q0u/errors.hpp"

namespace q0u {

struct Type::Node {
    TypeKind kind;
    Type codomain;
    Type domain;
};

Type Type::iota() {
    static const auto node = std::make_shared<const Node>(Node{TypeKind::Iota, {}, {}});
    return Type(node);
}

Type Type::omicron() {
    static const auto node = std::make_shared<const Node>(Node{TypeKind::Omicron, {}, {}});
    return Type(node);
}

Type Type::arrow(const Type& codomain, const Type& domain) {
    if (!codomain.valid() || !domain.valid()) throw type_error("arrow type over empty handle");
    return Type(std::make_shared<const Node>(Node{TypeKind::Arrow, codomain, domain}));
}

TypeKind Type::kind() const {
    if (!node_) throw type_error("use of empty type handle");
    return node_->kind;
}

const Type& Type::codomain() const {
    if (kind() != TypeKind::Arrow) throw type_error("codomain() on a base type");
    return node_->codomain;
}

const Type& Type::domain() const {
    if (kind() != TypeKind::Arrow) throw type_error("domain() on a base type");
    return node_->domain;
}

bool operator==(const Type& a, const Type& b) {
    if (a.node_ == b.node_) return true;
    if (!a.node_ || !b.node_) return false;
    if (a.node_->kind != b.node_->kind) return false;
    if (a.node_->kind != TypeKind::Arrow) return true;
    return a.node_->codomain == b.node_->codomain && a.node_->domain == b.node_->domain;
}

bool Type::operator<(const Type& other) const {
    if (node_ == other.node_) return false;
    const int ka = static_cast<int>(kind());
    const int kb = static_cast<int>(other.kind());
    if (ka != kb) return ka < kb;
    if (kind() != TypeKind::Arrow) return false;
    if (codomain() < other.codomain()) return true;
    if (other.codomain() < codomain()) return false;
    return domain() < other.domain();
}

namespace {

void print_type_rec(const Type& t, bool parenthesize_arrows, std::string& out) {
    switch (t.kind()) {
        case TypeKind::Iota: out += 'i'; return;
        case TypeKind::Omicron: out += 'o'; return;
        case TypeKind::Arrow:
            if (parenthesize_arrows) {
                out += '(';
                print_type_rec(t.codomain(), false, out);
                print_type_rec(t.domain(), true, out);
                out += ')';
            } else {
                print_type_rec(t.codomain(), false, out);
                print_type_rec(t.domain(), true, out);
            }
            return;
    }
}

struct TypeScanner {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return text[pos];
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw parse_error(msg, 1, static_cast<int>(pos) + 1);
    }

    // atom := 'i' | 'o' | '(' seq ')'
    Type atom() {
        const char c = peek();
        if (c == 'i') {
            ++pos;
            return Type::iota();
        }
        if (c == 'o') {
            ++pos;
            return Type::omicron();
        }
        if (c == '(') {
            ++pos;
            Type inner = sequence();
            if (done() || peek() != ')') fail("unbalanced parenthesis in type");
            ++pos;
            return inner;
        }
        fail(std::string("unexpected character '") + c + "' in type");
    }

    // seq := atom+ with left association
    Type sequence() {
        Type result = atom();
        while (!done() && peek() != ')') {
            result = Type::arrow(result, atom());
        }
        return result;
    }
};

}  // namespace

std::string print_type(const Type& t) {
    std::string out;
    print_type_rec(t, false, out);
    return out;
}

Type parse_type(std::string_view text) {
    TypeScanner scanner{text};
    if (scanner.done()) throw parse_error("empty type", 1, 1);
    Type result = scanner.sequence();
    if (!scanner.done()) scanner.fail("trailing characters after type");
    return result;
}

bool Variable::operator<(const Variable& other) const {
    if (name != other.name) return name < other.name;
    return type < other.type;
}

std::string print_variable(const Variable& v) {
    std::string out = v.name;
    out += '_';
    if (v.type.is_arrow()) {
        out += '(';
        out += print_type(v.type);
        out += ')';
    } else {
        out += print_type(v.type);
    }
    return out;
}

bool is_variable_name(std::string_view name) {
    if (name.empty()) return false;
    static constexpr std::string_view kBases = "fghxyz";
    if (kBases.find(name[0]) == std::string_view::npos) return false;
    if (name.size() == 1) return true;
    if (name[1] != '^' || name.size() == 2) return false;
    if (name[2] == '0') return false;  // superscripts are positive integers
    for (size_t i = 2; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
    }
    return true;
}

}  // namespace q0u
