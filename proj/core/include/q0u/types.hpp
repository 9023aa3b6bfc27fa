#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace q0u {

enum class TypeKind { Iota, Omicron, Arrow };

// A simple type: the individuals i, the truth values o, or a function type.
// The function type written "ab" (codomain a, domain b) holds functions
// *from* b *to* a; juxtaposition associates to the left, so "abc" = ((ab)c).
// Immutable value type; cheap to copy.
class Type {
  public:
    Type() = default;  // empty handle; valid() is false

    static Type iota();
    static Type omicron();
    static Type arrow(const Type& codomain, const Type& domain);

    bool valid() const { return node_ != nullptr; }
    TypeKind kind() const;
    bool is_iota() const { return kind() == TypeKind::Iota; }
    bool is_omicron() const { return kind() == TypeKind::Omicron; }
    bool is_arrow() const { return kind() == TypeKind::Arrow; }

    // Arrow accessors; must not be called on base types.
    const Type& codomain() const;
    const Type& domain() const;

    friend bool operator==(const Type& a, const Type& b);
    friend bool operator!=(const Type& a, const Type& b) { return !(a == b); }
    // Structural order, usable as a map key.
    bool operator<(const Type& other) const;

  private:
    struct Node;
    explicit Type(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

// Prints with the left-associative shorthand: ((ab)c) prints as "abc",
// a(bc) prints as "a(bc)".  parse_type(print_type(t)) == t.
std::string print_type(const Type& t);

// Parses a type over the alphabet {i, o, (, )}.  Unparenthesized sequences
// associate to the left.  Throws parse_error on malformed input.
Type parse_type(std::string_view text);

// A typed variable.  Two variables are the same object-language variable
// exactly when both name and type agree.
struct Variable {
    std::string name;
    Type type;

    friend bool operator==(const Variable& a, const Variable& b) {
        return a.name == b.name && a.type == b.type;
    }
    friend bool operator!=(const Variable& a, const Variable& b) { return !(a == b); }
    bool operator<(const Variable& other) const;
};

// "x_i", "f_(oi)", "x^1_i": name plus a type suffix, compound types in parens.
std::string print_variable(const Variable& v);

// True iff the identifier belongs to the variable lexicon: one of
// f g h x y z, optionally followed by ^k for a positive integer k.
bool is_variable_name(std::string_view name);

}  // namespace q0u
