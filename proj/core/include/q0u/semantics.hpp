#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "q0u/types.hpp"
#include "q0u/wff.hpp"

namespace q0u {

class Model;
struct FunctionGraph;

// An element of some domain of a finite standard frame: a truth value, an
// individual (index into the base), or a finite function graph.
class Value {
  public:
    static Value boolean(bool b);
    static Value individual(uint32_t index);
    static Value function(const Type& fn_type, std::shared_ptr<const FunctionGraph> graph);

    const Type& type() const { return type_; }
    bool is_boolean() const { return std::holds_alternative<bool>(v_); }
    bool as_boolean() const;
    uint32_t as_individual() const;
    const FunctionGraph& graph() const;

    friend bool operator==(const Value& a, const Value& b);
    friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }

  private:
    Type type_;
    std::variant<bool, uint32_t, std::shared_ptr<const FunctionGraph>> v_;
};

// Explicit finite graph: entries[k] is the value at the k-th element of the
// argument domain; an absent entry means the function is undefined there.
// Graphs at predicate types (codomain o) are always total.
struct FunctionGraph {
    std::vector<std::optional<Value>> entries;
};

// "A domain element, or undefined."
struct PartialValue {
    std::optional<Value> value;
    bool defined() const { return value.has_value(); }
    static PartialValue undefined() { return {}; }
    static PartialValue of(Value v) { return {std::move(v)}; }
    friend bool operator==(const PartialValue& a, const PartialValue& b) {
        return a.value == b.value;
    }
};

using Assignment = std::map<Variable, Value>;

// A finite standard model: base individuals plus the full function domains
// derived from them (total functions at predicate types, partial and total
// functions elsewhere), an interpretation for the declared nonlogical
// constants, and the computed interpretations of Q (identity) and iota
// (unique member selection).  Domains are enumerated on demand and never
// materialized beyond the configured element cap.
class Model {
  public:
    explicit Model(std::vector<std::string> base_labels, uint64_t cap = kDefaultCap);

    static constexpr uint64_t kDefaultCap = 5000;

    const std::vector<std::string>& base_labels() const { return base_; }
    uint64_t cap() const { return cap_; }

    // Interprets a nonlogical constant; the value must be an element of its
    // type's domain (total graphs at predicate types).
    void interpret(const std::string& name, const Value& v);
    std::optional<Value> constant_value(const std::string& name) const;
    const std::map<std::string, Value>& constants() const { return constants_; }

    // Cardinality of the domain, saturating at kSaturated when it overflows.
    static constexpr uint64_t kSaturated = UINT64_MAX;
    uint64_t domain_size(const Type& t) const;
    // Throws domain_cap_error unless the domain can be enumerated in cap.
    void ensure_enumerable(const Type& t) const;

    // Bijection between a domain and 0..size-1 (mixed-radix over graphs).
    Value element(const Type& t, uint64_t index) const;
    uint64_t index_of(const Value& v) const;

    // The identity relation on the domain of alpha, as a graph.
    Value q_value(const Type& alpha) const;
    // The unique member selector on the domain of alpha (alpha != o).
    Value iota_value(const Type& alpha) const;

    // Memo entry for closed-subtree valuations; the Wff handle pins the
    // node so its address cannot be reused while the entry lives.
    struct ClosedEntry {
        Wff pin;
        std::optional<PartialValue> value;
    };

  private:
    friend PartialValue valuate(const Model&, const Assignment&, const Wff&);

    std::vector<std::string> base_;
    uint64_t cap_;
    std::map<std::string, Value> constants_;
    mutable std::map<Type, Value> q_cache_;
    mutable std::map<Type, Value> iota_cache_;
    mutable std::map<Type, std::map<uint64_t, Value>> element_cache_;
    // Valuations of closed subtrees, keyed by node identity; an empty
    // optional marks a node known to have free variables.
    mutable std::map<const void*, ClosedEntry> closed_cache_;
};

// The partial valuation.  The wff must be core and the assignment must cover
// its free variables.  Applications with an undefined part (or a graph with
// no entry at the argument) denote F at type o and are undefined otherwise;
// abstractions always denote a graph.
PartialValue valuate(const Model& m, const Assignment& phi, const Wff& core);

// True iff the wff (type o, core) evaluates to T under every assignment of
// its free variables.
bool is_valid_in_model(const Model& m, const Wff& core);

// First assignment under which the wff does not evaluate to T, if any.
std::optional<Assignment> find_falsifying_assignment(const Model& m, const Wff& core);

// Propositional tautology test on the surface tree.  Folded T, F, ~, /\, \/,
// => and = at type o are the connectives; every other maximal subwff is an
// atom.  True iff every truth assignment to the atoms yields T.
bool tautologous(const Wff& surface);

// Renders a value for humans: "T"/"F", a base label, or "{a |-> b; ...}".
std::string print_value(const Model& m, const Value& v);

}  // namespace q0u
