#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "q0u/types.hpp"

namespace q0u {

enum class WffKind { Var, Const, App, Abs, Abbrev };

enum class ConstKind { Logical, Nonlogical };

// One entry per rewrite rule of the definitional table: the binary/unary
// notations plus the bare connective constants they are built from.
enum class AbbrevName {
    Equals,
    True,
    False,
    Forall,
    AndConst,
    And,
    ImpliesConst,
    Implies,
    NotConst,
    Not,
    OrConst,
    Or,
    Exists,
    ExistsUnique,
    NotEquals,
    IsDefined,
    IsUndefined,
    QuasiEquals,
    DefiniteDescription,
    Bottom,
};

const char* abbrev_name_text(AbbrevName name);

// A well-formed formula.  Core wffs are built from variables, constants
// (the equality constants Q, the description constants iota, and declared
// nonlogical constants), application, and abstraction.  Surface wffs may
// additionally contain folded abbreviation nodes, which stand for their
// expansions; the checker and the semantics consume core wffs only.
//
// Immutable shared tree; equality is strict structural identity (no
// alpha-conversion).
class Wff {
  public:
    Wff() = default;  // empty handle
    bool valid() const { return node_ != nullptr; }

    static Wff var(const Variable& v);
    static Wff var(std::string name, const Type& type);
    static Wff constant(std::string name, const Type& type, ConstKind kind);
    static Wff q_const(const Type& alpha);     // Q at type ((o a) a)
    static Wff iota_const(const Type& alpha);  // iota at type (a (o a)); a != o
    static Wff app(const Wff& fun, const Wff& arg);  // checked; throws type_error
    static Wff app_raw(const Wff& fun, const Wff& arg);  // unchecked candidate tree
    static Wff abs(const Variable& binder, const Wff& body);

    // Folded abbreviation constructors; use make_abbrev (abbrev.hpp) for the
    // arity/type-checked entry point.
    static Wff abbrev_nullary(AbbrevName name, const Type& type);
    static Wff abbrev_unary(AbbrevName name, const Wff& a);
    static Wff abbrev_binary(AbbrevName name, const Wff& a, const Wff& b);
    static Wff abbrev_binder(AbbrevName name, const Variable& binder, const Wff& body);

    WffKind kind() const;

    // Var / Const accessors.
    const std::string& name() const;
    ConstKind const_kind() const;
    const Type& atom_type() const;  // declared type of a Var/Const node

    // App accessors.
    const Wff& fun() const;
    const Wff& arg() const;

    // Abs accessors (also the binder of Forall/Exists/ExistsUnique/I folds).
    const Variable& binder() const;
    const Wff& body() const;

    // Abbrev accessors.
    AbbrevName abbrev_name() const;
    const std::vector<Wff>& abbrev_args() const;
    const Type& abbrev_type_arg() const;  // Bottom's type parameter

    // The unique type of this wff.  Computed structurally; throws type_error
    // on ill-typed raw trees.
    Type type() const;

    friend bool operator==(const Wff& a, const Wff& b);
    friend bool operator!=(const Wff& a, const Wff& b) { return !(a == b); }

    // Identity of the shared node; stable for the lifetime of any handle.
    const void* node_id() const { return node_.get(); }

  private:
    struct Node;
    explicit Wff(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

// Recomputes the type bottom-up from the leaves, rejecting trees that break
// the formation rules.  Total over raw candidate trees.
Type infer_type(const Wff& w);

// True iff the wff contains no folded abbreviation nodes.
bool is_core(const Wff& w);

// True iff the wff has no free variables.
bool is_closed(const Wff& w);

// True iff the node is the logical constant Q at some type ((o a) a);
// if so and alpha_out is non-null, *alpha_out receives a.
bool is_q_const(const Wff& w, Type* alpha_out = nullptr);
// Likewise for iota at type (a (o a)).
bool is_iota_const(const Wff& w, Type* alpha_out = nullptr);

// Addresses one subtree of a core wff.  Fun/Arg descend into applications,
// Body descends through an abstraction.  The binder variable of an
// abstraction is not a subtree, so no path can address it.
enum class PathStep { Fun, Arg, Body };

using OccurrencePath = std::vector<PathStep>;

// Resolves the path; throws error if a step does not match the tree.
Wff subtree_at(const Wff& w, const OccurrencePath& path);
// Returns w with the subtree at path replaced by replacement (types must
// agree); throws error on a bad path, type_error on a type change.
Wff replace_at(const Wff& w, const OccurrencePath& path, const Wff& replacement);
// The binder variables of all abstractions the path passes through.
std::vector<Variable> binders_along(const Wff& w, const OccurrencePath& path);

std::string print_path(const OccurrencePath& path);  // "root" or "fun.arg.body"
OccurrencePath parse_path(std::string_view text);

// Finds all occurrences of `needle` as a subtree of `w`, in depth-first
// (fun-before-arg, outer-before-inner) order.
std::vector<OccurrencePath> find_occurrences(const Wff& w, const Wff& needle);

}  // namespace q0u
