#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "q0u/types.hpp"
#include "q0u/wff.hpp"

namespace q0u {

// Argument to make_abbrev: a wff, a variable, or a type parameter.
using AbbrevArg = std::variant<Wff, Variable, Type>;

// Builds a folded abbreviation node, checking arity and types against the
// rewrite rule.  Throws type_error on mismatch (including Bottom or a
// description at type o).
Wff make_abbrev(AbbrevName name, const std::vector<AbbrevArg>& args);

// Rewrites every folded abbreviation down to the core language: variables,
// Q and iota constants, nonlogical constants, application, abstraction.
// Expansion works outside-in; the bound variables introduced for the
// definedness and unique-existence rewrites are chosen by fresh_variable
// over all variables occurring in the (not yet expanded) operand.
// Deterministic and idempotent; preserves the type and the free variables.
Wff expand(const Wff& w);

// Best-effort inverse: structurally matches core subtrees against the
// expansion templates and rebuilds folded nodes for display.  Non-matching
// trees are returned unchanged (recursing into children).  Never used by
// the checker to alter a wff; display and skeleton construction only.
Wff fold(const Wff& w);

// The fixed core expansions of the connective constants and truth values.
const Wff& true_core();
const Wff& false_core();
const Wff& not_core();      // oo
const Wff& and_core();      // ooo
const Wff& or_core();       // ooo
const Wff& implies_core();  // ooo

// Core of a universal quantification over an already-core body.
Wff forall_core(const Variable& x, const Wff& body);

// --- Core template recognizers -------------------------------------------
//
// These match against the fixed rewrite templates.  For the definedness and
// unique-existence shapes the bound witness variable is accepted whenever it
// is not free in the operand; the deterministic constructor choice is one
// such witness among many.

struct EqualityParts {
    Wff lhs, rhs;
    Type alpha;
};
std::optional<EqualityParts> match_equality(const Wff& core);

std::optional<Wff> match_negation(const Wff& core);
std::optional<std::pair<Wff, Wff>> match_conjunction(const Wff& core);
std::optional<std::pair<Wff, Wff>> match_disjunction(const Wff& core);
std::optional<std::pair<Wff, Wff>> match_implication(const Wff& core);

struct BinderParts {
    Variable binder;
    Wff body;
};
std::optional<BinderParts> match_forall(const Wff& core);
std::optional<BinderParts> match_exists(const Wff& core);
std::optional<BinderParts> match_exists_unique(const Wff& core);
std::optional<BinderParts> match_description(const Wff& core);

struct DefinednessParts {
    Variable witness;
    Wff operand;
};
std::optional<DefinednessParts> match_is_defined(const Wff& core);
std::optional<DefinednessParts> match_is_undefined(const Wff& core);

struct QuasiEqualityParts {
    Wff lhs, rhs;
    Type alpha;
};
std::optional<QuasiEqualityParts> match_quasi_equality(const Wff& core);

std::optional<Type> match_bottom(const Wff& core);

}  // namespace q0u
