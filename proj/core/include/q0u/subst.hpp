#pragma once

#include <set>

#include "q0u/types.hpp"
#include "q0u/wff.hpp"

namespace q0u {

using VariableSet = std::set<Variable>;

// Variables with at least one free occurrence.
VariableSet free_variables(const Wff& w);

// Every variable occurring anywhere, free or bound, binders included.
VariableSet occurring_variables(const Wff& w);

// True iff no free occurrence of x in b lies below a binder that binds a
// free variable of a.  Requires a and x to share a type.
bool is_free_for(const Wff& a, const Variable& x, const Wff& b);

// Replaces every free occurrence of x in b by a.  Bound occurrences and other
// variables are untouched.  Throws capture_error if the substitution would
// capture a free variable of a; nothing is ever renamed.
Wff substitute(const Wff& a, const Variable& x, const Wff& b);

// The first variable of the given type, in the enumeration
// x, y, z, f, g, h, x^1, y^1, ..., that is not in avoid.  Deterministic.
Variable fresh_variable(const Type& type, const VariableSet& avoid);

}  // namespace q0u
