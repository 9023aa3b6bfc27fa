#include "q0u/subst.hpp"

#include "q0u/errors.hpp"

namespace q0u {

namespace {

void free_vars_rec(const Wff& w, VariableSet& bound, VariableSet& out) {
    switch (w.kind()) {
        case WffKind::Var: {
            Variable v{w.name(), w.atom_type()};
            if (!bound.count(v)) out.insert(v);
            return;
        }
        case WffKind::Const: return;
        case WffKind::App:
            free_vars_rec(w.fun(), bound, out);
            free_vars_rec(w.arg(), bound, out);
            return;
        case WffKind::Abs: {
            const Variable& b = w.binder();
            const bool was_bound = bound.count(b) > 0;
            bound.insert(b);
            free_vars_rec(w.body(), bound, out);
            if (!was_bound) bound.erase(b);
            return;
        }
        case WffKind::Abbrev: {
            for (const Wff& a : w.abbrev_args()) free_vars_rec(a, bound, out);
            switch (w.abbrev_name()) {
                case AbbrevName::Forall:
                case AbbrevName::Exists:
                case AbbrevName::ExistsUnique:
                case AbbrevName::DefiniteDescription: {
                    const Variable& b = w.binder();
                    const bool was_bound = bound.count(b) > 0;
                    bound.insert(b);
                    free_vars_rec(w.body(), bound, out);
                    if (!was_bound) bound.erase(b);
                    return;
                }
                default: return;
            }
        }
    }
}

void occurring_vars_rec(const Wff& w, VariableSet& out) {
    switch (w.kind()) {
        case WffKind::Var: out.insert(Variable{w.name(), w.atom_type()}); return;
        case WffKind::Const: return;
        case WffKind::App:
            occurring_vars_rec(w.fun(), out);
            occurring_vars_rec(w.arg(), out);
            return;
        case WffKind::Abs:
            out.insert(w.binder());
            occurring_vars_rec(w.body(), out);
            return;
        case WffKind::Abbrev:
            for (const Wff& a : w.abbrev_args()) occurring_vars_rec(a, out);
            switch (w.abbrev_name()) {
                case AbbrevName::Forall:
                case AbbrevName::Exists:
                case AbbrevName::ExistsUnique:
                case AbbrevName::DefiniteDescription:
                    out.insert(w.binder());
                    occurring_vars_rec(w.body(), out);
                    return;
                default: return;
            }
    }
}

// Substitution over binder-shaped nodes, shared by Abs and the binding
// abbreviations.  Returns an empty handle when the node binds x itself.
template <typename Rebuild>
Wff subst_under_binder(const Variable& x, const Variable& binder, const Wff& body,
                       const VariableSet& fv_a, Rebuild rebuild) {
    if (binder == x) return {};  // bound here: leave the node untouched (caller handles)
    if (fv_a.count(binder)) {
        // Only an error if x actually occurs free below this binder.
        VariableSet fv_body = free_variables(body);
        if (fv_body.count(x))
            throw capture_error("substitution would capture " + print_variable(binder) +
                                " (free occurrence of " + print_variable(x) + " under its binder)");
    }
    return rebuild();
}

Wff subst_rec(const Wff& a, const Variable& x, const Wff& b, const VariableSet& fv_a) {
    switch (b.kind()) {
        case WffKind::Var:
            if (b.name() == x.name && b.atom_type() == x.type) return a;
            return b;
        case WffKind::Const: return b;
        case WffKind::App:
            return Wff::app(subst_rec(a, x, b.fun(), fv_a), subst_rec(a, x, b.arg(), fv_a));
        case WffKind::Abs: {
            Wff r = subst_under_binder(x, b.binder(), b.body(), fv_a, [&] {
                return Wff::abs(b.binder(), subst_rec(a, x, b.body(), fv_a));
            });
            return r.valid() ? r : b;
        }
        case WffKind::Abbrev: {
            switch (b.abbrev_name()) {
                case AbbrevName::Forall:
                case AbbrevName::Exists:
                case AbbrevName::ExistsUnique:
                case AbbrevName::DefiniteDescription: {
                    Wff r = subst_under_binder(x, b.binder(), b.body(), fv_a, [&] {
                        return Wff::abbrev_binder(b.abbrev_name(), b.binder(),
                                                  subst_rec(a, x, b.body(), fv_a));
                    });
                    return r.valid() ? r : b;
                }
                case AbbrevName::Bottom:
                case AbbrevName::True:
                case AbbrevName::False:
                case AbbrevName::AndConst:
                case AbbrevName::OrConst:
                case AbbrevName::ImpliesConst:
                case AbbrevName::NotConst: return b;
                default: {
                    const auto& args = b.abbrev_args();
                    if (args.size() == 1)
                        return Wff::abbrev_unary(b.abbrev_name(), subst_rec(a, x, args[0], fv_a));
                    return Wff::abbrev_binary(b.abbrev_name(), subst_rec(a, x, args[0], fv_a),
                                              subst_rec(a, x, args[1], fv_a));
                }
            }
        }
    }
    throw error("unknown wff kind in substitution");
}

bool free_for_rec(const Variable& x, const Wff& b, const VariableSet& fv_a,
                  VariableSet& offending_binders) {
    switch (b.kind()) {
        case WffKind::Var:
            if (b.name() == x.name && b.atom_type() == x.type)
                return offending_binders.empty();
            return true;
        case WffKind::Const: return true;
        case WffKind::App:
            return free_for_rec(x, b.fun(), fv_a, offending_binders) &&
                   free_for_rec(x, b.arg(), fv_a, offending_binders);
        case WffKind::Abs:
        case WffKind::Abbrev: {
            bool has_binder = b.kind() == WffKind::Abs;
            if (!has_binder) {
                switch (b.abbrev_name()) {
                    case AbbrevName::Forall:
                    case AbbrevName::Exists:
                    case AbbrevName::ExistsUnique:
                    case AbbrevName::DefiniteDescription: has_binder = true; break;
                    default: break;
                }
            }
            if (!has_binder) {
                for (const Wff& arg : b.abbrev_args())
                    if (!free_for_rec(x, arg, fv_a, offending_binders)) return false;
                return true;
            }
            if (b.kind() == WffKind::Abbrev) {
                for (const Wff& arg : b.abbrev_args())
                    if (!free_for_rec(x, arg, fv_a, offending_binders)) return false;
            }
            const Variable& binder = b.binder();
            if (binder == x) return true;  // x is bound below; no free occurrence there
            const bool offends = fv_a.count(binder) > 0 && !offending_binders.count(binder);
            if (offends) offending_binders.insert(binder);
            const bool ok = free_for_rec(x, b.body(), fv_a, offending_binders);
            if (offends) offending_binders.erase(binder);
            return ok;
        }
    }
    return true;
}

}  // namespace

VariableSet free_variables(const Wff& w) {
    VariableSet bound, out;
    free_vars_rec(w, bound, out);
    return out;
}

VariableSet occurring_variables(const Wff& w) {
    VariableSet out;
    occurring_vars_rec(w, out);
    return out;
}

bool is_closed(const Wff& w) { return free_variables(w).empty(); }

bool is_free_for(const Wff& a, const Variable& x, const Wff& b) {
    if (a.type() != x.type)
        throw type_error("is_free_for: wff has type " + print_type(a.type()) +
                         " but the variable has type " + print_type(x.type));
    VariableSet fv_a = free_variables(a);
    VariableSet offending;
    return free_for_rec(x, b, fv_a, offending);
}

Wff substitute(const Wff& a, const Variable& x, const Wff& b) {
    if (a.type() != x.type)
        throw type_error("substitute: wff has type " + print_type(a.type()) +
                         " but the variable has type " + print_type(x.type));
    return subst_rec(a, x, b, free_variables(a));
}

Variable fresh_variable(const Type& type, const VariableSet& avoid) {
    static const char* kBases[] = {"x", "y", "z", "f", "g", "h"};
    for (unsigned long k = 0;; ++k) {
        std::string name = kBases[k % 6];
        if (k >= 6) name += "^" + std::to_string(k / 6);
        Variable candidate{name, type};
        if (!avoid.count(candidate)) return candidate;
    }
}

}  // namespace q0u
