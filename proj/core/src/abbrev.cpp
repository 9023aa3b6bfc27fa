#include "q0u/abbrev.hpp"

#include "q0u/errors.hpp"
#include "q0u/subst.hpp"

namespace q0u {

namespace {

const Type& o() {
    static const Type t = Type::omicron();
    return t;
}

Wff q_at(const Type& alpha) { return Wff::q_const(alpha); }

// [A = B] at the type of A.
Wff eq_core(const Wff& a, const Wff& b) { return Wff::app(Wff::app(q_at(a.type()), a), b); }

Wff not_core_of(const Wff& a) { return Wff::app(not_core(), a); }

Wff binary_core(const Wff& op, const Wff& a, const Wff& b) {
    return Wff::app(Wff::app(op, a), b);
}

// [exists v B] over core B.
Wff exists_core(const Variable& v, const Wff& body) {
    return not_core_of(forall_core(v, not_core_of(body)));
}

}  // namespace

const Wff& true_core() {
    // [Q_ooo = Q_ooo]
    static const Wff w = eq_core(q_at(o()), q_at(o()));
    return w;
}

const Wff& false_core() {
    // [lambda x_o T] = [lambda x_o x_o]
    static const Wff w = [] {
        const Variable x{"x", o()};
        return eq_core(Wff::abs(x, true_core()), Wff::abs(x, Wff::var(x)));
    }();
    return w;
}

const Wff& not_core() {
    // [Q_ooo F]
    static const Wff w = Wff::app(q_at(o()), false_core());
    return w;
}

const Wff& and_core() {
    // [lambda x_o lambda y_o [[lambda g_ooo [g T T]] = [lambda g_ooo [g x y]]]]
    static const Wff w = [] {
        const Variable x{"x", o()};
        const Variable y{"y", o()};
        const Variable g{"g", Type::arrow(Type::arrow(o(), o()), o())};
        const Wff gw = Wff::var(g);
        const Wff lhs = Wff::abs(g, binary_core(gw, true_core(), true_core()));
        const Wff rhs = Wff::abs(g, binary_core(gw, Wff::var(x), Wff::var(y)));
        return Wff::abs(x, Wff::abs(y, eq_core(lhs, rhs)));
    }();
    return w;
}

const Wff& implies_core() {
    // [lambda x_o lambda y_o [x = [x and y]]]
    static const Wff w = [] {
        const Variable x{"x", o()};
        const Variable y{"y", o()};
        return Wff::abs(
            x, Wff::abs(y, eq_core(Wff::var(x),
                                   binary_core(and_core(), Wff::var(x), Wff::var(y)))));
    }();
    return w;
}

const Wff& or_core() {
    // [lambda x_o lambda y_o [not [[not x] and [not y]]]]
    static const Wff w = [] {
        const Variable x{"x", o()};
        const Variable y{"y", o()};
        return Wff::abs(
            x, Wff::abs(y, not_core_of(binary_core(and_core(), not_core_of(Wff::var(x)),
                                                   not_core_of(Wff::var(y))))));
    }();
    return w;
}

Wff forall_core(const Variable& x, const Wff& body) {
    // [lambda y_a T] = [lambda x body]; the left binder is the literal y.
    const Wff lhs = Wff::abs(Variable{"y", x.type}, true_core());
    return eq_core(lhs, Wff::abs(x, body));
}

Wff make_abbrev(AbbrevName name, const std::vector<AbbrevArg>& args) {
    auto arity = [&](size_t n) {
        if (args.size() != n)
            throw type_error(std::string(abbrev_name_text(name)) + " expects " +
                             std::to_string(n) + " argument(s), got " +
                             std::to_string(args.size()));
    };
    auto wff_at = [&](size_t i) -> const Wff& {
        if (const Wff* w = std::get_if<Wff>(&args[i])) return *w;
        throw type_error(std::string(abbrev_name_text(name)) + ": argument " +
                         std::to_string(i + 1) + " must be a wff");
    };
    auto var_at = [&](size_t i) -> const Variable& {
        if (const Variable* v = std::get_if<Variable>(&args[i])) return *v;
        throw type_error(std::string(abbrev_name_text(name)) + ": argument " +
                         std::to_string(i + 1) + " must be a variable");
    };
    auto type_at = [&](size_t i) -> const Type& {
        if (const Type* t = std::get_if<Type>(&args[i])) return *t;
        throw type_error(std::string(abbrev_name_text(name)) + ": argument " +
                         std::to_string(i + 1) + " must be a type");
    };

    switch (name) {
        case AbbrevName::True:
        case AbbrevName::False:
        case AbbrevName::AndConst:
        case AbbrevName::OrConst:
        case AbbrevName::ImpliesConst:
        case AbbrevName::NotConst:
            arity(0);
            return Wff::abbrev_nullary(name, {});
        case AbbrevName::Not:
        case AbbrevName::IsDefined:
        case AbbrevName::IsUndefined:
            arity(1);
            return Wff::abbrev_unary(name, wff_at(0));
        case AbbrevName::Equals:
        case AbbrevName::NotEquals:
        case AbbrevName::QuasiEquals:
        case AbbrevName::And:
        case AbbrevName::Or:
        case AbbrevName::Implies:
            arity(2);
            return Wff::abbrev_binary(name, wff_at(0), wff_at(1));
        case AbbrevName::Forall:
        case AbbrevName::Exists:
        case AbbrevName::ExistsUnique:
        case AbbrevName::DefiniteDescription:
            arity(2);
            return Wff::abbrev_binder(name, var_at(0), wff_at(1));
        case AbbrevName::Bottom:
            arity(1);
            return Wff::abbrev_nullary(name, type_at(0));
    }
    throw type_error("unknown abbreviation");
}

Wff expand(const Wff& w) {
    switch (w.kind()) {
        case WffKind::Var:
        case WffKind::Const: return w;
        case WffKind::App: return Wff::app(expand(w.fun()), expand(w.arg()));
        case WffKind::Abs: return Wff::abs(w.binder(), expand(w.body()));
        case WffKind::Abbrev: break;
    }
    const auto& args = w.abbrev_args();
    switch (w.abbrev_name()) {
        case AbbrevName::True: return true_core();
        case AbbrevName::False: return false_core();
        case AbbrevName::AndConst: return and_core();
        case AbbrevName::OrConst: return or_core();
        case AbbrevName::ImpliesConst: return implies_core();
        case AbbrevName::NotConst: return not_core();
        case AbbrevName::Not: return not_core_of(expand(args[0]));
        case AbbrevName::And: return binary_core(and_core(), expand(args[0]), expand(args[1]));
        case AbbrevName::Or: return binary_core(or_core(), expand(args[0]), expand(args[1]));
        case AbbrevName::Implies:
            return binary_core(implies_core(), expand(args[0]), expand(args[1]));
        case AbbrevName::Equals: return eq_core(expand(args[0]), expand(args[1]));
        case AbbrevName::NotEquals:
            return not_core_of(eq_core(expand(args[0]), expand(args[1])));
        case AbbrevName::Forall: return forall_core(w.binder(), expand(w.body()));
        case AbbrevName::Exists: return exists_core(w.binder(), expand(w.body()));
        case AbbrevName::ExistsUnique: {
            // [exists y [[lambda x body] = Q y]], y chosen against the
            // unexpanded body.
            const Variable& x = w.binder();
            const Variable y = fresh_variable(x.type, occurring_variables(w.body()));
            const Wff lam = Wff::abs(x, expand(w.body()));
            const Wff rhs = Wff::app(q_at(x.type), Wff::var(y));
            return exists_core(y, eq_core(lam, rhs));
        }
        case AbbrevName::IsDefined: {
            const Wff operand = w.abbrev_args()[0];
            const Variable v = fresh_variable(operand.type(), occurring_variables(operand));
            return exists_core(v, eq_core(Wff::var(v), expand(operand)));
        }
        case AbbrevName::IsUndefined: {
            const Wff operand = w.abbrev_args()[0];
            const Variable v = fresh_variable(operand.type(), occurring_variables(operand));
            return not_core_of(exists_core(v, eq_core(Wff::var(v), expand(operand))));
        }
        case AbbrevName::QuasiEquals: {
            const Wff a = args[0];
            const Wff b = args[1];
            const Variable va = fresh_variable(a.type(), occurring_variables(a));
            const Variable vb = fresh_variable(b.type(), occurring_variables(b));
            const Wff ea = expand(a);
            const Wff eb = expand(b);
            const Wff def_a = exists_core(va, eq_core(Wff::var(va), ea));
            const Wff def_b = exists_core(vb, eq_core(Wff::var(vb), eb));
            return binary_core(implies_core(), binary_core(or_core(), def_a, def_b),
                               eq_core(ea, eb));
        }
        case AbbrevName::DefiniteDescription:
            return Wff::app(Wff::iota_const(w.binder().type), Wff::abs(w.binder(), expand(w.body())));
        case AbbrevName::Bottom: {
            const Type& alpha = w.abbrev_type_arg();
            const Variable x{"x", alpha};
            const Wff xw = Wff::var(x);
            return Wff::app(Wff::iota_const(alpha),
                            Wff::abs(x, not_core_of(eq_core(xw, xw))));
        }
    }
    throw error("unknown abbreviation in expand");
}

std::optional<EqualityParts> match_equality(const Wff& core) {
    if (core.kind() != WffKind::App) return std::nullopt;
    const Wff& outer = core.fun();
    if (outer.kind() != WffKind::App) return std::nullopt;
    Type alpha;
    if (!is_q_const(outer.fun(), &alpha)) return std::nullopt;
    return EqualityParts{outer.arg(), core.arg(), alpha};
}

std::optional<Wff> match_negation(const Wff& core) {
    if (core.kind() != WffKind::App) return std::nullopt;
    if (core.fun() != not_core()) return std::nullopt;
    return core.arg();
}

namespace {

std::optional<std::pair<Wff, Wff>> match_binary(const Wff& core, const Wff& op) {
    if (core.kind() != WffKind::App) return std::nullopt;
    const Wff& outer = core.fun();
    if (outer.kind() != WffKind::App) return std::nullopt;
    if (outer.fun() != op) return std::nullopt;
    return std::make_pair(outer.arg(), core.arg());
}

}  // namespace

std::optional<std::pair<Wff, Wff>> match_conjunction(const Wff& core) {
    return match_binary(core, and_core());
}

std::optional<std::pair<Wff, Wff>> match_disjunction(const Wff& core) {
    return match_binary(core, or_core());
}

std::optional<std::pair<Wff, Wff>> match_implication(const Wff& core) {
    return match_binary(core, implies_core());
}

std::optional<BinderParts> match_forall(const Wff& core) {
    auto eq = match_equality(core);
    if (!eq) return std::nullopt;
    if (eq->lhs.kind() != WffKind::Abs || eq->rhs.kind() != WffKind::Abs) return std::nullopt;
    const Variable& left_binder = eq->lhs.binder();
    if (left_binder.name != "y") return std::nullopt;
    if (eq->lhs.body() != true_core()) return std::nullopt;
    if (left_binder.type != eq->rhs.binder().type) return std::nullopt;
    return BinderParts{eq->rhs.binder(), eq->rhs.body()};
}

std::optional<BinderParts> match_exists(const Wff& core) {
    auto n1 = match_negation(core);
    if (!n1) return std::nullopt;
    auto fa = match_forall(*n1);
    if (!fa) return std::nullopt;
    auto n2 = match_negation(fa->body);
    if (!n2) return std::nullopt;
    return BinderParts{fa->binder, *n2};
}

std::optional<DefinednessParts> match_is_defined(const Wff& core) {
    auto ex = match_exists(core);
    if (!ex) return std::nullopt;
    auto eq = match_equality(ex->body);
    if (!eq) return std::nullopt;
    if (eq->lhs.kind() != WffKind::Var) return std::nullopt;
    const Variable v{eq->lhs.name(), eq->lhs.atom_type()};
    if (v != ex->binder) return std::nullopt;
    if (free_variables(eq->rhs).count(v)) return std::nullopt;
    return DefinednessParts{v, eq->rhs};
}

std::optional<DefinednessParts> match_is_undefined(const Wff& core) {
    auto n = match_negation(core);
    if (!n) return std::nullopt;
    return match_is_defined(*n);
}

std::optional<BinderParts> match_exists_unique(const Wff& core) {
    auto ex = match_exists(core);
    if (!ex) return std::nullopt;
    auto eq = match_equality(ex->body);
    if (!eq) return std::nullopt;
    if (eq->lhs.kind() != WffKind::Abs) return std::nullopt;
    if (eq->rhs.kind() != WffKind::App) return std::nullopt;
    Type alpha;
    if (!is_q_const(eq->rhs.fun(), &alpha)) return std::nullopt;
    if (eq->rhs.arg().kind() != WffKind::Var) return std::nullopt;
    const Variable y{eq->rhs.arg().name(), eq->rhs.arg().atom_type()};
    if (y != ex->binder) return std::nullopt;
    if (eq->lhs.binder().type != alpha) return std::nullopt;
    if (free_variables(eq->lhs.body()).count(y)) return std::nullopt;
    return BinderParts{eq->lhs.binder(), eq->lhs.body()};
}

std::optional<BinderParts> match_description(const Wff& core) {
    if (core.kind() != WffKind::App) return std::nullopt;
    Type alpha;
    if (!is_iota_const(core.fun(), &alpha)) return std::nullopt;
    if (core.arg().kind() != WffKind::Abs) return std::nullopt;
    if (core.arg().binder().type != alpha) return std::nullopt;
    return BinderParts{core.arg().binder(), core.arg().body()};
}

std::optional<QuasiEqualityParts> match_quasi_equality(const Wff& core) {
    auto imp = match_implication(core);
    if (!imp) return std::nullopt;
    auto dis = match_disjunction(imp->first);
    if (!dis) return std::nullopt;
    auto eq = match_equality(imp->second);
    if (!eq) return std::nullopt;
    auto def_l = match_is_defined(dis->first);
    if (!def_l || def_l->operand != eq->lhs) return std::nullopt;
    auto def_r = match_is_defined(dis->second);
    if (!def_r || def_r->operand != eq->rhs) return std::nullopt;
    return QuasiEqualityParts{eq->lhs, eq->rhs, eq->alpha};
}

std::optional<Type> match_bottom(const Wff& core) {
    auto desc = match_description(core);
    if (!desc) return std::nullopt;
    const Type alpha = desc->binder.type;
    if (desc->binder.name != "x") return std::nullopt;
    const Wff xw = Wff::var(desc->binder);
    if (desc->body != not_core_of(eq_core(xw, xw))) return std::nullopt;
    return alpha;
}

Wff fold(const Wff& w) {
    switch (w.kind()) {
        case WffKind::Var:
        case WffKind::Const: return w;
        case WffKind::Abbrev: {
            // Already folded; refold children for display.
            switch (w.abbrev_name()) {
                case AbbrevName::Forall:
                case AbbrevName::Exists:
                case AbbrevName::ExistsUnique:
                case AbbrevName::DefiniteDescription:
                    return Wff::abbrev_binder(w.abbrev_name(), w.binder(), fold(w.body()));
                default: {
                    const auto& args = w.abbrev_args();
                    if (args.empty()) return w;
                    if (args.size() == 1) return Wff::abbrev_unary(w.abbrev_name(), fold(args[0]));
                    return Wff::abbrev_binary(w.abbrev_name(), fold(args[0]), fold(args[1]));
                }
            }
        }
        default: break;
    }

    if (w == true_core()) return Wff::abbrev_nullary(AbbrevName::True, {});
    if (w == false_core()) return Wff::abbrev_nullary(AbbrevName::False, {});
    if (w == not_core()) return Wff::abbrev_nullary(AbbrevName::NotConst, {});
    if (w == and_core()) return Wff::abbrev_nullary(AbbrevName::AndConst, {});
    if (w == or_core()) return Wff::abbrev_nullary(AbbrevName::OrConst, {});
    if (w == implies_core()) return Wff::abbrev_nullary(AbbrevName::ImpliesConst, {});

    if (auto alpha = match_bottom(w)) return Wff::abbrev_nullary(AbbrevName::Bottom, *alpha);
    if (auto ud = match_is_undefined(w))
        return Wff::abbrev_unary(AbbrevName::IsUndefined, fold(ud->operand));
    if (auto d = match_is_defined(w))
        return Wff::abbrev_unary(AbbrevName::IsDefined, fold(d->operand));
    if (auto e1 = match_exists_unique(w))
        return Wff::abbrev_binder(AbbrevName::ExistsUnique, e1->binder, fold(e1->body));
    if (auto ex = match_exists(w))
        return Wff::abbrev_binder(AbbrevName::Exists, ex->binder, fold(ex->body));
    if (auto n = match_negation(w)) {
        if (auto fa = match_forall(*n))
            return Wff::abbrev_unary(
                AbbrevName::Not, Wff::abbrev_binder(AbbrevName::Forall, fa->binder, fold(fa->body)));
        if (auto eq = match_equality(*n))
            return Wff::abbrev_binary(AbbrevName::NotEquals, fold(eq->lhs), fold(eq->rhs));
        return Wff::abbrev_unary(AbbrevName::Not, fold(*n));
    }
    if (auto qe = match_quasi_equality(w))
        return Wff::abbrev_binary(AbbrevName::QuasiEquals, fold(qe->lhs), fold(qe->rhs));
    if (auto imp = match_implication(w))
        return Wff::abbrev_binary(AbbrevName::Implies, fold(imp->first), fold(imp->second));
    if (auto con = match_conjunction(w))
        return Wff::abbrev_binary(AbbrevName::And, fold(con->first), fold(con->second));
    if (auto dis = match_disjunction(w))
        return Wff::abbrev_binary(AbbrevName::Or, fold(dis->first), fold(dis->second));
    if (auto fa = match_forall(w))
        return Wff::abbrev_binder(AbbrevName::Forall, fa->binder, fold(fa->body));
    if (auto eq = match_equality(w))
        return Wff::abbrev_binary(AbbrevName::Equals, fold(eq->lhs), fold(eq->rhs));
    if (auto desc = match_description(w))
        return Wff::abbrev_binder(AbbrevName::DefiniteDescription, desc->binder, fold(desc->body));

    if (w.kind() == WffKind::App) return Wff::app(fold(w.fun()), fold(w.arg()));
    return Wff::abs(w.binder(), fold(w.body()));
}

}  // namespace q0u
