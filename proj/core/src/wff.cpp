#include "q0u/wff.hpp"

#include <utility>

#include "q0u/errors.hpp"

namespace q0u {

const char* abbrev_name_text(AbbrevName name) {
    switch (name) {
        case AbbrevName::Equals: return "Equals";
        case AbbrevName::True: return "True";
        case AbbrevName::False: return "False";
        case AbbrevName::Forall: return "Forall";
        case AbbrevName::AndConst: return "AndConst";
        case AbbrevName::And: return "And";
        case AbbrevName::ImpliesConst: return "ImpliesConst";
        case AbbrevName::Implies: return "Implies";
        case AbbrevName::NotConst: return "NotConst";
        case AbbrevName::Not: return "Not";
        case AbbrevName::OrConst: return "OrConst";
        case AbbrevName::Or: return "Or";
        case AbbrevName::Exists: return "Exists";
        case AbbrevName::ExistsUnique: return "ExistsUnique";
        case AbbrevName::NotEquals: return "NotEquals";
        case AbbrevName::IsDefined: return "IsDefined";
        case AbbrevName::IsUndefined: return "IsUndefined";
        case AbbrevName::QuasiEquals: return "QuasiEquals";
        case AbbrevName::DefiniteDescription: return "DefiniteDescription";
        case AbbrevName::Bottom: return "Bottom";
    }
    return "?";
}

struct Wff::Node {
    WffKind kind;
    // Var / Const
    std::string name;
    ConstKind const_kind = ConstKind::Nonlogical;
    Type atom_type;
    // App
    Wff fun, arg;
    // Abs and binder-style abbreviations
    Variable binder;
    Wff body;
    // Abbrev
    AbbrevName abbrev = AbbrevName::Equals;
    std::vector<Wff> args;
    Type type_arg;
    // Cached type; empty for raw trees, filled by checked constructors.
    Type type;
};

namespace {

Type abbrev_type(AbbrevName name, const std::vector<Wff>& args, const Variable& binder,
                 const Wff& body, const Type& type_arg);

}  // namespace

Wff Wff::var(const Variable& v) {
    if (!is_variable_name(v.name)) throw type_error("not a variable name: " + v.name);
    auto node = std::make_shared<Node>();
    node->kind = WffKind::Var;
    node->name = v.name;
    node->atom_type = v.type;
    node->type = v.type;
    return Wff(std::move(node));
}

Wff Wff::var(std::string name, const Type& type) { return var(Variable{std::move(name), type}); }

Wff Wff::constant(std::string name, const Type& type, ConstKind kind) {
    auto node = std::make_shared<Node>();
    node->kind = WffKind::Const;
    node->name = std::move(name);
    node->const_kind = kind;
    node->atom_type = type;
    node->type = type;
    return Wff(std::move(node));
}

Wff Wff::q_const(const Type& alpha) {
    return constant("Q", Type::arrow(Type::arrow(Type::omicron(), alpha), alpha),
                    ConstKind::Logical);
}

Wff Wff::iota_const(const Type& alpha) {
    if (alpha.is_omicron())
        throw type_error("iota is not available at type o (no description constant o(oo))");
    return constant("iota", Type::arrow(alpha, Type::arrow(Type::omicron(), alpha)),
                    ConstKind::Logical);
}

Wff Wff::app(const Wff& fun, const Wff& arg) {
    const Type ft = fun.type();
    if (!ft.is_arrow())
        throw type_error("application of a non-function (type " + print_type(ft) + ")");
    const Type at = arg.type();
    if (ft.domain() != at)
        throw type_error("application domain mismatch: function expects " +
                         print_type(ft.domain()) + ", argument has " + print_type(at));
    auto node = std::make_shared<Node>();
    node->kind = WffKind::App;
    node->fun = fun;
    node->arg = arg;
    node->type = ft.codomain();
    return Wff(std::move(node));
}

Wff Wff::app_raw(const Wff& fun, const Wff& arg) {
    auto node = std::make_shared<Node>();
    node->kind = WffKind::App;
    node->fun = fun;
    node->arg = arg;
    return Wff(std::move(node));
}

Wff Wff::abs(const Variable& binder, const Wff& body) {
    if (!is_variable_name(binder.name)) throw type_error("not a variable name: " + binder.name);
    auto node = std::make_shared<Node>();
    node->kind = WffKind::Abs;
    node->binder = binder;
    node->body = body;
    node->type = Type::arrow(body.type(), binder.type);
    return Wff(std::move(node));
}

Wff Wff::abbrev_nullary(AbbrevName name, const Type& type) {
    auto node = std::make_shared<Node>();
    node->kind = WffKind::Abbrev;
    node->abbrev = name;
    node->type_arg = type;
    node->type = abbrev_type(name, {}, {}, {}, type);
    return Wff(std::move(node));
}

Wff Wff::abbrev_unary(AbbrevName name, const Wff& a) {
    auto node = std::make_shared<Node>();
    node->kind = WffKind::Abbrev;
    node->abbrev = name;
    node->args = {a};
    node->type = abbrev_type(name, node->args, {}, {}, {});
    return Wff(std::move(node));
}

Wff Wff::abbrev_binary(AbbrevName name, const Wff& a, const Wff& b) {
    auto node = std::make_shared<Node>();
    node->kind = WffKind::Abbrev;
    node->abbrev = name;
    node->args = {a, b};
    node->type = abbrev_type(name, node->args, {}, {}, {});
    return Wff(std::move(node));
}

Wff Wff::abbrev_binder(AbbrevName name, const Variable& binder, const Wff& body) {
    if (!is_variable_name(binder.name)) throw type_error("not a variable name: " + binder.name);
    auto node = std::make_shared<Node>();
    node->kind = WffKind::Abbrev;
    node->abbrev = name;
    node->binder = binder;
    node->body = body;
    node->type = abbrev_type(name, {}, binder, body, {});
    return Wff(std::move(node));
}

WffKind Wff::kind() const {
    if (!node_) throw error("use of empty wff handle");
    return node_->kind;
}

const std::string& Wff::name() const {
    if (kind() != WffKind::Var && kind() != WffKind::Const)
        throw error("name() on a compound wff");
    return node_->name;
}

ConstKind Wff::const_kind() const {
    if (kind() != WffKind::Const) throw error("const_kind() on a non-constant");
    return node_->const_kind;
}

const Type& Wff::atom_type() const {
    if (kind() != WffKind::Var && kind() != WffKind::Const)
        throw error("atom_type() on a compound wff");
    return node_->atom_type;
}

const Wff& Wff::fun() const {
    if (kind() != WffKind::App) throw error("fun() on a non-application");
    return node_->fun;
}

const Wff& Wff::arg() const {
    if (kind() != WffKind::App) throw error("arg() on a non-application");
    return node_->arg;
}

const Variable& Wff::binder() const {
    if (kind() == WffKind::Abs) return node_->binder;
    if (kind() == WffKind::Abbrev &&
        (node_->abbrev == AbbrevName::Forall || node_->abbrev == AbbrevName::Exists ||
         node_->abbrev == AbbrevName::ExistsUnique ||
         node_->abbrev == AbbrevName::DefiniteDescription))
        return node_->binder;
    throw error("binder() on a node without a binder");
}

const Wff& Wff::body() const {
    if (kind() == WffKind::Abs) return node_->body;
    if (kind() == WffKind::Abbrev && node_->body.valid()) return node_->body;
    throw error("body() on a node without a body");
}

AbbrevName Wff::abbrev_name() const {
    if (kind() != WffKind::Abbrev) throw error("abbrev_name() on a non-abbreviation");
    return node_->abbrev;
}

const std::vector<Wff>& Wff::abbrev_args() const {
    if (kind() != WffKind::Abbrev) throw error("abbrev_args() on a non-abbreviation");
    return node_->args;
}

const Type& Wff::abbrev_type_arg() const {
    if (kind() != WffKind::Abbrev || node_->abbrev != AbbrevName::Bottom)
        throw error("abbrev_type_arg() is only for Bottom nodes");
    return node_->type_arg;
}

Type Wff::type() const {
    if (!node_) throw error("use of empty wff handle");
    if (node_->type.valid()) return node_->type;
    return infer_type(*this);
}

bool operator==(const Wff& a, const Wff& b) {
    if (a.node_ == b.node_) return true;
    if (!a.node_ || !b.node_) return false;
    if (a.node_->kind != b.node_->kind) return false;
    switch (a.node_->kind) {
        case WffKind::Var:
            return a.node_->name == b.node_->name && a.node_->atom_type == b.node_->atom_type;
        case WffKind::Const:
            return a.node_->name == b.node_->name &&
                   a.node_->const_kind == b.node_->const_kind &&
                   a.node_->atom_type == b.node_->atom_type;
        case WffKind::App:
            return a.node_->fun == b.node_->fun && a.node_->arg == b.node_->arg;
        case WffKind::Abs:
            return a.node_->binder == b.node_->binder && a.node_->body == b.node_->body;
        case WffKind::Abbrev: {
            if (a.node_->abbrev != b.node_->abbrev) return false;
            if (a.node_->args.size() != b.node_->args.size()) return false;
            for (size_t i = 0; i < a.node_->args.size(); ++i)
                if (a.node_->args[i] != b.node_->args[i]) return false;
            if (a.node_->body.valid() != b.node_->body.valid()) return false;
            if (a.node_->body.valid()) {
                if (a.node_->binder != b.node_->binder) return false;
                if (a.node_->body != b.node_->body) return false;
            }
            if (a.node_->type_arg.valid() != b.node_->type_arg.valid()) return false;
            if (a.node_->type_arg.valid() && a.node_->type_arg != b.node_->type_arg) return false;
            return true;
        }
    }
    return false;
}

namespace {

// The type each abbreviation takes, checked against its rewrite rule.
Type abbrev_type(AbbrevName name, const std::vector<Wff>& args, const Variable& binder,
                 const Wff& body, const Type& type_arg) {
    const Type o = Type::omicron();
    auto need_args = [&](size_t n) {
        if (args.size() != n)
            throw type_error(std::string(abbrev_name_text(name)) + " expects " +
                             std::to_string(n) + " argument(s)");
    };
    switch (name) {
        case AbbrevName::True:
        case AbbrevName::False:
            need_args(0);
            return o;
        case AbbrevName::AndConst:
        case AbbrevName::ImpliesConst:
        case AbbrevName::OrConst:
            need_args(0);
            return Type::arrow(Type::arrow(o, o), o);
        case AbbrevName::NotConst:
            need_args(0);
            return Type::arrow(o, o);
        case AbbrevName::Not:
            need_args(1);
            if (args[0].type() != o) throw type_error("negation of a non-formula");
            return o;
        case AbbrevName::IsDefined:
        case AbbrevName::IsUndefined:
            need_args(1);
            args[0].type();  // must be typable
            return o;
        case AbbrevName::And:
        case AbbrevName::Or:
        case AbbrevName::Implies:
            need_args(2);
            if (args[0].type() != o || args[1].type() != o)
                throw type_error(std::string(abbrev_name_text(name)) +
                                 " connects formulas of type o");
            return o;
        case AbbrevName::Equals:
        case AbbrevName::NotEquals:
        case AbbrevName::QuasiEquals:
            need_args(2);
            if (args[0].type() != args[1].type())
                throw type_error(std::string(abbrev_name_text(name)) +
                                 " requires both sides to have the same type (got " +
                                 print_type(args[0].type()) + " and " +
                                 print_type(args[1].type()) + ")");
            return o;
        case AbbrevName::Forall:
        case AbbrevName::Exists:
        case AbbrevName::ExistsUnique:
            if (!body.valid()) throw type_error("quantifier without a body");
            if (body.type() != o) throw type_error("quantifier body must have type o");
            return o;
        case AbbrevName::DefiniteDescription:
            if (!body.valid()) throw type_error("description without a body");
            if (body.type() != o) throw type_error("description body must have type o");
            if (binder.type.is_omicron())
                throw type_error("description at type o is not available (no iota at o(oo))");
            return binder.type;
        case AbbrevName::Bottom:
            if (!type_arg.valid()) throw type_error("Bottom needs a type parameter");
            if (type_arg.is_omicron())
                throw type_error("Bottom is only available at types other than o");
            return type_arg;
    }
    throw type_error("unknown abbreviation");
}

}  // namespace

Type infer_type(const Wff& w) {
    switch (w.kind()) {
        case WffKind::Var:
        case WffKind::Const:
            return w.atom_type();
        case WffKind::App: {
            const Type ft = infer_type(w.fun());
            const Type at = infer_type(w.arg());
            if (!ft.is_arrow())
                throw type_error("application of a non-function (type " + print_type(ft) + ")");
            if (ft.domain() != at)
                throw type_error("application domain mismatch: function expects " +
                                 print_type(ft.domain()) + ", argument has " + print_type(at));
            return ft.codomain();
        }
        case WffKind::Abs:
            return Type::arrow(infer_type(w.body()), w.binder().type);
        case WffKind::Abbrev:
            return w.type();  // checked at construction
    }
    throw type_error("unknown wff kind");
}

bool is_core(const Wff& w) {
    switch (w.kind()) {
        case WffKind::Var:
        case WffKind::Const: return true;
        case WffKind::App: return is_core(w.fun()) && is_core(w.arg());
        case WffKind::Abs: return is_core(w.body());
        case WffKind::Abbrev: return false;
    }
    return false;
}

bool is_q_const(const Wff& w, Type* alpha_out) {
    if (w.kind() != WffKind::Const || w.const_kind() != ConstKind::Logical || w.name() != "Q")
        return false;
    const Type& t = w.atom_type();
    if (!t.is_arrow() || !t.codomain().is_arrow()) return false;
    if (!t.codomain().codomain().is_omicron()) return false;
    if (t.codomain().domain() != t.domain()) return false;
    if (alpha_out) *alpha_out = t.domain();
    return true;
}

bool is_iota_const(const Wff& w, Type* alpha_out) {
    if (w.kind() != WffKind::Const || w.const_kind() != ConstKind::Logical || w.name() != "iota")
        return false;
    const Type& t = w.atom_type();
    if (!t.is_arrow() || !t.domain().is_arrow()) return false;
    if (!t.domain().codomain().is_omicron()) return false;
    if (t.domain().domain() != t.codomain()) return false;
    if (alpha_out) *alpha_out = t.codomain();
    return true;
}

Wff subtree_at(const Wff& w, const OccurrencePath& path) {
    Wff cur = w;
    for (PathStep step : path) {
        switch (step) {
            case PathStep::Fun:
                if (cur.kind() != WffKind::App) throw error("path step 'fun' at a non-application");
                cur = cur.fun();
                break;
            case PathStep::Arg:
                if (cur.kind() != WffKind::App) throw error("path step 'arg' at a non-application");
                cur = cur.arg();
                break;
            case PathStep::Body:
                if (cur.kind() != WffKind::Abs)
                    throw error("path step 'body' at a non-abstraction");
                cur = cur.body();
                break;
        }
    }
    return cur;
}

namespace {

Wff replace_rec(const Wff& w, const OccurrencePath& path, size_t i, const Wff& replacement) {
    if (i == path.size()) {
        if (w.type() != replacement.type())
            throw type_error("replacement changes the type at the addressed occurrence");
        return replacement;
    }
    switch (path[i]) {
        case PathStep::Fun:
            if (w.kind() != WffKind::App) throw error("path step 'fun' at a non-application");
            return Wff::app(replace_rec(w.fun(), path, i + 1, replacement), w.arg());
        case PathStep::Arg:
            if (w.kind() != WffKind::App) throw error("path step 'arg' at a non-application");
            return Wff::app(w.fun(), replace_rec(w.arg(), path, i + 1, replacement));
        case PathStep::Body:
            if (w.kind() != WffKind::Abs) throw error("path step 'body' at a non-abstraction");
            return Wff::abs(w.binder(), replace_rec(w.body(), path, i + 1, replacement));
    }
    throw error("bad path step");
}

}  // namespace

Wff replace_at(const Wff& w, const OccurrencePath& path, const Wff& replacement) {
    return replace_rec(w, path, 0, replacement);
}

std::vector<Variable> binders_along(const Wff& w, const OccurrencePath& path) {
    std::vector<Variable> binders;
    Wff cur = w;
    for (PathStep step : path) {
        if (step == PathStep::Body) {
            binders.push_back(cur.binder());
            cur = cur.body();
        } else if (step == PathStep::Fun) {
            cur = cur.fun();
        } else {
            cur = cur.arg();
        }
    }
    return binders;
}

std::string print_path(const OccurrencePath& path) {
    if (path.empty()) return "root";
    std::string out;
    for (size_t i = 0; i < path.size(); ++i) {
        if (i) out += '.';
        switch (path[i]) {
            case PathStep::Fun: out += "fun"; break;
            case PathStep::Arg: out += "arg"; break;
            case PathStep::Body: out += "body"; break;
        }
    }
    return out;
}

OccurrencePath parse_path(std::string_view text) {
    OccurrencePath path;
    if (text == "root") return path;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('.', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view part = text.substr(start, end - start);
        if (part == "fun")
            path.push_back(PathStep::Fun);
        else if (part == "arg")
            path.push_back(PathStep::Arg);
        else if (part == "body")
            path.push_back(PathStep::Body);
        else
            throw error("bad occurrence path component: '" + std::string(part) + "'");
        if (end == text.size()) break;
        start = end + 1;
    }
    return path;
}

namespace {

void find_rec(const Wff& w, const Wff& needle, OccurrencePath& prefix,
              std::vector<OccurrencePath>& out) {
    if (w == needle) out.push_back(prefix);
    switch (w.kind()) {
        case WffKind::App:
            prefix.push_back(PathStep::Fun);
            find_rec(w.fun(), needle, prefix, out);
            prefix.back() = PathStep::Arg;
            find_rec(w.arg(), needle, prefix, out);
            prefix.pop_back();
            break;
        case WffKind::Abs:
            prefix.push_back(PathStep::Body);
            find_rec(w.body(), needle, prefix, out);
            prefix.pop_back();
            break;
        default: break;
    }
}

}  // namespace

std::vector<OccurrencePath> find_occurrences(const Wff& w, const Wff& needle) {
    std::vector<OccurrencePath> out;
    OccurrencePath prefix;
    find_rec(w, needle, prefix, out);
    return out;
}

}  // namespace q0u
