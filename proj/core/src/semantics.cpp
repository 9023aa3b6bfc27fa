#include "q0u/semantics.hpp"

#include <algorithm>

#include "q0u/errors.hpp"
#include "q0u/printer.hpp"
#include "q0u/subst.hpp"

namespace q0u {

Value Value::boolean(bool b) {
    Value v;
    v.type_ = Type::omicron();
    v.v_ = b;
    return v;
}

Value Value::individual(uint32_t index) {
    Value v;
    v.type_ = Type::iota();
    v.v_ = index;
    return v;
}

Value Value::function(const Type& fn_type, std::shared_ptr<const FunctionGraph> graph) {
    Value v;
    v.type_ = fn_type;
    v.v_ = std::move(graph);
    return v;
}

bool Value::as_boolean() const {
    if (const bool* b = std::get_if<bool>(&v_)) return *b;
    throw eval_error("value is not a truth value");
}

uint32_t Value::as_individual() const {
    if (const uint32_t* i = std::get_if<uint32_t>(&v_)) return *i;
    throw eval_error("value is not an individual");
}

const FunctionGraph& Value::graph() const {
    if (const auto* g = std::get_if<std::shared_ptr<const FunctionGraph>>(&v_)) return **g;
    throw eval_error("value is not a function");
}

bool operator==(const Value& a, const Value& b) {
    if (a.type_ != b.type_) return false;
    if (a.v_.index() != b.v_.index()) return false;
    if (const bool* x = std::get_if<bool>(&a.v_)) return *x == std::get<bool>(b.v_);
    if (const uint32_t* x = std::get_if<uint32_t>(&a.v_)) return *x == std::get<uint32_t>(b.v_);
    const FunctionGraph& ga = a.graph();
    const FunctionGraph& gb = b.graph();
    if (ga.entries.size() != gb.entries.size()) return false;
    for (size_t i = 0; i < ga.entries.size(); ++i) {
        if (ga.entries[i].has_value() != gb.entries[i].has_value()) return false;
        if (ga.entries[i] && !(*ga.entries[i] == *gb.entries[i])) return false;
    }
    return true;
}

Model::Model(std::vector<std::string> base_labels, uint64_t cap)
    : base_(std::move(base_labels)), cap_(cap) {
    if (base_.empty()) throw model_error("the domain of individuals must be nonempty");
    for (size_t i = 0; i < base_.size(); ++i) {
        if (base_[i] == "T" || base_[i] == "F")
            throw model_error("base label '" + base_[i] + "' is reserved for truth values");
        for (size_t j = i + 1; j < base_.size(); ++j)
            if (base_[i] == base_[j]) throw model_error("duplicate base label '" + base_[i] + "'");
    }
}

namespace {

// a^b saturating at Model::kSaturated.
uint64_t sat_pow(uint64_t a, uint64_t b) {
    uint64_t result = 1;
    for (uint64_t i = 0; i < b; ++i) {
        if (result > Model::kSaturated / a) return Model::kSaturated;
        result *= a;
    }
    return result;
}

std::string cardinality_text(uint64_t n) {
    return n == Model::kSaturated ? "more than 2^63" : std::to_string(n);
}

}  // namespace

uint64_t Model::domain_size(const Type& t) const {
    switch (t.kind()) {
        case TypeKind::Omicron: return 2;
        case TypeKind::Iota: return static_cast<uint64_t>(base_.size());
        case TypeKind::Arrow: {
            const uint64_t sc = domain_size(t.codomain());
            const uint64_t sd = domain_size(t.domain());
            if (sc == kSaturated || sd == kSaturated) return kSaturated;
            const uint64_t per_entry = t.codomain().is_omicron() ? sc : sc + 1;
            return sat_pow(per_entry, sd);
        }
    }
    return kSaturated;
}

void Model::ensure_enumerable(const Type& t) const {
    const uint64_t n = domain_size(t);
    if (n > cap_) throw domain_cap_error(print_type(t), cardinality_text(n), cap_);
}

Value Model::element(const Type& t, uint64_t index) const {
    switch (t.kind()) {
        case TypeKind::Omicron: return Value::boolean(index == 1);
        case TypeKind::Iota: return Value::individual(static_cast<uint32_t>(index));
        case TypeKind::Arrow: break;
    }
    auto& per_type = element_cache_[t];
    if (auto it = per_type.find(index); it != per_type.end()) return it->second;
    const uint64_t original_index = index;
    ensure_enumerable(t);
    const Type& cod = t.codomain();
    const Type& dom = t.domain();
    const uint64_t sc = domain_size(cod);
    const uint64_t sd = domain_size(dom);
    const uint64_t per_entry = cod.is_omicron() ? sc : sc + 1;
    auto graph = std::make_shared<FunctionGraph>();
    graph->entries.resize(sd);
    for (uint64_t k = 0; k < sd; ++k) {
        const uint64_t digit = index % per_entry;
        index /= per_entry;
        if (cod.is_omicron()) {
            graph->entries[k] = element(cod, digit);
        } else if (digit > 0) {
            graph->entries[k] = element(cod, digit - 1);
        }
    }
    Value v = Value::function(t, std::move(graph));
    element_cache_[t].emplace(original_index, v);
    return v;
}

uint64_t Model::index_of(const Value& v) const {
    const Type& t = v.type();
    switch (t.kind()) {
        case TypeKind::Omicron: return v.as_boolean() ? 1 : 0;
        case TypeKind::Iota: return v.as_individual();
        case TypeKind::Arrow: break;
    }
    const Type& cod = t.codomain();
    const uint64_t sc = domain_size(cod);
    const uint64_t per_entry = cod.is_omicron() ? sc : sc + 1;
    const FunctionGraph& g = v.graph();
    uint64_t index = 0;
    for (size_t k = g.entries.size(); k-- > 0;) {
        uint64_t digit = 0;
        if (cod.is_omicron()) {
            digit = index_of(*g.entries[k]);
        } else {
            digit = g.entries[k] ? index_of(*g.entries[k]) + 1 : 0;
        }
        index = index * per_entry + digit;
    }
    return index;
}

void Model::interpret(const std::string& name, const Value& v) {
    if (v.type().is_arrow()) {
        const uint64_t sd = domain_size(v.type().domain());
        if (v.graph().entries.size() != sd)
            throw model_error("value for '" + name + "' is not an element of the domain of " +
                              print_type(v.type()));
        if (v.type().codomain().is_omicron()) {
            for (const auto& e : v.graph().entries)
                if (!e)
                    throw model_error("value for '" + name + "' is a partial graph, but domains " +
                                      "at predicate types hold total functions only");
        }
    }
    constants_[name] = v;
}

std::optional<Value> Model::constant_value(const std::string& name) const {
    auto it = constants_.find(name);
    if (it == constants_.end()) return std::nullopt;
    return it->second;
}

Value Model::q_value(const Type& alpha) const {
    auto it = q_cache_.find(alpha);
    if (it != q_cache_.end()) return it->second;
    ensure_enumerable(alpha);
    const uint64_t n = domain_size(alpha);
    const Type row_type = Type::arrow(Type::omicron(), alpha);
    const Type q_type = Type::arrow(row_type, alpha);
    auto outer = std::make_shared<FunctionGraph>();
    outer->entries.resize(n);
    for (uint64_t i = 0; i < n; ++i) {
        auto row = std::make_shared<FunctionGraph>();
        row->entries.resize(n);
        for (uint64_t j = 0; j < n; ++j) row->entries[j] = Value::boolean(i == j);
        outer->entries[i] = Value::function(row_type, std::move(row));
    }
    Value v = Value::function(q_type, std::move(outer));
    q_cache_.emplace(alpha, v);
    return v;
}

Value Model::iota_value(const Type& alpha) const {
    if (alpha.is_omicron()) throw eval_error("no selector at type o");
    auto it = iota_cache_.find(alpha);
    if (it != iota_cache_.end()) return it->second;
    const Type pred_type = Type::arrow(Type::omicron(), alpha);
    ensure_enumerable(pred_type);
    const uint64_t n = domain_size(alpha);
    const uint64_t preds = domain_size(pred_type);
    auto graph = std::make_shared<FunctionGraph>();
    graph->entries.resize(preds);
    for (uint64_t s = 0; s < preds; ++s) {
        const Value pred = element(pred_type, s);
        uint64_t member = 0, count = 0;
        for (uint64_t k = 0; k < n; ++k) {
            if (pred.graph().entries[k]->as_boolean()) {
                member = k;
                ++count;
            }
        }
        if (count == 1) graph->entries[s] = element(alpha, member);
    }
    Value v = Value::function(Type::arrow(alpha, pred_type), std::move(graph));
    iota_cache_.emplace(alpha, v);
    return v;
}

namespace {

struct EvalContext {
    const Model& m;
    std::map<const void*, Model::ClosedEntry>& closed;
};

PartialValue valuate_compute(EvalContext& ctx, Assignment& phi, const Wff& w);

// Closed applications and abstractions valuate to the same thing under
// every assignment; memoize them per model, keyed by node identity.
PartialValue valuate_rec(EvalContext& ctx, Assignment& phi, const Wff& w) {
    const WffKind kind = w.kind();
    if (kind == WffKind::App || kind == WffKind::Abs) {
        auto it = ctx.closed.find(w.node_id());
        if (it != ctx.closed.end()) {
            if (it->second.value) return *it->second.value;
        } else if (free_variables(w).empty()) {
            PartialValue r = valuate_compute(ctx, phi, w);
            ctx.closed.emplace(w.node_id(), Model::ClosedEntry{w, r});
            return r;
        } else {
            ctx.closed.emplace(w.node_id(), Model::ClosedEntry{w, std::nullopt});
        }
    }
    return valuate_compute(ctx, phi, w);
}

PartialValue valuate_compute(EvalContext& ctx, Assignment& phi, const Wff& w) {
    const Model& m = ctx.m;
    switch (w.kind()) {
        case WffKind::Var: {
            const Variable v{w.name(), w.atom_type()};
            auto it = phi.find(v);
            if (it == phi.end())
                throw eval_error("assignment does not cover the free variable " +
                                 print_variable(v));
            return PartialValue::of(it->second);
        }
        case WffKind::Const: {
            Type alpha;
            if (is_q_const(w, &alpha)) return PartialValue::of(m.q_value(alpha));
            if (is_iota_const(w, &alpha)) return PartialValue::of(m.iota_value(alpha));
            auto v = m.constant_value(w.name());
            if (!v) throw eval_error("model does not interpret the constant '" + w.name() + "'");
            if (v->type() != w.atom_type())
                throw eval_error("model interprets '" + w.name() + "' at type " +
                                 print_type(v->type()) + ", wff expects " +
                                 print_type(w.atom_type()));
            return PartialValue::of(*v);
        }
        case WffKind::App: {
            // Fully applied Q and iota are evaluated without materializing
            // the identity or selector graphs; same values, no enumeration
            // of the function's own domain.
            if (w.fun().kind() == WffKind::App && is_q_const(w.fun().fun())) {
                const PartialValue lhs = valuate_rec(ctx, phi, w.fun().arg());
                const PartialValue rhs = valuate_rec(ctx, phi, w.arg());
                if (lhs.defined() && rhs.defined())
                    return PartialValue::of(Value::boolean(*lhs.value == *rhs.value));
                return PartialValue::of(Value::boolean(false));
            }
            if (is_iota_const(w.fun())) {
                const PartialValue pred = valuate_rec(ctx, phi, w.arg());
                if (pred.defined()) {
                    const FunctionGraph& g = pred.value->graph();
                    uint64_t member = 0, count = 0;
                    for (uint64_t k = 0; k < g.entries.size(); ++k) {
                        if (g.entries[k]->as_boolean()) {
                            member = k;
                            ++count;
                        }
                    }
                    if (count == 1)
                        return PartialValue::of(m.element(pred.value->type().domain(), member));
                }
                return PartialValue::undefined();
            }
            const PartialValue f = valuate_rec(ctx, phi, w.fun());
            const PartialValue a = valuate_rec(ctx, phi, w.arg());
            const Type result_type = w.type();
            if (f.defined() && a.defined()) {
                const FunctionGraph& g = f.value->graph();
                const uint64_t k = m.index_of(*a.value);
                if (g.entries[k]) return PartialValue::of(*g.entries[k]);
            }
            if (result_type.is_omicron()) return PartialValue::of(Value::boolean(false));
            return PartialValue::undefined();
        }
        case WffKind::Abs: {
            const Variable& x = w.binder();
            m.ensure_enumerable(x.type);
            const uint64_t n = m.domain_size(x.type);
            auto graph = std::make_shared<FunctionGraph>();
            graph->entries.resize(n);
            auto prev = phi.find(x);
            std::optional<Value> saved;
            if (prev != phi.end()) saved = prev->second;
            for (uint64_t d = 0; d < n; ++d) {
                phi[x] = m.element(x.type, d);
                PartialValue body = valuate_rec(ctx, phi, w.body());
                if (body.defined()) graph->entries[d] = *body.value;
            }
            if (saved)
                phi[x] = *saved;
            else
                phi.erase(x);
            return PartialValue::of(Value::function(w.type(), std::move(graph)));
        }
        case WffKind::Abbrev:
            throw eval_error("valuation requires a core wff (found a folded abbreviation)");
    }
    throw eval_error("unknown wff kind");
}

std::vector<Variable> sorted_free_variables(const Wff& w) {
    VariableSet fv = free_variables(w);
    return std::vector<Variable>(fv.begin(), fv.end());
}

}  // namespace

PartialValue valuate(const Model& m, const Assignment& phi, const Wff& core) {
    Assignment scratch = phi;
    EvalContext ctx{m, m.closed_cache_};
    return valuate_rec(ctx, scratch, core);
}

std::optional<Assignment> find_falsifying_assignment(const Model& m, const Wff& core) {
    if (!(core.type() == Type::omicron()))
        throw eval_error("validity applies to wffs of type o only");
    const std::vector<Variable> vars = sorted_free_variables(core);
    for (const Variable& v : vars) m.ensure_enumerable(v.type);
    std::vector<uint64_t> sizes, odometer(vars.size(), 0);
    sizes.reserve(vars.size());
    for (const Variable& v : vars) sizes.push_back(m.domain_size(v.type));
    Assignment phi;
    for (;;) {
        for (size_t i = 0; i < vars.size(); ++i) phi[vars[i]] = m.element(vars[i].type, odometer[i]);
        PartialValue r = valuate(m, phi, core);
        if (!r.defined() || !r.value->as_boolean()) return phi;
        size_t i = 0;
        for (; i < vars.size(); ++i) {
            if (++odometer[i] < sizes[i]) break;
            odometer[i] = 0;
        }
        if (i == vars.size()) return std::nullopt;
    }
}

bool is_valid_in_model(const Model& m, const Wff& core) {
    return !find_falsifying_assignment(m, core).has_value();
}

namespace {

struct Skeleton {
    enum Op { Atom, ConstTrue, ConstFalse, Neg, Conj, Disj, Impl, Iff } op = Atom;
    size_t atom = 0;
    std::unique_ptr<Skeleton> left, right;
};

size_t atom_index(std::vector<Wff>& atoms, const Wff& w) {
    for (size_t i = 0; i < atoms.size(); ++i)
        if (atoms[i] == w) return i;
    atoms.push_back(w);
    return atoms.size() - 1;
}

std::unique_ptr<Skeleton> build_skeleton(const Wff& w, std::vector<Wff>& atoms) {
    auto node = std::make_unique<Skeleton>();
    if (w.kind() == WffKind::Abbrev) {
        const auto& args = w.abbrev_args();
        switch (w.abbrev_name()) {
            case AbbrevName::True: node->op = Skeleton::ConstTrue; return node;
            case AbbrevName::False: node->op = Skeleton::ConstFalse; return node;
            case AbbrevName::Not:
                node->op = Skeleton::Neg;
                node->left = build_skeleton(args[0], atoms);
                return node;
            case AbbrevName::And:
            case AbbrevName::Or:
            case AbbrevName::Implies:
                node->op = w.abbrev_name() == AbbrevName::And   ? Skeleton::Conj
                           : w.abbrev_name() == AbbrevName::Or ? Skeleton::Disj
                                                               : Skeleton::Impl;
                node->left = build_skeleton(args[0], atoms);
                node->right = build_skeleton(args[1], atoms);
                return node;
            case AbbrevName::Equals:
                if (args[0].type().is_omicron()) {
                    node->op = Skeleton::Iff;
                    node->left = build_skeleton(args[0], atoms);
                    node->right = build_skeleton(args[1], atoms);
                    return node;
                }
                break;
            default: break;
        }
    }
    node->op = Skeleton::Atom;
    node->atom = atom_index(atoms, w);
    return node;
}

bool eval_skeleton(const Skeleton& s, const std::vector<bool>& row) {
    switch (s.op) {
        case Skeleton::Atom: return row[s.atom];
        case Skeleton::ConstTrue: return true;
        case Skeleton::ConstFalse: return false;
        case Skeleton::Neg: return !eval_skeleton(*s.left, row);
        case Skeleton::Conj: return eval_skeleton(*s.left, row) && eval_skeleton(*s.right, row);
        case Skeleton::Disj: return eval_skeleton(*s.left, row) || eval_skeleton(*s.right, row);
        case Skeleton::Impl: return !eval_skeleton(*s.left, row) || eval_skeleton(*s.right, row);
        case Skeleton::Iff: return eval_skeleton(*s.left, row) == eval_skeleton(*s.right, row);
    }
    return false;
}

}  // namespace

bool tautologous(const Wff& surface) {
    if (!(surface.type() == Type::omicron()))
        throw eval_error("tautologous applies to wffs of type o only");
    std::vector<Wff> atoms;
    auto skeleton = build_skeleton(surface, atoms);
    const size_t n = atoms.size();
    if (n > 32) throw eval_error("propositional skeleton has too many atoms (" +
                                 std::to_string(n) + ")");
    std::vector<bool> row(n, false);
    for (uint64_t mask = 0;; ++mask) {
        for (size_t i = 0; i < n; ++i) row[i] = (mask >> i) & 1;
        if (!eval_skeleton(*skeleton, row)) return false;
        if (mask + 1 == (uint64_t{1} << n)) break;
    }
    return true;
}

std::string print_value(const Model& m, const Value& v) {
    if (v.type().is_omicron()) return v.as_boolean() ? "T" : "F";
    if (v.type().is_iota()) return m.base_labels()[v.as_individual()];
    std::string out = "{";
    const FunctionGraph& g = v.graph();
    bool first = true;
    for (size_t k = 0; k < g.entries.size(); ++k) {
        if (!g.entries[k]) continue;
        if (!first) out += "; ";
        first = false;
        out += print_value(m, m.element(v.type().domain(), k));
        out += " |-> ";
        out += print_value(m, *g.entries[k]);
    }
    out += "}";
    return out;
}

}  // namespace q0u
