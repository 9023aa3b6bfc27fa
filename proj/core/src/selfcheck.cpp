#include "q0u/selfcheck.hpp"

#include <chrono>

#include "q0u/abbrev.hpp"
#include "q0u/errors.hpp"
#include "q0u/generator.hpp"
#include "q0u/kernel.hpp"
#include "q0u/parser.hpp"
#include "q0u/printer.hpp"
#include "q0u/subst.hpp"

namespace q0u {

namespace {

const Type& o() {
    static const Type t = Type::omicron();
    return t;
}
const Type& i() {
    static const Type t = Type::iota();
    return t;
}
Type oi() { return Type::arrow(o(), i()); }
Type ii() { return Type::arrow(i(), i()); }
Type oo() { return Type::arrow(o(), o()); }
Type o_oi() { return Type::arrow(o(), oi()); }

Wff v(const char* name, const Type& t) { return Wff::var(name, t); }
Wff cc() { return Wff::constant("c", i(), ConstKind::Nonlogical); }
Wff fold1(AbbrevName n, const Wff& a) { return make_abbrev(n, {a}); }
Wff fold2(AbbrevName n, const Wff& a, const Wff& b) { return make_abbrev(n, {a, b}); }
Wff bot(const Type& t) { return make_abbrev(AbbrevName::Bottom, {t}); }

struct SweepModel {
    std::string id;
    Model model;
};

// Every base size paired with every interpretation of the catalog constant
// c over the individuals.
std::vector<SweepModel> sweep_models(const SelfcheckOptions& opts) {
    std::vector<SweepModel> out;
    for (int n : opts.base_sizes) {
        std::vector<std::string> labels;
        for (int k = 0; k < n; ++k) labels.push_back(std::string(1, static_cast<char>('a' + k)));
        for (int k = 0; k < n; ++k) {
            Model m(labels, opts.cap);
            m.interpret("c", Value::individual(static_cast<uint32_t>(k)));
            out.push_back({"|Di|=" + std::to_string(n) + ",c=" + labels[k], std::move(m)});
        }
    }
    return out;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void finish(SuiteSection& s, const Timer& t) {
    s.seconds = t.seconds();
    s.pass = s.failures.empty();
}

// --- axiom catalog ----------------------------------------------------------

struct AxiomEntry {
    std::string id;
    AxiomSchema schema;
    AxiomParams params;
};

std::vector<AxiomEntry> axiom_catalog() {
    std::vector<AxiomEntry> out;
    auto add = [&](std::string id, AxiomSchema s, AxiomParams p) {
        out.push_back({std::move(id), s, std::move(p)});
    };
    auto xvar = [](const char* n, Type t) { return Variable{n, t}; };

    add("A1", AxiomSchema::A1, {});

    for (const Type& alpha : {i(), o(), oi(), ii()}) {
        AxiomParams p;
        p.alpha = alpha;
        add("A2[" + print_type(alpha) + "]", AxiomSchema::A2, p);
    }
    for (auto [alpha, beta] : std::vector<std::pair<Type, Type>>{
             {i(), i()}, {o(), i()}, {i(), o()}, {o(), oi()}}) {
        AxiomParams p;
        p.alpha = alpha;
        p.beta = beta;
        add("A3[" + print_type(alpha) + "," + print_type(beta) + "]", AxiomSchema::A3, p);
    }

    {
        AxiomParams p;  // [\x.x] c
        p.x = xvar("x", i());
        p.B = v("x", i());
        p.A = cc();
        add("A4[id,c]", AxiomSchema::A4, p);
    }
    {
        AxiomParams p;  // [\x. f x] c
        p.x = xvar("x", i());
        p.B = Wff::app(v("f", oi()), v("x", i()));
        p.A = cc();
        add("A4[fx,c]", AxiomSchema::A4, p);
    }
    {
        AxiomParams p;  // undefined argument
        p.x = xvar("x", i());
        p.B = Wff::app(v("f", oi()), v("x", i()));
        p.A = bot(i());
        add("A4[fx,bot]", AxiomSchema::A4, p);
    }
    {
        AxiomParams p;  // abstraction body
        p.x = xvar("x", i());
        p.B = Wff::abs(Variable{"y", i()}, v("x", i()));
        p.A = cc();
        add("A4[lam,c]", AxiomSchema::A4, p);
    }
    {
        AxiomParams p;  // type o with folded parameters
        p.x = xvar("x", o());
        p.B = fold2(AbbrevName::And, v("x", o()), make_abbrev(AbbrevName::True, {}));
        p.A = make_abbrev(AbbrevName::False, {});
        add("A4[and,F]", AxiomSchema::A4, p);
    }

    for (const Type& alpha : {i(), o(), oi(), o_oi()}) {
        AxiomParams p;
        p.x = xvar("x", alpha);
        add("A5[" + print_type(alpha) + "]", AxiomSchema::A5, p);
    }

    for (auto [id, w] : std::vector<std::pair<std::string, Wff>>{
             {"A6[c]", cc()},
             {"A6[Q_o]", Wff::q_const(o())},
             {"A6[Q_i]", Wff::q_const(i())},
             {"A6[iota_i]", Wff::iota_const(i())}}) {
        AxiomParams p;
        p.c = w;
        add(id, AxiomSchema::A6, p);
    }

    {
        AxiomParams p;
        p.x = xvar("x", i());
        p.B = v("y", i());
        add("A7[y]", AxiomSchema::A7, p);
    }
    {
        AxiomParams p;
        p.x = xvar("x", i());
        p.B = bot(i());
        add("A7[bot]", AxiomSchema::A7, p);
    }
    {
        AxiomParams p;
        p.x = xvar("x", o());
        p.B = Wff::app(v("f", oi()), v("y", i()));
        add("A7[fy]", AxiomSchema::A7, p);
    }
    {
        AxiomParams p;
        p.x = xvar("x", i());
        p.B = Wff::abs(Variable{"y", i()}, v("x", i()));
        add("A7[lam]", AxiomSchema::A7, p);
    }

    // A8/A9 shapes (result type o), A10 shapes (result type not o).
    auto app_shapes_o = [&]() {
        return std::vector<std::pair<std::string, std::pair<Wff, Wff>>>{
            {"f,c", {v("f", oi()), cc()}},
            {"f,bot", {v("f", oi()), bot(i())}},
            {"lamT,y", {Wff::abs(Variable{"x", i()}, make_abbrev(AbbrevName::True, {})), v("y", i())}},
            {"Qx,y", {Wff::app(Wff::q_const(i()), v("x", i())), v("y", i())}},
        };
    };
    for (auto& [id, ab] : app_shapes_o()) {
        AxiomParams p;
        p.A = ab.first;
        p.B = ab.second;
        add("A8[" + id + "]", AxiomSchema::A8, p);
    }
    for (auto& [id, ab] : app_shapes_o()) {
        AxiomParams p;
        p.A = ab.first;
        p.B = ab.second;
        add("A9[" + id + "]", AxiomSchema::A9, p);
    }
    {
        AxiomParams p;
        p.A = bot(oi());
        p.B = cc();
        add("A9[botf,c]", AxiomSchema::A9, p);
    }
    for (auto [id, ab] : std::vector<std::pair<std::string, std::pair<Wff, Wff>>>{
             {"f,bot", {v("f", ii()), bot(i())}},
             {"botf,c", {bot(ii()), cc()}},
             {"lambot,c", {Wff::abs(Variable{"x", i()}, bot(i())), cc()}},
             {"f,y", {v("f", ii()), v("y", i())}}}) {
        AxiomParams p;
        p.A = ab.first;
        p.B = ab.second;
        add("A10[" + id + "]", AxiomSchema::A10, p);
    }

    for (auto [id, ab] : std::vector<std::pair<std::string, std::pair<Wff, Wff>>>{
             {"x,y", {v("x", i()), v("y", i())}},
             {"bot,c", {bot(i()), cc()}},
             {"T,F", {make_abbrev(AbbrevName::True, {}), make_abbrev(AbbrevName::False, {})}},
             {"f,g", {v("f", oi()), v("g", oi())}}}) {
        AxiomParams p;
        p.A = ab.first;
        p.B = ab.second;
        add("A11[" + id + "]", AxiomSchema::A11, p);
    }

    auto description_bodies = [&]() {
        return std::vector<std::pair<std::string, std::pair<Variable, Wff>>>{
            {"x=c", {Variable{"x", i()}, fold2(AbbrevName::Equals, v("x", i()), cc())}},
            {"fx", {Variable{"x", i()}, Wff::app(v("f", oi()), v("x", i()))}},
            {"x/=x", {Variable{"x", i()}, fold2(AbbrevName::NotEquals, v("x", i()), v("x", i()))}},
            {"lam", {Variable{"x", ii()},
                     fold2(AbbrevName::Equals, v("x", ii()),
                           Wff::abs(Variable{"y", i()}, v("y", i())))}},
        };
    };
    for (auto& [id, xa] : description_bodies()) {
        AxiomParams p;
        p.x = xa.first;
        p.A = xa.second;
        add("A12[" + id + "]", AxiomSchema::A12, p);
    }
    for (auto& [id, xa] : description_bodies()) {
        AxiomParams p;
        p.x = xa.first;
        p.A = xa.second;
        add("A13[" + id + "]", AxiomSchema::A13, p);
    }
    return out;
}

// A9 with the negation dropped from the consequent: the suite must notice.
Wff mutated_a9(const AxiomParams& p) {
    const Wff fun = expand(*p.A);
    const Wff arg = expand(*p.B);
    return expand(fold2(AbbrevName::Implies,
                        fold2(AbbrevName::Or, fold1(AbbrevName::IsUndefined, fun),
                              fold1(AbbrevName::IsUndefined, arg)),
                        Wff::app(fun, arg)));
}

}  // namespace

SuiteSection axiom_validity_sweep(const SelfcheckOptions& opts) {
    Timer timer;
    SuiteSection section;
    section.name = opts.mutation == Mutation::A9 ? "axiom validity sweep (A9 mutated)"
                                                 : "axiom validity sweep";
    const std::vector<SweepModel> models = sweep_models(opts);
    for (const AxiomEntry& entry : axiom_catalog()) {
        Wff instance;
        try {
            if (opts.mutation == Mutation::A9 && entry.schema == AxiomSchema::A9)
                instance = mutated_a9(entry.params);
            else
                instance = instantiate_axiom(entry.schema, entry.params);
        } catch (const error& e) {
            section.failures.push_back({entry.id, std::string("instantiation failed: ") + e.what()});
            continue;
        }
        for (const SweepModel& sm : models) {
            ++section.checked;
            try {
                auto cex = find_falsifying_assignment(sm.model, instance);
                if (cex) {
                    std::string detail = "not valid in " + sm.id + " at";
                    for (const auto& [var, val] : *cex)
                        detail += " " + print_variable(var) + ":=" + print_value(sm.model, val);
                    section.failures.push_back({entry.id, detail});
                }
            } catch (const error& e) {
                section.failures.push_back({entry.id, std::string("evaluation failed: ") + e.what()});
            }
        }
    }
    finish(section, timer);
    return section;
}

namespace {

// --- rule preservation catalog ----------------------------------------------

struct R2Entry {
    std::string id;
    Wff minor, major;
};

struct R1Entry {
    std::string id;
    Wff eq, target;
    OccurrencePath path;
};

// Hypothesis-mode entries; blocked ones violate the binder restriction and
// must be rejected by the kernel (and caught semantically when the
// restriction is disabled by the mutation).
struct R1HypEntry {
    std::string id;
    std::vector<Wff> hypotheses;
    Wff eq, target;
    OccurrencePath path;
    bool blocked;
};

std::vector<Wff> valid_pool() {
    AxiomParams a5;
    a5.x = Variable{"x", i()};
    AxiomParams a2;
    a2.alpha = i();
    return {
        expand(make_abbrev(AbbrevName::True, {})),
        instantiate_axiom(AxiomSchema::A5, a5),
        expand(fold1(AbbrevName::IsDefined, cc())),
        expand(fold2(AbbrevName::Equals, v("x", o()), v("x", o()))),
        instantiate_axiom(AxiomSchema::A2, a2),
    };
}

std::vector<R2Entry> r2_catalog() {
    std::vector<R2Entry> out;
    const std::vector<Wff> pool = valid_pool();
    for (size_t a = 0; a < pool.size(); ++a)
        for (size_t b = 0; b < pool.size(); ++b)
            out.push_back({"R2[" + std::to_string(a) + "," + std::to_string(b) + "]", pool[a],
                           expand(fold2(AbbrevName::Implies, pool[a], pool[b]))});
    return out;
}

std::vector<R1Entry> r1_catalog() {
    std::vector<R1Entry> out;
    // Valid quasi-equalities whose right side's free variables occur in the
    // left side.
    std::vector<std::pair<std::string, std::pair<Wff, Wff>>> eq_pool = {
        {"c~=c", {cc(), cc()}},
        {"x~=x", {v("x", i()), v("x", i())}},
        {"bot~=bot", {bot(i()), bot(i())}},
        {"T~=T", {make_abbrev(AbbrevName::True, {}), make_abbrev(AbbrevName::True, {})}},
        {"redex~=c", {Wff::app(Wff::abs(Variable{"x", i()}, v("x", i())), cc()), cc()}},
        {"redex~=y", {Wff::app(Wff::abs(Variable{"x", i()}, v("x", i())), v("y", i())), v("y", i())}},
    };
    for (auto& [id, lr] : eq_pool) {
        const Wff lhs = expand(lr.first);
        const Wff eq = expand(fold2(AbbrevName::QuasiEquals, lr.first, lr.second));
        const Wff target = expand(fold2(AbbrevName::QuasiEquals, lr.first, lr.first));
        const std::vector<OccurrencePath> occurrences = find_occurrences(target, lhs);
        for (size_t k = 0; k < occurrences.size() && k < 4; ++k)
            out.push_back(
                {"R1[" + id + "/occ" + std::to_string(k) + "]", eq, target, occurrences[k]});
    }
    return out;
}

std::vector<R1HypEntry> r1_hyp_catalog() {
    std::vector<R1HypEntry> out;
    {
        // Replacing a constant under a binder that is free in both the
        // hypothesis and the premise: blocked, and semantically wrong once
        // the restriction is switched off.
        const Wff hyp = expand(fold2(AbbrevName::Equals, v("x", i()), cc()));
        const Wff eq = expand(fold2(AbbrevName::QuasiEquals, cc(), v("x", i())));
        const Wff target = expand(
            make_abbrev(AbbrevName::Forall, {Variable{"x", i()}, fold2(AbbrevName::Equals, cc(), cc())}));
        const auto occurrences = find_occurrences(target, expand(cc()));
        out.push_back({"R1H[c->x under forall x]", {hyp}, eq, target, occurrences.at(0), true});
    }
    {
        // Same shape at type o.
        const Wff hyp = expand(fold2(AbbrevName::Equals, v("x", o()), make_abbrev(AbbrevName::True, {})));
        const Wff eq = expand(
            fold2(AbbrevName::QuasiEquals, make_abbrev(AbbrevName::True, {}), v("x", o())));
        const Wff target = expand(make_abbrev(
            AbbrevName::Forall,
            {Variable{"x", o()},
             fold2(AbbrevName::Equals, make_abbrev(AbbrevName::True, {}),
                   make_abbrev(AbbrevName::True, {}))}));
        const auto occurrences = find_occurrences(target, true_core());
        // occurrence 0 sits inside the quantifier template; 1 and 2 are the
        // body copies.
        out.push_back({"R1H[T->x under forall x]", {hyp}, eq, target, occurrences.at(1), true});
    }
    {
        // Legal: the binder the path crosses is not free in the premise.
        const Wff hyp = expand(fold2(AbbrevName::Equals, v("x", i()), cc()));
        const Wff eq = expand(fold2(AbbrevName::QuasiEquals, cc(), cc()));
        const Wff target = expand(fold1(AbbrevName::IsDefined, cc()));
        const auto occurrences = find_occurrences(target, expand(cc()));
        out.push_back({"R1H[legal identity]", {hyp}, eq, target, occurrences.at(0), false});
    }
    return out;
}

// Per-assignment check used for the hypothesis-mode entries: wherever the
// hypotheses and both premises hold, the conclusion must hold.
bool preserves_pointwise(const Model& m, const std::vector<Wff>& hyps, const Wff& eq,
                         const Wff& target, const Wff& conclusion, std::string& detail) {
    VariableSet vars;
    auto collect = [&](const Wff& w) {
        for (const Variable& x : free_variables(w)) vars.insert(x);
    };
    for (const Wff& h : hyps) collect(h);
    collect(eq);
    collect(target);
    collect(conclusion);
    std::vector<Variable> order(vars.begin(), vars.end());
    for (const Variable& x : order) m.ensure_enumerable(x.type);
    std::vector<uint64_t> sizes, odometer(order.size(), 0);
    for (const Variable& x : order) sizes.push_back(m.domain_size(x.type));
    Assignment phi;
    auto truth = [&](const Wff& w) {
        PartialValue r = valuate(m, phi, w);
        return r.defined() && r.value->as_boolean();
    };
    for (;;) {
        for (size_t k = 0; k < order.size(); ++k) phi[order[k]] = m.element(order[k].type, odometer[k]);
        bool premises_hold = truth(eq) && truth(target);
        for (const Wff& h : hyps) premises_hold = premises_hold && truth(h);
        if (premises_hold && !truth(conclusion)) {
            detail = "conclusion fails at";
            for (const auto& [var, val] : phi)
                detail += " " + print_variable(var) + ":=" + print_value(m, val);
            return false;
        }
        size_t k = 0;
        for (; k < order.size(); ++k) {
            if (++odometer[k] < sizes[k]) break;
            odometer[k] = 0;
        }
        if (k == order.size()) return true;
    }
}

}  // namespace

SuiteSection rule_preservation(const SelfcheckOptions& opts) {
    Timer timer;
    SuiteSection section;
    section.name = opts.mutation == Mutation::R1
                       ? "rule preservation (R1 binder restriction disabled)"
                       : "rule preservation";
    const std::vector<SweepModel> models = sweep_models(opts);

    for (const R2Entry& entry : r2_catalog()) {
        Wff conclusion;
        try {
            conclusion = apply_r2(entry.minor, entry.major);
        } catch (const error& e) {
            section.failures.push_back({entry.id, e.what()});
            continue;
        }
        for (const SweepModel& sm : models) {
            ++section.checked;
            if (!is_valid_in_model(sm.model, entry.minor) ||
                !is_valid_in_model(sm.model, entry.major)) {
                section.failures.push_back({entry.id, "premise not valid in " + sm.id});
                continue;
            }
            if (!is_valid_in_model(sm.model, conclusion))
                section.failures.push_back({entry.id, "conclusion not valid in " + sm.id});
        }
    }

    for (const R1Entry& entry : r1_catalog()) {
        Wff conclusion;
        try {
            conclusion = apply_r1(entry.eq, entry.target, entry.path, {}, false);
        } catch (const error& e) {
            section.failures.push_back({entry.id, e.what()});
            continue;
        }
        for (const SweepModel& sm : models) {
            ++section.checked;
            if (!is_valid_in_model(sm.model, entry.eq) ||
                !is_valid_in_model(sm.model, entry.target)) {
                section.failures.push_back({entry.id, "premise not valid in " + sm.id});
                continue;
            }
            if (!is_valid_in_model(sm.model, conclusion))
                section.failures.push_back({entry.id, "conclusion not valid in " + sm.id});
        }
    }

    const bool restriction_disabled = opts.mutation == Mutation::R1;
    for (const R1HypEntry& entry : r1_hyp_catalog()) {
        Wff conclusion;
        bool rejected = false;
        std::string rejection;
        try {
            conclusion = apply_r1(entry.eq, entry.target, entry.path, entry.hypotheses,
                                  !restriction_disabled);
        } catch (const side_condition_error& e) {
            rejected = true;
            rejection = e.what();
        } catch (const error& e) {
            section.failures.push_back({entry.id, e.what()});
            continue;
        }
        if (!restriction_disabled) {
            ++section.checked;
            if (entry.blocked != rejected)
                section.failures.push_back(
                    {entry.id, entry.blocked ? "the binder restriction did not fire"
                                             : "legal application rejected: " + rejection});
            if (rejected) continue;
        }
        if (!conclusion.valid()) continue;
        for (const SweepModel& sm : models) {
            ++section.checked;
            std::string detail;
            if (!preserves_pointwise(sm.model, entry.hypotheses, entry.eq, entry.target,
                                     conclusion, detail))
                section.failures.push_back({entry.id, detail + " in " + sm.id});
        }
    }
    finish(section, timer);
    return section;
}

SuiteSection type_o_totality(const SelfcheckOptions& opts) {
    Timer timer;
    SuiteSection section;
    section.name = "type-o totality";
    Model m({"a", "b"}, opts.cap);
    m.interpret("c", Value::individual(0));
    WffGenerator gen(opts.seed);
    for (int n = 0; n < opts.totality_count; ++n) {
        const Wff w = gen.core(o(), 5);
        ++section.checked;
        try {
            VariableSet fv = free_variables(w);
            std::vector<Variable> order(fv.begin(), fv.end());
            std::vector<uint64_t> sizes, odometer(order.size(), 0);
            for (const Variable& x : order) {
                m.ensure_enumerable(x.type);
                sizes.push_back(m.domain_size(x.type));
            }
            Assignment phi;
            bool all_defined = true;
            for (;;) {
                for (size_t k = 0; k < order.size(); ++k)
                    phi[order[k]] = m.element(order[k].type, odometer[k]);
                if (!valuate(m, phi, w).defined()) {
                    all_defined = false;
                    break;
                }
                size_t k = 0;
                for (; k < order.size(); ++k) {
                    if (++odometer[k] < sizes[k]) break;
                    odometer[k] = 0;
                }
                if (k == order.size()) break;
            }
            if (!all_defined)
                section.failures.push_back(
                    {"wff " + std::to_string(n), "undefined: " + print_wff(fold(w))});
        } catch (const error& e) {
            section.failures.push_back({"wff " + std::to_string(n), e.what()});
        }
    }
    finish(section, timer);
    return section;
}

SuiteSection constructive_tactics(const SelfcheckOptions& opts) {
    Timer timer;
    SuiteSection section;
    section.name = "constructive tactics";
    (void)opts;

    std::vector<std::pair<std::string, Wff>> odefined_inputs = {
        {"x_o", v("x", o())},
        {"y_o", v("y", o())},
        {"p", Wff::constant("p", o(), ConstKind::Nonlogical)},
        {"f x", Wff::app(v("f", oi()), v("x", i()))},
        {"f c", Wff::app(v("f", oi()), cc())},
        {"Q x y", Wff::app(Wff::app(Wff::q_const(i()), v("x", i())), v("y", i()))},
        {"r c", Wff::app(Wff::constant("r", oi(), ConstKind::Nonlogical), cc())},
        {"Q xo yo", Wff::app(Wff::app(Wff::q_const(o()), v("x", o())), v("y", o()))},
        {"f bot", Wff::app(v("f", oi()), expand(bot(i())))},
        {"[\\x. x=x] c",
         Wff::app(Wff::abs(Variable{"x", i()},
                           expand(fold2(AbbrevName::Equals, v("x", i()), v("x", i())))),
                  cc())},
    };
    for (auto& [id, w] : odefined_inputs) {
        ++section.checked;
        try {
            Proof proof = tactic_odefined(w);
            Verdict verdict = check_proof(proof, CheckMode::Kernel);
            if (!verdict.accepted)
                section.failures.push_back({"odefined " + id, verdict.diagnostics[0].message});
            else if (proof.conclusion != expand(fold1(AbbrevName::IsDefined, w)))
                section.failures.push_back({"odefined " + id, "conclusion mismatch"});
        } catch (const error& e) {
            section.failures.push_back({"odefined " + id, e.what()});
        }
    }

    std::vector<std::pair<std::string, Wff>> lemma1_inputs = {
        {"c", cc()},
        {"x_i", v("x", i())},
        {"f_oi", v("f", oi())},
        {"bot_i", expand(bot(i()))},
        {"identity", Wff::abs(Variable{"x", i()}, v("x", i()))},
        {"f c (type i)", Wff::app(v("f", ii()), cc())},
        {"T", true_core()},
        {"x and y", expand(fold2(AbbrevName::And, v("x", o()), v("y", o())))},
        {"Q_i", Wff::q_const(i())},
        {"description", Wff::app(Wff::iota_const(i()),
                                 Wff::abs(Variable{"x", i()},
                                          expand(fold2(AbbrevName::Equals, v("x", i()), cc()))))},
    };
    for (auto& [id, w] : lemma1_inputs) {
        ++section.checked;
        try {
            Proof proof = tactic_lemma1(w);
            Verdict verdict = check_proof(proof, CheckMode::Kernel);
            if (!verdict.accepted)
                section.failures.push_back({"lemma1 " + id, verdict.diagnostics[0].message});
            else if (proof.conclusion != expand(fold2(AbbrevName::QuasiEquals, w, w)))
                section.failures.push_back({"lemma1 " + id, "conclusion mismatch"});
        } catch (const error& e) {
            section.failures.push_back({"lemma1 " + id, e.what()});
        }
    }
    finish(section, timer);
    return section;
}

SuiteSection undefinedness_semantics(const SelfcheckOptions& opts) {
    Timer timer;
    SuiteSection section;
    section.name = "undefinedness semantics";
    const Wff bot_core = expand(bot(i()));
    const Wff def_bot = expand(fold1(AbbrevName::IsDefined, bot(i())));
    const Wff undef_bot = expand(fold1(AbbrevName::IsUndefined, bot(i())));
    const Wff f_bot = Wff::app(v("f", oi()), bot_core);
    for (const SweepModel& sm : sweep_models(opts)) {
        ++section.checked;
        try {
            if (valuate(sm.model, {}, bot_core).defined())
                section.failures.push_back({"bot", "defined in " + sm.id});
            PartialValue d = valuate(sm.model, {}, def_bot);
            if (!d.defined() || d.value->as_boolean())
                section.failures.push_back({"def(bot)", "not F in " + sm.id});
            PartialValue u = valuate(sm.model, {}, undef_bot);
            if (!u.defined() || !u.value->as_boolean())
                section.failures.push_back({"undef(bot)", "not T in " + sm.id});
            // f bot is F for every interpretation of f.
            const uint64_t nf = sm.model.domain_size(oi());
            for (uint64_t k = 0; k < nf; ++k) {
                Assignment phi;
                phi[Variable{"f", oi()}] = sm.model.element(oi(), k);
                PartialValue r = valuate(sm.model, phi, f_bot);
                if (!r.defined() || r.value->as_boolean()) {
                    section.failures.push_back(
                        {"f bot", "not F for f#" + std::to_string(k) + " in " + sm.id});
                    break;
                }
            }
        } catch (const error& e) {
            section.failures.push_back({"undefinedness", e.what()});
        }
    }
    finish(section, timer);
    return section;
}

namespace {

// All surface wffs over atoms {x_o, y_o, z_o} and constants {T, F} with at
// most `budget` connective nodes (~, /\, \/, =>, = at o).
std::vector<std::vector<Wff>> enumerate_propositional(int budget) {
    std::vector<std::vector<Wff>> by_size(budget + 1);
    by_size[0] = {v("x", o()), v("y", o()), v("z", o()), make_abbrev(AbbrevName::True, {}),
                  make_abbrev(AbbrevName::False, {})};
    for (int n = 1; n <= budget; ++n) {
        for (const Wff& a : by_size[n - 1]) by_size[n].push_back(fold1(AbbrevName::Not, a));
        for (int k = 0; k <= n - 1; ++k) {
            const int other = n - 1 - k;
            for (const Wff& a : by_size[k])
                for (const Wff& b : by_size[other]) {
                    by_size[n].push_back(fold2(AbbrevName::And, a, b));
                    by_size[n].push_back(fold2(AbbrevName::Or, a, b));
                    by_size[n].push_back(fold2(AbbrevName::Implies, a, b));
                    by_size[n].push_back(fold2(AbbrevName::Equals, a, b));
                }
        }
    }
    return by_size;
}

}  // namespace

SuiteSection tautology_agreement(const SelfcheckOptions& opts) {
    Timer timer;
    SuiteSection section;
    section.name = "tautology oracle agreement";
    Model m({"a"}, opts.cap);
    const auto by_size = enumerate_propositional(opts.taut_connective_budget);
    for (const auto& bucket : by_size) {
        for (const Wff& w : bucket) {
            ++section.checked;
            try {
                const bool taut = tautologous(w);
                const bool valid = is_valid_in_model(m, expand(w));
                if (taut != valid) {
                    section.failures.push_back(
                        {print_wff(w), std::string("tautologous=") + (taut ? "true" : "false") +
                                           " but validity=" + (valid ? "true" : "false")});
                }
            } catch (const error& e) {
                section.failures.push_back({print_wff(w), e.what()});
            }
        }
    }
    finish(section, timer);
    return section;
}

SuiteSection parser_roundtrip(const SelfcheckOptions& opts) {
    Timer timer;
    SuiteSection section;
    section.name = "parser round trip";
    const Signature sig = WffGenerator::catalog_signature();
    WffGenerator gen(opts.seed + 1);
    for (int n = 0; n < opts.roundtrip_count; ++n) {
        const Wff w = gen.surface(4);
        ++section.checked;
        try {
            const std::string text = print_wff(w);
            const Wff back = parse_wff(text, sig);
            if (back != w)
                section.failures.push_back({"wff " + std::to_string(n),
                                            "reparse differs: " + text + " -> " + print_wff(back)});
        } catch (const error& e) {
            section.failures.push_back({"wff " + std::to_string(n), e.what()});
        }
    }
    finish(section, timer);
    return section;
}

SuiteReport run_selfcheck(const SelfcheckOptions& opts) {
    SuiteReport report;
    switch (opts.mutation) {
        case Mutation::A9: report.sections.push_back(axiom_validity_sweep(opts)); break;
        case Mutation::R1: report.sections.push_back(rule_preservation(opts)); break;
        case Mutation::None:
            report.sections.push_back(axiom_validity_sweep(opts));
            report.sections.push_back(rule_preservation(opts));
            report.sections.push_back(type_o_totality(opts));
            report.sections.push_back(constructive_tactics(opts));
            report.sections.push_back(undefinedness_semantics(opts));
            report.sections.push_back(tautology_agreement(opts));
            report.sections.push_back(parser_roundtrip(opts));
            break;
    }
    report.pass = true;
    for (const SuiteSection& s : report.sections) report.pass = report.pass && s.pass;
    return report;
}

}  // namespace q0u
