#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "q0u/types.hpp"
#include "q0u/wff.hpp"

namespace q0u {

// The thirteen axiom schemas.
enum class AxiomSchema { A1, A2, A3, A4, A5, A6, A7, A8, A9, A10, A11, A12, A13 };

const char* axiom_schema_name(AxiomSchema s);
std::optional<AxiomSchema> axiom_schema_from_name(const std::string& name);

// Explicit schema parameters.  The checker recomputes every instance from
// these and compares for structural identity; no unification ever happens.
//   A1: none                     A2: alpha          A3: alpha, beta
//   A4: x, B, A                  A5: x              A6: c
//   A7: x, B                     A8/A9/A10: A, B    A11: A, B
//   A12/A13: x, A
struct AxiomParams {
    std::optional<Type> alpha, beta;
    std::optional<Variable> x;
    std::optional<Wff> A, B, c;
};

// The fully expanded core wff of the schema instance.  Wff parameters are
// expanded before the instance is assembled; substitution operates on the
// cores.  Throws side_condition_error on a violated proviso and type_error
// on ill-typed parameters.
Wff instantiate_axiom(AxiomSchema schema, const AxiomParams& params);

// Quasi-equality substitution.  The premise must expand the quasi-equality
// template [A ~= B]; the subtree of target at path must be identical to A;
// paths cannot address binder occurrences.  When hypothesis_mode is set the
// occurrence must not lie inside an abstraction whose binder is free both in
// some hypothesis and in the premise.
Wff apply_r1(const Wff& eq_premise, const Wff& target, const OccurrencePath& path,
             const std::vector<Wff>& hypotheses, bool hypothesis_mode);

// Modus ponens: major must be the core implication template with an
// antecedent identical to minor; returns the consequent.
Wff apply_r2(const Wff& minor, const Wff& major);

// --- Proofs ----------------------------------------------------------------

enum class DerivedRule { R1Prime, R2Prime, Beta, UnivInst, UnivGen, Taut, Deduction };

const char* derived_rule_name(DerivedRule r);
std::optional<DerivedRule> derived_rule_from_name(const std::string& name);

struct Proof;

struct DerivedParams {
    std::optional<Variable> x;
    std::optional<Wff> A, B;
    OccurrencePath path;
    std::shared_ptr<const Proof> subproof;  // Deduction
    std::string subproof_label;             // display only
};

struct AxiomJ {
    AxiomSchema schema;
    AxiomParams params;
};
struct HypJ {
    int index;  // 0-based into the hypothesis list
};
struct TheoremImportJ {
    int index;          // 0-based into the theorem section
    std::string label;  // display only: source proof label
    int source_step;    // display only: 1-based step in the source proof
};
struct R1J {
    int eq_step, target_step;  // 0-based, same section, strictly earlier
    OccurrencePath path;
};
struct R2J {
    int minor_step, major_step;
};
struct DerivedJ {
    DerivedRule rule;
    std::vector<int> premises;
    DerivedParams params;
};

using Justification = std::variant<AxiomJ, HypJ, TheoremImportJ, R1J, R2J, DerivedJ>;

struct ProofStep {
    Wff wff;
    Justification just;
};

// A proof from hypotheses: a theorem section (a hypothesis-free proof whose
// members may be imported) and a main section whose steps may also cite
// hypotheses and imports.  For a plain theorem the hypothesis list is empty
// and the theorem section is usually empty too.
struct Proof {
    std::vector<Wff> hypotheses;
    std::vector<ProofStep> theorem_steps;
    std::vector<ProofStep> main_steps;
    Wff conclusion;
};

enum class CheckMode { Kernel, Extended };

struct Diagnostic {
    std::string location;
    std::string message;
};

struct Verdict {
    bool accepted = false;
    std::vector<Diagnostic> diagnostics;        // nonempty iff rejected
    std::vector<std::string> extended_steps;    // every non-kernel step used
};

// Validates the proof: theorem-section steps must be axiom instances or
// R1/R2 over earlier theorem-section steps; main-section steps may be axiom
// instances, hypotheses, theorem imports, R1 (with the hypothesis-mode
// binder restriction) or R2 over earlier main-section steps.  Derived rules
// are rejected in kernel mode and validated per their own side conditions in
// extended mode, where each use is listed in the verdict.  Rejection is a
// verdict, not an exception; checking is deterministic and pure.
Verdict check_proof(const Proof& proof, CheckMode mode);

// One derived-rule application: resolves the rule's side conditions against
// already-derived premise wffs and returns the conclusion.  Throws
// side_condition_error when a proviso fails.
Wff derived_step(DerivedRule rule, const std::vector<Wff>& premises, const DerivedParams& params,
                 const std::vector<Wff>& hypotheses);

// --- Proof-emitting tactics -------------------------------------------------

// A one-step proof that a core wff of type o is defined (a variable, a
// primitive constant, or an application of predicate type).
Proof tactic_odefined(const Wff& a);

// A five-step proof of [a ~= a] for any core wff a: a definedness axiom for
// a fresh variable, a beta-reduction axiom instance, modus ponens, and two
// quasi-equality substitutions that rewrite the redex away.  The conclusion
// is exactly expand(a ~= a).
Proof tactic_lemma1(const Wff& a);

}  // namespace q0u
