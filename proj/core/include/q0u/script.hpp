#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "q0u/kernel.hpp"
#include "q0u/signature.hpp"

namespace q0u {

// A parsed proof-script file.
//
//   theory <name>
//   const <name> : <type>
//   proof <label> [hyps: "W1"; "W2"] : "<conclusion>"
//     1. "<wff>"  axiom A4 {x := x_i; B := "x_i"; A := "c"}
//     2. "<wff>"  hyp 0
//     3. "<wff>"  thm <label>.<step>
//     4. "<wff>"  R1 1 3 at fun.arg
//     5. "<wff>"  R2 2 4
//     6. "<wff>"  derived taut 4 5
//   qed 6
//
// '#' starts a comment.  Step references are the 1-based step numbers of the
// same proof; `hyp k` is 0-based into the hypothesis list.  `thm` copies the
// referenced (hypothesis-free, import-free) proof into the theorem section
// of the citing proof; `derived deduction <label>` embeds the referenced
// proof, whose hypotheses must be the citing proof's plus exactly one more.
// All wffs are expanded to core form at load time.
struct ScriptProof {
    std::string label;
    Proof proof;
};

struct ProofScript {
    std::string theory_name;
    Signature signature;
    std::vector<ScriptProof> proofs;
};

ProofScript parse_script(std::istream& in);
ProofScript parse_script_text(const std::string& text);
ProofScript load_script_file(const std::string& path);

// Renders a script for proofs without theorem imports (tactic output and
// hand-built proofs).  parse_script_text(serialize_script(s)) checks the
// same.
std::string serialize_script(const ProofScript& script);

}  // namespace q0u
