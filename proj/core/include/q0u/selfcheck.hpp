#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "q0u/semantics.hpp"

namespace q0u {

// Built-in fault injections that must make the suite report failures.
enum class Mutation { None, A9, R1 };

struct SelfcheckOptions {
    std::vector<int> base_sizes{1, 2};
    uint64_t cap = Model::kDefaultCap;
    Mutation mutation = Mutation::None;
    int totality_count = 500;
    int roundtrip_count = 500;
    int taut_connective_budget = 3;  // exhaustive enumeration bound
    unsigned seed = 20240611;
};

struct SuiteFailure {
    std::string id;
    std::string detail;
};

struct SuiteSection {
    std::string name;
    int checked = 0;
    bool pass = false;
    double seconds = 0.0;
    std::vector<SuiteFailure> failures;
};

struct SuiteReport {
    std::vector<SuiteSection> sections;
    bool pass = false;
};

// The individual batteries.  Every expected value and tolerance is fixed
// here; a section passes only with zero failures.
SuiteSection axiom_validity_sweep(const SelfcheckOptions& opts);
SuiteSection rule_preservation(const SelfcheckOptions& opts);
SuiteSection type_o_totality(const SelfcheckOptions& opts);
SuiteSection constructive_tactics(const SelfcheckOptions& opts);
SuiteSection undefinedness_semantics(const SelfcheckOptions& opts);
SuiteSection tautology_agreement(const SelfcheckOptions& opts);
SuiteSection parser_roundtrip(const SelfcheckOptions& opts);

// Runs everything (with Mutation::None) or just the mutated battery (with
// Mutation::A9 / Mutation::R1, which are expected to fail).
SuiteReport run_selfcheck(const SelfcheckOptions& opts);

}  // namespace q0u
