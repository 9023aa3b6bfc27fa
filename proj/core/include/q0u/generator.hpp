#pragma once

#include <random>

#include "q0u/signature.hpp"
#include "q0u/wff.hpp"

namespace q0u {

// Deterministic pseudo-random wff generation for the self-check batteries
// and the property tests.  Free variables appear at base types only, so
// assignment enumeration stays small.
class WffGenerator {
  public:
    explicit WffGenerator(unsigned seed);

    // A signature declaring the constants the generated wffs may mention:
    // c : i, p : o, r : (oi).
    static Signature catalog_signature();

    // Core wff of the requested type with nesting depth at most max_depth.
    Wff core(const Type& target, int max_depth);

    // Surface wff of type o that may contain any folded abbreviation.
    Wff surface(int max_depth);

  private:
    std::mt19937 rng_;
    std::vector<Variable> scope_;

    int roll(int n);
    Type small_type(int fuel);
    Wff core_leaf(const Type& target);
    Wff surface_of(const Type& target, int max_depth);
};

}  // namespace q0u
