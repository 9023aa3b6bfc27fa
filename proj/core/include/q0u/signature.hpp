#pragma once

#include <map>
#include <optional>
#include <string>

#include "q0u/types.hpp"

namespace q0u {

// The nonlogical constants in scope.  The logical constants (Q at every type
// and iota at every type other than o) are implicitly present and cannot be
// redeclared; neither can names from the variable lexicon or the surface
// keywords.
class Signature {
  public:
    void declare(const std::string& name, const Type& type);
    std::optional<Type> lookup(const std::string& name) const;
    const std::map<std::string, Type>& constants() const { return constants_; }

    static bool is_reserved_name(const std::string& name);

  private:
    std::map<std::string, Type> constants_;
};

}  // namespace q0u
