#pragma once

#include <string>

#include "q0u/wff.hpp"

namespace q0u {

// Canonical surface text.  Application is left-associative juxtaposition
// and brackets are kept minimal; variables always carry their type suffix,
// nonlogical constants print bare, Q and iota print with their type
// parameter.  parse_wff(print_wff(w), sig) is structurally identical to w
// for any w whose nonlogical constants are declared in sig.
std::string print_wff(const Wff& w);

}  // namespace q0u
