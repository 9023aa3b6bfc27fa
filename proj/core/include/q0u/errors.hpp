#pragma once

#include <stdexcept>
#include <string>

namespace q0u {

// Base class for everything this library throws.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Lexical or grammatical failure; carries a 1-based source position.
struct parse_error : error {
    int line;
    int column;
    parse_error(const std::string& msg, int line_, int column_)
        : error(msg + " (at " + std::to_string(line_) + ":" + std::to_string(column_) + ")"),
          line(line_), column(column_) {}
};

// Ill-typed term: application domain mismatch, annotation conflict, etc.
struct type_error : error {
    using error::error;
};

// Substitution would capture a free variable.  Never repaired by renaming.
struct capture_error : error {
    using error::error;
};

// A rule or axiom-schema side condition is violated.
struct side_condition_error : error {
    using error::error;
};

// A finite domain needed for evaluation is larger than the configured cap.
struct domain_cap_error : error {
    std::string type_name;
    domain_cap_error(const std::string& type_name_, const std::string& cardinality,
                     unsigned long long cap)
        : error("domain for type " + type_name_ + " has cardinality " + cardinality +
                ", exceeding the cap of " + std::to_string(cap)),
          type_name(type_name_) {}
};

// Malformed model description or a value outside its domain.
struct model_error : error {
    using error::error;
};

// Evaluation failure: missing assignment entry, non-core input, and so on.
struct eval_error : error {
    using error::error;
};

}  // namespace q0u
