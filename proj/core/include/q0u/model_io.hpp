#pragma once

#include <iosfwd>
#include <string>

#include "q0u/semantics.hpp"
#include "q0u/signature.hpp"

namespace q0u {

// A model description is a JSON document:
//
//   { "base": ["a", "b"],
//     "cap": 5000,
//     "constants": {
//       "c": "a",
//       "r": { "entries": [["a", "T"], ["b", "F"]] }
//     } }
//
// Value terms are base labels, "T"/"F", or graph objects whose entries pair
// argument terms with value terms (nested graphs for higher types).  Missing
// arguments are where the function is undefined; graphs whose values are
// truth values must be total.  Constant types are inferred from the value
// terms, so empty graphs are rejected.  Labels compare as exact byte
// strings.
struct LoadedModel {
    Model model;
    Signature signature;  // the constants the file interprets, with types
};

LoadedModel load_model(std::istream& in);
LoadedModel load_model_file(const std::string& path);

// The value in JSON value-term form (inverse of the reader for defined
// entries).
std::string value_to_json_text(const Model& m, const Value& v);

}  // namespace q0u
