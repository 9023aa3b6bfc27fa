#include "q0u/signature.hpp"

#include <cctype>

#include "q0u/errors.hpp"

namespace q0u {

namespace {

const char* kKeywords[] = {"T",   "F",     "forall", "exists", "exists1", "def",
                           "undef", "I",   "bot",    "Q",      "iota"};

bool is_identifier(const std::string& name) {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

bool Signature::is_reserved_name(const std::string& name) {
    if (is_variable_name(name)) return true;
    for (const char* kw : kKeywords)
        if (name == kw) return true;
    return false;
}

void Signature::declare(const std::string& name, const Type& type) {
    if (!is_identifier(name))
        throw error("constant name must be an alphanumeric identifier: '" + name + "'");
    if (is_reserved_name(name))
        throw error("cannot declare constant '" + name +
                    "': the name is reserved (variable lexicon, logical constant, or keyword)");
    auto [it, inserted] = constants_.emplace(name, type);
    if (!inserted && !(it->second == type))
        throw error("constant '" + name + "' redeclared at a different type");
}

std::optional<Type> Signature::lookup(const std::string& name) const {
    auto it = constants_.find(name);
    if (it == constants_.end()) return std::nullopt;
    return it->second;
}

}  // namespace q0u
