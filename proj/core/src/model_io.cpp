#include "q0u/model_io.hpp"

#include <fstream>

#include <json.hpp>

#include "q0u/errors.hpp"

namespace q0u {

namespace {

using nlohmann::json;

// Parsed value term, pre-typing.
struct Term {
    const json* j;
};

Type infer_term_type(const json& j, const std::vector<std::string>& base) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "T" || s == "F") return Type::omicron();
        for (const auto& label : base)
            if (label == s) return Type::iota();
        throw model_error("value term '" + s + "' is neither T/F nor a base label");
    }
    if (j.is_object() && j.contains("entries")) {
        const json& entries = j.at("entries");
        if (!entries.is_array() || entries.empty())
            throw model_error("graph must have a nonempty entries array (types of empty graphs "
                              "cannot be inferred)");
        Type arg_type, val_type;
        for (const json& e : entries) {
            if (!e.is_array() || e.size() != 2)
                throw model_error("each graph entry must be a two-element [argument, value] pair");
            Type at = infer_term_type(e[0], base);
            Type vt = infer_term_type(e[1], base);
            if (!arg_type.valid()) {
                arg_type = at;
                val_type = vt;
            } else if (at != arg_type || vt != val_type) {
                throw model_error("graph entries mix types");
            }
        }
        return Type::arrow(val_type, arg_type);
    }
    throw model_error("value term must be a string or a graph object");
}

Value build_value(const json& j, const Type& type, const Model& m) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (type.is_omicron()) return Value::boolean(s == "T");
        for (size_t k = 0; k < m.base_labels().size(); ++k)
            if (m.base_labels()[k] == s) return Value::individual(static_cast<uint32_t>(k));
        throw model_error("unknown base label '" + s + "'");
    }
    const json& entries = j.at("entries");
    m.ensure_enumerable(type.domain());
    const uint64_t n = m.domain_size(type.domain());
    auto graph = std::make_shared<FunctionGraph>();
    graph->entries.resize(n);
    for (const json& e : entries) {
        Value arg = build_value(e[0], type.domain(), m);
        const uint64_t k = m.index_of(arg);
        if (graph->entries[k])
            throw model_error("duplicate graph entry for the same argument");
        graph->entries[k] = build_value(e[1], type.codomain(), m);
    }
    if (type.codomain().is_omicron()) {
        for (const auto& e : graph->entries)
            if (!e)
                throw model_error(
                    "a graph with truth-value results must be total (missing arguments)");
    }
    return Value::function(type, std::move(graph));
}

}  // namespace

LoadedModel load_model(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw model_error(std::string("model file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("base"))
        throw model_error("model file needs an object with a 'base' array");
    std::vector<std::string> base;
    for (const json& b : doc.at("base")) {
        if (!b.is_string()) throw model_error("base labels must be strings");
        base.push_back(b.get<std::string>());
    }
    uint64_t cap = Model::kDefaultCap;
    if (doc.contains("cap")) {
        if (!doc.at("cap").is_number_unsigned()) throw model_error("'cap' must be a nonnegative integer");
        cap = doc.at("cap").get<uint64_t>();
    }
    LoadedModel loaded{Model(base, cap), {}};
    if (doc.contains("constants")) {
        const json& constants = doc.at("constants");
        if (!constants.is_object()) throw model_error("'constants' must be an object");
        for (auto it = constants.begin(); it != constants.end(); ++it) {
            Type t = infer_term_type(it.value(), base);
            Value v = build_value(it.value(), t, loaded.model);
            try {
                loaded.signature.declare(it.key(), t);
            } catch (const error& e) {
                throw model_error(e.what());
            }
            loaded.model.interpret(it.key(), v);
        }
    }
    return loaded;
}

LoadedModel load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw model_error("cannot open model file: " + path);
    return load_model(in);
}

namespace {

json value_to_json(const Model& m, const Value& v) {
    if (v.type().is_omicron()) return v.as_boolean() ? "T" : "F";
    if (v.type().is_iota()) return m.base_labels()[v.as_individual()];
    json entries = json::array();
    const FunctionGraph& g = v.graph();
    for (size_t k = 0; k < g.entries.size(); ++k) {
        if (!g.entries[k]) continue;
        entries.push_back(json::array(
            {value_to_json(m, m.element(v.type().domain(), k)), value_to_json(m, *g.entries[k])}));
    }
    return json{{"entries", entries}};
}

}  // namespace

std::string value_to_json_text(const Model& m, const Value& v) {
    return value_to_json(m, v).dump();
}

}  // namespace q0u
