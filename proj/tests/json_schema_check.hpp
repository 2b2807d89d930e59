#pragma once

// Minimal JSON-Schema checker covering the subset the report schema uses:
// type (string or array of strings), enum, required, properties,
// additionalProperties (boolean), items, minimum, and $ref into
// #/definitions. Returns the first violation as a path + message.

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

namespace schemacheck {

using nlohmann::json;

struct Violation {
    std::string path;
    std::string message;
};

inline bool type_matches(const json& value, const std::string& type) {
    if (type == "object") return value.is_object();
    if (type == "array") return value.is_array();
    if (type == "string") return value.is_string();
    if (type == "boolean") return value.is_boolean();
    if (type == "integer") return value.is_number_integer() || value.is_number_unsigned();
    if (type == "number") return value.is_number();
    if (type == "null") return value.is_null();
    return false;
}

inline std::optional<Violation> validate(const json& value, const json& schema,
                                         const json& root, const std::string& path) {
    if (schema.contains("$ref")) {
        std::string ref = schema["$ref"].get<std::string>();
        const std::string prefix = "#/definitions/";
        if (ref.rfind(prefix, 0) != 0) return Violation{path, "unsupported $ref " + ref};
        return validate(value, root["definitions"][ref.substr(prefix.size())], root, path);
    }
    if (schema.contains("enum")) {
        for (const auto& allowed : schema["enum"])
            if (value == allowed) return std::nullopt;
        return Violation{path, "value not in enum: " + value.dump()};
    }
    if (schema.contains("type")) {
        const json& t = schema["type"];
        bool ok = false;
        if (t.is_array()) {
            for (const auto& alt : t) ok = ok || type_matches(value, alt.get<std::string>());
        } else {
            ok = type_matches(value, t.get<std::string>());
        }
        if (!ok) return Violation{path, "type mismatch, expected " + t.dump()};
    }
    if (schema.contains("minimum") && value.is_number()) {
        if (value.get<double>() < schema["minimum"].get<double>())
            return Violation{path, "below minimum"};
    }
    if (value.is_object()) {
        if (schema.contains("required")) {
            for (const auto& key : schema["required"])
                if (!value.contains(key.get<std::string>()))
                    return Violation{path, "missing required key " + key.get<std::string>()};
        }
        const json* props = schema.contains("properties") ? &schema["properties"] : nullptr;
        bool allow_extra = true;
        if (schema.contains("additionalProperties"))
            allow_extra = schema["additionalProperties"].get<bool>();
        for (const auto& [key, sub] : value.items()) {
            if (props && props->contains(key)) {
                if (auto v = validate(sub, (*props)[key], root, path + "/" + key)) return v;
            } else if (!allow_extra) {
                return Violation{path, "unexpected key " + key};
            }
        }
    }
    if (value.is_array() && schema.contains("items")) {
        for (std::size_t k = 0; k < value.size(); ++k) {
            if (auto v = validate(value[k], schema["items"], root,
                                  path + "/" + std::to_string(k)))
                return v;
        }
    }
    return std::nullopt;
}

inline std::optional<Violation> validate_report(const json& value, const json& schema) {
    return validate(value, schema, schema, "");
}

}  // namespace schemacheck
