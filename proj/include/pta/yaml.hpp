#pragma once

#include <cctype>
#include <cstdio>
#include <string>

#include <nlohmann/json.hpp>
#include <yaml-cpp/yaml.h>

#include "pta/diagnostics.hpp"

namespace pta {

namespace detail {

// YAML scalars are untyped; resolve the usual core-schema types so a YAML
// surface and a JSON surface of the same document yield equal trees.
inline nlohmann::json yaml_scalar_to_json(const YAML::Node& node) {
    const std::string& s = node.Scalar();
    if (node.Tag() == "!") return s;  // explicitly quoted: always a string
    if (s == "null" || s == "~" || s.empty()) return nullptr;
    if (s == "true") return true;
    if (s == "false") return false;
    if (!s.empty() && (std::isdigit(static_cast<unsigned char>(s[0])) || s[0] == '-' || s[0] == '+')) {
        try {
            std::size_t pos = 0;
            long long v = std::stoll(s, &pos);
            if (pos == s.size()) return v;
        } catch (...) {
        }
        try {
            std::size_t pos = 0;
            double v = std::stod(s, &pos);
            if (pos == s.size()) return v;
        } catch (...) {
        }
    }
    return s;
}

inline nlohmann::json yaml_to_json(const YAML::Node& node) {
    switch (node.Type()) {
        case YAML::NodeType::Null:
        case YAML::NodeType::Undefined:
            return nullptr;
        case YAML::NodeType::Scalar:
            return yaml_scalar_to_json(node);
        case YAML::NodeType::Sequence: {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& item : node) arr.push_back(yaml_to_json(item));
            return arr;
        }
        case YAML::NodeType::Map: {
            nlohmann::json obj = nlohmann::json::object();
            for (const auto& kv : node) obj[kv.first.Scalar()] = yaml_to_json(kv.second);
            return obj;
        }
    }
    return nullptr;
}

inline void offset_to_line_col(const std::string& text, std::size_t offset, std::size_t& line,
                               std::size_t& col) {
    line = 1;
    col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
}

}  // namespace detail

// True when the text looks like JSON rather than YAML (first significant
// character opens an object or array).
inline bool looks_like_json(const std::string& text) {
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        return ch == '{' || ch == '[';
    }
    return false;
}

// Parses JSON or YAML surface syntax into one normalized JSON tree.
// Diagnostics carry line/column positions for syntax errors.
inline LoadResult<nlohmann::json> parse_document_text(const std::string& text,
                                                      bool prefer_json) {
    LoadResult<nlohmann::json> out;
    if (prefer_json || looks_like_json(text)) {
        try {
            out.value = nlohmann::json::parse(text);
            return out;
        } catch (const nlohmann::json::parse_error& e) {
            std::size_t line = 1, col = 1;
            detail::offset_to_line_col(text, e.byte > 0 ? e.byte - 1 : 0, line, col);
            out.diagnostics.push_back(
                {Severity::Error, "",
                 "JSON syntax error at line " + std::to_string(line) + ", column " +
                     std::to_string(col) + ": " + e.what()});
            return out;
        }
    }
    try {
        YAML::Node node = YAML::Load(text);
        out.value = detail::yaml_to_json(node);
        return out;
    } catch (const YAML::ParserException& e) {
        out.diagnostics.push_back(
            {Severity::Error, "",
             "YAML syntax error at line " + std::to_string(e.mark.line + 1) + ", column " +
                 std::to_string(e.mark.column + 1) + ": " + e.msg});
        return out;
    } catch (const YAML::Exception& e) {
        out.diagnostics.push_back({Severity::Error, "", std::string("YAML error: ") + e.what()});
        return out;
    }
}

// File-extension driven surface selection: .json parses as JSON, .yaml/.yml
// as YAML, anything else is sniffed.
inline LoadResult<nlohmann::json> parse_document_file_text(const std::string& text,
                                                           const std::string& path) {
    auto ends_with = [&](const char* suffix) {
        std::string s(suffix);
        return path.size() >= s.size() && path.compare(path.size() - s.size(), s.size(), s) == 0;
    };
    if (ends_with(".json")) return parse_document_text(text, /*prefer_json=*/true);
    if (ends_with(".yaml") || ends_with(".yml")) return parse_document_text(text, false);
    return parse_document_text(text, looks_like_json(text));
}

}  // namespace pta
