// A deliberately small TOML reader for fixture files: table headers, bare
// keys, strings, integers, booleans and flat arrays.  Parsed documents are
// returned as JSON values so the rest of the I/O layer stays uniform.
#ifndef FIBCLASS_TOML_LITE_HPP
#define FIBCLASS_TOML_LITE_HPP

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "fibclass/errors.hpp"

namespace fibclass::io::toml_lite {

using nlohmann::json;

namespace detail {

inline std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    size_t e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

inline json parse_scalar(const std::string& raw);

inline json parse_value(const std::string& raw) {
    std::string v = strip(raw);
    if (v.empty()) throw InvalidArgument("empty TOML value");
    if (v.front() == '[') {
        if (v.back() != ']') throw InvalidArgument("unterminated TOML array");
        json arr = json::array();
        std::string body = v.substr(1, v.size() - 2);
        std::string item;
        bool in_string = false;
        for (char c : body) {
            if (c == '"') in_string = !in_string;
            if (c == ',' && !in_string) {
                if (!strip(item).empty()) arr.push_back(parse_scalar(item));
                item.clear();
            } else {
                item += c;
            }
        }
        if (!strip(item).empty()) arr.push_back(parse_scalar(item));
        return arr;
    }
    return parse_scalar(v);
}

inline json parse_scalar(const std::string& raw) {
    std::string v = strip(raw);
    if (v.size() >= 2 && v.front() == '"' && v.back() == '"') {
        std::string out;
        for (size_t i = 1; i + 1 < v.size(); ++i) {
            if (v[i] == '\\' && i + 2 < v.size()) {
                ++i;
                out += v[i];
            } else {
                out += v[i];
            }
        }
        return out;
    }
    if (v == "true") return true;
    if (v == "false") return false;
    size_t start = (v[0] == '-' || v[0] == '+') ? 1 : 0;
    if (start < v.size() &&
        std::all_of(v.begin() + static_cast<std::ptrdiff_t>(start), v.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        return std::stoll(v);
    throw InvalidArgument("unsupported TOML value: '" + v + "'");
}

inline std::string strip_comment(const std::string& line) {
    bool in_string = false;
    for (size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') in_string = !in_string;
        if (line[i] == '#' && !in_string) return line.substr(0, i);
    }
    return line;
}

} // namespace detail

inline json parse(std::istream& in) {
    json root = json::object();
    json* table = &root;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = detail::strip(detail::strip_comment(line));
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']') throw InvalidArgument("malformed TOML table header at line " +
                                                       std::to_string(lineno));
            std::string path = detail::strip(s.substr(1, s.size() - 2));
            table = &root;
            std::istringstream parts(path);
            std::string part;
            while (std::getline(parts, part, '.')) {
                part = detail::strip(part);
                if (part.empty()) throw InvalidArgument("empty TOML table name");
                table = &(*table)[part];
                if (table->is_null()) *table = json::object();
            }
            continue;
        }
        auto eq = s.find('=');
        if (eq == std::string::npos)
            throw InvalidArgument("expected 'key = value' at line " + std::to_string(lineno));
        std::string key = detail::strip(s.substr(0, eq));
        if (key.size() >= 2 && key.front() == '"' && key.back() == '"')
            key = key.substr(1, key.size() - 2);
        (*table)[key] = detail::parse_value(s.substr(eq + 1));
    }
    return root;
}

inline json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open TOML file: " + path);
    return parse(in);
}

} // namespace fibclass::io::toml_lite

#endif
