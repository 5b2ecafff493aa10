#pragma once
// Table emission: CSV (header row, LF endings, floats at 17 significant
// digits) and JSON (array of objects mirroring the CSV fields by name).
// ln of an exactly-zero strength serializes as the literal "-inf" in both.

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace ladder {

using cell = std::variant<long long, double, std::string>;

struct table {
    std::vector<std::string> columns;
    std::vector<std::vector<cell>> rows;
};

inline std::string fmt_real(double x) {
    if (std::isinf(x) && x < 0) return "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline std::string cell_text(const cell& c) {
    if (std::holds_alternative<long long>(c)) return std::to_string(std::get<long long>(c));
    if (std::holds_alternative<double>(c)) return fmt_real(std::get<double>(c));
    return std::get<std::string>(c);
}

inline std::string emit_csv(const table& t) {
    std::string out;
    for (size_t i = 0; i < t.columns.size(); ++i) {
        if (i) out += ',';
        out += t.columns[i];
    }
    out += '\n';
    for (const auto& row : t.rows) {
        if (row.size() != t.columns.size())
            throw std::invalid_argument("emit_csv: row width mismatch");
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            std::string text = cell_text(row[i]);
            if (text.find_first_of(",\n\"") != std::string::npos)
                throw std::invalid_argument("emit_csv: cell would need quoting: " + text);
            out += text;
        }
        out += '\n';
    }
    return out;
}

inline std::string emit_json(const table& t) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        if (row.size() != t.columns.size())
            throw std::invalid_argument("emit_json: row width mismatch");
        nlohmann::ordered_json obj;
        for (size_t i = 0; i < row.size(); ++i) {
            const cell& c = row[i];
            if (std::holds_alternative<long long>(c))
                obj[t.columns[i]] = std::get<long long>(c);
            else if (std::holds_alternative<double>(c)) {
                double x = std::get<double>(c);
                if (std::isinf(x) && x < 0)
                    obj[t.columns[i]] = "-inf";  // JSON has no infinities
                else
                    obj[t.columns[i]] = x;
            } else
                obj[t.columns[i]] = std::get<std::string>(c);
        }
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

// --- parsing helpers (round-trip checks and golden tests) ---

inline std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    for (char ch : text) {
        if (ch == ',') {
            row.push_back(field);
            field.clear();
        } else if (ch == '\n') {
            row.push_back(field);
            field.clear();
            rows.push_back(row);
            row.clear();
        } else {
            field += ch;
        }
    }
    if (!field.empty() || !row.empty()) {
        row.push_back(field);
        rows.push_back(row);
    }
    return rows;
}

// Canonical cell text: anything that parses fully as a number is re-rendered
// at 17 significant digits so CSV's "%.17g" and JSON's shortest-round-trip
// spellings compare equal.
inline std::string normalize_scalar(const std::string& s) {
    if (s.empty()) return s;
    char* end = nullptr;
    double x = std::strtod(s.c_str(), &end);
    if (end && *end == '\0') return fmt_real(x);
    return s;
}

// Flatten a JSON array-of-objects into header + normalized string rows,
// mirroring parse_csv + normalize_scalar output.
inline std::vector<std::vector<std::string>> json_records(const std::string& text) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::parse(text);
    std::vector<std::vector<std::string>> rows;
    if (!arr.is_array()) throw std::invalid_argument("json_records: expected an array");
    bool first = true;
    for (const auto& obj : arr) {
        if (first) {
            std::vector<std::string> header;
            for (auto it = obj.begin(); it != obj.end(); ++it) header.push_back(it.key());
            rows.push_back(std::move(header));
            first = false;
        }
        std::vector<std::string> row;
        for (auto it = obj.begin(); it != obj.end(); ++it) {
            const auto& v = it.value();
            if (v.is_number_integer())
                row.push_back(std::to_string(v.get<long long>()));
            else if (v.is_number_float())
                row.push_back(fmt_real(v.get<double>()));
            else
                row.push_back(normalize_scalar(v.get<std::string>()));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::vector<std::vector<std::string>> csv_records(const std::string& text) {
    auto rows = parse_csv(text);
    for (size_t r = 1; r < rows.size(); ++r)
        for (auto& cell : rows[r]) cell = normalize_scalar(cell);
    return rows;
}

}  // namespace ladder
