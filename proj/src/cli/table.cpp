#include "kbounds/cli/table.hpp"

#include <cmath>

#include "kbounds/number_format.hpp"

namespace kbounds::cli {

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + '"';
}

std::string cell_text(const Cell& c) {
    if (const double* v = std::get_if<double>(&c)) return shortest(*v);
    if (const std::string* s = std::get_if<std::string>(&c)) return csv_field(*s);
    return {};
}

nlohmann::ordered_json cell_json(const Cell& c) {
    if (const double* v = std::get_if<double>(&c)) {
        if (std::isfinite(*v)) return *v;
        return shortest(*v);
    }
    if (const std::string* s = std::get_if<std::string>(&c)) return *s;
    return nullptr;
}

}  // namespace

void write_csv(const Table& t, std::ostream& out) {
    std::string line;
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (i) line += ',';
        line += csv_field(t.columns[i]);
    }
    out << line << '\n';
    for (const auto& row : t.rows) {
        line.clear();
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) line += ',';
            line += cell_text(row[i]);
        }
        out << line << '\n';
    }
}

void write_json(const Table& t, std::ostream& out) {
    nlohmann::ordered_json doc;
    doc["command"] = t.command;
    doc["parameters"] = t.parameters;
    doc["columns"] = t.columns;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json r = nlohmann::ordered_json::array();
        for (const Cell& c : row) r.push_back(cell_json(c));
        rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << '\n';
}

void write_table(const Table& t, OutputFormat format, std::ostream& out) {
    if (format == OutputFormat::json) {
        write_json(t, out);
    } else {
        write_csv(t, out);
    }
}

}  // namespace kbounds::cli
