#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace kbounds::cli {

/// Empty cell, number, or text.
using Cell = std::variant<std::monostate, double, std::string>;

enum class OutputFormat { csv, json };

struct Table {
    std::string command;
    nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// Header row then one line per row; numbers in shortest round-trip form,
/// infinities as "inf"/"-inf", empty cells empty. Fields holding a comma or
/// quote are quoted.
void write_csv(const Table& t, std::ostream& out);

/// {"command", "parameters", "columns", "rows"}; empty cells are null and
/// non-finite numbers are the strings "inf", "-inf", "nan".
void write_json(const Table& t, std::ostream& out);

void write_table(const Table& t, OutputFormat format, std::ostream& out);

}  // namespace kbounds::cli
