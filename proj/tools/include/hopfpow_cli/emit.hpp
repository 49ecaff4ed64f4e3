#pragma once

#include "hopfpow/power_analysis.hpp"

#include <ostream>
#include <string>

namespace hopfpow::cli {

enum class Format { Plain, Csv, Latex, Json };

Format parse_format(const std::string& text);

struct TableLayout {
    /// Columns 1..ceil(e/2), every row filled from the symmetric table.
    bool half = false;
    /// LaTeX caption name, e.g. "D(\mathbb{Q} S_{3})".
    std::string latex_name;
};

/// Default layout choice: half table when e > 16.
bool default_half_table(int exponent);

void emit_table(std::ostream& out, const TpdTable& table, Format format, const TableLayout& layout);
std::string table_to_json(const TpdTable& table);
/// Inverse of table_to_json; throws ParseError on malformed input.
TpdTable table_from_json(const std::string& text);

void emit_orders(std::ostream& out, const std::string& name, const OrderReport& report, Format format);

} // namespace hopfpow::cli
