#pragma once

// Function files (JSON) and tabular output (CSV and fixed-width tables).
//
// Step function file:
//   {"breakpoints": ["-1", "0"], "values": ["1"], "tails": {"left": "0", "right": "0"}}
// Truncation radius file:
//   {"breakpoints": ["0", "4/5"], "values": ["1", "2/5"]}
// Numbers are rational strings ("3", "-2/7", "0.25"); plain JSON integers are
// accepted too. `tails` and either of its fields default to "0".

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "maxbv/piecewise_linear.hpp"
#include "maxbv/step_function.hpp"

namespace maxbv {

// Malformed or invalid input; the message names the source and the field.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

StepFunction parse_step_function(std::string_view text, std::string_view source = "<input>");
StepFunction load_step_function(const std::filesystem::path& path);
std::string to_json(const StepFunction& f);

// Rejects negative node values.
PiecewiseLinearFunction parse_radius(std::string_view text, std::string_view source = "<input>");
PiecewiseLinearFunction load_radius(const std::filesystem::path& path);
std::string to_json(const PiecewiseLinearFunction& n);

enum class ColumnKind { Text, Integer, Exact };

struct Column {
    std::string name;
    ColumnKind kind;
};

// std::monostate is an empty field in any column.
using Cell = std::variant<std::monostate, std::string, long long, Rational>;
using Row = std::vector<Cell>;

// Header: the column names in order, then `<name>_decimal` for every Exact
// column. Exact cells print as p/q, their decimal twins with 17 significant
// digits. Fields are quoted when they contain commas, quotes or newlines.
void emit_csv(std::ostream& out, const std::vector<Column>& schema, const std::vector<Row>& rows);

// Left-aligned fixed-width table; Exact cells show p/q followed by the decimal.
void emit_table(std::ostream& out, const std::vector<Column>& schema, const std::vector<Row>& rows);

}  // namespace maxbv
