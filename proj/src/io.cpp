#include "maxbv/io.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <span>
#include <sstream>

#include "json.hpp"

namespace maxbv {

namespace {

using nlohmann::json;

[[noreturn]] void fail(std::string_view source, const std::string& what) {
    throw InputError(std::string(source) + ": " + what);
}

json parse_document(std::string_view text, std::string_view source) {
    try {
        json doc = json::parse(text);
        if (!doc.is_object()) fail(source, "expected a JSON object");
        return doc;
    } catch (const json::parse_error& e) {
        fail(source, e.what());
    }
}

Rational rational_field(const json& v, std::string_view source, const std::string& field) {
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (!v.is_string()) fail(source, field + ": expected a rational string");
    try {
        return Rational::parse(v.get<std::string>());
    } catch (const ParseError& e) {
        fail(source, field + ": " + e.what());
    }
}

std::vector<Rational> rational_array(const json& doc, std::string_view source, const char* field) {
    const auto it = doc.find(field);
    if (it == doc.end()) fail(source, std::string("missing field '") + field + "'");
    if (!it->is_array()) fail(source, std::string(field) + ": expected an array");
    std::vector<Rational> out;
    for (std::size_t i = 0; i < it->size(); ++i) {
        out.push_back(rational_field((*it)[i], source, std::string(field) + "[" + std::to_string(i) + "]"));
    }
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(path.string() + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json strings(std::span<const Rational> xs) {
    json arr = json::array();
    for (const auto& x : xs) arr.push_back(x.str());
    return arr;
}

std::string plain(const Cell& c) {
    if (std::holds_alternative<std::monostate>(c)) return "";
    if (const auto* s = std::get_if<std::string>(&c)) return *s;
    if (const auto* n = std::get_if<long long>(&c)) return std::to_string(*n);
    return std::get<Rational>(c).str();
}

std::string quoted(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

void check_row(const std::vector<Column>& schema, const Row& row) {
    if (row.size() != schema.size()) throw std::invalid_argument("row width does not match the schema");
    for (std::size_t i = 0; i < row.size(); ++i) {
        const bool ok = std::holds_alternative<std::monostate>(row[i]) ||
                        (schema[i].kind == ColumnKind::Text && std::holds_alternative<std::string>(row[i])) ||
                        (schema[i].kind == ColumnKind::Integer && std::holds_alternative<long long>(row[i])) ||
                        (schema[i].kind == ColumnKind::Exact && std::holds_alternative<Rational>(row[i]));
        if (!ok) throw std::invalid_argument("cell type does not match column '" + schema[i].name + "'");
    }
}

}  // namespace

StepFunction parse_step_function(std::string_view text, std::string_view source) {
    const json doc = parse_document(text, source);
    auto bps = rational_array(doc, source, "breakpoints");
    auto values = rational_array(doc, source, "values");
    Rational left;
    Rational right;
    if (const auto t = doc.find("tails"); t != doc.end()) {
        if (!t->is_object()) fail(source, "tails: expected an object");
        if (const auto l = t->find("left"); l != t->end()) left = rational_field(*l, source, "tails.left");
        if (const auto r = t->find("right"); r != t->end()) right = rational_field(*r, source, "tails.right");
    }
    if (bps.empty()) fail(source, "breakpoints: need at least one entry");
    if (values.size() + 1 != bps.size()) {
        fail(source, "values: expected " + std::to_string(bps.size() - 1) + " entries for " +
                         std::to_string(bps.size()) + " breakpoints, got " + std::to_string(values.size()));
    }
    for (std::size_t i = 1; i < bps.size(); ++i) {
        if (!(bps[i - 1] < bps[i])) {
            fail(source, "breakpoints[" + std::to_string(i) + "]: breakpoints must be strictly increasing");
        }
    }
    return StepFunction(std::move(bps), std::move(values), std::move(left), std::move(right));
}

StepFunction load_step_function(const std::filesystem::path& path) {
    return parse_step_function(read_file(path), path.string());
}

std::string to_json(const StepFunction& f) {
    json doc;
    doc["breakpoints"] = strings(f.breakpoints());
    doc["values"] = strings(f.piece_values());
    doc["tails"] = {{"left", f.left_tail().str()}, {"right", f.right_tail().str()}};
    return doc.dump(2) + "\n";
}

PiecewiseLinearFunction parse_radius(std::string_view text, std::string_view source) {
    const json doc = parse_document(text, source);
    auto bps = rational_array(doc, source, "breakpoints");
    auto values = rational_array(doc, source, "values");
    if (bps.empty()) fail(source, "breakpoints: need at least one entry");
    if (values.size() != bps.size()) {
        fail(source, "values: expected " + std::to_string(bps.size()) + " entries, got " +
                         std::to_string(values.size()));
    }
    for (std::size_t i = 1; i < bps.size(); ++i) {
        if (!(bps[i - 1] < bps[i])) {
            fail(source, "breakpoints[" + std::to_string(i) + "]: breakpoints must be strictly increasing");
        }
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i].sign() < 0) fail(source, "values[" + std::to_string(i) + "]: truncation radius must be nonnegative");
    }
    return PiecewiseLinearFunction(std::move(bps), std::move(values));
}

PiecewiseLinearFunction load_radius(const std::filesystem::path& path) {
    return parse_radius(read_file(path), path.string());
}

std::string to_json(const PiecewiseLinearFunction& n) {
    json doc;
    doc["breakpoints"] = strings(n.breakpoints());
    doc["values"] = strings(n.values());
    return doc.dump(2) + "\n";
}

void emit_csv(std::ostream& out, const std::vector<Column>& schema, const std::vector<Row>& rows) {
    std::vector<std::string> header;
    for (const auto& c : schema) header.push_back(c.name);
    for (const auto& c : schema) {
        if (c.kind == ColumnKind::Exact) header.push_back(c.name + "_decimal");
    }
    const auto line = [&out](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << quoted(fields[i]);
        out << '\n';
    };
    line(header);
    for (const auto& row : rows) {
        check_row(schema, row);
        std::vector<std::string> fields;
        for (const auto& cell : row) fields.push_back(plain(cell));
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (schema[i].kind != ColumnKind::Exact) continue;
            const auto* r = std::get_if<Rational>(&row[i]);
            fields.push_back(r ? r->to_decimal(17) : "");
        }
        line(fields);
    }
}

void emit_table(std::ostream& out, const std::vector<Column>& schema, const std::vector<Row>& rows) {
    std::vector<std::vector<std::string>> grid;
    std::vector<std::string> header;
    for (const auto& c : schema) header.push_back(c.name);
    grid.push_back(header);
    for (const auto& row : rows) {
        check_row(schema, row);
        std::vector<std::string> fields;
        for (const auto& cell : row) {
            if (const auto* r = std::get_if<Rational>(&cell); r && !r->is_integer()) {
                fields.push_back(r->str() + " (" + r->to_decimal(17) + ")");
            } else {
                fields.push_back(plain(cell));
            }
        }
        grid.push_back(std::move(fields));
    }
    std::vector<std::size_t> width(schema.size(), 0);
    for (const auto& r : grid) {
        for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    }
    for (const auto& r : grid) {
        std::string line;
        for (std::size_t i = 0; i < r.size(); ++i) {
            line += r[i];
            if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
        }
        out << line << '\n';
    }
}

}  // namespace maxbv
