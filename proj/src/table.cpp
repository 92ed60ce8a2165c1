#include "deltaconf/table.hpp"

#include <cstdio>
#include <ostream>

#include "json.hpp"

#include "deltaconf/types.hpp"

namespace deltaconf {

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string cell_text(const Cell& c) {
    if (std::holds_alternative<std::monostate>(c)) return "";
    if (const auto* s = std::get_if<std::string>(&c)) return *s;
    if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
    return format_real(std::get<double>(c));
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size())
        throw Error(ErrorCategory::Domain, "row width does not match table header");
    rows.push_back(std::move(row));
}

void Table::write_csv(std::ostream& out) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
        out << (i ? "," : "") << csv_escape(columns[i]);
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << csv_escape(cell_text(row[i]));
        out << '\n';
    }
}

void Table::write_json(std::ostream& out) const {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json rec;
        for (std::size_t i = 0; i < row.size(); ++i) {
            const Cell& c = row[i];
            if (std::holds_alternative<std::monostate>(c))
                rec[columns[i]] = nullptr;
            else if (const auto* s = std::get_if<std::string>(&c))
                rec[columns[i]] = *s;
            else if (const auto* v = std::get_if<long long>(&c))
                rec[columns[i]] = *v;
            else
                rec[columns[i]] = format_real(std::get<double>(c));
        }
        arr.push_back(std::move(rec));
    }
    out << arr.dump(2) << '\n';
}

void Table::write(std::ostream& out, const std::string& format) const {
    if (format == "csv") write_csv(out);
    else if (format == "json") write_json(out);
    else throw Error(ErrorCategory::Usage, "unknown output format: " + format);
}

}  // namespace deltaconf
