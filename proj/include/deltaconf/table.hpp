#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace deltaconf {

/// One output cell: empty, text, integer or real.
using Cell = std::variant<std::monostate, std::string, long long, double>;

/// Tidy table with a fixed column set, writable as RFC-4180-style CSV
/// (header row included) or as a JSON array of flat records. Real numbers
/// are rendered with %.10g in both formats so repeated runs are
/// byte-identical.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
    void write_csv(std::ostream& out) const;
    void write_json(std::ostream& out) const;
    void write(std::ostream& out, const std::string& format) const;  // "csv" | "json"
};

std::string format_real(double v);

}  // namespace deltaconf
