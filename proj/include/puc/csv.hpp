#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace puc {

/// Column-oriented numeric table with a named header row.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> values;  // one inner vector per column

    [[nodiscard]] int cols() const { return static_cast<int>(columns.size()); }
    [[nodiscard]] int rows() const {
        return values.empty() ? 0 : static_cast<int>(values.front().size());
    }
    [[nodiscard]] const std::vector<double>& column(std::string_view name) const;
    [[nodiscard]] int column_index(std::string_view name) const;
};

/// Parses CSV text: first line is the header, every further non-empty
/// line holds one double per column.  Raises ParseError with the
/// offending row/column on malformed input; `context` names the source
/// in error messages.
Table parse_csv_text(std::string_view text, std::string_view context = "csv");

/// Reads and parses a CSV file (ParseError if unreadable or malformed).
Table read_csv(const std::string& path);

/// Serializes with %.17g so values round-trip exactly and the emitted
/// bytes are identical across platforms.  Lines end with '\n'.
std::string format_csv(const Table& table);

void write_csv(const Table& table, const std::string& path);

}  // namespace puc
