#include "puc/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "puc/errors.hpp"

namespace puc {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() &&
           (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

}  // namespace

const std::vector<double>& Table::column(std::string_view name) const {
    return values[static_cast<std::size_t>(column_index(name))];
}

int Table::column_index(std::string_view name) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (columns[i] == name) return static_cast<int>(i);
    }
    throw ConfigError("table has no column named '" + std::string(name) + "'");
}

Table parse_csv_text(std::string_view text, std::string_view context) {
    const std::string where(context);
    Table table;
    std::size_t pos = 0;
    int line_no = 0;
    bool have_header = false;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view line = nl == std::string_view::npos
                                    ? text.substr(pos)
                                    : text.substr(pos, nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (trim(line).empty()) continue;

        const std::vector<std::string_view> fields = split_fields(line);
        if (!have_header) {
            for (std::size_t c = 0; c < fields.size(); ++c) {
                const std::string_view name = trim(fields[c]);
                if (name.empty()) {
                    throw ParseError(where + ": empty column name in header " +
                                     "(column " + std::to_string(c + 1) + ")");
                }
                table.columns.emplace_back(name);
            }
            table.values.resize(table.columns.size());
            have_header = true;
            continue;
        }
        if (fields.size() != table.columns.size()) {
            throw ParseError(where + ": line " + std::to_string(line_no) +
                             " has " + std::to_string(fields.size()) +
                             " fields, expected " +
                             std::to_string(table.columns.size()));
        }
        for (std::size_t c = 0; c < fields.size(); ++c) {
            const std::string_view cell = trim(fields[c]);
            double value = 0.0;
            const auto* begin = cell.data();
            const auto* end = cell.data() + cell.size();
            const auto [ptr, ec] = std::from_chars(begin, end, value);
            if (ec != std::errc() || ptr != end || cell.empty()) {
                throw ParseError(where + ": line " + std::to_string(line_no) +
                                 ", column " + std::to_string(c + 1) +
                                 ": cannot parse '" + std::string(cell) +
                                 "' as a number");
            }
            table.values[c].push_back(value);
        }
    }
    if (!have_header) {
        throw ParseError(where + ": no header line");
    }
    return table;
}

Table read_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open '" + path + "' for reading");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_csv_text(buf.str(), path);
}

std::string format_csv(const Table& table) {
    if (table.columns.empty()) {
        throw ConfigError("format_csv: table has no columns");
    }
    for (const auto& col : table.values) {
        if (col.size() != table.values.front().size()) {
            throw ConfigError("format_csv: ragged columns");
        }
    }
    std::string out;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c) out += ",";
        out += table.columns[c];
    }
    out += "\n";
    char buf[64];
    const std::size_t rows = table.values.front().size();
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < table.values.size(); ++c) {
            if (c) out += ",";
            std::snprintf(buf, sizeof buf, "%.17g", table.values[c][r]);
            out += buf;
        }
        out += "\n";
    }
    return out;
}

void write_csv(const Table& table, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ConfigError("cannot open '" + path + "' for writing");
    }
    out << format_csv(table);
    if (!out) {
        throw ConfigError("failed while writing '" + path + "'");
    }
}

}  // namespace puc
