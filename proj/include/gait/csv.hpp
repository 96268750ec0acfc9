#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace gait::csv {

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// RFC-4180 reader: comma separator, optional double-quoted fields with
/// doubled quotes as escapes, LF or CRLF line ends. Every row must have the
/// same field count as the header. Throws CsvFormatError.
Table read(std::istream& in);
Table read_string(const std::string& text);

/// Quote a field only when it contains a comma, quote, or newline.
std::string escape_field(const std::string& field);

void write_row(std::ostream& out, const std::vector<std::string>& fields);

/// Strict double parse (full string, finite). Returns false on failure.
bool parse_double(const std::string& text, double& out);

/// Strict integer parse (full string). Returns false on failure.
bool parse_int(const std::string& text, long long& out);

/// Shortest round-trip representation of a double.
std::string format_double(double value);

/// Fixed-point formatting used by report files.
std::string fixed2(double value);
std::string fixed4(double value);

} // namespace gait::csv
