#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace minset {

/// Shortest decimal form that round-trips the value ("0.7", "0", "1e-09").
std::string format_double(double x);

/// Quotes a CSV field only when it needs it (comma, quote or newline inside).
std::string csv_quote(const std::string& field);

/// Splits one CSV line into fields, honouring double-quoted fields with ""
/// escapes. Fields never span lines.
std::vector<std::string> csv_split(const std::string& line);

/// All non-blank lines of the stream, split into fields.
std::vector<std::vector<std::string>> read_csv(std::istream& in);

bool parse_double(const std::string& text, double& out);

} // namespace minset
