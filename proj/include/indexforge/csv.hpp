#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace indexforge::csv {

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;  // all rows padded/validated to header size
};

/// Parses comma-delimited text with a mandatory header row. Handles RFC-4180
/// style quoting; line endings may be LF or CRLF. Throws StructuralError on
/// ragged rows or unterminated quotes.
Table parse(std::string_view text, const std::string& source_name);

std::string escape_field(const std::string& field);

}  // namespace indexforge::csv
