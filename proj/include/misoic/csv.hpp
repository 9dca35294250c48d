#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace misoic {

// Numeric field with 12 significant digits, enough to round-trip the grids
// and rates we emit without drowning diffs in noise.
std::string csv_num(double v);

// Comma-separated output with "#"-prefixed metadata lines before the header.
// Rows are written as-is; use csv_num for numeric fields. Lines end with a
// plain newline.
class CsvWriter {
public:
    explicit CsvWriter(std::ostream& os) : os_(os) {}

    void meta(const std::string& key, const std::string& value);
    void header(const std::vector<std::string>& cols);
    void row(const std::vector<std::string>& fields);

private:
    std::ostream& os_;
};

} // namespace misoic
