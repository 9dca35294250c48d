#include "misoic/csv.hpp"

#include <cstdio>

namespace misoic {

std::string csv_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void CsvWriter::meta(const std::string& key, const std::string& value) {
    os_ << "# " << key << ": " << value << "\n";
}

void CsvWriter::header(const std::vector<std::string>& cols) { row(cols); }

void CsvWriter::row(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) os_ << ",";
        os_ << fields[i];
    }
    os_ << "\n";
}

} // namespace misoic
