#include "ionprobe/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace ionprobe {

std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 12);
    return std::string(buf.data(), res.ptr);
}

CsvWriter::CsvWriter(std::ostream& out, std::initializer_list<std::string_view> header)
    : out_(out), columns_(header.size()) {
    for (auto name : header) cell(name);
    end_row();
}

CsvWriter& CsvWriter::cell(double value) { return cell(std::string_view(format_number(value))); }

CsvWriter& CsvWriter::cell(long long value) { return cell(std::string_view(std::to_string(value))); }

CsvWriter& CsvWriter::cell(std::string_view text) {
    if (filled_ == columns_) throw std::logic_error("CsvWriter: too many cells in row");
    if (filled_ > 0) out_ << ',';
    out_ << text;
    ++filled_;
    return *this;
}

void CsvWriter::end_row() {
    if (filled_ != columns_) throw std::logic_error("CsvWriter: row has missing cells");
    out_ << '\n';
    filled_ = 0;
}

} // namespace ionprobe
