#include <algorithm>
#include <charconv>
#include <cstdio>
#include <stdexcept>
#include <tuple>

#include "hausmorph/experiment.hpp"

namespace hausmorph {

namespace {

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    std::string s = buf;
    if (s == "-0.000000") s = "0.000000";
    return s;
}

std::vector<std::string> split_fields(std::string_view line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        out.emplace_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

template <class T>
T number(const std::string& field, std::size_t line_no) {
    T value{};
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size())
        throw std::invalid_argument("csv line " + std::to_string(line_no) + ": bad number '" + field + "'");
    return value;
}

/// Calls `row` for each non-header line after checking the header.
template <class F>
void for_each_row(std::string_view text, std::string_view header, F row) {
    std::size_t pos = 0, line_no = 0;
    bool seen_header = false;
    while (pos < text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        pos = end + 1;
        ++line_no;
        if (line.empty()) continue;
        if (!seen_header) {
            if (line != header) throw std::invalid_argument("csv: unexpected header '" + std::string(line) + "'");
            seen_header = true;
            continue;
        }
        row(split_fields(line), line_no);
    }
    if (!seen_header) throw std::invalid_argument("csv: missing header");
}

}  // namespace

std::string emit_csv(std::vector<MeasurementRecord> records) {
    std::stable_sort(records.begin(), records.end(), [](const MeasurementRecord& x, const MeasurementRecord& y) {
        return std::forward_as_tuple(x.pair, std::string_view(to_string(x.method)), x.alpha) <
               std::forward_as_tuple(y.pair, std::string_view(to_string(y.method)), y.alpha);
    });
    std::string out(kRecordsHeader);
    out += '\n';
    for (const auto& r : records) {
        out += r.pair + ',' + to_string(r.method) + ',' + fixed6(r.alpha) + ',' + fixed6(r.area) + ',' +
               fixed6(r.perimeter) + ',' + std::to_string(r.components) + ',' + std::to_string(r.holes) + ',' +
               fixed6(r.area_ratio) + ',' + fixed6(r.perimeter_ratio) + '\n';
    }
    return out;
}

std::string emit_csv(std::vector<SummaryRow> rows) {
    std::stable_sort(rows.begin(), rows.end(), [](const SummaryRow& x, const SummaryRow& y) {
        return std::forward_as_tuple(x.category, std::string_view(to_string(x.method)), x.quantity) <
               std::forward_as_tuple(y.category, std::string_view(to_string(y.method)), y.quantity);
    });
    std::string out(kSummaryHeader);
    out += '\n';
    for (const auto& r : rows)
        out += r.category + ',' + to_string(r.method) + ',' + r.quantity + ',' + fixed6(r.mean) + ',' +
               fixed6(r.stddev) + '\n';
    return out;
}

std::vector<MeasurementRecord> parse_records_csv(std::string_view text) {
    std::vector<MeasurementRecord> records;
    for_each_row(text, kRecordsHeader, [&](const std::vector<std::string>& f, std::size_t line_no) {
        if (f.size() != 9) throw std::invalid_argument("csv line " + std::to_string(line_no) + ": expected 9 fields");
        MeasurementRecord r;
        r.pair = f[0];
        r.method = parse_method(f[1]);
        r.alpha = number<double>(f[2], line_no);
        r.area = number<double>(f[3], line_no);
        r.perimeter = number<double>(f[4], line_no);
        r.components = number<int>(f[5], line_no);
        r.holes = number<int>(f[6], line_no);
        r.area_ratio = number<double>(f[7], line_no);
        r.perimeter_ratio = number<double>(f[8], line_no);
        records.push_back(std::move(r));
    });
    return records;
}

std::vector<SummaryRow> parse_summary_csv(std::string_view text) {
    std::vector<SummaryRow> rows;
    for_each_row(text, kSummaryHeader, [&](const std::vector<std::string>& f, std::size_t line_no) {
        if (f.size() != 5) throw std::invalid_argument("csv line " + std::to_string(line_no) + ": expected 5 fields");
        rows.push_back({f[0], parse_method(f[1]), f[2], number<double>(f[3], line_no), number<double>(f[4], line_no)});
    });
    return rows;
}

}  // namespace hausmorph
