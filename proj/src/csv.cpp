#include "spssot/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace spssot {

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    if (line.empty()) cells.emplace_back();
    return cells;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_cell(const std::string& raw, long line_no) {
    const std::string s = trim(raw);
    if (s.empty()) return std::numeric_limits<double>::quiet_NaN();
    double value = 0.0;
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end)
        throw ParseError("cannot parse numeric cell '" + s + "'", line_no);
    return value;
}

}  // namespace

TabularDataset load_csv(const std::string& path, const CsvSchema& schema,
                        DomainTag tag) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);

    std::string line;
    if (!std::getline(in, line)) throw ParseError("missing header row", 1);
    auto header = split_line(line);
    for (auto& h : header) h = trim(h);

    std::vector<std::string> expected = schema.feature_names;
    if (schema.label_column) expected.push_back(*schema.label_column);
    if (header != expected) {
        std::string msg = "header does not match schema; expected [";
        for (size_t i = 0; i < expected.size(); ++i)
            msg += (i ? "," : "") + expected[i];
        msg += "]";
        throw ValidationError(msg);
    }

    const long n_features = static_cast<long>(schema.feature_names.size());
    const long n_cols = n_features + (schema.label_column ? 1 : 0);
    std::vector<Vector> rows;
    std::vector<int> labels;
    long line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        auto cells = split_line(line);
        if (static_cast<long>(cells.size()) != n_cols)
            throw ParseError("expected " + std::to_string(n_cols) + " cells, got " +
                                 std::to_string(cells.size()),
                             line_no);
        Vector row(n_features);
        for (long j = 0; j < n_features; ++j)
            row(j) = parse_cell(cells[static_cast<size_t>(j)], line_no);
        if (schema.label_column) {
            const double lv = parse_cell(cells.back(), line_no);
            if (std::isnan(lv) || (lv != 0.0 && lv != 1.0))
                throw ValidationError("label outside {0,1} at line " +
                                      std::to_string(line_no));
            labels.push_back(static_cast<int>(lv));
        }
        rows.push_back(std::move(row));
    }

    TabularDataset data;
    data.tag = tag;
    data.feature_names = schema.feature_names;
    data.X.resize(static_cast<long>(rows.size()), n_features);
    for (size_t i = 0; i < rows.size(); ++i)
        data.X.row(static_cast<long>(i)) = rows[i].transpose();
    data.y = std::move(labels);
    mean_impute(data.X);
    return data;
}

TabularDataset load_csv_autoschema(const std::string& path, DomainTag tag) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw ParseError("missing header row", 1);
    auto header = split_line(line);
    CsvSchema schema;
    for (auto& h : header) {
        const std::string name = trim(h);
        if (name == "label")
            schema.label_column = name;
        else
            schema.feature_names.push_back(name);
    }
    if (schema.label_column && schema.feature_names.size() + 1 != header.size())
        throw ValidationError("label column must appear exactly once and last");
    return load_csv(path, schema, tag);
}

void write_csv(const TabularDataset& data, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    for (size_t j = 0; j < data.feature_names.size(); ++j)
        out << (j ? "," : "") << data.feature_names[j];
    if (data.has_labels()) out << ",label";
    out << "\n";
    char buf[64];
    for (long i = 0; i < data.size(); ++i) {
        for (long j = 0; j < data.dim(); ++j) {
            snprintf(buf, sizeof(buf), "%.17g", data.X(i, j));
            out << (j ? "," : "") << buf;
        }
        if (data.has_labels()) out << "," << data.y[static_cast<size_t>(i)];
        out << "\n";
    }
}

}  // namespace spssot
