#include "tsecon/csv.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace tsecon {

namespace {

std::vector<std::string> split_row(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        // trim surrounding spaces
        const auto b = cell.find_first_not_of(" \t");
        const auto e = cell.find_last_not_of(" \t");
        cells.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
    }
    if (!line.empty() && line.back() == ',') cells.push_back("");
    return cells;
}

double parse_cell(const std::string& cell, const std::string& origin, std::size_t row,
                  const std::string& column) {
    if (cell.empty()) {
        throw ParseError(origin + ": empty cell at row " + std::to_string(row) + ", column '" +
                         column + "'");
    }
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(cell.c_str(), &end);
    if (errno != 0 || end != cell.c_str() + cell.size()) {
        throw ParseError(origin + ": cannot parse '" + cell + "' at row " + std::to_string(row) +
                         ", column '" + column + "'");
    }
    return v;
}

}  // namespace

std::vector<TimeSeries> load_csv_text(const std::string& text, const std::string& origin,
                                      const std::vector<std::string>& columns) {
    std::stringstream stream(text);
    std::string line;
    if (!std::getline(stream, line)) throw ParseError(origin + ": missing header row");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::vector<std::string> header = split_row(line);

    auto find_col = [&](const std::string& name) {
        for (std::size_t j = 0; j < header.size(); ++j) {
            if (header[j] == name) return j;
        }
        throw MissingColumnError(origin + ": no column named '" + name + "'");
    };
    const std::size_t date_col = find_col("date");
    std::vector<std::size_t> col_idx;
    col_idx.reserve(columns.size());
    for (const auto& c : columns) col_idx.push_back(find_col(c));

    std::vector<std::vector<double>> data(columns.size());
    Period start{};
    Period expected{};
    std::size_t row = 1;
    bool first = true;
    while (std::getline(stream, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::vector<std::string> cells = split_row(line);
        if (cells.size() != header.size()) {
            throw ParseError(origin + ": row " + std::to_string(row) + " has " +
                             std::to_string(cells.size()) + " cells, header has " +
                             std::to_string(header.size()));
        }
        const Period p = Period::parse(cells[date_col]);
        if (first) {
            start = p;
            expected = p;
            first = false;
        } else if (p != expected) {
            if (p > expected) {
                throw GapError(origin + ": missing month " + expected.to_string() +
                               " before row " + std::to_string(row));
            }
            throw ParseError(origin + ": row " + std::to_string(row) + " is dated " +
                             p.to_string() + ", expected " + expected.to_string());
        }
        for (std::size_t j = 0; j < columns.size(); ++j) {
            data[j].push_back(parse_cell(cells[col_idx[j]], origin, row, columns[j]));
        }
        expected = expected.plus(1);
    }
    if (first) throw ParseError(origin + ": no data rows");

    std::vector<TimeSeries> out;
    out.reserve(columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        out.emplace_back(columns[j], start, std::move(data[j]));
    }
    return out;
}

std::vector<TimeSeries> load_csv(const std::string& path,
                                 const std::vector<std::string>& columns) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return load_csv_text(buffer.str(), path, columns);
}

}  // namespace tsecon
