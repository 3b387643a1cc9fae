#include "qsqc/io.hpp"

#include <fstream>
#include <sstream>

namespace qsqc {

namespace {

bool is_blank(std::string_view line) {
    return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

bool is_comment(std::string_view line) {
    const auto pos = line.find_first_not_of(" \t\r");
    return pos != std::string_view::npos && line[pos] == '#';
}

// Bits before and after the single '|'; positions are 1-based columns.
SympVector parse_data_line(std::string_view line, int line_no) {
    std::vector<bool> a, b;
    bool seen_bar = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        const int col = static_cast<int>(i) + 1;
        if (c == ' ' || c == '\t' || c == '\r') continue;
        if (c == '|') {
            if (seen_bar) throw SyntaxError(line_no, col, "second '|' in line");
            seen_bar = true;
        } else if (c == '0' || c == '1') {
            (seen_bar ? b : a).push_back(c == '1');
        } else {
            throw SyntaxError(line_no, col, std::string("unexpected character '") + c + "'");
        }
    }
    if (!seen_bar) throw SyntaxError(line_no, static_cast<int>(line.size()) + 1, "missing '|'");
    if (a.empty()) throw SyntaxError(line_no, 1, "empty a-part");
    if (a.size() != b.size())
        throw InconsistentLengthError(line_no, 1,
                                      "a-part has " + std::to_string(a.size()) +
                                          " bits but b-part has " + std::to_string(b.size()));
    SympVector v(static_cast<int>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i]) v.set_bit(static_cast<int>(i), true);
        if (b[i]) v.set_bit(static_cast<int>(a.size() + i), true);
    }
    return v;
}

}  // namespace

std::vector<SympVector> parse_check_matrix(std::string_view text) {
    std::vector<SympVector> rows;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const std::string_view line =
            text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        ++line_no;
        if (!is_blank(line) && !is_comment(line)) {
            SympVector v = parse_data_line(line, line_no);
            if (!rows.empty() && v.n() != rows.front().n())
                throw InconsistentLengthError(line_no, 1,
                                              "expected n=" + std::to_string(rows.front().n()) +
                                                  " but line has n=" + std::to_string(v.n()));
            rows.push_back(std::move(v));
        }
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    return rows;
}

SympVector parse_vector(std::string_view token) { return parse_data_line(token, 1); }

std::string format_check_matrix(std::span<const SympVector> rows) {
    std::string out;
    for (const auto& row : rows) {
        out += row.to_string();
        out += '\n';
    }
    return out;
}

std::vector<SympVector> load_check_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_check_matrix(buf.str());
}

void save_check_matrix(const std::string& path, std::span<const SympVector> rows) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << format_check_matrix(rows);
}

}  // namespace qsqc
