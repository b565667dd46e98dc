#include "spfcomb/csv.hpp"

#include <istream>

#include "spfcomb/errors.hpp"

namespace spfcomb::csv {

bool Reader::next(Row& row) {
    row.fields.clear();

    // line_ counts fully terminated physical lines consumed so far.
    int c = in_.get();
    while (c == '\n' || c == '\r') {  // skip blank lines
        if (c == '\r' && in_.peek() == '\n') in_.get();
        ++line_;
        c = in_.get();
    }
    if (c == std::istream::traits_type::eof()) return false;

    row.line = line_ + 1;

    std::string field;
    bool in_quotes = false;
    while (true) {
        if (c == std::istream::traits_type::eof()) {
            if (in_quotes) {
                throw DataError("csv line " + std::to_string(row.line) +
                                ": unterminated quoted field");
            }
            row.fields.push_back(std::move(field));
            return true;
        }
        char ch = static_cast<char>(c);
        if (in_quotes) {
            if (ch == '"') {
                if (in_.peek() == '"') {
                    in_.get();
                    field.push_back('"');
                } else {
                    in_quotes = false;
                }
            } else {
                if (ch == '\r') {
                    if (in_.peek() == '\n') in_.get();
                    ch = '\n';
                }
                if (ch == '\n') ++line_;
                field.push_back(ch);
            }
        } else if (ch == '"') {
            if (!field.empty()) {
                throw DataError("csv line " + std::to_string(row.line) +
                                ": quote inside unquoted field");
            }
            in_quotes = true;
        } else if (ch == ',') {
            row.fields.push_back(std::move(field));
            field.clear();
        } else if (ch == '\n' || ch == '\r') {
            if (ch == '\r' && in_.peek() == '\n') in_.get();
            ++line_;
            row.fields.push_back(std::move(field));
            return true;
        } else {
            field.push_back(ch);
        }
        c = in_.get();
    }
}

Table::Table(std::istream& in, const std::vector<std::string>& required_columns)
    : reader_(in) {
    Row header;
    if (!reader_.next(header)) {
        throw DataError("csv: empty input, header row expected");
    }
    for (std::size_t i = 0; i < header.fields.size(); ++i) {
        index_[header.fields[i]] = i;
    }
    for (const auto& col : required_columns) {
        if (!index_.count(col)) {
            throw DataError("csv: required column '" + col + "' missing from header");
        }
    }
}

bool Table::next(Row& row) { return reader_.next(row); }

const std::string& Table::field(const Row& row, const std::string& column) const {
    auto it = index_.find(column);
    if (it == index_.end()) {
        throw DataError("csv: unknown column '" + column + "'");
    }
    if (it->second >= row.fields.size()) {
        throw DataError("csv line " + std::to_string(row.line) + ": too few fields (" +
                        std::to_string(row.fields.size()) + ", need column '" + column + "')");
    }
    return row.fields[it->second];
}

std::string escape(const std::string& field) {
    bool needs_quotes = field.find_first_of(",\"\n\r") != std::string::npos;
    if (!needs_quotes) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += "\"";
    return out;
}

std::string join_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out.push_back(',');
        out += escape(fields[i]);
    }
    out.push_back('\n');
    return out;
}

}  // namespace spfcomb::csv
