#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace spfcomb::csv {

/// One parsed record plus its 1-based line number in the source stream.
struct Row {
    std::vector<std::string> fields;
    std::size_t line = 0;
};

/// Reads comma-separated rows. Handles quoted fields (embedded commas,
/// doubled quotes, embedded newlines) and CRLF endings. Throws DataError
/// with a line number on malformed quoting.
class Reader {
public:
    explicit Reader(std::istream& in) : in_(in) {}

    /// Returns false at end of input. Skips blank lines.
    bool next(Row& row);

private:
    std::istream& in_;
    std::size_t line_ = 0;
};

/// Header-indexed access on top of Reader.
class Table {
public:
    ///iostream must start with a header row; throws DataError when a
    /// required column is missing.
    Table(std::istream& in, const std::vector<std::string>& required_columns);

    bool next(Row& row);
    /// Field of the current row by column name.
    const std::string& field(const Row& row, const std::string& column) const;

private:
    Reader reader_;
    std::map<std::string, std::size_t> index_;
};

std::string escape(const std::string& field);
std::string join_row(const std::vector<std::string>& fields);

}  // namespace spfcomb::csv
