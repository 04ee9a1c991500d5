#pragma once

#include <rnaname/error.hpp>

#include <cctype>
#include <cstddef>
#include <istream>
#include <string>
#include <vector>

namespace rnaname {

struct FastaRecord {
    std::string id;
    std::string description;
    std::string sequence;

    friend bool operator==(const FastaRecord&, const FastaRecord&) = default;
};

// Reads all records in file order. Multi-line sequences are joined and
// whitespace is dropped; blank lines are ignored. Sequence data before the
// first header, an empty id or a record without sequence are errors.
inline std::vector<FastaRecord> parse_fasta(std::istream& in)
{
    std::vector<FastaRecord> records;
    std::string line;
    std::size_t line_no = 0;
    const auto fail = [&](const std::string& what) {
        return Error(ErrorKind::malformed_fasta, "line " + std::to_string(line_no) + ": " + what);
    };
    const auto close_record = [&] {
        if (!records.empty() && records.back().sequence.empty())
            throw Error(ErrorKind::malformed_fasta, "record '" + records.back().id + "' has no sequence");
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (!line.empty() && line[0] == '>') {
            close_record();
            std::size_t start = 1;
            while (start < line.size() && std::isspace(static_cast<unsigned char>(line[start])))
                ++start;
            std::size_t end = start;
            while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end])))
                ++end;
            if (end == start)
                throw fail("header without an id");
            FastaRecord rec;
            rec.id = line.substr(start, end - start);
            std::size_t desc = end;
            while (desc < line.size() && std::isspace(static_cast<unsigned char>(line[desc])))
                ++desc;
            rec.description = line.substr(desc);
            records.push_back(std::move(rec));
            continue;
        }
        std::string data;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c)))
                data.push_back(c);
        if (data.empty())
            continue;
        if (records.empty())
            throw fail("sequence data before the first header");
        records.back().sequence += data;
    }
    close_record();
    return records;
}

} // namespace rnaname
