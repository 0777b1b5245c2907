#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace touchard::cli {

enum class OutputFormat { tsv, json_lines };

/// A field is a word-sized count, a string (exact integers are always
/// emitted as decimal strings), or a flag.
using Value = std::variant<std::uint64_t, std::string, bool>;

/// Writes typed records grouped into sections.
///
/// TSV: each section opens with a header line "# <kind>\t<field>...", and every
/// record line starts with its kind.  JSON-lines: one object per record with
/// a leading "record" key followed by the fields in declaration order.
class RecordWriter {
public:
    RecordWriter(std::ostream& out, OutputFormat format) : out_(out), format_(format) {}

    void begin(std::string kind, std::vector<std::string> fields);
    void write(const std::vector<Value>& values);

private:
    std::ostream& out_;
    OutputFormat format_;
    std::string kind_;
    std::vector<std::string> fields_;
};

/// Record as recovered by the parsers below; every value is rendered to its
/// TSV text so both formats compare field-for-field.
struct ParsedRecord {
    std::string kind;
    std::vector<std::pair<std::string, std::string>> fields;

    friend bool operator==(const ParsedRecord&, const ParsedRecord&) = default;
};

std::vector<ParsedRecord> parse_tsv(std::istream& in);
std::vector<ParsedRecord> parse_json_lines(std::istream& in);

}  // namespace touchard::cli
