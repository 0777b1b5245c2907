#include "records.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace touchard::cli {

namespace {

std::string render(const Value& v) {
    if (const auto* u = std::get_if<std::uint64_t>(&v)) return std::to_string(*u);
    if (const auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
    return std::get<std::string>(v);
}

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream ss(line);
    while (std::getline(ss, cur, '\t')) out.push_back(cur);
    if (!line.empty() && line.back() == '\t') out.emplace_back();
    return out;
}

}  // namespace

void RecordWriter::begin(std::string kind, std::vector<std::string> fields) {
    kind_ = std::move(kind);
    fields_ = std::move(fields);
    if (format_ == OutputFormat::tsv) {
        out_ << "# " << kind_;
        for (const auto& f : fields_) out_ << '\t' << f;
        out_ << '\n';
    }
}

void RecordWriter::write(const std::vector<Value>& values) {
    if (values.size() != fields_.size()) {
        throw std::logic_error("record '" + kind_ + "' expects " + std::to_string(fields_.size()) +
                               " fields");
    }
    if (format_ == OutputFormat::tsv) {
        out_ << kind_;
        for (const auto& v : values) out_ << '\t' << render(v);
        out_ << '\n';
        return;
    }
    nlohmann::ordered_json obj;
    obj["record"] = kind_;
    for (std::size_t i = 0; i < values.size(); ++i) {
        std::visit([&](const auto& x) { obj[fields_[i]] = x; }, values[i]);
    }
    out_ << obj.dump() << '\n';
}

std::vector<ParsedRecord> parse_tsv(std::istream& in) {
    std::vector<ParsedRecord> out;
    std::string kind;
    std::vector<std::string> fields;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.rfind("# ", 0) == 0) {
            auto cols = split_tabs(line.substr(2));
            kind = cols.at(0);
            fields.assign(cols.begin() + 1, cols.end());
            continue;
        }
        auto cols = split_tabs(line);
        if (cols.empty() || cols[0] != kind || cols.size() != fields.size() + 1) {
            throw std::runtime_error("malformed TSV record: " + line);
        }
        ParsedRecord rec{kind, {}};
        for (std::size_t i = 0; i < fields.size(); ++i) {
            rec.fields.emplace_back(fields[i], cols[i + 1]);
        }
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<ParsedRecord> parse_json_lines(std::istream& in) {
    std::vector<ParsedRecord> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto obj = nlohmann::ordered_json::parse(line);
        ParsedRecord rec{obj.at("record").get<std::string>(), {}};
        for (const auto& [key, val] : obj.items()) {
            if (key == "record") continue;
            std::string text;
            if (val.is_string()) {
                text = val.get<std::string>();
            } else if (val.is_boolean()) {
                text = val.get<bool>() ? "true" : "false";
            } else if (val.is_number_unsigned()) {
                text = std::to_string(val.get<std::uint64_t>());
            } else {
                throw std::runtime_error("unexpected JSON value type in: " + line);
            }
            rec.fields.emplace_back(key, std::move(text));
        }
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace touchard::cli
