#include "shchain/io.hpp"

#include <charconv>
#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

namespace shchain {

namespace {

constexpr std::string_view kMagic = "shht";
constexpr int kVersion = 1;

using Rows = std::vector<std::vector<Element>>;

ImplicationTable from_rows(const Rows& rows, std::size_t n) {
  if (n == 0) throw ValidationError("n must be positive");
  if (rows.size() != n) {
    throw ValidationError("table has " + std::to_string(rows.size()) + " rows but n=" +
                          std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw ValidationError("row " + std::to_string(i) + " has " +
                                std::to_string(rows[i].size()) + " entries but n=" +
                                std::to_string(n),
                            i);
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (rows[i][k] >= n) {
        throw ValidationError("cell (" + std::to_string(i) + "," + std::to_string(k) +
                                  "): index " + std::to_string(rows[i][k]) +
                                  " >= n=" + std::to_string(n),
                              i, k);
      }
    }
  }
  return ImplicationTable(rows);
}

// Splits the document into lines, remembering 1-based line numbers.
class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  std::optional<std::string_view> next() {
    if (pos_ >= text_.size()) return std::nullopt;
    auto end = text_.find('\n', pos_);
    if (end == std::string_view::npos) end = text_.size();
    auto line = text_.substr(pos_, end - pos_);
    pos_ = end + 1;
    ++line_;
    return line;
  }
  std::size_t line() const { return line_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
};

std::uint64_t parse_number(std::string_view token, std::size_t line, std::size_t column) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": expected a nonnegative integer, got '" + std::string(token) + "'",
                     line, column);
  }
  return value;
}

ImplicationTable parse_text(std::string_view text) {
  LineReader reader(text);

  auto header = reader.next();
  if (!header || header->substr(0, kMagic.size() + 1) != "shht ") {
    throw ParseError("line 1: expected header 'shht 1'", 1, 1);
  }
  if (*header != "shht 1") {
    throw ParseError("line 1: unsupported version '" +
                         std::string(header->substr(kMagic.size() + 1)) + "'",
                     1, kMagic.size() + 2);
  }

  auto size_line = reader.next();
  if (!size_line || size_line->substr(0, 2) != "n=") {
    throw ParseError("line 2: missing 'n=<size>'", 2, 1);
  }
  const auto n = parse_number(size_line->substr(2), 2, 3);
  if (n == 0) throw ValidationError("n must be positive");

  Rows rows;
  for (std::size_t i = 0; i < n; ++i) {
    auto line = reader.next();
    if (!line) {
      throw ParseError("expected " + std::to_string(n) + " rows, found " +
                           std::to_string(i),
                       reader.line() + 1, 1);
    }
    std::vector<Element> row;
    std::size_t pos = 0;
    while (pos < line->size()) {
      if ((*line)[pos] == ' ') {
        ++pos;
        continue;
      }
      auto end = line->find(' ', pos);
      if (end == std::string_view::npos) end = line->size();
      const auto value = parse_number(line->substr(pos, end - pos), reader.line(), pos + 1);
      if (value >= n) {
        throw ValidationError("cell (" + std::to_string(i) + "," + std::to_string(row.size()) +
                                  "): index " + std::to_string(value) + " >= n=" +
                                  std::to_string(n),
                              i, row.size());
      }
      row.push_back(static_cast<Element>(value));
      pos = end;
    }
    if (row.size() != n) {
      throw ParseError("line " + std::to_string(reader.line()) + ": row " + std::to_string(i) +
                           " has " + std::to_string(row.size()) + " of " + std::to_string(n) +
                           " entries",
                       reader.line(), 1);
    }
    rows.push_back(std::move(row));
  }

  while (auto line = reader.next()) {
    if (line->find_first_not_of(" \t\r") != std::string_view::npos) {
      throw ParseError("line " + std::to_string(reader.line()) + ": unexpected content after " +
                           std::to_string(n) + " rows",
                       reader.line(), 1);
    }
  }
  return from_rows(rows, n);
}

ImplicationTable parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), 0, e.byte);
  }

  auto require = [&](const char* key) -> const nlohmann::json& {
    if (!doc.is_object() || !doc.contains(key)) {
      throw ParseError(std::string("missing key '") + key + "'", 0, 0);
    }
    return doc.at(key);
  };

  const auto& format = require("format");
  if (!format.is_string() || format.get<std::string>() != kMagic) {
    throw ParseError("'format' must be \"shht\"", 0, 0);
  }
  const auto& version = require("version");
  if (!version.is_number_integer() || version.get<std::int64_t>() != kVersion) {
    throw ParseError("unsupported version " + version.dump(), 0, 0);
  }
  const auto& size = require("n");
  if (!size.is_number_unsigned() && !(size.is_number_integer() && size.get<std::int64_t>() >= 0)) {
    throw ParseError("'n' must be a nonnegative integer", 0, 0);
  }
  const auto n = size.get<std::uint64_t>();

  const auto& table = require("table");
  if (!table.is_array()) throw ParseError("'table' must be an array of rows", 0, 0);
  Rows rows;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto& row = table[i];
    if (!row.is_array()) {
      throw ParseError("row " + std::to_string(i) + " must be an array", 0, 0);
    }
    std::vector<Element> values;
    for (std::size_t k = 0; k < row.size(); ++k) {
      const auto& v = row[k];
      if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
        throw ParseError("cell (" + std::to_string(i) + "," + std::to_string(k) +
                             ") must be a nonnegative integer",
                         0, 0);
      }
      const auto value = v.get<std::uint64_t>();
      if (value >= n) {
        throw ValidationError("cell (" + std::to_string(i) + "," + std::to_string(k) +
                                  "): index " + std::to_string(value) + " >= n=" +
                                  std::to_string(n),
                              i, k);
      }
      values.push_back(static_cast<Element>(value));
    }
    rows.push_back(std::move(values));
  }
  return from_rows(rows, n);
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "auto") return Format::Auto;
  throw DomainError("unknown format '" + std::string(name) + "'");
}

std::string serialize(const ImplicationTable& table, Format format) {
  const std::size_t n = table.size();
  if (format == Format::Json) {
    nlohmann::ordered_json doc = {
        {"format", std::string(kMagic)}, {"version", kVersion}, {"n", n}, {"table", table.rows()}};
    return doc.dump();
  }
  if (format != Format::Text) throw DomainError("serialize needs a concrete format");

  std::string out = "shht 1\nn=" + std::to_string(n) + "\n";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (k) out += ' ';
      out += std::to_string(table(i, k));
    }
    out += '\n';
  }
  return out;
}

ImplicationTable parse(std::string_view document, Format format) {
  if (format == Format::Auto) {
    if (document.empty()) throw ParseError("empty document", 1, 1);
    switch (document.front()) {
      case 's': format = Format::Text; break;
      case '{': format = Format::Json; break;
      default:
        throw ParseError("cannot detect format: document starts with neither 's' nor '{'",
                         1, 1);
    }
  }
  return format == Format::Json ? parse_json(document) : parse_text(document);
}

}  // namespace shchain
