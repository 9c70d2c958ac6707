#pragma once

// Table documents.
//
// Text:
//   shht 1
//   n=<n>
//   <n lines of n space-separated indices, row i = left argument a_i>
//
// JSON: {"format":"shht","version":1,"n":<n>,"table":[[...],...]}

#include <string>
#include <string_view>

#include "shchain/core.hpp"

namespace shchain {

enum class Format { Text, Json, Auto };

/// Accepts "text", "json" and "auto"; throws DomainError otherwise.
Format parse_format(std::string_view name);

/// Text output is newline-terminated; JSON output is a single line without
/// a trailing newline.
std::string serialize(const ImplicationTable& table, Format format);

/// Throws ParseError on malformed syntax and ValidationError when the
/// document describes an impossible table. Auto picks the format from the
/// first byte ('s' or '{').
ImplicationTable parse(std::string_view document, Format format = Format::Auto);

}  // namespace shchain
