#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "relaxfeas/model.hpp"

namespace relaxfeas {

// Text format (UTF-8, line oriented, `#` starts a comment):
//
//   n m l
//   a_11 ... a_1n b_1        (m lines)
//   c_11 ... c_1n d_1        (l lines)
//
// Comments of the form `# name: ...`, `# family: ...`, `# seed: ...` and
// `# meta.<key>: ...` carry the Instance metadata; other comments are ignored.
// A JSON object {name, A, b, C, d} is accepted in place of the text form.

Instance parse_instance(std::string_view text, const std::string& source = "<memory>");
std::string format_instance(const Instance& inst);
std::string format_instance_json(const Instance& inst);

/// Detects JSON by a leading `{`. Throws Error(IoError / ParseError /
/// DimensionMismatch).
Instance read_instance(const std::filesystem::path& path);

/// Writes JSON when the extension is .json, the text format otherwise.
void write_instance(const Instance& inst, const std::filesystem::path& path);

/// Shortest decimal string that parses back to exactly v.
std::string format_number(double v);

/// meta["start"] as a point of dimension n, if present and well formed.
std::optional<Vector> start_point(const Instance& inst);

}  // namespace relaxfeas
