#pragma once

// JSON model files.
//
//   {"sorts": [{"name": "V", "size": 4}],
//    "operations": [{"name": "add", "signature": ["V", "V", "V"],
//                    "table": [{"args": [0, 1], "result": 1}, ...]}],
//    "relations": [{"name": "E", "signature": ["V", "V"]}],
//    "interpretations": [{"label": "G1", "tuples": {"E": [[0, 1], [1, 0]]}}]}
//
// Element references are "Sort:index" strings, or bare indices when the
// domain has a single sort. The graph shorthand
//   {"vertices": 4, "directed": false, "edges": [[0, 1], [0, 2]]}
// is expanded through graph_to_model.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "autoequiv/model.hpp"
#include "autoequiv/permutation.hpp"

namespace autoequiv {

struct DecodeResult {
  /// Present when the document decoded; may still carry validation violations.
  std::optional<MultiModel> model;
  /// Decoding errors, or else validate(*model).
  ValidationReport violations;
  bool graph_shorthand = false;

  bool ok() const { return model.has_value() && violations.empty(); }
};

DecodeResult decode_model(const nlohmann::json& doc);
DecodeResult parse_model(std::string_view text);
/// Throws IoError when the file cannot be read.
DecodeResult load_model_file(const std::filesystem::path& path);

nlohmann::ordered_json encode_model(const MultiModel& mm);
/// encode_model pretty-printed with a trailing newline; tuples are sorted.
std::string dump_model(const MultiModel& mm);
/// Throws IoError on failure.
void write_text_file(const std::filesystem::path& path, const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

/// {"V": [images...], ...}, one array per sort in domain order.
nlohmann::ordered_json permutation_to_json(const SortedDomain& domain, const Permutation& p);
/// Accepts the object form above (any key order) or a cycle-notation string.
/// Throws ParseError.
Permutation permutation_from_json(const SortedDomain& domain, const nlohmann::json& j);

}  // namespace autoequiv
