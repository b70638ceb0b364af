#pragma once

#include "oit/information.hpp"
#include "oit/measures.hpp"
#include "oit/semantics.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace oit {

inline constexpr int kDocumentVersion = 1;

/// Optional per-universe weight tables, as found in a document's `weights`
/// section or in a standalone weights file.
struct WeightTables {
  std::map<Universe, std::map<std::string, Rational>> tables;

  bool has(Universe u) const { return tables.contains(u); }
  /// Weighted measure for `u`, if a table is present.
  std::optional<MeasureSpec> measure(Universe u) const;
};

struct InstanceDocument {
  Information info;
  WeightTables weights;
};

/// Parses and validates an instance document. Throws Error("malformed json")
/// for unparsable text and ValidationError (with JSON paths) for schema or
/// invariant violations.
InstanceDocument parse_instance_document(std::string_view text);

Information parse_instance(std::string_view text);

/// Schema diagnostics and invariant diagnostics together, without throwing on
/// invalid instances. Still throws Error("malformed json").
std::vector<Diagnostic> check_instance_document(std::string_view text);

/// Canonical serialization: sorted tokens, record ids and links, two-space
/// indentation, trailing newline. Weights are written as exact rationals.
std::string emit_instance(const Information& info, const WeightTables& weights = {});

/// Standalone weights file: the same object as a document's `weights` member.
WeightTables parse_weights(std::string_view text);

/// Decoder document: {"version":1,"kind":"preimage"} or
/// {"version":1,"kind":"table","entries":[{"reflection":{...},"state":{...}}]}
/// where reflection uses `media` and state uses `entities`.
SemanticMapping parse_decoder(std::string_view text);

/// Reads a whole file. Throws Error("io").
std::string read_file(const std::string& path);

}  // namespace oit
