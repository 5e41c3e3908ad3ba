#pragma once

// Line-based instance files:
//
//   meccount-instance 1
//   # comment
//   meta seed 42
//   vertex a
//   undirected a b
//   directed a c
//   knowledge b a
//
// Labels are whitespace-free tokens mapped to dense ids in declaration order.

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "meccount/common.hpp"
#include "meccount/mec.hpp"

namespace meccount {

inline constexpr int kInstanceFormatVersion = 1;

struct InstanceDocument {
  std::vector<std::string> labels;  // id -> label
  MecInstance instance;
  std::map<std::string, std::string> metadata;

  // Source lines of declarations, 0 for documents not read from text.
  std::vector<std::size_t> vertex_lines;
  std::map<VertexPair, std::size_t> edge_lines;       // unordered, smaller id first
  std::map<VertexPair, std::size_t> knowledge_lines;  // ordered

  /// Compares content only, not source lines.
  bool same_content(const InstanceDocument& other) const;
};

/// Document with labels "0".."n-1".
InstanceDocument make_document(MecInstance instance,
                               std::map<std::string, std::string> metadata = {});

/// Throws ParseError carrying the offending line.
InstanceDocument parse_instance(std::string_view text);

/// Canonical text: header, metadata by key, vertices by id, then undirected,
/// directed and knowledge records sorted by ids.
std::string serialize_instance(const InstanceDocument& doc);

/// Throws InputError when the file cannot be read or written.
InstanceDocument load_instance(const std::string& path);
void save_instance(const InstanceDocument& doc, const std::string& path);

struct Diagnostic {
  std::size_t line;  // 0 when no source line applies
  std::string message;
};

/// validate() with messages in terms of labels and source lines.
std::vector<Diagnostic> diagnose(const InstanceDocument& doc);

/// "line N: message" or just the message for line 0.
std::string format_diagnostic(const Diagnostic& d);

}  // namespace meccount
