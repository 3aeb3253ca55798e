#pragma once

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "multree/tree.hpp"

namespace multree {

/// Syntax error with a 1-based position in the parsed text.
class NewickError : public std::runtime_error {
 public:
  NewickError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

/// Branch lengths and internal node names, kept only when asked for. Entries
/// refer to node ids of the parsed tree; nodes suppressed by normalization
/// lose theirs.
struct NewickAnnotations {
  std::unordered_map<NodeId, double> branch_length;
  std::unordered_map<NodeId, std::string> internal_name;
};

struct ParseOptions {
  bool retain_annotations = false;
  /// Line number reported for errors in the first line of the text.
  std::size_t first_line = 1;
};

/// Parses one Newick expression terminated by ';'. The syntactic root is an
/// ordinary internal node of the unrooted tree; the result is normalized.
/// Repeated leaf names become several leaves with one label.
MulTree parse_newick(std::string_view text, const ParseOptions& options = {},
                     NewickAnnotations* annotations = nullptr);

/// Deterministic Newick: isomorphic trees give identical strings. The empty
/// tree is written as a bare ";".
std::string write_newick(const MulTree& tree);

struct CollectionError {
  std::size_t line = 0;
  std::size_t column = 0;
  std::string message;
};

struct NewickDocument {
  std::vector<MulTree> trees;
  std::vector<std::size_t> line_numbers;
  std::vector<CollectionError> errors;
};

/// Reads one tree per line (several ';'-terminated trees on one line are
/// allowed). Blank lines and lines starting with '#' are skipped. In lenient
/// mode malformed trees are recorded in `errors`; in strict mode the first one
/// is thrown as NewickError.
NewickDocument parse_collection(std::istream& in, bool strict = false);
NewickDocument parse_collection_text(std::string_view text, bool strict = false);

}  // namespace multree
