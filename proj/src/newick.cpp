#include "multree/newick.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace multree {

NewickError::NewickError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      message_(what),
      line_(line),
      column_(column) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t line, std::size_t column, bool keep, NewickAnnotations* notes)
      : text_(text), line_(line), col_(column), keep_(keep && notes != nullptr), notes_(notes) {}

  MulTree run() {
    std::vector<NodeId> open;
    bool expect_subtree = true;
    bool have_root = false;
    NodeId last = kNoNode;

    for (;;) {
      skip_blank();
      if (at_end()) {
        if (!open.empty()) fail("unbalanced '(': missing ')'");
        fail("missing terminating ';'");
      }
      const char c = peek();
      if (expect_subtree) {
        if (c == '(') {
          const NodeId n = tree_.add_internal();
          attach(open, n, have_root);
          open.push_back(n);
          advance();
          continue;
        }
        const std::size_t l = line_, col = col_;
        std::string name = read_label();
        if (name.empty()) {
          if (c == ';' && !have_root) fail_at("empty tree", l, col);
          if (c == ',' || c == ')' || c == ';') fail_at("empty subtree", l, col);
          fail_at(std::string("unexpected character '") + c + "'", l, col);
        }
        last = tree_.add_leaf(name);
        attach(open, last, have_root);
        read_length(last);
        expect_subtree = false;
        continue;
      }
      if (c == ',') {
        if (open.empty()) fail("stray ',' outside parentheses");
        advance();
        expect_subtree = true;
      } else if (c == ')') {
        if (open.empty()) fail("unbalanced ')'");
        last = open.back();
        open.pop_back();
        advance();
        skip_blank();
        std::string name = read_label();
        if (keep_ && !name.empty()) notes_->internal_name[last] = std::move(name);
        read_length(last);
      } else if (c == ';') {
        if (!open.empty()) fail("unbalanced '(': missing ')' before ';'");
        advance();
        skip_blank();
        if (!at_end()) fail("stray text after ';'");
        break;
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
    }

    tree_.normalize();
    if (tree_.leaf_count() < 1) fail("tree has no leaves");
    if (keep_) {
      std::erase_if(notes_->branch_length, [&](const auto& kv) { return !tree_.alive(kv.first); });
      std::erase_if(notes_->internal_name, [&](const auto& kv) { return !tree_.alive(kv.first); });
    }
    return std::move(tree_);
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw NewickError(msg, line_, col_); }
  [[noreturn]] static void fail_at(const std::string& msg, std::size_t l, std::size_t c) {
    throw NewickError(msg, l, c);
  }

  void attach(const std::vector<NodeId>& open, NodeId n, bool& have_root) {
    if (!open.empty()) {
      tree_.connect(open.back(), n);
    } else {
      if (have_root) fail("more than one top-level subtree");
      have_root = true;
    }
  }

  // Whitespace and bracketed comments.
  void skip_blank() {
    while (!at_end()) {
      const char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '[') {
        const std::size_t l = line_, col = col_;
        while (!at_end() && peek() != ']') advance();
        if (at_end()) fail_at("unterminated '[' comment", l, col);
        advance();
      } else {
        break;
      }
    }
  }

  std::string read_label() {
    if (at_end()) return {};
    if (peek() == '\'') {
      const std::size_t l = line_, col = col_;
      advance();
      std::string out;
      for (;;) {
        if (at_end()) fail_at("unterminated quoted label", l, col);
        const char c = peek();
        advance();
        if (c == '\'') {
          if (!at_end() && peek() == '\'') {
            out += '\'';
            advance();
            continue;
          }
          break;
        }
        out += c;
      }
      skip_blank();
      return out;
    }
    std::string out;
    while (!at_end()) {
      const char c = peek();
      if (c == '(' || c == ')' || c == ',' || c == ':' || c == ';' || c == '[' || c == '\'') break;
      out += c;
      advance();
    }
    const auto first = out.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = out.find_last_not_of(" \t\r\n");
    return out.substr(first, last - first + 1);
  }

  void read_length(NodeId n) {
    skip_blank();
    if (at_end() || peek() != ':') return;
    advance();
    skip_blank();
    const std::size_t l = line_, col = col_;
    std::string digits;
    while (!at_end()) {
      const char c = peek();
      if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '+' || c == 'e' ||
            c == 'E'))
        break;
      digits += c;
      advance();
    }
    char* end = nullptr;
    const double value = digits.empty() ? 0.0 : std::strtod(digits.c_str(), &end);
    if (digits.empty() || end != digits.c_str() + digits.size()) fail_at("malformed branch length", l, col);
    if (keep_) notes_->branch_length[n] = value;
    skip_blank();
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t col_;
  bool keep_;
  NewickAnnotations* notes_;
  MulTree tree_;
};

MulTree parse_at(std::string_view text, std::size_t line, std::size_t column, const ParseOptions& options,
                 NewickAnnotations* annotations) {
  return Parser(text, line, column, options.retain_annotations, annotations).run();
}

// Splits one line at ';' outside quotes and comments. Each piece keeps its
// terminator and the column where it starts; a trailing piece without ';' is
// returned as well so the parser can report it.
std::vector<std::pair<std::string_view, std::size_t>> split_line(std::string_view line) {
  std::vector<std::pair<std::string_view, std::size_t>> out;
  std::size_t start = 0;
  bool quoted = false, comment = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '\'') quoted = false;
    } else if (comment) {
      if (c == ']') comment = false;
    } else if (c == '\'') {
      quoted = true;
    } else if (c == '[') {
      comment = true;
    } else if (c == ';') {
      out.emplace_back(line.substr(start, i + 1 - start), start + 1);
      start = i + 1;
    }
  }
  const auto rest = line.substr(start);
  if (rest.find_first_not_of(" \t\r") != std::string_view::npos) out.emplace_back(rest, start + 1);
  return out;
}

}  // namespace

MulTree parse_newick(std::string_view text, const ParseOptions& options, NewickAnnotations* annotations) {
  return parse_at(text, options.first_line, 1, options, annotations);
}

std::string write_newick(const MulTree& tree) {
  if (tree.empty()) return ";";
  return canonical_form(tree).encoding + ";";
}

NewickDocument parse_collection(std::istream& in, bool strict) {
  NewickDocument doc;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    for (const auto& [piece, column] : split_line(line)) {
      try {
        doc.trees.push_back(parse_at(piece, number, column, {}, nullptr));
        doc.line_numbers.push_back(number);
      } catch (const NewickError& e) {
        if (strict) throw;
        doc.errors.push_back({e.line(), e.column(), e.message()});
      }
    }
  }
  return doc;
}

NewickDocument parse_collection_text(std::string_view text, bool strict) {
  std::istringstream in{std::string(text)};
  return parse_collection(in, strict);
}

}  // namespace multree
