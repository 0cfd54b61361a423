#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace clmd {

// 1-based word index inside a sentence. 0 denotes the artificial root.
using TokenId = int;
inline constexpr TokenId kRootId = 0;

struct Token {
  TokenId id = 0;
  std::string form;
  std::string lemma;
  std::string upos;
  std::string xpos;
  std::string feats;
  TokenId head = 0;
  std::string deprel;
  std::string deps;
  std::string misc;

  bool operator==(const Token &) const = default;
};

// Surface-token span such as "3-4". The raw line is kept so that
// serialization reproduces it exactly.
struct MultiwordRange {
  TokenId start = 0;
  TokenId end = 0;
  std::string line;
};

// Empty node ("5.1"). Anchored after the word with id `after`.
struct EmptyNode {
  TokenId after = 0;
  std::string line;
};

struct Sentence {
  std::string sent_id;
  std::string text;
  std::vector<std::string> comments;  // every '#' line, verbatim, in order
  std::vector<Token> tokens;
  std::vector<MultiwordRange> multiword_ranges;
  std::vector<EmptyNode> empty_nodes;

  std::size_t size() const { return tokens.size(); }
  const Token &token(TokenId id) const { return tokens.at(static_cast<std::size_t>(id - 1)); }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string &what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class TreeError : public std::runtime_error {
 public:
  TreeError(std::string sent_id, const std::string &what)
      : std::runtime_error("sentence '" + sent_id + "': " + what), sent_id_(std::move(sent_id)) {}
  const std::string &sent_id() const { return sent_id_; }

 private:
  std::string sent_id_;
};

struct ParseOptions {
  // Drop relation subtypes ("acl:relcl" -> "acl") at load time.
  bool strip_subtypes = false;
  // Build a DepTree for every sentence to reject cycles eagerly.
  bool check_trees = true;
};

// Returns the part of a relation label before the first ':'.
std::string strip_subtype(std::string_view label);

std::vector<Sentence> parse_conllu(std::string_view text, const ParseOptions &options = {});
std::string serialize_conllu(std::span<const Sentence> sentences);

// Immutable tree view over a sentence. Multiple head-0 tokens are allowed;
// each of them is depth 0 and starts its own fragment.
class DepTree {
 public:
  explicit DepTree(Sentence sentence);

  const Sentence &sentence() const { return sentence_; }
  std::size_t size() const { return sentence_.size(); }
  bool contains(TokenId id) const { return id >= 1 && static_cast<std::size_t>(id) <= size(); }

  const Token &token(TokenId id) const { return sentence_.token(id); }
  TokenId parent(TokenId id) const { return parent_.at(static_cast<std::size_t>(id)); }
  const std::vector<TokenId> &children(TokenId id) const {
    return children_.at(static_cast<std::size_t>(id));
  }
  int depth(TokenId id) const { return depth_.at(static_cast<std::size_t>(id)); }
  // Head-0 token whose fragment contains `id`.
  TokenId fragment_root(TokenId id) const { return fragment_.at(static_cast<std::size_t>(id)); }
  const std::vector<TokenId> &roots() const { return children_.front(); }

 private:
  Sentence sentence_;
  std::vector<TokenId> parent_;                 // index 0 unused
  std::vector<std::vector<TokenId>> children_;  // index 0 holds the head-0 tokens
  std::vector<int> depth_;
  std::vector<TokenId> fragment_;
};

DepTree build_tree(Sentence sentence);

}  // namespace clmd
