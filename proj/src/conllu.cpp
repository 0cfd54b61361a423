#include "clmd/conllu.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <utility>

namespace clmd {

namespace {

constexpr std::size_t kColumns = 10;

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

std::optional<int> to_int(std::string_view s) {
  int value = 0;
  const auto *end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc{} || ptr != end || s.empty()) return std::nullopt;
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// "# key = value" -> value, if the key matches.
std::optional<std::string_view> comment_value(std::string_view line, std::string_view key) {
  auto body = trim(line.substr(1));
  if (body.substr(0, key.size()) != key) return std::nullopt;
  body = trim(body.substr(key.size()));
  if (body.empty() || body.front() != '=') return std::nullopt;
  return trim(body.substr(1));
}

bool missing(std::string_view field) { return field.empty() || field == "_"; }

class BlockParser {
 public:
  BlockParser(const ParseOptions &options) : options_(options) {}

  void comment(std::string_view line) {
    if (auto v = comment_value(line, "sent_id")) current_.sent_id = std::string(*v);
    if (auto v = comment_value(line, "text")) current_.text = std::string(*v);
    current_.comments.emplace_back(line);
    open_ = true;
  }

  void word_line(std::string_view line, std::size_t lineno) {
    open_ = true;
    const auto cols = split_tabs(line);
    if (cols.size() != kColumns) {
      throw ParseError(lineno, "expected " + std::to_string(kColumns) + " columns, found " +
                                   std::to_string(cols.size()));
    }
    const auto id_field = cols[0];
    if (const auto dash = id_field.find('-'); dash != std::string_view::npos) {
      const auto a = to_int(id_field.substr(0, dash));
      const auto b = to_int(id_field.substr(dash + 1));
      if (!a || !b || *a < 1 || *b < *a) throw ParseError(lineno, "bad range id '" + std::string(id_field) + "'");
      current_.multiword_ranges.push_back({*a, *b, std::string(line)});
      return;
    }
    if (const auto dot = id_field.find('.'); dot != std::string_view::npos) {
      const auto a = to_int(id_field.substr(0, dot));
      const auto b = to_int(id_field.substr(dot + 1));
      if (!a || !b || *a < 0) throw ParseError(lineno, "bad empty-node id '" + std::string(id_field) + "'");
      current_.empty_nodes.push_back({*a, std::string(line)});
      return;
    }

    const auto id = to_int(id_field);
    if (!id || *id < 1) throw ParseError(lineno, "non-numeric id '" + std::string(id_field) + "'");
    const auto expected = static_cast<int>(current_.tokens.size()) + 1;
    if (*id < expected) throw ParseError(lineno, "duplicate id " + std::to_string(*id));
    if (*id > expected) {
      throw ParseError(lineno, "id gap: expected " + std::to_string(expected) + ", found " +
                                   std::to_string(*id));
    }
    const auto head = to_int(cols[6]);
    if (!head || *head < 0) throw ParseError(lineno, "non-numeric head '" + std::string(cols[6]) + "'");
    if (*head == *id) throw ParseError(lineno, "self-loop at line " + std::to_string(lineno));
    if (missing(cols[3])) throw ParseError(lineno, "missing UPOS");
    if (missing(cols[7])) throw ParseError(lineno, "missing DEPREL");

    Token tok;
    tok.id = *id;
    tok.form = cols[1];
    tok.lemma = cols[2];
    tok.upos = cols[3];
    tok.xpos = cols[4];
    tok.feats = cols[5];
    tok.head = *head;
    tok.deprel = options_.strip_subtypes ? strip_subtype(cols[7]) : std::string(cols[7]);
    tok.deps = cols[8];
    tok.misc = cols[9];
    current_.tokens.push_back(std::move(tok));
    token_lines_.push_back(lineno);
  }

  void close(std::vector<Sentence> &out, std::size_t lineno) {
    if (!open_) return;
    if (current_.tokens.empty()) throw ParseError(lineno, "sentence block without word lines");
    const auto n = static_cast<int>(current_.tokens.size());
    for (std::size_t i = 0; i < current_.tokens.size(); ++i) {
      if (current_.tokens[i].head > n) {
        throw ParseError(token_lines_[i], "head " + std::to_string(current_.tokens[i].head) +
                                              " out of range (sentence has " + std::to_string(n) +
                                              " words)");
      }
    }
    if (options_.check_trees) {
      try {
        (void)DepTree(current_);
      } catch (const TreeError &e) {
        const auto name = current_.sent_id.empty() ? "#" + std::to_string(out.size() + 1)
                                                   : current_.sent_id;
        throw TreeError(name, "cyclic head structure");
      }
    }
    out.push_back(std::move(current_));
    current_ = Sentence{};
    token_lines_.clear();
    open_ = false;
  }

 private:
  const ParseOptions &options_;
  Sentence current_;
  std::vector<std::size_t> token_lines_;
  bool open_ = false;
};

void write_token(std::ostringstream &os, const Token &t) {
  os << t.id << '\t' << t.form << '\t' << t.lemma << '\t' << t.upos << '\t' << t.xpos << '\t'
     << t.feats << '\t' << t.head << '\t' << t.deprel << '\t' << t.deps << '\t' << t.misc << '\n';
}

}  // namespace

std::string strip_subtype(std::string_view label) {
  return std::string(label.substr(0, label.find(':')));
}

std::vector<Sentence> parse_conllu(std::string_view text, const ParseOptions &options) {
  std::vector<Sentence> out;
  BlockParser block(options);
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    auto line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (trim(line).empty()) {
      block.close(out, lineno);
    } else if (line.front() == '#') {
      block.comment(line);
    } else {
      block.word_line(line, lineno);
    }
  }
  block.close(out, lineno);
  return out;
}

std::string serialize_conllu(std::span<const Sentence> sentences) {
  std::ostringstream os;
  for (const auto &s : sentences) {
    bool has_id_comment = false;
    for (const auto &c : s.comments) {
      if (comment_value(c, "sent_id")) has_id_comment = true;
    }
    if (!has_id_comment && !s.sent_id.empty()) os << "# sent_id = " << s.sent_id << '\n';
    for (const auto &c : s.comments) os << c << '\n';
    for (const auto &e : s.empty_nodes) {
      if (e.after == 0) os << e.line << '\n';
    }
    for (const auto &t : s.tokens) {
      for (const auto &r : s.multiword_ranges) {
        if (r.start == t.id) os << r.line << '\n';
      }
      write_token(os, t);
      for (const auto &e : s.empty_nodes) {
        if (e.after == t.id) os << e.line << '\n';
      }
    }
    os << '\n';
  }
  return os.str();
}

DepTree::DepTree(Sentence sentence) : sentence_(std::move(sentence)) {
  const auto n = sentence_.size();
  parent_.assign(n + 1, kRootId);
  children_.assign(n + 1, {});
  depth_.assign(n + 1, -1);
  fragment_.assign(n + 1, kRootId);

  for (std::size_t i = 0; i < n; ++i) {
    const auto &t = sentence_.tokens[i];
    if (t.id != static_cast<TokenId>(i + 1)) throw TreeError(sentence_.sent_id, "token ids are not 1..n");
    if (t.head < 0 || static_cast<std::size_t>(t.head) > n || t.head == t.id) {
      throw TreeError(sentence_.sent_id, "invalid head for token " + std::to_string(t.id));
    }
    parent_[i + 1] = t.head;
    children_[static_cast<std::size_t>(t.head)].push_back(t.id);
  }
  if (children_[0].empty()) throw TreeError(sentence_.sent_id, "no token is attached to the root");

  // Tokens are visited in id order, so children lists are already sorted.
  std::vector<TokenId> stack;
  for (const auto r : children_[0]) {
    depth_[static_cast<std::size_t>(r)] = 0;
    fragment_[static_cast<std::size_t>(r)] = r;
    stack.push_back(r);
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for (const auto c : children_[static_cast<std::size_t>(v)]) {
        depth_[static_cast<std::size_t>(c)] = depth_[static_cast<std::size_t>(v)] + 1;
        fragment_[static_cast<std::size_t>(c)] = r;
        stack.push_back(c);
      }
    }
  }
  for (std::size_t id = 1; id <= n; ++id) {
    if (depth_[id] < 0) {
      throw TreeError(sentence_.sent_id, "token " + std::to_string(id) + " is on a cycle or unreachable");
    }
  }
}

DepTree build_tree(Sentence sentence) { return DepTree(std::move(sentence)); }

}  // namespace clmd
