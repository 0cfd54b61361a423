#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clmd/conllu.hpp"

namespace clmd {

struct Link {
  TokenId src = 0;
  TokenId tgt = 0;
  auto operator<=>(const Link &) const = default;
};

// Content-word alignment of one sentence pair. Links are kept sorted and
// unique; ids are 1-based.
class AlignmentGraph {
 public:
  AlignmentGraph() = default;
  explicit AlignmentGraph(std::span<const Link> links);

  void add(Link link);
  const std::vector<Link> &links() const { return links_; }
  bool empty() const { return links_.empty(); }
  std::size_t size() const { return links_.size(); }
  bool contains(Link link) const;

  std::vector<TokenId> targets_of(TokenId src) const;
  std::vector<TokenId> sources_of(TokenId tgt) const;

  bool operator==(const AlignmentGraph &) const = default;

 private:
  std::vector<Link> links_;
};

enum class ComponentKind { OneToOne, ManyToOne, OneToMany, ManyToMany };

std::string_view to_string(ComponentKind kind);
ComponentKind classify(std::size_t n_src, std::size_t n_tgt);

struct AlignmentComponent {
  std::vector<TokenId> src_ids;  // sorted
  std::vector<TokenId> tgt_ids;  // sorted
  ComponentKind kind = ComponentKind::OneToOne;
};

enum class DropReason { DepthTie, ManyToMany };

struct DroppedComponent {
  AlignmentComponent component;
  DropReason reason = DropReason::DepthTie;
};

// One-to-one correspondence obtained by keeping the shallowest node of every
// many-to-one / one-to-many group.
struct ReducedAlignment {
  std::map<TokenId, TokenId> src_to_tgt;
  std::map<TokenId, TokenId> tgt_to_src;
  std::vector<DroppedComponent> dropped;

  std::optional<TokenId> target_of(TokenId src) const;
  std::optional<TokenId> source_of(TokenId tgt) const;
  std::size_t size() const { return src_to_tgt.size(); }
};

struct AlignmentParseOptions {
  int index_base = 1;
};

// Pharaoh-style "i-j" pairs, one line per sentence pair. Lines starting with
// '#' are skipped and do not consume a sentence pair.
std::vector<AlignmentGraph> parse_alignment(std::string_view text,
                                            const AlignmentParseOptions &options = {});

struct NumberedAlignment {
  std::size_t line = 0;  // 1-based line in the alignment text
  AlignmentGraph graph;
};

std::vector<NumberedAlignment> parse_numbered_alignment(std::string_view text,
                                                        const AlignmentParseOptions &options = {});
std::string serialize_alignment(std::span<const AlignmentGraph> graphs);

std::vector<AlignmentComponent> components(const AlignmentGraph &graph);
ReducedAlignment reduce(const AlignmentGraph &graph, const DepTree &src, const DepTree &tgt);

// Links whose source or target id does not exist in the respective sentence.
std::vector<Link> out_of_range_links(const AlignmentGraph &graph, std::size_t src_size,
                                     std::size_t tgt_size);

struct AlignmentScore {
  std::optional<double> precision;  // undefined when nothing was predicted
  std::optional<double> recall;     // undefined when the gold set is empty
  std::size_t gold = 0;
  std::size_t predicted = 0;
  std::size_t correct = 0;
  // Source deprel -> recall of gold links with that source relation.
  std::map<std::string, double> per_label_recall;
  std::map<std::string, std::size_t> per_label_gold;
};

struct AlignmentScoreOptions {
  // Source trees, index-aligned with the alignment lists. Required for the
  // label restriction and for per-label recall.
  std::span<const DepTree> source_trees;
  // When set, only links whose source relation (subtype stripped) is listed
  // are scored.
  std::optional<std::set<std::string>> labels;
};

AlignmentScore alignment_pr(std::span<const AlignmentGraph> gold, std::span<const AlignmentGraph> pred,
                            const AlignmentScoreOptions &options = {});

}  // namespace clmd
