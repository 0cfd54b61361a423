#include "clmd/alignment.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace clmd {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

std::optional<int> to_int(std::string_view s) {
  int value = 0;
  const auto *end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (s.empty() || ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

// Index of the unique minimum-depth id, or nullopt on a tie.
std::optional<TokenId> shallowest(const std::vector<TokenId> &ids, const DepTree &tree) {
  std::optional<TokenId> best;
  int best_depth = 0;
  bool tie = false;
  for (const auto id : ids) {
    const auto d = tree.depth(id);
    if (!best || d < best_depth) {
      best = id;
      best_depth = d;
      tie = false;
    } else if (d == best_depth) {
      tie = true;
    }
  }
  if (tie) return std::nullopt;
  return best;
}

}  // namespace

AlignmentGraph::AlignmentGraph(std::span<const Link> links) {
  links_.assign(links.begin(), links.end());
  std::sort(links_.begin(), links_.end());
  links_.erase(std::unique(links_.begin(), links_.end()), links_.end());
}

void AlignmentGraph::add(Link link) {
  const auto it = std::lower_bound(links_.begin(), links_.end(), link);
  if (it == links_.end() || *it != link) links_.insert(it, link);
}

bool AlignmentGraph::contains(Link link) const {
  return std::binary_search(links_.begin(), links_.end(), link);
}

std::vector<TokenId> AlignmentGraph::targets_of(TokenId src) const {
  std::vector<TokenId> out;
  for (const auto &l : links_) {
    if (l.src == src) out.push_back(l.tgt);
  }
  return out;
}

std::vector<TokenId> AlignmentGraph::sources_of(TokenId tgt) const {
  std::vector<TokenId> out;
  for (const auto &l : links_) {
    if (l.tgt == tgt) out.push_back(l.src);
  }
  return out;
}

std::string_view to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::OneToOne: return "one-to-one";
    case ComponentKind::ManyToOne: return "many-to-one";
    case ComponentKind::OneToMany: return "one-to-many";
    case ComponentKind::ManyToMany: return "many-to-many";
  }
  return "?";
}

ComponentKind classify(std::size_t n_src, std::size_t n_tgt) {
  if (n_src == 1 && n_tgt == 1) return ComponentKind::OneToOne;
  if (n_src > 1 && n_tgt == 1) return ComponentKind::ManyToOne;
  if (n_src == 1 && n_tgt > 1) return ComponentKind::OneToMany;
  return ComponentKind::ManyToMany;
}

std::optional<TokenId> ReducedAlignment::target_of(TokenId src) const {
  if (const auto it = src_to_tgt.find(src); it != src_to_tgt.end()) return it->second;
  return std::nullopt;
}

std::optional<TokenId> ReducedAlignment::source_of(TokenId tgt) const {
  if (const auto it = tgt_to_src.find(tgt); it != tgt_to_src.end()) return it->second;
  return std::nullopt;
}

std::vector<AlignmentGraph> parse_alignment(std::string_view text, const AlignmentParseOptions &options) {
  std::vector<AlignmentGraph> out;
  for (auto &n : parse_numbered_alignment(text, options)) out.push_back(std::move(n.graph));
  return out;
}

std::vector<NumberedAlignment> parse_numbered_alignment(std::string_view text,
                                                        const AlignmentParseOptions &options) {
  if (options.index_base != 0 && options.index_base != 1) {
    throw std::invalid_argument("index base must be 0 or 1");
  }
  std::vector<NumberedAlignment> out;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    auto line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() == '#') continue;

    AlignmentGraph graph;
    std::size_t start = 0;
    while (start < line.size()) {
      while (start < line.size() && (line[start] == ' ' || line[start] == '\t')) ++start;
      if (start >= line.size()) break;
      auto end = line.find_first_of(" \t", start);
      if (end == std::string_view::npos) end = line.size();
      const auto item = line.substr(start, end - start);
      start = end;

      const auto dash = item.find('-');
      const auto i = dash == std::string_view::npos ? std::nullopt : to_int(item.substr(0, dash));
      const auto j = dash == std::string_view::npos ? std::nullopt : to_int(item.substr(dash + 1));
      if (!i || !j || *i < 0 || *j < 0) {
        throw ParseError(lineno, "malformed alignment pair '" + std::string(item) + "'");
      }
      if (options.index_base == 1 && (*i == 0 || *j == 0)) {
        throw ParseError(lineno, "index 0 in 1-based alignment pair '" + std::string(item) + "'");
      }
      const auto shift = 1 - options.index_base;
      graph.add({*i + shift, *j + shift});
    }
    out.push_back({lineno, std::move(graph)});
  }
  return out;
}

std::string serialize_alignment(std::span<const AlignmentGraph> graphs) {
  std::ostringstream os;
  for (const auto &g : graphs) {
    bool first = true;
    for (const auto &l : g.links()) {
      if (!first) os << ' ';
      os << l.src << '-' << l.tgt;
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

std::vector<AlignmentComponent> components(const AlignmentGraph &graph) {
  // Nodes: distinct source ids followed by distinct target ids.
  std::vector<TokenId> srcs;
  std::vector<TokenId> tgts;
  for (const auto &l : graph.links()) {
    srcs.push_back(l.src);
    tgts.push_back(l.tgt);
  }
  std::sort(srcs.begin(), srcs.end());
  srcs.erase(std::unique(srcs.begin(), srcs.end()), srcs.end());
  std::sort(tgts.begin(), tgts.end());
  tgts.erase(std::unique(tgts.begin(), tgts.end()), tgts.end());

  const auto src_index = [&](TokenId id) {
    return static_cast<std::size_t>(std::lower_bound(srcs.begin(), srcs.end(), id) - srcs.begin());
  };
  const auto tgt_index = [&](TokenId id) {
    return srcs.size() +
           static_cast<std::size_t>(std::lower_bound(tgts.begin(), tgts.end(), id) - tgts.begin());
  };

  DisjointSets sets(srcs.size() + tgts.size());
  for (const auto &l : graph.links()) sets.unite(src_index(l.src), tgt_index(l.tgt));

  // Representatives are the smallest node index, so components come out
  // ordered by their smallest source id.
  std::map<std::size_t, AlignmentComponent> by_rep;
  for (std::size_t i = 0; i < srcs.size(); ++i) by_rep[sets.find(i)].src_ids.push_back(srcs[i]);
  for (std::size_t i = 0; i < tgts.size(); ++i) by_rep[sets.find(srcs.size() + i)].tgt_ids.push_back(tgts[i]);

  std::vector<AlignmentComponent> out;
  out.reserve(by_rep.size());
  for (auto &[rep, comp] : by_rep) {
    comp.kind = classify(comp.src_ids.size(), comp.tgt_ids.size());
    out.push_back(std::move(comp));
  }
  return out;
}

ReducedAlignment reduce(const AlignmentGraph &graph, const DepTree &src, const DepTree &tgt) {
  ReducedAlignment out;
  const auto keep = [&](TokenId s, TokenId t) {
    out.src_to_tgt.emplace(s, t);
    out.tgt_to_src.emplace(t, s);
  };
  for (auto &comp : components(graph)) {
    switch (comp.kind) {
      case ComponentKind::OneToOne:
        keep(comp.src_ids.front(), comp.tgt_ids.front());
        break;
      case ComponentKind::ManyToOne:
        if (const auto s = shallowest(comp.src_ids, src)) {
          keep(*s, comp.tgt_ids.front());
        } else {
          out.dropped.push_back({std::move(comp), DropReason::DepthTie});
        }
        break;
      case ComponentKind::OneToMany:
        if (const auto t = shallowest(comp.tgt_ids, tgt)) {
          keep(comp.src_ids.front(), *t);
        } else {
          out.dropped.push_back({std::move(comp), DropReason::DepthTie});
        }
        break;
      case ComponentKind::ManyToMany:
        out.dropped.push_back({std::move(comp), DropReason::ManyToMany});
        break;
    }
  }
  return out;
}

std::vector<Link> out_of_range_links(const AlignmentGraph &graph, std::size_t src_size,
                                     std::size_t tgt_size) {
  std::vector<Link> bad;
  for (const auto &l : graph.links()) {
    if (l.src < 1 || static_cast<std::size_t>(l.src) > src_size || l.tgt < 1 ||
        static_cast<std::size_t>(l.tgt) > tgt_size) {
      bad.push_back(l);
    }
  }
  return bad;
}

AlignmentScore alignment_pr(std::span<const AlignmentGraph> gold, std::span<const AlignmentGraph> pred,
                            const AlignmentScoreOptions &options) {
  if (gold.size() != pred.size()) {
    throw std::invalid_argument("gold has " + std::to_string(gold.size()) + " sentence pairs, prediction has " +
                                std::to_string(pred.size()));
  }
  const bool have_trees = !options.source_trees.empty();
  if (have_trees && options.source_trees.size() != gold.size()) {
    throw std::invalid_argument("source tree count does not match alignment count");
  }
  if (options.labels && !have_trees) {
    throw std::invalid_argument("label restriction requires source trees");
  }

  AlignmentScore score;
  std::map<std::string, std::size_t> label_hits;
  for (std::size_t k = 0; k < gold.size(); ++k) {
    const auto label_of = [&](TokenId src) -> std::optional<std::string> {
      if (!have_trees) return std::string{};
      const auto &tree = options.source_trees[k];
      if (!tree.contains(src)) return std::nullopt;
      return strip_subtype(tree.token(src).deprel);
    };
    const auto counted = [&](const std::optional<std::string> &label) {
      if (!label) return false;
      return !options.labels || options.labels->contains(*label);
    };

    for (const auto &l : pred[k].links()) {
      if (counted(label_of(l.src))) ++score.predicted;
    }
    for (const auto &l : gold[k].links()) {
      const auto label = label_of(l.src);
      if (!counted(label)) continue;
      ++score.gold;
      const bool hit = pred[k].contains(l);
      if (hit) ++score.correct;
      if (have_trees) {
        ++score.per_label_gold[*label];
        if (hit) ++label_hits[*label];
      }
    }
  }
  if (score.predicted > 0) score.precision = static_cast<double>(score.correct) / static_cast<double>(score.predicted);
  if (score.gold > 0) score.recall = static_cast<double>(score.correct) / static_cast<double>(score.gold);
  for (const auto &[label, n] : score.per_label_gold) {
    score.per_label_recall[label] = static_cast<double>(label_hits[label]) / static_cast<double>(n);
  }
  return score;
}

}  // namespace clmd
