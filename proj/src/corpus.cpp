#include "clmd/corpus.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace clmd {

PairBy parse_pair_by(const std::string &name) {
  if (name == "position") return PairBy::Position;
  if (name == "sent_id") return PairBy::SentId;
  throw std::invalid_argument("unknown pairing '" + name + "' (expected position or sent_id)");
}

std::string_view to_string(CorpusIssue::Kind kind) {
  switch (kind) {
    case CorpusIssue::Kind::CountMismatch: return "count-mismatch";
    case CorpusIssue::Kind::MissingSentId: return "missing-sent-id";
    case CorpusIssue::Kind::OutOfRangeLink: return "out-of-range-link";
    case CorpusIssue::Kind::ManyToMany: return "many-to-many";
    case CorpusIssue::Kind::DepthTie: return "depth-tie";
  }
  return "?";
}

bool Corpus::has_fatal() const {
  for (const auto &i : issues) {
    if (i.fatal) return true;
  }
  return false;
}

Corpus assemble_corpus(std::vector<Sentence> src, std::vector<Sentence> tgt, std::string_view alignment_text,
                       const CorpusOptions &options) {
  Corpus corpus;
  auto alignments = parse_numbered_alignment(alignment_text, {options.index_base});

  const auto fatal = [&](CorpusIssue::Kind kind, std::size_t pair, std::string message) {
    corpus.issues.push_back({kind, pair, 0, std::move(message), true});
  };

  std::vector<std::pair<Sentence, Sentence>> paired;
  if (options.pair_by == PairBy::Position) {
    if (src.size() != tgt.size()) {
      fatal(CorpusIssue::Kind::CountMismatch, 0,
            "source has " + std::to_string(src.size()) + " sentences, target has " + std::to_string(tgt.size()));
      return corpus;
    }
    for (std::size_t i = 0; i < src.size(); ++i) paired.emplace_back(std::move(src[i]), std::move(tgt[i]));
  } else {
    std::map<std::string, std::size_t> by_id;
    for (std::size_t i = 0; i < tgt.size(); ++i) {
      if (tgt[i].sent_id.empty()) {
        fatal(CorpusIssue::Kind::MissingSentId, i, "target sentence " + std::to_string(i + 1) + " has no sent_id");
        return corpus;
      }
      by_id.emplace(tgt[i].sent_id, i);
    }
    for (std::size_t i = 0; i < src.size(); ++i) {
      const auto it = by_id.find(src[i].sent_id);
      if (src[i].sent_id.empty() || it == by_id.end()) {
        fatal(CorpusIssue::Kind::MissingSentId, i,
              "source sentence '" + src[i].sent_id + "' has no target with the same sent_id");
        return corpus;
      }
      paired.emplace_back(std::move(src[i]), tgt[it->second]);
    }
  }

  if (alignments.size() != paired.size()) {
    fatal(CorpusIssue::Kind::CountMismatch, 0,
          "alignment has " + std::to_string(alignments.size()) + " lines, corpus has " +
              std::to_string(paired.size()) + " sentence pairs");
    return corpus;
  }

  corpus.pairs.reserve(paired.size());
  for (std::size_t k = 0; k < paired.size(); ++k) {
    auto &[s, t] = paired[k];
    const auto line = alignments[k].line;
    AlignmentGraph graph;
    for (const auto &l : alignments[k].graph.links()) {
      if (out_of_range_links(AlignmentGraph(std::span(&l, 1)), s.size(), t.size()).empty()) {
        graph.add(l);
      } else {
        corpus.issues.push_back({CorpusIssue::Kind::OutOfRangeLink, k, line,
                                 "link " + std::to_string(l.src) + "-" + std::to_string(l.tgt) +
                                     " outside sentence lengths " + std::to_string(s.size()) + "/" +
                                     std::to_string(t.size()),
                                 true});
      }
    }
    SentencePair pair{DepTree(std::move(s)), DepTree(std::move(t)), std::move(graph)};
    for (const auto &d : reduce(pair.align, pair.src, pair.tgt).dropped) {
      const bool tie = d.reason == DropReason::DepthTie;
      std::string ids;
      for (const auto id : d.component.src_ids) ids += (ids.empty() ? "" : ",") + std::to_string(id);
      ids += " -> ";
      bool first = true;
      for (const auto id : d.component.tgt_ids) {
        ids += (first ? "" : ",") + std::to_string(id);
        first = false;
      }
      corpus.issues.push_back({tie ? CorpusIssue::Kind::DepthTie : CorpusIssue::Kind::ManyToMany, k, line,
                               std::string(tie ? "depth tie, component dropped: " : "many-to-many component: ") + ids,
                               false});
    }
    corpus.pairs.push_back(std::move(pair));
  }
  return corpus;
}

Corpus load_corpus(std::string_view src_conllu, std::string_view tgt_conllu, std::string_view alignment_text,
                   const CorpusOptions &options) {
  ParseOptions parse;
  parse.strip_subtypes = options.strip_subtypes;
  return assemble_corpus(parse_conllu(src_conllu, parse), parse_conllu(tgt_conllu, parse), alignment_text, options);
}

std::string read_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

AlignmentGraph content_alignment(const SentencePair &pair, const ContentPolicy &policy) {
  AlignmentGraph out;
  for (const auto &l : pair.align.links()) {
    if (is_content(pair.src, l.src, policy)) out.add(l);
  }
  return out;
}

}  // namespace clmd
