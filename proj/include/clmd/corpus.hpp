#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "clmd/alignment.hpp"
#include "clmd/conllu.hpp"
#include "clmd/content.hpp"

namespace clmd {

struct SentencePair {
  DepTree src;
  DepTree tgt;
  AlignmentGraph align;
};

enum class PairBy { Position, SentId };

PairBy parse_pair_by(const std::string &name);

struct CorpusOptions {
  PairBy pair_by = PairBy::Position;
  int index_base = 1;
  bool strip_subtypes = true;
};

// Problem found while assembling a parallel corpus. Fatal issues make the
// corpus unusable; the rest are reported and the affected links dropped.
struct CorpusIssue {
  enum class Kind { CountMismatch, MissingSentId, OutOfRangeLink, ManyToMany, DepthTie };
  Kind kind;
  std::size_t pair_index = 0;  // 0-based
  std::size_t line = 0;        // alignment file line, 1-based, when known
  std::string message;
  bool fatal = false;
};

std::string_view to_string(CorpusIssue::Kind kind);

struct Corpus {
  std::vector<SentencePair> pairs;
  std::vector<CorpusIssue> issues;

  bool has_fatal() const;
};

// Pairs source and target sentences and attaches one alignment line to each
// pair. Out-of-range links are reported and removed.
Corpus assemble_corpus(std::vector<Sentence> src, std::vector<Sentence> tgt, std::string_view alignment_text,
                       const CorpusOptions &options);

Corpus load_corpus(std::string_view src_conllu, std::string_view tgt_conllu, std::string_view alignment_text,
                   const CorpusOptions &options);

std::string read_file(const std::filesystem::path &path);

// A restricted to links whose source token is a content word.
AlignmentGraph content_alignment(const SentencePair &pair, const ContentPolicy &policy);

}  // namespace clmd
