#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>

#include "clmd/confusion.hpp"
#include "clmd/content.hpp"
#include "clmd/corpus.hpp"
#include "clmd/dorr.hpp"

namespace clmd {

struct AlignmentSummary {
  std::int64_t pairs = 0;
  std::map<ComponentKind, std::int64_t> components;
  std::map<ComponentKind, std::int64_t> source_tokens;  // aligned source tokens by component kind
  std::int64_t links = 0;
  std::int64_t non_content_links = 0;  // links whose source is not a content word
  std::int64_t depth_ties = 0;
  std::int64_t many_to_many = 0;
  std::int64_t target_no_path = 0;  // CSRs whose correspondents are in different target fragments

  // Share of aligned source tokens that sit in one-to-one components.
  double one_to_one_share() const;
  void merge(const AlignmentSummary &other);
};

struct AnalysisOptions {
  ContentPolicy policy = ContentPolicy::deprel_list();
  EdgeOptions edges;
  unsigned threads = 1;
};

struct Analysis {
  ConfusionMatrix pos;
  ConfusionMatrix edges;
  DorrReport dorr;
  AlignmentSummary alignment;
};

// Runs every per-pair computation. Pairs are split into contiguous shards,
// one per worker, and merged in shard order, so the result does not depend
// on the worker count.
Analysis analyze(std::span<const SentencePair> corpus, const AnalysisOptions &options);

// Worker cap from CLMD_THREADS; falls back to the hardware concurrency.
unsigned worker_count_from_env();

}  // namespace clmd
