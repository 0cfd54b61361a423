#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "clmd/content.hpp"
#include "clmd/corpus.hpp"
#include "clmd/csr.hpp"

namespace clmd {

// Dorr's classic divergence classes expressed as CSR patterns. Lexical
// divergence has no structural signature and is not detected.
enum class DorrType {
  ThematicFull,
  ThematicSubjToObjObl,
  Promotional,
  Demotional,
  Structural,
  Conflational,
  CategorialSubjObj,
  CategorialSubjIobjObl,
};

std::string_view to_string(DorrType type);
const std::vector<DorrType> &all_dorr_types();

struct DorrHit {
  std::size_t sentence = 0;  // 0-based pair index
  DorrType type = DorrType::ThematicFull;
  std::pair<TokenId, TokenId> src_endpoints;  // for conflational: (root, root)
  std::vector<TokenId> tgt_ids;
};

struct DorrReport {
  std::int64_t thematic_full = 0;
  std::int64_t thematic_nsubj_to_obj_obl = 0;
  std::int64_t promotional = 0;
  std::int64_t demotional = 0;
  std::int64_t structural = 0;
  std::int64_t conflational = 0;
  std::int64_t categorial_nsubj_obj = 0;
  std::int64_t categorial_nsubj_iobj_obl = 0;
  std::int64_t sentences = 0;
  std::vector<DorrHit> per_sentence_hits;

  std::int64_t count(DorrType type) const;
  // Adds counters and appends hits.
  void merge(const DorrReport &other);
};

// Scans one sentence pair. `csrs` must come from extract_csr on the same pair
// with subtypes stripped; matching uses label sequences only unless
// `with_direction` is set.
DorrReport detect_dorr(std::span<const Csr> csrs, const SentencePair &pair, std::size_t sentence_index,
                       const ContentPolicy &policy, bool with_direction = false);

DorrReport dorr_corpus(std::span<const SentencePair> corpus, const ContentPolicy &policy,
                       const CsrOptions &options = {});

}  // namespace clmd
