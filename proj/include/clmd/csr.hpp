#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clmd/content.hpp"
#include "clmd/corpus.hpp"
#include "clmd/path.hpp"

namespace clmd {

enum class TargetKind { Path, Collapsed, Unaligned };

// Corresponding syntactic relations: a source path between two content words
// and what their correspondents look like on the target side.
struct Csr {
  PathType src_path;
  TargetKind target = TargetKind::Unaligned;
  PathType tgt_path;  // set only when target == Path
  std::pair<TokenId, TokenId> src_endpoints;
  std::optional<std::pair<TokenId, TokenId>> tgt_endpoints;
  // Both correspondents exist but sit in different target root fragments.
  bool no_target_path = false;

  // Rendered target outcome: the path string, "Collapsed" or "Unaligned".
  std::string target_str() const;
};

inline constexpr const char *kCollapsed = "Collapsed";
inline constexpr const char *kUnaligned = "Unaligned";

enum class CorrespondenceScope {
  OneToOneOnly,  // correspondents only from one-to-one components
  Reduced,       // correspondents from the shallowest-node reduction
};

struct CsrOptions {
  CorrespondenceScope scope = CorrespondenceScope::OneToOneOnly;
  bool with_direction = false;
};

// One CSR per unordered pair of source content words connected in the source
// tree, oriented from the smaller id. Collapsed is decided on the unreduced
// content alignment.
std::vector<Csr> extract_csr(const SentencePair &pair, const ContentPolicy &policy, const CsrOptions &options = {});

// Source -> target correspondence map used for the chosen scope.
std::map<TokenId, TokenId> correspondents(const AlignmentGraph &content_links, const SentencePair &pair,
                                          CorrespondenceScope scope);

}  // namespace clmd
