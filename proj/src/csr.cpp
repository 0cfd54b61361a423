#include "clmd/csr.hpp"

#include <algorithm>

namespace clmd {

std::string Csr::target_str() const {
  switch (target) {
    case TargetKind::Path: return tgt_path.str();
    case TargetKind::Collapsed: return kCollapsed;
    case TargetKind::Unaligned: return kUnaligned;
  }
  return kUnaligned;
}

std::map<TokenId, TokenId> correspondents(const AlignmentGraph &content_links, const SentencePair &pair,
                                          CorrespondenceScope scope) {
  if (scope == CorrespondenceScope::Reduced) return reduce(content_links, pair.src, pair.tgt).src_to_tgt;
  std::map<TokenId, TokenId> out;
  for (const auto &c : components(content_links)) {
    if (c.kind == ComponentKind::OneToOne) out.emplace(c.src_ids.front(), c.tgt_ids.front());
  }
  return out;
}

std::vector<Csr> extract_csr(const SentencePair &pair, const ContentPolicy &policy, const CsrOptions &options) {
  const auto links = content_alignment(pair, policy);
  const auto corr = correspondents(links, pair, options.scope);

  std::vector<TokenId> content;
  for (TokenId id = 1; static_cast<std::size_t>(id) <= pair.src.size(); ++id) {
    if (is_content(pair.src, id, policy)) content.push_back(id);
  }
  std::vector<std::vector<TokenId>> targets(pair.src.size() + 1);
  for (const auto &l : links.links()) targets[static_cast<std::size_t>(l.src)].push_back(l.tgt);

  const auto shares_target = [&](TokenId a, TokenId b) {
    const auto &ta = targets[static_cast<std::size_t>(a)];
    const auto &tb = targets[static_cast<std::size_t>(b)];
    return std::any_of(ta.begin(), ta.end(),
                       [&](TokenId t) { return std::find(tb.begin(), tb.end(), t) != tb.end(); });
  };

  std::vector<Csr> out;
  for (std::size_t i = 0; i < content.size(); ++i) {
    for (std::size_t j = i + 1; j < content.size(); ++j) {
      const auto a = content[i];
      const auto b = content[j];
      if (pair.src.fragment_root(a) != pair.src.fragment_root(b)) continue;

      Csr csr;
      csr.src_endpoints = {a, b};
      csr.src_path = dependency_path(pair.src, a, b, options.with_direction);

      const auto ca = corr.find(a);
      const auto cb = corr.find(b);
      if (shares_target(a, b)) {
        csr.target = TargetKind::Collapsed;
      } else if (ca == corr.end() || cb == corr.end()) {
        csr.target = TargetKind::Unaligned;
      } else {
        csr.tgt_endpoints = std::pair{ca->second, cb->second};
        try {
          csr.tgt_path = dependency_path(pair.tgt, ca->second, cb->second, options.with_direction);
          csr.target = TargetKind::Path;
        } catch (const NoPathError &) {
          csr.target = TargetKind::Unaligned;
          csr.no_target_path = true;
        }
      }
      out.push_back(std::move(csr));
    }
  }
  return out;
}

}  // namespace clmd
