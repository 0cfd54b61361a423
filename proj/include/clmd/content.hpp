#pragma once

#include <set>
#include <string>
#include <vector>

#include "clmd/conllu.hpp"

namespace clmd {

using LabelSet = std::set<std::string>;

// Relations whose dependents were scored as content words when evaluating
// automatic aligners.
const std::vector<std::string> &aligner_eval_relations();
// The 17 single-edge relations used as rows and columns of the edge matrix.
const std::vector<std::string> &matrix_relations();

enum class ContentMode { DeprelList, UposList, Hybrid };

// Decides which tokens count as content words.
//
// DeprelList: the (subtype-stripped) relation must be whitelisted.
// UposList:   the UPOS tag must be listed as content.
// Hybrid:     relation whitelist, vetoed by the UPOS function-word list, with
//             spatial adpositions (by lemma) promoted to content when enabled.
struct ContentPolicy {
  ContentMode mode = ContentMode::DeprelList;
  LabelSet deprel_whitelist;
  LabelSet upos_content;
  LabelSet upos_function;
  bool spatial_adp_as_content = false;
  LabelSet spatial_lemmas;

  static ContentPolicy deprel_list();
  static ContentPolicy upos_list();
  static ContentPolicy hybrid();

  // Throws std::invalid_argument if the list used by `mode` is empty.
  void validate() const;
};

ContentMode parse_content_mode(const std::string &name);
std::string to_string(ContentMode mode);

bool is_content(const Token &token, const ContentPolicy &policy);

inline bool is_content(const DepTree &tree, TokenId id, const ContentPolicy &policy) {
  return is_content(tree.token(id), policy);
}

}  // namespace clmd
