#include "clmd/content.hpp"

#include <stdexcept>

namespace clmd {

const std::vector<std::string> &aligner_eval_relations() {
  static const std::vector<std::string> labels{"root", "nsubj",    "amod", "nmod", "advmod", "nummod", "acl",
                                               "advcl", "xcomp", "compound", "flat", "obj",  "obl"};
  return labels;
}

const std::vector<std::string> &matrix_relations() {
  static const std::vector<std::string> labels{"acl",  "advcl", "advmod", "amod",   "appos", "ccomp",
                                               "compound", "conj",  "fixed",  "flat",  "nmod",  "nsubj",
                                               "nummod", "obj",   "obl",    "parataxis", "xcomp"};
  return labels;
}

ContentPolicy ContentPolicy::deprel_list() {
  ContentPolicy p;
  p.mode = ContentMode::DeprelList;
  p.deprel_whitelist.insert(aligner_eval_relations().begin(), aligner_eval_relations().end());
  p.deprel_whitelist.insert(matrix_relations().begin(), matrix_relations().end());
  return p;
}

ContentPolicy ContentPolicy::upos_list() {
  ContentPolicy p;
  p.mode = ContentMode::UposList;
  p.upos_content = {"ADJ", "ADV", "INTJ", "NOUN", "NUM", "PRON", "PROPN", "VERB"};
  return p;
}

ContentPolicy ContentPolicy::hybrid() {
  ContentPolicy p = deprel_list();
  p.mode = ContentMode::Hybrid;
  p.deprel_whitelist.insert({"iobj", "csubj", "discourse", "vocative", "dislocated"});
  p.upos_function = {"ADP", "AUX", "CCONJ", "DET", "SCONJ", "PUNCT"};
  p.spatial_adp_as_content = true;
  p.spatial_lemmas = {"above", "across", "along", "among", "around", "behind", "below",  "beneath",
                      "beside", "between", "beyond", "inside", "near", "outside", "over", "through",
                      "toward", "towards", "under", "underneath", "within"};
  return p;
}

void ContentPolicy::validate() const {
  switch (mode) {
    case ContentMode::DeprelList:
    case ContentMode::Hybrid:
      if (deprel_whitelist.empty()) throw std::invalid_argument("content policy: empty relation whitelist");
      break;
    case ContentMode::UposList:
      if (upos_content.empty()) throw std::invalid_argument("content policy: empty UPOS content list");
      break;
  }
}

ContentMode parse_content_mode(const std::string &name) {
  if (name == "deprel") return ContentMode::DeprelList;
  if (name == "upos") return ContentMode::UposList;
  if (name == "hybrid") return ContentMode::Hybrid;
  throw std::invalid_argument("unknown content policy '" + name + "' (expected deprel, upos or hybrid)");
}

std::string to_string(ContentMode mode) {
  switch (mode) {
    case ContentMode::DeprelList: return "deprel";
    case ContentMode::UposList: return "upos";
    case ContentMode::Hybrid: return "hybrid";
  }
  return "?";
}

bool is_content(const Token &token, const ContentPolicy &policy) {
  switch (policy.mode) {
    case ContentMode::DeprelList:
      return policy.deprel_whitelist.contains(strip_subtype(token.deprel));
    case ContentMode::UposList:
      return policy.upos_content.contains(token.upos);
    case ContentMode::Hybrid:
      if (token.upos == "ADP") return policy.spatial_adp_as_content && policy.spatial_lemmas.contains(token.lemma);
      if (policy.upos_function.contains(token.upos)) return false;
      return policy.deprel_whitelist.contains(strip_subtype(token.deprel));
  }
  return false;
}

}  // namespace clmd
