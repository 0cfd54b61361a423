#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "clmd/alignment.hpp"
#include "clmd/conllu.hpp"
#include "clmd/content.hpp"
#include "clmd/corpus.hpp"

namespace clmd::testing {

struct Word {
  std::string form;
  std::string upos;
  TokenId head;
  std::string deprel;
};

inline Sentence make_sentence(const std::vector<Word> &words, std::string sent_id = {}) {
  Sentence s;
  s.sent_id = std::move(sent_id);
  for (std::size_t i = 0; i < words.size(); ++i) {
    Token t;
    t.id = static_cast<TokenId>(i + 1);
    t.form = words[i].form;
    t.lemma = words[i].form;
    t.upos = words[i].upos;
    t.xpos = "_";
    t.feats = "_";
    t.head = words[i].head;
    t.deprel = words[i].deprel;
    t.deps = "_";
    t.misc = "_";
    s.tokens.push_back(std::move(t));
  }
  return s;
}

inline SentencePair make_pair(const std::vector<Word> &src, const std::vector<Word> &tgt, std::vector<Link> links) {
  return {DepTree(make_sentence(src)), DepTree(make_sentence(tgt)), AlignmentGraph(links)};
}

// The article by Thompson / Tomseuni gigohan nonmuneun.
inline const char *kArticleEnglish =
    "# sent_id = article-1\n"
    "# text = The article by Thompson\n"
    "1\tThe\tthe\tDET\tDT\t_\t2\tdet\t_\t_\n"
    "2\tarticle\tarticle\tNOUN\tNN\t_\t0\troot\t_\t_\n"
    "3\tby\tby\tADP\tIN\t_\t4\tcase\t_\t_\n"
    "4\tThompson\tThompson\tPROPN\tNNP\t_\t2\tnmod\t_\t_\n"
    "\n";

inline const char *kArticleKorean =
    "# sent_id = article-1\n"
    "# text = Tomseuni gigohan nonmuneun\n"
    "1\tTomseuni\tTomseun\tPROPN\t_\t_\t2\tnsubj\t_\t_\n"
    "2\tgigohan\tgigoha\tVERB\t_\t_\t3\tacl:relcl\t_\t_\n"
    "3\tnonmuneun\tnonmun\tNOUN\t_\t_\t0\troot\t_\t_\n"
    "\n";

// article <-> nonmuneun, Thompson <-> Tomseuni.
inline const char *kArticleAlignment = "2-3 4-1\n";

inline SentencePair article_pair(bool strip_subtypes) {
  ParseOptions p;
  p.strip_subtypes = strip_subtypes;
  return {DepTree(parse_conllu(kArticleEnglish, p).front()), DepTree(parse_conllu(kArticleKorean, p).front()),
          parse_alignment(kArticleAlignment).front()};
}

// One hand-built pair per Dorr divergence class.
inline SentencePair thematic_pair() {
  // I like Mary / Maria me gusta a mi
  return make_pair({{"I", "PRON", 2, "nsubj"}, {"like", "VERB", 0, "root"}, {"Mary", "PROPN", 2, "obj"}},
                   {{"Maria", "PROPN", 3, "nsubj"},
                    {"me", "PRON", 3, "iobj"},
                    {"gusta", "VERB", 0, "root"},
                    {"a", "ADP", 5, "case"},
                    {"mi", "PRON", 3, "obl"}},
                   {{1, 5}, {2, 3}, {3, 1}});
}

inline SentencePair promotional_pair() {
  // John usually goes home / Juan suele ir a casa
  return make_pair({{"John", "PROPN", 3, "nsubj"},
                    {"usually", "ADV", 3, "advmod"},
                    {"goes", "VERB", 0, "root"},
                    {"home", "NOUN", 3, "obl"}},
                   {{"Juan", "PROPN", 2, "nsubj"},
                    {"suele", "VERB", 0, "root"},
                    {"ir", "VERB", 2, "xcomp"},
                    {"a", "ADP", 5, "case"},
                    {"casa", "NOUN", 3, "obl"}},
                   {{1, 1}, {2, 2}, {3, 3}, {4, 5}});
}

inline SentencePair demotional_pair() {
  // I like eating / Ich esse gern
  return make_pair({{"I", "PRON", 2, "nsubj"}, {"like", "VERB", 0, "root"}, {"eating", "VERB", 2, "xcomp"}},
                   {{"Ich", "PRON", 2, "nsubj"}, {"esse", "VERB", 0, "root"}, {"gern", "ADV", 2, "advmod"}},
                   {{1, 1}, {2, 3}, {3, 2}});
}

inline SentencePair structural_pair() {
  // John entered the house / Juan entro en la casa
  return make_pair({{"John", "PROPN", 2, "nsubj"},
                    {"entered", "VERB", 0, "root"},
                    {"the", "DET", 4, "det"},
                    {"house", "NOUN", 2, "obj"}},
                   {{"Juan", "PROPN", 2, "nsubj"},
                    {"entro", "VERB", 0, "root"},
                    {"en", "ADP", 5, "case"},
                    {"la", "DET", 5, "det"},
                    {"casa", "NOUN", 2, "obl"}},
                   {{1, 1}, {2, 2}, {4, 5}});
}

inline SentencePair conflational_pair() {
  // I stabbed John / Yo le di punaladas a Juan
  return make_pair({{"I", "PRON", 2, "nsubj"}, {"stabbed", "VERB", 0, "root"}, {"John", "PROPN", 2, "obj"}},
                   {{"Yo", "PRON", 3, "nsubj"},
                    {"le", "PRON", 3, "iobj"},
                    {"di", "VERB", 0, "root"},
                    {"punaladas", "NOUN", 3, "obj"},
                    {"a", "ADP", 6, "case"},
                    {"Juan", "PROPN", 3, "iobj"}},
                   {{1, 1}, {2, 3}, {2, 4}, {3, 6}});
}

inline SentencePair categorial_pair() {
  // I am hungry / Ich habe Hunger
  return make_pair({{"I", "PRON", 3, "nsubj"}, {"am", "AUX", 3, "cop"}, {"hungry", "ADJ", 0, "root"}},
                   {{"Ich", "PRON", 2, "nsubj"}, {"habe", "VERB", 0, "root"}, {"Hunger", "NOUN", 2, "obj"}},
                   {{1, 1}, {3, 3}});
}

inline const std::vector<std::string> &random_labels() {
  static const std::vector<std::string> labels{"nsubj", "obj",  "obl",   "advmod", "amod", "nmod", "acl",
                                               "xcomp", "conj", "flat",  "det",    "case", "acl:relcl",
                                               "compound", "nummod", "appos", "mark"};
  return labels;
}

// Uniform-ish random tree: every node after the first picks an earlier node
// (in a random order) as its head. Ids are shuffled.
inline Sentence random_sentence(std::mt19937 &rng, int n, int roots = 1) {
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> head(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 0; k < n; ++k) {
    if (k < roots) continue;
    std::uniform_int_distribution<int> pick(0, k - 1);
    head[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = order[static_cast<std::size_t>(pick(rng))];
  }
  std::uniform_int_distribution<std::size_t> lab(0, random_labels().size() - 1);
  std::vector<Word> words;
  for (int id = 1; id <= n; ++id) {
    const auto h = head[static_cast<std::size_t>(id)];
    words.push_back({"w" + std::to_string(id), id % 3 == 0 ? "VERB" : "NOUN", h,
                     h == 0 ? std::string("root") : random_labels()[lab(rng)]});
  }
  return make_sentence(words);
}

// Random parallel pair with many-to-one, one-to-many, unaligned and
// collapsed configurations injected among the source content words.
inline SentencePair random_pair(std::mt19937 &rng, const ContentPolicy &policy) {
  std::uniform_int_distribution<int> size(3, 14);
  DepTree src(random_sentence(rng, size(rng)));
  DepTree tgt(random_sentence(rng, size(rng)));
  std::vector<TokenId> content;
  for (TokenId id = 1; static_cast<std::size_t>(id) <= src.size(); ++id) {
    if (is_content(src, id, policy)) content.push_back(id);
  }
  std::shuffle(content.begin(), content.end(), rng);
  std::vector<TokenId> free_tgt(tgt.size());
  std::iota(free_tgt.begin(), free_tgt.end(), 1);
  std::shuffle(free_tgt.begin(), free_tgt.end(), rng);

  AlignmentGraph align;
  std::uniform_int_distribution<int> mode(0, 9);
  std::size_t i = 0;
  while (i < content.size() && !free_tgt.empty()) {
    const auto m = mode(rng);
    const auto t = free_tgt.back();
    if (m <= 1) {  // unaligned
      ++i;
    } else if (m <= 3 && i + 1 < content.size()) {  // many-to-one: collapsed pair
      free_tgt.pop_back();
      align.add({content[i], t});
      align.add({content[i + 1], t});
      i += 2;
    } else if (m <= 5 && free_tgt.size() >= 2) {  // one-to-many
      free_tgt.pop_back();
      const auto t2 = free_tgt.back();
      free_tgt.pop_back();
      align.add({content[i], t});
      align.add({content[i], t2});
      ++i;
    } else {
      free_tgt.pop_back();
      align.add({content[i], t});
      ++i;
    }
  }
  return {std::move(src), std::move(tgt), std::move(align)};
}

}  // namespace clmd::testing
