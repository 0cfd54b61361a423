#include <cmath>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "clmd/confusion.hpp"
#include "clmd/csr.hpp"
#include "fixtures.hpp"

namespace clmd {
namespace {

using testing::make_pair;

Token token(const std::string &upos, const std::string &deprel, const std::string &lemma = "x") {
  Token t;
  t.id = 1;
  t.form = lemma;
  t.lemma = lemma;
  t.upos = upos;
  t.head = 0;
  t.deprel = deprel;
  return t;
}

TEST(Content, DeprelPolicy) {
  const auto p = ContentPolicy::deprel_list();
  EXPECT_TRUE(is_content(token("NOUN", "nsubj"), p));
  EXPECT_TRUE(is_content(token("VERB", "acl:relcl"), p));
  EXPECT_TRUE(is_content(token("VERB", "root"), p));
  EXPECT_FALSE(is_content(token("DET", "det"), p));
  EXPECT_FALSE(is_content(token("ADP", "case"), p));
  for (const auto &r : matrix_relations()) EXPECT_TRUE(is_content(token("NOUN", r), p)) << r;
  for (const auto &r : aligner_eval_relations()) EXPECT_TRUE(is_content(token("NOUN", r), p)) << r;
}

TEST(Content, UposPolicy) {
  const auto p = ContentPolicy::upos_list();
  EXPECT_TRUE(is_content(token("NOUN", "det"), p));
  EXPECT_FALSE(is_content(token("ADP", "nmod"), p));
}

TEST(Content, HybridPolicy) {
  auto p = ContentPolicy::hybrid();
  EXPECT_TRUE(is_content(token("PRON", "iobj"), p));
  EXPECT_FALSE(is_content(token("DET", "nsubj"), p));
  EXPECT_TRUE(is_content(token("ADP", "case", "under"), p));
  EXPECT_FALSE(is_content(token("ADP", "case", "by"), p));
  p.spatial_adp_as_content = false;
  EXPECT_FALSE(is_content(token("ADP", "case", "under"), p));
}

TEST(Content, PolicyValidation) {
  EXPECT_NO_THROW(ContentPolicy::deprel_list().validate());
  ContentPolicy empty;
  EXPECT_THROW(empty.validate(), std::invalid_argument);
  EXPECT_THROW(parse_content_mode("bogus"), std::invalid_argument);
}

TEST(Csr, WorkedExample) {
  const auto pair = testing::article_pair(true);
  const auto csrs = extract_csr(pair, ContentPolicy::deprel_list());
  ASSERT_EQ(csrs.size(), 1u);  // article and Thompson are the only content words
  EXPECT_EQ(csrs[0].src_path.str(), "nmod");
  EXPECT_EQ(csrs[0].target, TargetKind::Path);
  EXPECT_EQ(csrs[0].target_str(), "acl+nsubj");
  EXPECT_EQ(csrs[0].src_endpoints, (std::pair<TokenId, TokenId>{2, 4}));

  const auto raw = extract_csr(testing::article_pair(false), ContentPolicy::deprel_list());
  EXPECT_EQ(raw[0].target_str(), "acl:relcl+nsubj");
}

TEST(Csr, WorkedExampleEdgeMatrix) {
  const std::vector<SentencePair> corpus{testing::article_pair(true)};
  const auto m = edge_confusion(corpus, ContentPolicy::deprel_list());
  EXPECT_EQ(m.other("nmod").at("acl+nsubj"), 1);
  EXPECT_EQ(m.row_total("nmod"), 1);
  EXPECT_EQ(m.cells_total("nmod"), 0);
}

// a(nsubj) <- b(root) -> c(obj)
const std::vector<testing::Word> kClause{{"a", "NOUN", 2, "nsubj"}, {"b", "VERB", 0, "root"}, {"c", "NOUN", 2, "obj"}};

TEST(Csr, CollapsedBeatsUnaligned) {
  // a and c share target 1; b has no link.
  const auto pair = make_pair(kClause, kClause, {{1, 1}, {3, 1}});
  const auto csrs = extract_csr(pair, ContentPolicy::deprel_list());
  ASSERT_EQ(csrs.size(), 3u);
  for (const auto &c : csrs) {
    if (c.src_endpoints == std::pair<TokenId, TokenId>{1, 3}) {
      EXPECT_EQ(c.target, TargetKind::Collapsed);
    } else {
      EXPECT_EQ(c.target, TargetKind::Unaligned);
    }
  }
}

TEST(Csr, UnalignedWhenOneSideHasNoCorrespondent) {
  const auto pair = make_pair(kClause, kClause, {{1, 1}, {2, 2}});
  const auto m = edge_confusion(std::vector<SentencePair>{pair}, ContentPolicy::deprel_list());
  EXPECT_EQ(m.count("nsubj", "nsubj"), 1);
  EXPECT_EQ(m.unaligned("obj"), 1);
  EXPECT_EQ(m.row_total("obj"), 0);
}

TEST(Csr, OneToManyOnlyCountsUnderReducedScope) {
  const auto pair = make_pair(kClause, kClause, {{1, 1}, {2, 2}, {2, 3}});
  const auto policy = ContentPolicy::deprel_list();
  const auto strict = extract_csr(pair, policy);
  const auto reduced = extract_csr(pair, policy, {CorrespondenceScope::Reduced, false});
  EXPECT_EQ(strict[0].target, TargetKind::Unaligned);
  EXPECT_EQ(reduced[0].target, TargetKind::Path);
  EXPECT_EQ(reduced[0].target_str(), "nsubj");
}

TEST(Csr, TargetInSeparateFragmentIsFlagged) {
  const auto pair = make_pair(kClause, {{"a", "NOUN", 0, "root"}, {"b", "VERB", 0, "root"}, {"c", "NOUN", 2, "obj"}},
                              {{1, 1}, {2, 2}, {3, 3}});
  const auto csrs = extract_csr(pair, ContentPolicy::deprel_list());
  EXPECT_EQ(csrs[0].target, TargetKind::Unaligned);
  EXPECT_TRUE(csrs[0].no_target_path);
}

// Identity alignment of a sentence with itself.
SentencePair identity_pair(const Sentence &s) {
  std::vector<Link> links;
  for (const auto &t : s.tokens) links.push_back({t.id, t.id});
  return {DepTree(s), DepTree(s), AlignmentGraph(links)};
}

TEST(EdgeMatrix, IdentityCorpusIsDiagonal) {
  std::mt19937 rng(31);
  std::vector<SentencePair> corpus;
  for (int k = 0; k < 50; ++k) corpus.push_back(identity_pair(testing::random_sentence(rng, 12)));
  const auto policy = ContentPolicy::deprel_list();
  const auto m = edge_confusion(corpus, policy);
  for (const auto &row : m.row_labels()) {
    EXPECT_EQ(m.collapsed(row), 0);
    EXPECT_EQ(m.unaligned(row), 0);
    EXPECT_EQ(m.other_total(row), 0);
    EXPECT_EQ(m.cells_total(row), m.count(row, row));
    if (m.row_total(row) > 0) {
      EXPECT_DOUBLE_EQ(translation_entropy(m, row), 0.0);
      EXPECT_DOUBLE_EQ(preservation(m).at(row), 1.0);
    }
  }
  const auto pos = pos_confusion(corpus, policy);
  for (const auto &row : pos.row_labels()) EXPECT_EQ(pos.cells_total(row), pos.count(row, row));
}

// Single-edge source CSRs per stripped relation, computed from the head
// column: both ends content, child relation is the row.
std::map<std::string, std::int64_t> expected_row_counts(const SentencePair &pair, const ContentPolicy &policy) {
  std::map<std::string, std::int64_t> out;
  for (const auto &t : pair.src.sentence().tokens) {
    if (t.head == kRootId) continue;
    if (!is_content(t, policy) || !is_content(pair.src.token(t.head), policy)) continue;
    ++out[strip_subtype(t.deprel)];
  }
  return out;
}

TEST(EdgeMatrix, EveryObservationLandsInOneBucket) {
  std::mt19937 rng(32);
  const auto policy = ContentPolicy::deprel_list();
  for (const auto scope : {CorrespondenceScope::OneToOneOnly, CorrespondenceScope::Reduced}) {
    std::map<std::string, std::int64_t> expected;
    std::vector<SentencePair> corpus;
    for (int k = 0; k < 200; ++k) {
      corpus.push_back(testing::random_pair(rng, policy));
      for (const auto &[r, n] : expected_row_counts(corpus.back(), policy)) expected[r] += n;
    }
    EdgeOptions opt;
    opt.scope = scope;
    const auto m = edge_confusion(corpus, policy, opt);
    for (const auto &row : m.row_labels()) {
      const auto it = expected.find(row);
      EXPECT_EQ(m.row_total(row) + m.unaligned(row), it == expected.end() ? 0 : it->second) << row;
    }
    for (const auto &row : percentages(m).rows) {
      const double sum = std::accumulate(row.cells.begin(), row.cells.end(), 0.0) + row.collapsed + row.other;
      EXPECT_NEAR(sum, 100.0, 0.01) << row.label;
    }
  }
}

TEST(EdgeMatrix, DirectionMismatchGoesToOther) {
  // source: b -nsubj-> a ; target: a -nsubj-> b (edge points the other way)
  const auto pair = make_pair({{"a", "NOUN", 2, "nsubj"}, {"b", "VERB", 0, "root"}},
                              {{"a", "NOUN", 0, "root"}, {"b", "VERB", 1, "nsubj"}}, {{1, 1}, {2, 2}});
  EdgeOptions opt;
  opt.with_direction = true;
  const auto m = edge_confusion(std::vector<SentencePair>{pair}, ContentPolicy::deprel_list(), opt);
  EXPECT_EQ(m.count("nsubj", "nsubj"), 0);
  EXPECT_EQ(m.other("nsubj").at("nsubj↓"), 1);

  const auto plain = edge_confusion(std::vector<SentencePair>{pair}, ContentPolicy::deprel_list());
  EXPECT_EQ(plain.count("nsubj", "nsubj"), 1);
}

TEST(PosMatrix, NoneRowAndColumn) {
  // src b is unaligned; tgt 3 is content and unmatched.
  const auto pair = make_pair(kClause, {{"x", "PRON", 2, "nsubj"}, {"y", "VERB", 0, "root"}, {"z", "NOUN", 2, "obl"}},
                              {{1, 1}, {3, 2}});
  const auto m = pos_confusion(std::vector<SentencePair>{pair}, ContentPolicy::deprel_list());
  EXPECT_EQ(m.count("NOUN", "PRON"), 1);
  EXPECT_EQ(m.count("NOUN", "VERB"), 1);
  EXPECT_EQ(m.count("VERB", kNone), 1);
  EXPECT_EQ(m.count(kNone, "NOUN"), 1);
  EXPECT_TRUE(preservation(m).count(kNone) == 0);
}

TEST(Entropy, UniformAndSingle) {
  ConfusionMatrix m;
  for (const auto *c : {"a", "b", "c", "d", "e"}) m.add("x", c, 3);
  EXPECT_NEAR(translation_entropy(m, "x"), std::log2(5.0), 1e-12);
  m.add("y", "a", 7);
  EXPECT_DOUBLE_EQ(translation_entropy(m, "y"), 0.0);
  m.add_unaligned("y", 7);
  EXPECT_DOUBLE_EQ(translation_entropy(m, "y"), 0.0);
  EXPECT_DOUBLE_EQ(translation_entropy(m, "y", {true}), 1.0);
  EXPECT_THROW(translation_entropy(m, "zzz"), std::out_of_range);
  m.add_unaligned("empty");
  EXPECT_THROW(translation_entropy(m, "empty"), std::domain_error);
}

TEST(Entropy, MatchesDirectSum) {
  std::mt19937 rng(33);
  std::uniform_int_distribution<int> count(0, 40);
  for (int trial = 0; trial < 200; ++trial) {
    ConfusionMatrix m({"r"}, {"a", "b", "c"});
    std::vector<double> outcomes;
    for (const auto *c : {"a", "b", "c"}) {
      const auto n = count(rng);
      m.add("r", c, n);
      outcomes.push_back(n);
    }
    const auto col = count(rng);
    m.add_collapsed("r", col);
    outcomes.push_back(col);
    for (const auto *p : {"x+y", "y+z", "x+y+z"}) {
      const auto n = count(rng);
      m.add_other("r", p, n);
      outcomes.push_back(n);
    }
    m.add_unaligned("r", count(rng));
    const double total = std::accumulate(outcomes.begin(), outcomes.end(), 0.0);
    if (total == 0) continue;
    double h = 0;
    for (const auto n : outcomes) {
      if (n > 0) h -= n / total * std::log2(n / total);
    }
    EXPECT_NEAR(translation_entropy(m, "r"), h, 1e-12);
    EXPECT_GE(translation_entropy(m, "r"), 0.0);
    EXPECT_LE(translation_entropy(m, "r"), std::log2(static_cast<double>(outcomes.size())) + 1e-12);
  }
}

// The English-Russian acl row of the manually aligned corpus, as raw counts.
ConfusionMatrix english_russian_acl_row() {
  ConfusionMatrix m(matrix_relations(), matrix_relations());
  const std::vector<int> cells{151, 2, 1, 5, 1, 2, 0, 1, 0, 0, 27, 7, 0, 5, 3, 3, 13};
  for (std::size_t i = 0; i < cells.size(); ++i) m.add("acl", matrix_relations()[i], cells[i]);
  m.add_collapsed("acl", 2);
  m.add_other("acl", "nmod+acl", 15);
  for (const auto *p : {"acl+obl", "acl+obj", "acl+nsubj", "amod+acl", "nmod+amod"}) m.add_other("acl", p, 14);
  m.add_other("acl", "conj+acl", 4);
  return m;
}

TEST(Preservation, EnglishRussianAclRow) {
  const auto m = english_russian_acl_row();
  EXPECT_EQ(m.row_total("acl"), 312);
  EXPECT_NEAR(preservation(m).at("acl"), 0.48, 0.01);
  const auto table = percentages(m);
  ASSERT_EQ(table.rows.size(), 1u);
  EXPECT_EQ(std::lround(table.rows[0].cells[0]), 48);
  EXPECT_EQ(std::lround(table.rows[0].other), 29);
  EXPECT_EQ(std::lround(table.rows[0].collapsed), 1);
  EXPECT_EQ(std::lround(table.rows[0].mcop), 5);
  EXPECT_EQ(table.rows[0].mcop_path, "nmod+acl");
  EXPECT_EQ(table.omitted.size(), matrix_relations().size() - 1);
}

TEST(Confusion, McopTieGoesToSmallestPath) {
  ConfusionMatrix m;
  m.add_other("r", "b+c", 3);
  m.add_other("r", "a+c", 3);
  m.add_other("r", "z", 1);
  EXPECT_EQ(m.mcop("r")->first, "a+c");
  EXPECT_FALSE(m.mcop("nothing").has_value());
}

TEST(Confusion, FixedMatrixRejectsUnknownLabels) {
  ConfusionMatrix m({"a"}, {"a", "b"});
  EXPECT_THROW(m.add("c", "a"), std::out_of_range);
  EXPECT_THROW(m.add("a", "c"), std::out_of_range);
  EXPECT_THROW(ConfusionMatrix({"a", "a"}, {"b"}), std::invalid_argument);
  ConfusionMatrix open;
  EXPECT_THROW(m.merge(open), std::invalid_argument);
}

TEST(Confusion, MergeIsAssociativeAndMatchesWholeCorpus) {
  std::mt19937 rng(34);
  const auto policy = ContentPolicy::deprel_list();
  std::vector<SentencePair> corpus;
  for (int k = 0; k < 60; ++k) corpus.push_back(testing::random_pair(rng, policy));
  const std::span<const SentencePair> all(corpus);
  const auto a = edge_confusion(all.subspan(0, 20), policy);
  const auto b = edge_confusion(all.subspan(20, 20), policy);
  const auto c = edge_confusion(all.subspan(40), policy);

  auto left = a;
  left.merge(b);
  left.merge(c);
  auto bc = b;
  bc.merge(c);
  auto right = a;
  right.merge(bc);
  EXPECT_EQ(left, right);
  EXPECT_EQ(left, edge_confusion(all, policy));

  auto pos = pos_confusion(all.subspan(0, 30), policy);
  pos.merge(pos_confusion(all.subspan(30), policy));
  EXPECT_EQ(pos, pos_confusion(all, policy));
}

}  // namespace
}  // namespace clmd
