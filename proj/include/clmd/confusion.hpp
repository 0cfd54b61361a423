#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "clmd/content.hpp"
#include "clmd/corpus.hpp"
#include "clmd/csr.hpp"

namespace clmd {

inline constexpr const char *kNone = "None";

// Source label -> target outcome counts. Every observation lands in exactly
// one bucket: a labelled column, Collapsed, Unaligned, or the Other tail keyed
// by the rendered target path.
//
// A matrix built with explicit row/column lists is fixed: rows are kept in
// the given order and unknown labels are rejected. A default-constructed
// matrix is open and keeps its labels in lexicographic order.
class ConfusionMatrix {
 public:
  ConfusionMatrix() = default;
  ConfusionMatrix(std::vector<std::string> rows, std::vector<std::string> cols);

  bool is_open() const { return open_; }
  const std::vector<std::string> &row_labels() const { return rows_; }
  const std::vector<std::string> &col_labels() const { return cols_; }
  bool has_row(const std::string &row) const;
  bool has_col(const std::string &col) const;

  void add(const std::string &row, const std::string &col, std::int64_t n = 1);
  void add_collapsed(const std::string &row, std::int64_t n = 1);
  void add_unaligned(const std::string &row, std::int64_t n = 1);
  void add_other(const std::string &row, const std::string &path, std::int64_t n = 1);

  std::int64_t count(const std::string &row, const std::string &col) const;
  std::int64_t collapsed(const std::string &row) const;
  std::int64_t unaligned(const std::string &row) const;
  const std::map<std::string, std::int64_t> &other(const std::string &row) const;
  std::int64_t other_total(const std::string &row) const;
  std::int64_t cells_total(const std::string &row) const;
  // cells + collapsed + other; Unaligned is not part of the row total.
  std::int64_t row_total(const std::string &row) const;

  // Most common other path; ties go to the lexicographically smallest path.
  std::optional<std::pair<std::string, std::int64_t>> mcop(const std::string &row) const;

  // Sums counts. Fixed matrices must share their row and column lists.
  void merge(const ConfusionMatrix &other);

  bool operator==(const ConfusionMatrix &) const = default;

 private:
  struct Row {
    std::map<std::string, std::int64_t> cells;
    std::int64_t collapsed = 0;
    std::int64_t unaligned = 0;
    std::map<std::string, std::int64_t> other;
    bool operator==(const Row &) const = default;
  };

  Row &row_for_update(const std::string &row);
  const Row *find_row(const std::string &row) const;
  void ensure_col(const std::string &col);

  bool open_ = true;
  std::vector<std::string> rows_;
  std::vector<std::string> cols_;
  std::map<std::string, Row> data_;
};

struct PercentRow {
  std::string label;
  std::vector<double> cells;  // parallel to PercentTable::columns
  double collapsed = 0;
  double other = 0;
  double mcop = 0;
  std::string mcop_path;
  std::int64_t total = 0;
};

struct PercentTable {
  std::vector<std::string> columns;
  std::vector<PercentRow> rows;
  std::vector<std::string> omitted;  // rows without observations
};

PercentTable percentages(const ConfusionMatrix &m);

struct EntropyOptions {
  bool include_unaligned = false;
};

// Base-2 Shannon entropy of a row's outcome distribution. Every distinct
// target path is one outcome and Collapsed is one outcome.
double translation_entropy(const ConfusionMatrix &m, const std::string &row, const EntropyOptions &options = {});

// Diagonal share of each non-empty row whose label is also a column.
std::map<std::string, double> preservation(const ConfusionMatrix &m);

// POS mapping under the reduced one-to-one alignment, with a "None" column
// for unmatched source content words and a "None" row for unmatched target
// content words.
void accumulate_pos(const SentencePair &pair, const ContentPolicy &policy, ConfusionMatrix &m);
ConfusionMatrix pos_confusion(std::span<const SentencePair> corpus, const ContentPolicy &policy);

struct EdgeOptions {
  std::vector<std::string> row_labels = matrix_relations();
  std::vector<std::string> column_labels = matrix_relations();
  bool strip_subtypes = true;
  bool with_direction = false;
  CorrespondenceScope scope = CorrespondenceScope::OneToOneOnly;
};

ConfusionMatrix make_edge_matrix(const EdgeOptions &options);
// Adds the single-edge source CSRs of one sentence pair.
void accumulate_edges(std::span<const Csr> csrs, const EdgeOptions &options, ConfusionMatrix &m);
ConfusionMatrix edge_confusion(std::span<const SentencePair> corpus, const ContentPolicy &policy,
                               const EdgeOptions &options = {});

}  // namespace clmd
