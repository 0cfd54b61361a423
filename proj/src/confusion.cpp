#include "clmd/confusion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace clmd {

namespace {

void insert_sorted(std::vector<std::string> &labels, const std::string &label) {
  const auto it = std::lower_bound(labels.begin(), labels.end(), label);
  if (it == labels.end() || *it != label) labels.insert(it, label);
}

const std::map<std::string, std::int64_t> kEmptyTail;

}  // namespace

ConfusionMatrix::ConfusionMatrix(std::vector<std::string> rows, std::vector<std::string> cols)
    : open_(false), rows_(std::move(rows)), cols_(std::move(cols)) {
  for (const auto &r : rows_) data_.emplace(r, Row{});
  if (data_.size() != rows_.size()) throw std::invalid_argument("duplicate row label");
  std::vector<std::string> sorted = cols_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("duplicate column label");
  }
}

bool ConfusionMatrix::has_row(const std::string &row) const { return data_.contains(row); }

bool ConfusionMatrix::has_col(const std::string &col) const {
  return std::find(cols_.begin(), cols_.end(), col) != cols_.end();
}

ConfusionMatrix::Row &ConfusionMatrix::row_for_update(const std::string &row) {
  if (const auto it = data_.find(row); it != data_.end()) return it->second;
  if (!open_) throw std::out_of_range("unknown row label '" + row + "'");
  insert_sorted(rows_, row);
  return data_[row];
}

const ConfusionMatrix::Row *ConfusionMatrix::find_row(const std::string &row) const {
  const auto it = data_.find(row);
  return it == data_.end() ? nullptr : &it->second;
}

void ConfusionMatrix::ensure_col(const std::string &col) {
  if (has_col(col)) return;
  if (!open_) throw std::out_of_range("unknown column label '" + col + "'");
  insert_sorted(cols_, col);
}

void ConfusionMatrix::add(const std::string &row, const std::string &col, std::int64_t n) {
  ensure_col(col);
  row_for_update(row).cells[col] += n;
}

void ConfusionMatrix::add_collapsed(const std::string &row, std::int64_t n) { row_for_update(row).collapsed += n; }

void ConfusionMatrix::add_unaligned(const std::string &row, std::int64_t n) { row_for_update(row).unaligned += n; }

void ConfusionMatrix::add_other(const std::string &row, const std::string &path, std::int64_t n) {
  row_for_update(row).other[path] += n;
}

std::int64_t ConfusionMatrix::count(const std::string &row, const std::string &col) const {
  const auto *r = find_row(row);
  if (r == nullptr) return 0;
  const auto it = r->cells.find(col);
  return it == r->cells.end() ? 0 : it->second;
}

std::int64_t ConfusionMatrix::collapsed(const std::string &row) const {
  const auto *r = find_row(row);
  return r == nullptr ? 0 : r->collapsed;
}

std::int64_t ConfusionMatrix::unaligned(const std::string &row) const {
  const auto *r = find_row(row);
  return r == nullptr ? 0 : r->unaligned;
}

const std::map<std::string, std::int64_t> &ConfusionMatrix::other(const std::string &row) const {
  const auto *r = find_row(row);
  return r == nullptr ? kEmptyTail : r->other;
}

std::int64_t ConfusionMatrix::other_total(const std::string &row) const {
  std::int64_t sum = 0;
  for (const auto &[path, n] : other(row)) sum += n;
  return sum;
}

std::int64_t ConfusionMatrix::cells_total(const std::string &row) const {
  const auto *r = find_row(row);
  if (r == nullptr) return 0;
  std::int64_t sum = 0;
  for (const auto &[col, n] : r->cells) sum += n;
  return sum;
}

std::int64_t ConfusionMatrix::row_total(const std::string &row) const {
  return cells_total(row) + collapsed(row) + other_total(row);
}

std::optional<std::pair<std::string, std::int64_t>> ConfusionMatrix::mcop(const std::string &row) const {
  std::optional<std::pair<std::string, std::int64_t>> best;
  // std::map iterates in key order, so a strict '>' keeps the smallest key on ties.
  for (const auto &[path, n] : other(row)) {
    if (n > 0 && (!best || n > best->second)) best = std::pair{path, n};
  }
  return best;
}

void ConfusionMatrix::merge(const ConfusionMatrix &rhs) {
  if (!open_ && (rhs.open_ || rows_ != rhs.rows_ || cols_ != rhs.cols_)) {
    throw std::invalid_argument("cannot merge matrices with different labels");
  }
  for (const auto &c : rhs.cols_) ensure_col(c);
  for (const auto &label : rhs.rows_) {
    const auto &src = rhs.data_.at(label);
    auto &dst = row_for_update(label);
    for (const auto &[col, n] : src.cells) dst.cells[col] += n;
    dst.collapsed += src.collapsed;
    dst.unaligned += src.unaligned;
    for (const auto &[path, n] : src.other) dst.other[path] += n;
  }
}

PercentTable percentages(const ConfusionMatrix &m) {
  PercentTable table;
  table.columns = m.col_labels();
  for (const auto &label : m.row_labels()) {
    const auto total = m.row_total(label);
    if (total == 0) {
      table.omitted.push_back(label);
      continue;
    }
    const auto pct = [&](std::int64_t n) { return 100.0 * static_cast<double>(n) / static_cast<double>(total); };
    PercentRow row;
    row.label = label;
    row.total = total;
    for (const auto &c : table.columns) row.cells.push_back(pct(m.count(label, c)));
    row.collapsed = pct(m.collapsed(label));
    row.other = pct(m.other_total(label));
    if (const auto top = m.mcop(label)) {
      row.mcop = pct(top->second);
      row.mcop_path = top->first;
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

double translation_entropy(const ConfusionMatrix &m, const std::string &row, const EntropyOptions &options) {
  if (!m.has_row(row)) throw std::out_of_range("unknown row label '" + row + "'");
  std::vector<std::int64_t> outcomes;
  for (const auto &c : m.col_labels()) outcomes.push_back(m.count(row, c));
  outcomes.push_back(m.collapsed(row));
  for (const auto &[path, n] : m.other(row)) outcomes.push_back(n);
  if (options.include_unaligned) outcomes.push_back(m.unaligned(row));

  std::int64_t total = 0;
  for (const auto n : outcomes) total += n;
  if (total == 0) throw std::domain_error("row '" + row + "' has no observations");

  double h = 0.0;
  for (const auto n : outcomes) {
    if (n == 0) continue;
    const double p = static_cast<double>(n) / static_cast<double>(total);
    h -= p * std::log2(p);
  }
  return h == 0.0 ? 0.0 : h;  // no negative zero
}

std::map<std::string, double> preservation(const ConfusionMatrix &m) {
  std::map<std::string, double> out;
  for (const auto &label : m.row_labels()) {
    if (label == kNone || !m.has_col(label)) continue;
    const auto total = m.row_total(label);
    if (total == 0) continue;
    out[label] = static_cast<double>(m.count(label, label)) / static_cast<double>(total);
  }
  return out;
}

void accumulate_pos(const SentencePair &pair, const ContentPolicy &policy, ConfusionMatrix &m) {
  const auto links = content_alignment(pair, policy);
  const auto reduced = reduce(links, pair.src, pair.tgt);

  for (TokenId s = 1; static_cast<std::size_t>(s) <= pair.src.size(); ++s) {
    if (!is_content(pair.src, s, policy)) continue;
    const auto t = reduced.target_of(s);
    m.add(pair.src.token(s).upos, t ? pair.tgt.token(*t).upos : kNone);
  }

  std::vector<bool> linked(pair.tgt.size() + 1, false);
  for (const auto &l : links.links()) linked[static_cast<std::size_t>(l.tgt)] = true;
  for (TokenId t = 1; static_cast<std::size_t>(t) <= pair.tgt.size(); ++t) {
    const bool content = linked[static_cast<std::size_t>(t)] || is_content(pair.tgt, t, policy);
    if (content && !reduced.source_of(t)) m.add(kNone, pair.tgt.token(t).upos);
  }
}

ConfusionMatrix pos_confusion(std::span<const SentencePair> corpus, const ContentPolicy &policy) {
  ConfusionMatrix m;
  for (const auto &pair : corpus) accumulate_pos(pair, policy, m);
  return m;
}

ConfusionMatrix make_edge_matrix(const EdgeOptions &options) {
  return ConfusionMatrix(options.row_labels, options.column_labels);
}

void accumulate_edges(std::span<const Csr> csrs, const EdgeOptions &options, ConfusionMatrix &m) {
  for (const auto &csr : csrs) {
    if (!csr.src_path.single_edge()) continue;
    const auto src = options.strip_subtypes ? csr.src_path.stripped() : csr.src_path;
    const auto &row = src.labels.front();
    if (!m.has_row(row)) continue;

    switch (csr.target) {
      case TargetKind::Unaligned:
        m.add_unaligned(row);
        break;
      case TargetKind::Collapsed:
        m.add_collapsed(row);
        break;
      case TargetKind::Path: {
        const auto tgt = options.strip_subtypes ? csr.tgt_path.stripped() : csr.tgt_path;
        const bool same_direction = !tgt.has_directions() || !src.has_directions() ||
                                    tgt.directions.front() == src.directions.front();
        if (tgt.single_edge() && m.has_col(tgt.labels.front()) && same_direction) {
          m.add(row, tgt.labels.front());
        } else {
          m.add_other(row, tgt.str());
        }
        break;
      }
    }
  }
}

ConfusionMatrix edge_confusion(std::span<const SentencePair> corpus, const ContentPolicy &policy,
                               const EdgeOptions &options) {
  auto m = make_edge_matrix(options);
  const CsrOptions csr_options{options.scope, options.with_direction};
  for (const auto &pair : corpus) {
    const auto csrs = extract_csr(pair, policy, csr_options);
    accumulate_edges(csrs, options, m);
  }
  return m;
}

}  // namespace clmd
