#include "clmd/report.hpp"

#include <cstdio>
#include <stdexcept>

namespace clmd {

namespace {

using nlohmann::json;

json optional_number(const std::optional<double> &v) { return v ? json(*v) : json(nullptr); }

void write_header(std::ostream &os, const ConfusionMatrix &m, bool with_tail, const char *mcop_header) {
  os << "source";
  for (const auto &c : m.col_labels()) os << '\t' << c;
  if (with_tail) os << "\tCollapsed\tOther\t" << mcop_header << "\tMCOP";
  os << '\n';
}

}  // namespace

OutputFormat parse_output_format(const std::string &name) {
  if (name == "tsv") return OutputFormat::Tsv;
  if (name == "json") return OutputFormat::Json;
  throw std::invalid_argument("unknown output format '" + name + "' (expected tsv or json)");
}

std::string extension(OutputFormat format) { return format == OutputFormat::Tsv ? ".tsv" : ".json"; }

std::string fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  std::string s(buf);
  if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') s.erase(0, 1);
  return s;
}

void write_counts_tsv(std::ostream &os, const ConfusionMatrix &m, bool with_tail) {
  write_header(os, m, with_tail, "MCOP#");
  for (const auto &r : m.row_labels()) {
    os << r;
    for (const auto &c : m.col_labels()) os << '\t' << m.count(r, c);
    if (with_tail) {
      const auto top = m.mcop(r);
      os << '\t' << m.collapsed(r) << '\t' << m.other_total(r) << '\t' << (top ? top->second : 0) << '\t'
         << (top ? top->first : "");
    }
    os << '\n';
  }
}

void write_percent_tsv(std::ostream &os, const ConfusionMatrix &m, bool with_tail) {
  const auto table = percentages(m);
  write_header(os, m, with_tail, "MCOP%");
  for (const auto &row : table.rows) {
    os << row.label;
    for (const auto v : row.cells) os << '\t' << fixed(v, 2);
    if (with_tail) {
      os << '\t' << fixed(row.collapsed, 2) << '\t' << fixed(row.other, 2) << '\t' << fixed(row.mcop, 2) << '\t'
         << row.mcop_path;
    }
    os << '\n';
  }
  for (const auto &label : table.omitted) os << "# omitted (no observations): " << label << '\n';
}

json counts_json(const ConfusionMatrix &m) {
  json rows = json::array();
  for (const auto &r : m.row_labels()) {
    json cells = json::object();
    for (const auto &c : m.col_labels()) cells[c] = m.count(r, c);
    json other = json::object();
    for (const auto &[path, n] : m.other(r)) other[path] = n;
    json row = {{"label", r},
                {"cells", cells},
                {"collapsed", m.collapsed(r)},
                {"unaligned", m.unaligned(r)},
                {"other", other},
                {"total", m.row_total(r)}};
    if (const auto top = m.mcop(r)) row["mcop"] = {{"path", top->first}, {"count", top->second}};
    rows.push_back(std::move(row));
  }
  return {{"columns", m.col_labels()}, {"rows", rows}};
}

json percent_json(const ConfusionMatrix &m) {
  const auto table = percentages(m);
  json rows = json::array();
  for (const auto &row : table.rows) {
    json cells = json::object();
    for (std::size_t i = 0; i < table.columns.size(); ++i) cells[table.columns[i]] = row.cells[i];
    rows.push_back({{"label", row.label},
                    {"cells", cells},
                    {"collapsed", row.collapsed},
                    {"other", row.other},
                    {"mcop_percent", row.mcop},
                    {"mcop", row.mcop_path},
                    {"total", row.total}});
  }
  return {{"columns", table.columns}, {"rows", rows}, {"omitted", table.omitted}};
}

void write_edge_side_tsv(std::ostream &os, const ConfusionMatrix &m) {
  os << "source\tUnaligned\tRowTotal\tOther%\tOther+Collapsed%\n";
  for (const auto &r : m.row_labels()) {
    const auto total = m.row_total(r);
    os << r << '\t' << m.unaligned(r) << '\t' << total;
    if (total > 0) {
      const auto pct = [&](std::int64_t n) { return 100.0 * static_cast<double>(n) / static_cast<double>(total); };
      os << '\t' << fixed(pct(m.other_total(r)), 2) << '\t' << fixed(pct(m.other_total(r) + m.collapsed(r)), 2);
    } else {
      os << "\t\t";
    }
    os << '\n';
  }
}

json edge_side_json(const ConfusionMatrix &m) {
  json rows = json::array();
  for (const auto &r : m.row_labels()) {
    const auto total = m.row_total(r);
    json row = {{"label", r}, {"unaligned", m.unaligned(r)}, {"total", total}};
    if (total > 0) {
      const auto t = static_cast<double>(total);
      row["other_percent"] = 100.0 * static_cast<double>(m.other_total(r)) / t;
      row["other_with_collapsed_percent"] = 100.0 * static_cast<double>(m.other_total(r) + m.collapsed(r)) / t;
    }
    rows.push_back(std::move(row));
  }
  return {{"rows", rows}};
}

std::map<std::string, double> entropies(const ConfusionMatrix &m, const EntropyOptions &options) {
  std::map<std::string, double> out;
  for (const auto &r : m.row_labels()) {
    const auto observed = m.row_total(r) + (options.include_unaligned ? m.unaligned(r) : 0);
    if (r == kNone || observed == 0) continue;
    out[r] = translation_entropy(m, r, options);
  }
  return out;
}

void write_scalar_tsv(std::ostream &os, const std::string &header, const std::map<std::string, double> &values) {
  os << "label\t" << header << '\n';
  for (const auto &[label, v] : values) os << label << '\t' << fixed(v, 6) << '\n';
}

json scalar_json(const std::map<std::string, double> &values) {
  json out = json::object();
  for (const auto &[label, v] : values) out[label] = v;
  return out;
}

void write_dorr_tsv(std::ostream &os, const DorrReport &report) {
  os << "divergence\tcount\n";
  for (const auto t : all_dorr_types()) os << to_string(t) << '\t' << report.count(t) << '\n';
  os << "#Sentences\t" << report.sentences << '\n';
}

json dorr_json(const DorrReport &report) {
  json counts = json::object();
  for (const auto t : all_dorr_types()) counts[std::string(to_string(t))] = report.count(t);
  return {{"counts", counts}, {"sentences", report.sentences}};
}

json dorr_hits_json(const DorrReport &report) {
  json hits = json::array();
  for (const auto &h : report.per_sentence_hits) {
    hits.push_back({{"sentence", h.sentence},
                    {"type", std::string(to_string(h.type))},
                    {"source", {h.src_endpoints.first, h.src_endpoints.second}},
                    {"target", h.tgt_ids}});
  }
  return hits;
}

void write_alignment_summary_tsv(std::ostream &os, const AlignmentSummary &s) {
  os << "statistic\tvalue\n";
  os << "pairs\t" << s.pairs << '\n';
  os << "links\t" << s.links << '\n';
  os << "non_content_links\t" << s.non_content_links << '\n';
  for (const auto kind : {ComponentKind::OneToOne, ComponentKind::ManyToOne, ComponentKind::OneToMany,
                          ComponentKind::ManyToMany}) {
    const auto c = s.components.find(kind);
    const auto t = s.source_tokens.find(kind);
    os << "components:" << to_string(kind) << '\t' << (c == s.components.end() ? 0 : c->second) << '\n';
    os << "source_tokens:" << to_string(kind) << '\t' << (t == s.source_tokens.end() ? 0 : t->second) << '\n';
  }
  os << "one_to_one_share\t" << fixed(s.one_to_one_share(), 6) << '\n';
  os << "depth_ties\t" << s.depth_ties << '\n';
  os << "many_to_many\t" << s.many_to_many << '\n';
  os << "target_no_path\t" << s.target_no_path << '\n';
}

json alignment_summary_json(const AlignmentSummary &s) {
  json components = json::object();
  json tokens = json::object();
  for (const auto &[kind, n] : s.components) components[std::string(to_string(kind))] = n;
  for (const auto &[kind, n] : s.source_tokens) tokens[std::string(to_string(kind))] = n;
  return {{"pairs", s.pairs},
          {"links", s.links},
          {"non_content_links", s.non_content_links},
          {"components", components},
          {"source_tokens", tokens},
          {"one_to_one_share", s.one_to_one_share()},
          {"depth_ties", s.depth_ties},
          {"many_to_many", s.many_to_many},
          {"target_no_path", s.target_no_path}};
}

json alignment_score_json(const AlignmentScore &score) {
  json per_label = json::object();
  for (const auto &[label, r] : score.per_label_recall) {
    per_label[label] = {{"recall", r}, {"gold", score.per_label_gold.at(label)}};
  }
  return {{"precision", optional_number(score.precision)},
          {"recall", optional_number(score.recall)},
          {"gold", score.gold},
          {"predicted", score.predicted},
          {"correct", score.correct},
          {"per_label", per_label}};
}

void write_alignment_score_tsv(std::ostream &os, const AlignmentScore &score) {
  const auto show = [](const std::optional<double> &v) { return v ? fixed(*v, 4) : std::string("undefined"); };
  os << "precision\t" << show(score.precision) << '\n';
  os << "recall\t" << show(score.recall) << '\n';
  os << "gold\t" << score.gold << '\n';
  os << "predicted\t" << score.predicted << '\n';
  os << "correct\t" << score.correct << '\n';
  if (!score.per_label_recall.empty()) {
    os << "\nlabel\trecall\tgold\n";
    for (const auto &[label, r] : score.per_label_recall) {
      os << label << '\t' << fixed(r, 4) << '\t' << score.per_label_gold.at(label) << '\n';
    }
  }
}

json correlation_json(const CorrelationResult &result) {
  return {{"rho", optional_number(result.rho)}, {"n", result.n}, {"labels", result.labels}};
}

}  // namespace clmd
