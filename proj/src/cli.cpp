#include "clmd/cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "clmd/analysis.hpp"
#include "clmd/path.hpp"

namespace clmd::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Inputs {
  std::optional<Corpus> corpus;
  bool fatal = false;
};

bool require(const std::string &value, const char *flag, std::ostream &err) {
  if (!value.empty()) return true;
  err << "error: " << flag << " is required\n";
  return false;
}

std::optional<std::string> read_input(const std::string &path, std::ostream &err) {
  try {
    return read_file(path);
  } catch (const std::exception &) {
    err << "fatal: cannot read " << path << '\n';
    return std::nullopt;
  }
}

std::optional<std::vector<Sentence>> parse_treebank(const std::string &path, const std::string &text,
                                                    const ParseOptions &options, std::ostream &err) {
  try {
    return parse_conllu(text, options);
  } catch (const ParseError &e) {
    err << "fatal: " << path << ':' << e.line() << ": " << e.what() << '\n';
  } catch (const TreeError &e) {
    err << "fatal: " << path << ": " << e.what() << '\n';
  }
  return std::nullopt;
}

void print_issue(std::ostream &os, const CorpusIssue &issue) {
  os << (issue.fatal ? "fatal" : "warning") << ": pair " << issue.pair_index + 1;
  if (issue.line > 0) os << " (alignment line " << issue.line << ')';
  os << ": " << to_string(issue.kind) << ": " << issue.message << '\n';
}

// Reads and assembles the corpus. Parse problems are printed and reported
// as fatal; corpus issues stay attached to the returned corpus.
Inputs load_inputs(const RunConfig &config, std::ostream &err) {
  Inputs in;
  const auto src_text = read_input(config.src_path, err);
  const auto tgt_text = read_input(config.tgt_path, err);
  const auto align_text = read_input(config.align_path, err);
  if (!src_text || !tgt_text || !align_text) {
    in.fatal = true;
    return in;
  }
  ParseOptions parse;
  parse.strip_subtypes = !config.keep_subtypes;
  auto src = parse_treebank(config.src_path, *src_text, parse, err);
  auto tgt = parse_treebank(config.tgt_path, *tgt_text, parse, err);
  if (!src || !tgt) {
    in.fatal = true;
    return in;
  }
  try {
    CorpusOptions options;
    options.pair_by = config.pair_by;
    options.index_base = config.index_base;
    options.strip_subtypes = !config.keep_subtypes;
    in.corpus = assemble_corpus(std::move(*src), std::move(*tgt), *align_text, options);
  } catch (const ParseError &e) {
    err << "fatal: " << config.align_path << ':' << e.line() << ": " << e.what() << '\n';
    in.fatal = true;
  }
  return in;
}

// Loads a corpus for analysis commands; returns nullopt after printing the
// reason when it is unusable.
std::optional<Corpus> load_for_analysis(const RunConfig &config, std::ostream &err, int &exit_code) {
  if (!require(config.src_path, "--src", err) || !require(config.tgt_path, "--tgt", err) ||
      !require(config.align_path, "--align", err)) {
    exit_code = kUsageError;
    return std::nullopt;
  }
  auto in = load_inputs(config, err);
  if (in.fatal || !in.corpus) {
    exit_code = kDataError;
    return std::nullopt;
  }
  if (in.corpus->has_fatal()) {
    for (const auto &issue : in.corpus->issues) {
      if (issue.fatal) print_issue(err, issue);
    }
    exit_code = kDataError;
    return std::nullopt;
  }
  exit_code = kSuccess;
  return std::move(in.corpus);
}

EdgeOptions edge_options(const RunConfig &config) {
  EdgeOptions e;
  e.row_labels = config.rows;
  e.column_labels = config.cols;
  e.strip_subtypes = !config.keep_subtypes;
  e.with_direction = config.with_direction;
  return e;
}

AnalysisOptions analysis_options(const RunConfig &config) {
  AnalysisOptions a;
  a.policy = make_policy(config);
  a.edges = edge_options(config);
  a.threads = config.threads;
  return a;
}

using TsvWriter = std::function<void(std::ostream &)>;
using JsonMaker = std::function<json()>;

void render(std::ostream &os, OutputFormat format, const TsvWriter &tsv, const JsonMaker &js) {
  if (format == OutputFormat::Tsv) {
    tsv(os);
  } else {
    os << js().dump(2) << '\n';
  }
}

bool write_file(const fs::path &path, const std::string &content, std::ostream &err) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  f << content;
  f.close();
  if (!f) {
    err << "fatal: cannot write " << path.string() << '\n';
    return false;
  }
  return true;
}

// Writes to `out` when no output directory is configured, else to
// <out_dir>/<stem><ext>.
bool emit(const RunConfig &config, const std::string &stem, const TsvWriter &tsv, const JsonMaker &js,
          std::ostream &out, std::ostream &err) {
  if (config.out_dir.empty()) {
    render(out, config.format, tsv, js);
    return true;
  }
  std::error_code ec;
  fs::create_directories(config.out_dir, ec);
  std::ostringstream os;
  render(os, config.format, tsv, js);
  return write_file(fs::path(config.out_dir) / (stem + extension(config.format)), os.str(), err);
}

}  // namespace

ContentPolicy make_policy(const RunConfig &config) {
  ContentPolicy p;
  switch (config.policy) {
    case ContentMode::DeprelList: p = ContentPolicy::deprel_list(); break;
    case ContentMode::UposList: p = ContentPolicy::upos_list(); break;
    case ContentMode::Hybrid: p = ContentPolicy::hybrid(); break;
  }
  if (!config.spatial_lemmas.empty()) {
    p.spatial_lemmas = LabelSet(config.spatial_lemmas.begin(), config.spatial_lemmas.end());
    p.spatial_adp_as_content = true;
  }
  return p;
}

int cmd_validate(const RunConfig &config, std::ostream &out, std::ostream &err) {
  if (!require(config.src_path, "--src", err) || !require(config.tgt_path, "--tgt", err) ||
      !require(config.align_path, "--align", err)) {
    return kUsageError;
  }
  const auto in = load_inputs(config, err);
  if (in.fatal || !in.corpus) {
    out << "0 pairs, fatal input error\n";
    return kDataError;
  }
  for (const auto &issue : in.corpus->issues) print_issue(out, issue);
  out << in.corpus->pairs.size() << " pairs, " << in.corpus->issues.size() << " issues\n";
  return in.corpus->has_fatal() ? kDataError : kSuccess;
}

int cmd_analyze(const RunConfig &config, std::ostream &out, std::ostream &err) {
  if (!require(config.out_dir, "--out", err)) return kUsageError;
  int code = kSuccess;
  const auto corpus = load_for_analysis(config, err, code);
  if (!corpus) return code;

  Analysis result;
  try {
    result = analyze(corpus->pairs, analysis_options(config));
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  const auto pres = preservation(result.edges);
  const auto ent = entropies(result.edges);

  struct Output {
    std::string stem;
    TsvWriter tsv;
    JsonMaker js;
  };
  const std::vector<Output> outputs{
      {"pos_counts", [&](std::ostream &os) { write_counts_tsv(os, result.pos, false); },
       [&] { return counts_json(result.pos); }},
      {"pos_percent", [&](std::ostream &os) { write_percent_tsv(os, result.pos, false); },
       [&] { return percent_json(result.pos); }},
      {"edge_counts", [&](std::ostream &os) { write_counts_tsv(os, result.edges, true); },
       [&] { return counts_json(result.edges); }},
      {"edge_percent", [&](std::ostream &os) { write_percent_tsv(os, result.edges, true); },
       [&] { return percent_json(result.edges); }},
      {"edge_unaligned", [&](std::ostream &os) { write_edge_side_tsv(os, result.edges); },
       [&] { return edge_side_json(result.edges); }},
      {"entropy", [&](std::ostream &os) { write_scalar_tsv(os, "entropy", ent); }, [&] { return scalar_json(ent); }},
      {"preservation", [&](std::ostream &os) { write_scalar_tsv(os, "preservation", pres); },
       [&] { return scalar_json(pres); }},
      {"dorr", [&](std::ostream &os) { write_dorr_tsv(os, result.dorr); }, [&] { return dorr_json(result.dorr); }},
      {"alignment_summary", [&](std::ostream &os) { write_alignment_summary_tsv(os, result.alignment); },
       [&] { return alignment_summary_json(result.alignment); }},
  };
  for (const auto &o : outputs) {
    if (!emit(config, o.stem, o.tsv, o.js, out, err)) return kDataError;
  }
  if (!write_file(fs::path(config.out_dir) / "dorr_hits.json", dorr_hits_json(result.dorr).dump(2) + "\n", err)) {
    return kDataError;
  }

  out << corpus->pairs.size() << " pairs analyzed, " << outputs.size() + 1 << " files written to " << config.out_dir
      << '\n';
  out << "one-to-one share of aligned source tokens: " << fixed(result.alignment.one_to_one_share(), 3) << '\n';
  for (const auto &row : result.edges.row_labels()) {
    const auto total = result.edges.row_total(row);
    if (total == 0) continue;
    out << "  " << row << ": n=" << total;
    if (const auto it = pres.find(row); it != pres.end()) out << " preserved=" << fixed(it->second, 2);
    if (const auto top = result.edges.mcop(row)) out << " mcop=" << display_path(top->first);
    out << '\n';
  }
  return kSuccess;
}

int cmd_pos_matrix(const RunConfig &config, std::ostream &out, std::ostream &err) {
  int code = kSuccess;
  const auto corpus = load_for_analysis(config, err, code);
  if (!corpus) return code;
  const auto m = pos_confusion(corpus->pairs, make_policy(config));
  const auto ok = config.percent
                      ? emit(config, "pos_percent", [&](std::ostream &os) { write_percent_tsv(os, m, false); },
                             [&] { return percent_json(m); }, out, err)
                      : emit(config, "pos_counts", [&](std::ostream &os) { write_counts_tsv(os, m, false); },
                             [&] { return counts_json(m); }, out, err);
  return ok ? kSuccess : kDataError;
}

int cmd_path_matrix(const RunConfig &config, std::ostream &out, std::ostream &err) {
  int code = kSuccess;
  const auto corpus = load_for_analysis(config, err, code);
  if (!corpus) return code;
  const auto m = edge_confusion(corpus->pairs, make_policy(config), edge_options(config));
  const auto ok = config.percent
                      ? emit(config, "edge_percent", [&](std::ostream &os) { write_percent_tsv(os, m, true); },
                             [&] { return percent_json(m); }, out, err)
                      : emit(config, "edge_counts", [&](std::ostream &os) { write_counts_tsv(os, m, true); },
                             [&] { return counts_json(m); }, out, err);
  return ok ? kSuccess : kDataError;
}

int cmd_entropy(const RunConfig &config, std::ostream &out, std::ostream &err) {
  int code = kSuccess;
  const auto corpus = load_for_analysis(config, err, code);
  if (!corpus) return code;
  const auto ent = entropies(edge_confusion(corpus->pairs, make_policy(config), edge_options(config)));
  return emit(config, "entropy", [&](std::ostream &os) { write_scalar_tsv(os, "entropy", ent); },
              [&] { return scalar_json(ent); }, out, err)
             ? kSuccess
             : kDataError;
}

int cmd_preservation(const RunConfig &config, std::ostream &out, std::ostream &err) {
  int code = kSuccess;
  const auto corpus = load_for_analysis(config, err, code);
  if (!corpus) return code;
  const auto pres = preservation(edge_confusion(corpus->pairs, make_policy(config), edge_options(config)));
  return emit(config, "preservation", [&](std::ostream &os) { write_scalar_tsv(os, "preservation", pres); },
              [&] { return scalar_json(pres); }, out, err)
             ? kSuccess
             : kDataError;
}

int cmd_dorr(const RunConfig &config, std::ostream &out, std::ostream &err) {
  int code = kSuccess;
  const auto corpus = load_for_analysis(config, err, code);
  if (!corpus) return code;
  const auto report = dorr_corpus(corpus->pairs, make_policy(config), {CorrespondenceScope::OneToOneOnly,
                                                                       config.with_direction});
  if (!emit(config, "dorr", [&](std::ostream &os) { write_dorr_tsv(os, report); },
            [&] { return dorr_json(report); }, out, err)) {
    return kDataError;
  }
  if (!config.out_dir.empty() &&
      !write_file(fs::path(config.out_dir) / "dorr_hits.json", dorr_hits_json(report).dump(2) + "\n", err)) {
    return kDataError;
  }
  return kSuccess;
}

int cmd_align_eval(const RunConfig &config, std::ostream &out, std::ostream &err) {
  if (!require(config.align_path, "--align", err) || !require(config.pred_path, "--pred", err)) return kUsageError;
  const auto gold_text = read_input(config.align_path, err);
  const auto pred_text = read_input(config.pred_path, err);
  if (!gold_text || !pred_text) return kDataError;

  std::vector<AlignmentGraph> gold;
  std::vector<AlignmentGraph> pred;
  const AlignmentParseOptions parse{config.index_base};
  try {
    gold = parse_alignment(*gold_text, parse);
  } catch (const ParseError &e) {
    err << "fatal: " << config.align_path << ':' << e.line() << ": " << e.what() << '\n';
    return kDataError;
  }
  try {
    pred = parse_alignment(*pred_text, parse);
  } catch (const ParseError &e) {
    err << "fatal: " << config.pred_path << ':' << e.line() << ": " << e.what() << '\n';
    return kDataError;
  }
  if (gold.size() != pred.size()) {
    err << "fatal: gold has " << gold.size() << " sentence pairs, prediction has " << pred.size() << '\n';
    return kDataError;
  }

  std::vector<DepTree> trees;
  AlignmentScoreOptions options;
  if (!config.src_path.empty()) {
    const auto src_text = read_input(config.src_path, err);
    if (!src_text) return kDataError;
    ParseOptions p;
    p.strip_subtypes = true;
    const auto src = parse_treebank(config.src_path, *src_text, p, err);
    if (!src) return kDataError;
    if (src->size() != gold.size()) {
      err << "fatal: source has " << src->size() << " sentences, alignment has " << gold.size() << " lines\n";
      return kDataError;
    }
    for (const auto &s : *src) trees.emplace_back(s);
    options.source_trees = trees;
    if (config.eval_labels.empty()) {
      options.labels = LabelSet(aligner_eval_relations().begin(), aligner_eval_relations().end());
    } else if (!(config.eval_labels.size() == 1 && config.eval_labels.front() == "all")) {
      options.labels = LabelSet(config.eval_labels.begin(), config.eval_labels.end());
    }
  } else if (!config.eval_labels.empty()) {
    err << "error: --labels requires --src\n";
    return kUsageError;
  }

  const auto score = alignment_pr(gold, pred, options);
  return emit(config, "align_eval", [&](std::ostream &os) { write_alignment_score_tsv(os, score); },
              [&] { return alignment_score_json(score); }, out, err)
             ? kSuccess
             : kDataError;
}

int cmd_correlate(const RunConfig &config, std::ostream &out, std::ostream &err) {
  if (!require(config.scores_path, "--scores", err)) return kUsageError;
  const auto scores_text = read_input(config.scores_path, err);
  if (!scores_text) return kDataError;

  std::map<std::string, double> pres;
  try {
    const auto scores = parse_scores_tsv(*scores_text);
    if (!config.preservation_path.empty()) {
      const auto text = read_input(config.preservation_path, err);
      if (!text) return kDataError;
      pres = parse_scores_tsv(*text);
    } else {
      int code = kSuccess;
      const auto corpus = load_for_analysis(config, err, code);
      if (!corpus) return code;
      pres = preservation(edge_confusion(corpus->pairs, make_policy(config), edge_options(config)));
    }
    const auto result = correlate_preservation(pres, scores);
    const auto text = correlation_json(result).dump(2) + "\n";
    if (config.out_dir.empty()) {
      out << text;
    } else {
      std::error_code ec;
      fs::create_directories(config.out_dir, ec);
      if (!write_file(fs::path(config.out_dir) / "correlation.json", text, err)) return kDataError;
    }
  } catch (const ParseError &e) {
    err << "fatal: " << e.what() << '\n';
    return kDataError;
  } catch (const std::invalid_argument &e) {
    err << "fatal: " << e.what() << '\n';
    return kDataError;
  }
  return kSuccess;
}

}  // namespace clmd::cli
