// clmd: cross-linguistic morphosyntactic divergence extraction.

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "clmd/analysis.hpp"
#include "clmd/cli.hpp"

int main(int argc, char **argv) {
  using namespace clmd;
  CLI::App app{"Extract cross-linguistic morphosyntactic divergences from aligned UD treebanks"};
  app.set_config("--config", "", "Flat key=value file; command-line flags take precedence");
  app.require_subcommand(1);

  cli::RunConfig config;
  std::string pair_by = "position";
  std::string policy = "deprel";
  std::string format = "tsv";

  app.add_option("--src", config.src_path, "Source-side CoNLL-U file");
  app.add_option("--tgt", config.tgt_path, "Target-side CoNLL-U file");
  app.add_option("--align", config.align_path, "Alignment file (Pharaoh i-j pairs, one line per pair)");
  app.add_option("--pred", config.pred_path, "Predicted alignment file for align-eval");
  app.add_option("--scores", config.scores_path, "Per-label scores TSV for correlate");
  app.add_option("--preservation", config.preservation_path, "Preservation TSV for correlate");
  app.add_option("--pair-by", pair_by, "Sentence pairing")->check(CLI::IsMember({"position", "sent_id"}));
  app.add_option("--index-base", config.index_base, "Alignment index base")->check(CLI::IsMember({0, 1}));
  app.add_option("--policy", policy, "Content-word policy")->check(CLI::IsMember({"deprel", "upos", "hybrid"}));
  app.add_option("--spatial-lemmas", config.spatial_lemmas, "Adposition lemmas treated as content words")
      ->delimiter(',');
  app.add_flag("--keep-subtypes", config.keep_subtypes, "Keep relation subtypes such as acl:relcl");
  app.add_flag("--direction", config.with_direction, "Annotate path edges with their direction");
  app.add_flag("--percent", config.percent, "pos-matrix/path-matrix: print row percentages");
  app.add_option("--rows", config.rows, "Comma-separated row relations")->delimiter(',');
  app.add_option("--cols", config.cols, "Comma-separated column relations")->delimiter(',');
  app.add_option("--labels", config.eval_labels, "align-eval source relations ('all' for no restriction)")
      ->delimiter(',');
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"tsv", "json"}));
  app.add_option("--out", config.out_dir, "Output directory");

  using Command = int (*)(const cli::RunConfig &, std::ostream &, std::ostream &);
  const std::map<std::string, std::pair<std::string, Command>> commands{
      {"validate", {"Check inputs and report pairing and alignment problems", cli::cmd_validate}},
      {"analyze", {"Write every report to --out", cli::cmd_analyze}},
      {"pos-matrix", {"POS confusion matrix", cli::cmd_pos_matrix}},
      {"path-matrix", {"Single-edge relation confusion matrix", cli::cmd_path_matrix}},
      {"entropy", {"Translation entropy per relation", cli::cmd_entropy}},
      {"preservation", {"Preservation index per relation", cli::cmd_preservation}},
      {"dorr", {"Dorr divergence counts", cli::cmd_dorr}},
      {"align-eval", {"Precision and recall of --pred against --align", cli::cmd_align_eval}},
      {"correlate", {"Spearman correlation of preservation with --scores", cli::cmd_correlate}},
  };
  for (const auto &[name, entry] : commands) app.add_subcommand(name, entry.first)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const auto code = app.exit(e);
    return code == 0 ? cli::kSuccess : cli::kUsageError;
  }

  config.pair_by = parse_pair_by(pair_by);
  config.policy = parse_content_mode(policy);
  config.format = parse_output_format(format);
  config.threads = worker_count_from_env();

  for (const auto *sub : app.get_subcommands()) {
    return commands.at(sub->get_name()).second(config, std::cout, std::cerr);
  }
  return cli::kUsageError;
}
