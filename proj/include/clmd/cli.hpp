#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "clmd/content.hpp"
#include "clmd/corpus.hpp"
#include "clmd/report.hpp"

namespace clmd::cli {

enum ExitCode : int { kSuccess = 0, kUsageError = 1, kDataError = 2 };

struct RunConfig {
  std::string src_path;
  std::string tgt_path;
  std::string align_path;
  std::string pred_path;
  std::string scores_path;
  std::string preservation_path;
  PairBy pair_by = PairBy::Position;
  int index_base = 1;
  ContentMode policy = ContentMode::DeprelList;
  std::vector<std::string> spatial_lemmas;  // empty: keep the policy default
  bool keep_subtypes = false;
  bool with_direction = false;
  bool percent = false;                 // pos-matrix / path-matrix: emit percentages
  std::vector<std::string> rows = matrix_relations();
  std::vector<std::string> cols = matrix_relations();
  std::vector<std::string> eval_labels;  // align-eval restriction; empty means default
  OutputFormat format = OutputFormat::Tsv;
  std::string out_dir;
  unsigned threads = 1;
};

ContentPolicy make_policy(const RunConfig &config);

int cmd_validate(const RunConfig &config, std::ostream &out, std::ostream &err);
int cmd_analyze(const RunConfig &config, std::ostream &out, std::ostream &err);
int cmd_pos_matrix(const RunConfig &config, std::ostream &out, std::ostream &err);
int cmd_path_matrix(const RunConfig &config, std::ostream &out, std::ostream &err);
int cmd_entropy(const RunConfig &config, std::ostream &out, std::ostream &err);
int cmd_preservation(const RunConfig &config, std::ostream &out, std::ostream &err);
int cmd_dorr(const RunConfig &config, std::ostream &out, std::ostream &err);
int cmd_align_eval(const RunConfig &config, std::ostream &out, std::ostream &err);
int cmd_correlate(const RunConfig &config, std::ostream &out, std::ostream &err);

}  // namespace clmd::cli
