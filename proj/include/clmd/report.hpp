#pragma once

#include <map>
#include <ostream>
#include <string>

#include <json.hpp>

#include "clmd/alignment.hpp"
#include "clmd/analysis.hpp"
#include "clmd/confusion.hpp"
#include "clmd/dorr.hpp"
#include "clmd/stats.hpp"

namespace clmd {

enum class OutputFormat { Tsv, Json };

OutputFormat parse_output_format(const std::string &name);
std::string extension(OutputFormat format);

// Formats a double with a fixed number of decimals.
std::string fixed(double value, int decimals);

// Matrix tables. Edge-style tables (`with_tail`) append Collapsed, Other and
// MCOP columns after the label columns.
void write_counts_tsv(std::ostream &os, const ConfusionMatrix &m, bool with_tail);
void write_percent_tsv(std::ostream &os, const ConfusionMatrix &m, bool with_tail);
nlohmann::json counts_json(const ConfusionMatrix &m);
nlohmann::json percent_json(const ConfusionMatrix &m);

// Unaligned tallies plus both "Other" conventions (with and without Collapsed).
void write_edge_side_tsv(std::ostream &os, const ConfusionMatrix &m);
nlohmann::json edge_side_json(const ConfusionMatrix &m);

std::map<std::string, double> entropies(const ConfusionMatrix &m, const EntropyOptions &options = {});
void write_scalar_tsv(std::ostream &os, const std::string &header, const std::map<std::string, double> &values);
nlohmann::json scalar_json(const std::map<std::string, double> &values);

void write_dorr_tsv(std::ostream &os, const DorrReport &report);
nlohmann::json dorr_json(const DorrReport &report);
nlohmann::json dorr_hits_json(const DorrReport &report);

void write_alignment_summary_tsv(std::ostream &os, const AlignmentSummary &summary);
nlohmann::json alignment_summary_json(const AlignmentSummary &summary);

nlohmann::json alignment_score_json(const AlignmentScore &score);
void write_alignment_score_tsv(std::ostream &os, const AlignmentScore &score);

nlohmann::json correlation_json(const CorrelationResult &result);

}  // namespace clmd
