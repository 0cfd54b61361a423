#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace clmd {

// Per-relation external scores, e.g. parser F-scores by dependency label.
using LabeledScores = std::map<std::string, double>;

// Fractional ranks (1-based); tied values share the mean of their positions.
std::vector<double> average_ranks(std::span<const double> values);

// Spearman's rho as the Pearson correlation of average ranks. Returns nullopt
// when either rank vector has zero variance. Throws std::invalid_argument on
// a length mismatch or fewer than two observations.
std::optional<double> spearman(std::span<const double> x, std::span<const double> y);

struct CorrelationResult {
  std::optional<double> rho;
  std::size_t n = 0;
  std::vector<std::string> labels;  // labels present on both sides, sorted
};

// Joins on shared labels and correlates. Throws if fewer than two labels are
// shared.
CorrelationResult correlate_preservation(const std::map<std::string, double> &preservation,
                                         const LabeledScores &scores);

// Two tab-separated columns: label, score. '#' lines and blank lines are
// skipped; a header line whose score column is not numeric is skipped too.
LabeledScores parse_scores_tsv(std::string_view text);

}  // namespace clmd
