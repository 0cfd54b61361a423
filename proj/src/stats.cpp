#include "clmd/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "clmd/conllu.hpp"

namespace clmd {

std::vector<double> average_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

  std::vector<double> ranks(values.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i + 1;
    while (j < order.size() && values[order[j]] == values[order[i]]) ++j;
    // positions i..j-1 share rank mean((i+1)..j)
    const double rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = rank;
    i = j;
  }
  return ranks;
}

std::optional<double> spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("spearman: length mismatch");
  if (x.size() < 2) throw std::invalid_argument("spearman: need at least two observations");
  for (const auto v : x) {
    if (!std::isfinite(v)) throw std::invalid_argument("spearman: non-finite value");
  }
  for (const auto v : y) {
    if (!std::isfinite(v)) throw std::invalid_argument("spearman: non-finite value");
  }

  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return std::nullopt;
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

CorrelationResult correlate_preservation(const std::map<std::string, double> &preservation,
                                         const LabeledScores &scores) {
  CorrelationResult result;
  std::vector<double> x;
  std::vector<double> y;
  for (const auto &[label, p] : preservation) {
    const auto it = scores.find(label);
    if (it == scores.end()) continue;
    result.labels.push_back(label);
    x.push_back(p);
    y.push_back(it->second);
  }
  result.n = result.labels.size();
  if (result.n < 2) {
    throw std::invalid_argument("need at least two shared labels to correlate, found " + std::to_string(result.n));
  }
  result.rho = spearman(x, y);
  return result;
}

LabeledScores parse_scores_tsv(std::string_view text) {
  LabeledScores scores;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    auto line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) throw ParseError(lineno, "expected two tab-separated columns");
    const std::string label(line.substr(0, tab));
    const std::string value(line.substr(tab + 1));
    char *end = nullptr;
    const double score = std::strtod(value.c_str(), &end);
    if (value.empty() || end != value.c_str() + value.size()) {
      if (scores.empty() && lineno == 1) continue;  // header
      throw ParseError(lineno, "non-numeric score '" + value + "'");
    }
    if (!std::isfinite(score)) throw ParseError(lineno, "non-finite score");
    scores[label] = score;
  }
  return scores;
}

}  // namespace clmd
