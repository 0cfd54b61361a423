#include "clmd/analysis.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace clmd {

namespace {

Analysis empty_analysis(const AnalysisOptions &options) {
  Analysis a;
  a.edges = make_edge_matrix(options.edges);
  return a;
}

void analyze_pair(const SentencePair &pair, std::size_t index, const AnalysisOptions &options, Analysis &out) {
  const auto &policy = options.policy;
  accumulate_pos(pair, policy, out.pos);

  const CsrOptions csr_options{options.edges.scope, options.edges.with_direction};
  const auto csrs = extract_csr(pair, policy, csr_options);
  accumulate_edges(csrs, options.edges, out.edges);
  out.dorr.merge(detect_dorr(csrs, pair, index, policy, options.edges.with_direction));

  auto &s = out.alignment;
  ++s.pairs;
  s.links += static_cast<std::int64_t>(pair.align.size());
  s.non_content_links += static_cast<std::int64_t>(pair.align.size() - content_alignment(pair, policy).size());
  for (const auto &c : components(pair.align)) {
    ++s.components[c.kind];
    s.source_tokens[c.kind] += static_cast<std::int64_t>(c.src_ids.size());
    if (c.kind == ComponentKind::ManyToMany) ++s.many_to_many;
  }
  for (const auto &d : reduce(pair.align, pair.src, pair.tgt).dropped) {
    if (d.reason == DropReason::DepthTie) ++s.depth_ties;
  }
  for (const auto &c : csrs) {
    if (c.no_target_path) ++s.target_no_path;
  }
}

}  // namespace

double AlignmentSummary::one_to_one_share() const {
  std::int64_t total = 0;
  for (const auto &[kind, n] : source_tokens) total += n;
  if (total == 0) return 0.0;
  const auto it = source_tokens.find(ComponentKind::OneToOne);
  const auto one = it == source_tokens.end() ? 0 : it->second;
  return static_cast<double>(one) / static_cast<double>(total);
}

void AlignmentSummary::merge(const AlignmentSummary &other) {
  pairs += other.pairs;
  for (const auto &[k, n] : other.components) components[k] += n;
  for (const auto &[k, n] : other.source_tokens) source_tokens[k] += n;
  links += other.links;
  non_content_links += other.non_content_links;
  depth_ties += other.depth_ties;
  many_to_many += other.many_to_many;
  target_no_path += other.target_no_path;
}

Analysis analyze(std::span<const SentencePair> corpus, const AnalysisOptions &options) {
  options.policy.validate();
  const auto workers =
      static_cast<std::size_t>(std::clamp<std::size_t>(options.threads, 1, std::max<std::size_t>(corpus.size(), 1)));

  std::vector<Analysis> partial(workers, empty_analysis(options));
  std::vector<std::exception_ptr> errors(workers);
  const auto run_shard = [&](std::size_t w) {
    try {
      const auto begin = corpus.size() * w / workers;
      const auto end = corpus.size() * (w + 1) / workers;
      for (auto k = begin; k < end; ++k) analyze_pair(corpus[k], k, options, partial[w]);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };

  if (workers == 1) {
    run_shard(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run_shard, w);
  }
  for (const auto &e : errors) {
    if (e) std::rethrow_exception(e);
  }

  Analysis total = empty_analysis(options);
  for (const auto &p : partial) {
    total.pos.merge(p.pos);
    total.edges.merge(p.edges);
    total.dorr.merge(p.dorr);
    total.alignment.merge(p.alignment);
  }
  return total;
}

unsigned worker_count_from_env() {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char *env = std::getenv("CLMD_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n >= 1) return std::min(static_cast<unsigned>(n), hw);
  }
  return hw;
}

}  // namespace clmd
