#include "tgl/explainer.hpp"

#include <cstdint>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <omp.h>

#include "tgl/inference.hpp"
#include "tgl/pair_scorer.hpp"

namespace tgl {

namespace {

bool guessable_at(const Dataset& d, NodeIndex i) {
  const Label y = d.record(i).label;
  for (NodeIndex j : d.neighbor_indices(i)) {
    if (d.in_extended_training(j) && d.record(j).label == y) return true;
  }
  return false;
}

LimitReport make_report(std::size_t guessable, std::size_t total) {
  LimitReport r;
  r.guessable = guessable;
  r.total = total;
  r.ratio = static_cast<double>(guessable) / static_cast<double>(total);
  return r;
}

std::span<const NodeIndex> coverage_tests(const Dataset& d, const CoverageOptions& o) {
  auto tests = d.split_indices(Split::te);
  if (o.sample && *o.sample < tests.size()) tests = tests.first(*o.sample);
  if (tests.empty()) throw EmptyTestSet();
  return tests;
}

std::vector<NodeIndex> witnesses(const Dataset& d, PeerSide side) {
  if (side == PeerSide::trva) {
    auto all = d.extended_training();
    return {all.begin(), all.end()};
  }
  auto tr = d.split_indices(Split::tr);
  return {tr.begin(), tr.end()};
}

bool has_witness(const PairScorer& scorer, NodeIndex i, std::span<const NodeIndex> peers,
                 double threshold) {
  for (NodeIndex j : peers) {
    if (scorer(i, j) >= threshold) return true;
  }
  return false;
}

void check_threshold(double threshold) {
  if (!(threshold > 0.0)) throw std::invalid_argument("threshold must be > 0");
}

LimitReport content_report(std::size_t hits, std::size_t total, SimilarityMeasure m,
                           double threshold) {
  LimitReport r = make_report(hits, total);
  r.kind = LimitKind::content;
  r.measure = m;
  r.threshold = threshold;
  return r;
}

}  // namespace

bool network_guessable(const Dataset& d, const NodeRecord& node) {
  for (NodeId id : node.neighbors) {
    auto j = d.find(id);
    if (j && d.in_extended_training(*j) && d.record(*j).label == node.label) return true;
  }
  return false;
}

LimitReport network_limits(const Dataset& d, int workers) {
  const auto tests = d.split_indices(Split::te);
  if (tests.empty()) throw EmptyTestSet();
  const auto n = static_cast<std::int64_t>(tests.size());
  std::int64_t hits = 0;
#pragma omp parallel for schedule(static) reduction(+ : hits) \
    num_threads(workers > 0 ? workers : omp_get_max_threads())
  for (std::int64_t k = 0; k < n; ++k) {
    if (guessable_at(d, tests[static_cast<std::size_t>(k)])) ++hits;
  }
  return make_report(static_cast<std::size_t>(hits), tests.size());
}

LimitReport content_coverage(const Dataset& d, SimilarityMeasure m, double threshold,
                             const Params& p, const CoverageOptions& options) {
  check_threshold(threshold);
  const auto tests = coverage_tests(d, options);
  Params q = p;
  q.similarity = m;
  const PairScorer scorer(d, q);
  const auto peers = witnesses(d, options.peer_side);
  const auto n = static_cast<std::int64_t>(tests.size());
  std::int64_t hits = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : hits) \
    num_threads(options.workers > 0 ? options.workers : omp_get_max_threads())
  for (std::int64_t k = 0; k < n; ++k) {
    if (has_witness(scorer, tests[static_cast<std::size_t>(k)], peers, threshold)) ++hits;
  }
  return content_report(static_cast<std::size_t>(hits), tests.size(), m, threshold);
}

std::string format_limit(const LimitReport& r) {
  char ratio[32];
  std::snprintf(ratio, sizeof ratio, "%.4f", r.ratio);
  std::ostringstream out;
  if (r.kind == LimitKind::network) {
    out << "network_only";
  } else {
    out << (r.measure ? measure_name(*r.measure) : "?") << '-' << r.threshold;
  }
  out << " -> " << ratio << " = " << r.guessable << '/' << r.total;
  return out.str();
}

namespace serial {

LimitReport network_limits(const Dataset& d) {
  const auto tests = d.split_indices(Split::te);
  if (tests.empty()) throw EmptyTestSet();
  std::size_t hits = 0;
  for (NodeIndex i : tests) {
    if (network_guessable(d, d.record(i))) ++hits;
  }
  return make_report(hits, tests.size());
}

LimitReport content_coverage(const Dataset& d, SimilarityMeasure m, double threshold,
                             const Params& p, const CoverageOptions& options) {
  check_threshold(threshold);
  const auto tests = coverage_tests(d, options);
  Params q = p;
  q.similarity = m;
  const PairScorer scorer(d, q);
  const auto peers = witnesses(d, options.peer_side);
  std::size_t hits = 0;
  for (NodeIndex i : tests) {
    if (has_witness(scorer, i, peers, threshold)) ++hits;
  }
  return content_report(hits, tests.size(), m, threshold);
}

}  // namespace serial

}  // namespace tgl
