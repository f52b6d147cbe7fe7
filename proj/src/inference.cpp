#include "tgl/inference.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>

#include <omp.h>

#include "tgl/similarity.hpp"

namespace tgl {

namespace {

template <class Score>
Evidence gather_neighbors(const Dataset& d, std::span<const NodeIndex> neighbors, const Params& p,
                          Score&& score_with) {
  Evidence out;
  const std::size_t cap = p.max_neighbor_nodes;
  switch (p.neighbor_kind) {
    case NeighborKind::none:
      return out;
    case NeighborKind::plain:
      for (NodeIndex j : neighbors) {
        if (out.size() == cap) break;
        if (!d.in_extended_training(j)) continue;
        out.push_back({d.record(j).label, score_with(j)});
      }
      return out;
    case NeighborKind::diverse:
      break;
  }
  std::map<Label, std::vector<NodeIndex>> buckets;
  for (NodeIndex j : neighbors) {
    if (d.in_extended_training(j)) buckets[d.record(j).label].push_back(j);
  }
  for (std::size_t round = 0; out.size() < cap; ++round) {
    bool any = false;
    for (const auto& [label, members] : buckets) {
      if (round >= members.size()) continue;
      any = true;
      out.push_back({label, score_with(members[round])});
      if (out.size() == cap) break;
    }
    if (!any) break;
  }
  return out;
}

template <class Score>
Evidence gather_peers(const Dataset& d, std::span<const NodeIndex> peers, Score&& score_with) {
  Evidence out;
  for (NodeIndex j : peers) {
    const double w = score_with(j);
    if (w > 0.0) out.push_back({d.record(j).label, w});
  }
  return out;
}

template <class NeighborFn, class PeerFn>
std::optional<Decision> cascade(const Params& p, StageMask stages, std::optional<Label> fallback,
                                NeighborFn&& neighbors, PeerFn&& peers) {
  if (stages.neighbor && p.neighbor_kind != NeighborKind::none) {
    Evidence ev = neighbors();
    if (!ev.empty()) {
      const Label l = vote_for_best_label(ev);
      return Decision{Stage::neighbor, std::move(ev), l};
    }
  }
  if (stages.peer) {
    Evidence ev = peers();
    if (!ev.empty()) {
      const Label l = vote_for_best_label(ev);
      return Decision{Stage::peer, std::move(ev), l};
    }
  }
  if (stages.fallback) {
    if (!fallback) throw EmptyTrainingSet();
    return Decision{Stage::fallback, Evidence{{*fallback, 1.0}}, *fallback};
  }
  return std::nullopt;
}

std::vector<NodeIndex> resolve_ids(const Dataset& d, std::span<const NodeId> ids) {
  std::vector<NodeIndex> out;
  out.reserve(ids.size());
  for (NodeId id : ids) {
    if (auto j = d.find(id)) out.push_back(*j);
  }
  return out;
}

std::vector<NodeIndex> pool_indices(const Dataset& d, const PeerPool& pool) {
  std::vector<NodeIndex> out;
  for (const auto& ids : pool.by_label) {
    auto part = resolve_ids(d, ids);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::optional<Label> try_most_freq_class(const Dataset& d) {
  if (d.extended_training().empty()) return std::nullopt;
  return most_freq_class(d);
}

int resolve_workers(int requested) { return requested > 0 ? requested : omp_get_max_threads(); }

}  // namespace

std::size_t PeerPool::size() const {
  std::size_t n = 0;
  for (const auto& v : by_label) n += v.size();
  return n;
}

std::string_view stage_name(Stage s) {
  switch (s) {
    case Stage::neighbor: return "neighbor";
    case Stage::peer: return "peer";
    case Stage::fallback: return "fallback";
  }
  return "?";
}

std::vector<NodeId> extended_training_ids(const Dataset& d) {
  std::vector<NodeId> out;
  out.reserve(d.extended_training().size());
  for (NodeIndex i : d.extended_training()) out.push_back(d.record(i).id);
  return out;
}

Label most_freq_class(const Dataset& d) {
  if (d.extended_training().empty()) throw EmptyTrainingSet();
  const auto hist = d.label_histogram();
  const auto best = std::max_element(hist.begin(), hist.end());
  return static_cast<Label>(best - hist.begin());
}

PeerPool select_diverse_peers(const Dataset& d, const Params& p) {
  PeerPool pool;
  pool.by_label.resize(static_cast<std::size_t>(d.num_labels()));
  for (NodeIndex i : d.extended_training()) {
    auto& bucket = pool.by_label[static_cast<std::size_t>(d.record(i).label)];
    if (bucket.size() < p.max_peer_nodes) bucket.push_back(d.record(i).id);
  }
  return pool;
}

Evidence neighbor_evidence(const Dataset& d, const NodeRecord& node, const Params& p) {
  const auto neighbors = resolve_ids(d, node.neighbors);
  return gather_neighbors(d, neighbors, p, [&](NodeIndex j) {
    return score(p.similarity, node.content, d.record(j).content, p);
  });
}

Evidence peer_evidence(const Dataset& d, const NodeRecord& node, const PeerPool& pool,
                       const Params& p) {
  return gather_peers(d, pool_indices(d, pool), [&](NodeIndex j) {
    return score(p.similarity, node.content, d.record(j).content, p);
  });
}

Label vote_for_best_label(std::span<const WeightedLabel> evidence) {
  if (evidence.empty()) throw EmptyEvidence();
  // Sorting fixes the summation order, so the totals do not depend on the
  // order the evidence arrived in.
  std::vector<WeightedLabel> sorted(evidence.begin(), evidence.end());
  std::sort(sorted.begin(), sorted.end(), [](const WeightedLabel& a, const WeightedLabel& b) {
    return a.label != b.label ? a.label < b.label : a.weight < b.weight;
  });
  Label best = sorted.front().label;
  double best_total = -1.0;
  for (std::size_t i = 0; i < sorted.size();) {
    const Label label = sorted[i].label;
    double total = 0.0;
    for (; i < sorted.size() && sorted[i].label == label; ++i) total += sorted[i].weight;
    if (total >= best_total) {
      best_total = total;
      best = label;
    }
  }
  return best;
}

Decision decide_label(const Dataset& d, const NodeRecord& node, const PeerPool& pool,
                      const Params& p) {
  auto decision = cascade(
      p, StageMask{}, try_most_freq_class(d), [&] { return neighbor_evidence(d, node, p); },
      [&] { return peer_evidence(d, node, pool, p); });
  return std::move(*decision);
}

Label infer_label(const Dataset& d, const NodeRecord& node, const PeerPool& pool,
                  const Params& p) {
  return decide_label(d, node, pool, p).label;
}

LabelInference::LabelInference(const Dataset& d, const Params& p, StageMask stages)
    : dataset_(&d),
      params_(p),
      stages_(stages),
      scorer_(d, p),
      pool_(select_diverse_peers(d, p)),
      pool_indices_(pool_indices(d, pool_)),
      fallback_(try_most_freq_class(d)) {
  params_.validate();
}

Evidence LabelInference::neighbor_evidence(NodeIndex node) const {
  return gather_neighbors(*dataset_, dataset_->neighbor_indices(node), params_,
                          [&](NodeIndex j) { return scorer_(node, j); });
}

Evidence LabelInference::peer_evidence(NodeIndex node) const {
  return gather_peers(*dataset_, pool_indices_, [&](NodeIndex j) { return scorer_(node, j); });
}

std::optional<Decision> LabelInference::decide(NodeIndex node) const {
  return cascade(
      params_, stages_, fallback_, [&] { return neighbor_evidence(node); },
      [&] { return peer_evidence(node); });
}

std::optional<Label> LabelInference::infer(NodeIndex node) const {
  auto decision = decide(node);
  if (!decision) return std::nullopt;
  return decision->label;
}

namespace {

AccuracyReport finish(std::size_t correct, std::size_t total,
                      std::chrono::steady_clock::time_point start) {
  AccuracyReport r;
  r.correct = correct;
  r.total = total;
  r.accuracy = static_cast<double>(correct) / static_cast<double>(total);
  r.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

AccuracyReport evaluate_accuracy(const Dataset& d, const Params& p, const EvalOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const auto tests = d.split_indices(Split::te);
  if (tests.empty()) throw EmptyTestSet();
  const LabelInference engine(d, p, options.stages);
  if (options.stages.fallback && d.extended_training().empty()) throw EmptyTrainingSet();

  const auto n = static_cast<std::int64_t>(tests.size());
  std::int64_t correct = 0;
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : correct) \
    num_threads(resolve_workers(options.workers))
  for (std::int64_t k = 0; k < n; ++k) {
    const NodeIndex i = tests[static_cast<std::size_t>(k)];
    const auto guess = engine.infer(i);
    if (guess && *guess == d.record(i).label) ++correct;
  }
  return finish(static_cast<std::size_t>(correct), tests.size(), start);
}

namespace serial {

AccuracyReport evaluate_accuracy(const Dataset& d, const Params& p, const EvalOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const auto tests = d.split_indices(Split::te);
  if (tests.empty()) throw EmptyTestSet();
  const LabelInference engine(d, p, options.stages);
  std::size_t correct = 0;
  for (NodeIndex i : tests) {
    const auto guess = engine.infer(i);
    if (guess && *guess == d.record(i).label) ++correct;
  }
  return finish(correct, tests.size(), start);
}

}  // namespace serial

}  // namespace tgl
