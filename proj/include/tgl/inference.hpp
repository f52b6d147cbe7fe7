#pragma once

// Label inference for test nodes: weighted votes from training neighbors,
// else from content-similar peers spread evenly over the labels, else the
// majority class.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "tgl/dataset.hpp"
#include "tgl/pair_scorer.hpp"
#include "tgl/params.hpp"

namespace tgl {

class EmptyTrainingSet : public std::runtime_error {
 public:
  EmptyTrainingSet() : std::runtime_error("empty training set") {}
};

class EmptyEvidence : public std::invalid_argument {
 public:
  EmptyEvidence() : std::invalid_argument("cannot vote on empty evidence") {}
};

class EmptyTestSet : public std::runtime_error {
 public:
  EmptyTestSet() : std::runtime_error("empty test set") {}
};

struct WeightedLabel {
  Label label = 0;
  double weight = 0.0;

  friend bool operator==(const WeightedLabel&, const WeightedLabel&) = default;
};

using Evidence = std::vector<WeightedLabel>;

/// Per-label lists of extended-training node ids, ascending, each capped at
/// max_peer_nodes. Indexed by label.
struct PeerPool {
  std::vector<std::vector<NodeId>> by_label;

  std::size_t size() const;
  bool empty() const { return size() == 0; }
};

enum class Stage { neighbor, peer, fallback };
std::string_view stage_name(Stage s);

struct Decision {
  Stage stage = Stage::fallback;
  Evidence evidence;
  Label label = 0;
};

/// tr and va ids, ascending.
std::vector<NodeId> extended_training_ids(const Dataset& d);

/// Most frequent label over tr and va; ties go to the smallest label.
Label most_freq_class(const Dataset& d);

PeerPool select_diverse_peers(const Dataset& d, const Params& p);

/// Labels of the node's extended-training neighbors, weighted by content
/// similarity, capped at max_neighbor_nodes pairs. Zero weights are kept.
Evidence neighbor_evidence(const Dataset& d, const NodeRecord& node, const Params& p);

/// Pooled peers with strictly positive similarity to the node.
Evidence peer_evidence(const Dataset& d, const NodeRecord& node, const PeerPool& pool,
                       const Params& p);

/// Label with the largest summed weight; ties go to the greatest label.
Label vote_for_best_label(std::span<const WeightedLabel> evidence);

Decision decide_label(const Dataset& d, const NodeRecord& node, const PeerPool& pool,
                      const Params& p);
Label infer_label(const Dataset& d, const NodeRecord& node, const PeerPool& pool,
                  const Params& p);

/// Which cascade stages may decide. A node left undecided counts as wrong.
struct StageMask {
  bool neighbor = true;
  bool peer = true;
  bool fallback = true;
};

/// Inference bound to one dataset: precomputes the peer pool, the fallback
/// label and the pair-scoring features, then answers per-node queries.
/// Immutable after construction, so queries may run concurrently.
class LabelInference {
 public:
  LabelInference(const Dataset& d, const Params& p, StageMask stages = {});

  const Params& params() const noexcept { return params_; }
  const PeerPool& pool() const noexcept { return pool_; }

  Evidence neighbor_evidence(NodeIndex node) const;
  Evidence peer_evidence(NodeIndex node) const;
  /// Empty when every enabled stage came up empty.
  std::optional<Decision> decide(NodeIndex node) const;
  std::optional<Label> infer(NodeIndex node) const;

 private:
  const Dataset* dataset_;
  Params params_;
  StageMask stages_;
  PairScorer scorer_;
  PeerPool pool_;
  std::vector<NodeIndex> pool_indices_;
  std::optional<Label> fallback_;
};

struct EvalOptions {
  /// 0 selects the OpenMP default.
  int workers = 0;
  StageMask stages;
};

struct AccuracyReport {
  double accuracy = 0.0;
  std::size_t correct = 0;
  std::size_t total = 0;
  double elapsed_seconds = 0.0;
};

/// Parallel over test nodes; results do not depend on the worker count.
AccuracyReport evaluate_accuracy(const Dataset& d, const Params& p, const EvalOptions& options = {});

namespace serial {
/// Single-threaded reference loop.
AccuracyReport evaluate_accuracy(const Dataset& d, const Params& p, const EvalOptions& options = {});
}  // namespace serial

}  // namespace tgl
