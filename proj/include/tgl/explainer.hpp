#pragma once

// Dataset-intrinsic limits on achievable accuracy.

#include <cstddef>
#include <optional>
#include <string>

#include "tgl/dataset.hpp"
#include "tgl/params.hpp"

namespace tgl {

enum class LimitKind { network, content };

/// Which records may serve as content witnesses.
enum class PeerSide { tr, trva };

struct LimitReport {
  std::size_t guessable = 0;
  std::size_t total = 0;
  double ratio = 0.0;
  LimitKind kind = LimitKind::network;
  std::optional<SimilarityMeasure> measure;
  double threshold = 0.0;
};

/// True iff some tr/va neighbor carries the node's own label.
bool network_guessable(const Dataset& d, const NodeRecord& node);

/// Throws EmptyTestSet.
LimitReport network_limits(const Dataset& d, int workers = 0);

struct CoverageOptions {
  /// Restricts the test side to the first `sample` test ids.
  std::optional<std::size_t> sample;
  PeerSide peer_side = PeerSide::trva;
  int workers = 0;
};

/// Fraction of test nodes with at least one witness scoring >= threshold.
/// Throws std::invalid_argument unless threshold > 0, EmptyTestSet when
/// nothing is left to test.
LimitReport content_coverage(const Dataset& d, SimilarityMeasure m, double threshold,
                             const Params& p, const CoverageOptions& options = {});

/// `network_only -> 0.8441 = 41028/48603`, or
/// `jaccard_node-0.01 -> 1.0000 = 48603/48603` for content reports.
std::string format_limit(const LimitReport& r);

namespace serial {
LimitReport network_limits(const Dataset& d);
LimitReport content_coverage(const Dataset& d, SimilarityMeasure m, double threshold,
                             const Params& p, const CoverageOptions& options = {});
}  // namespace serial

}  // namespace tgl
