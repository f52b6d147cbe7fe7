#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tgl/dataset.hpp"
#include "tgl/params.hpp"

namespace tgl {

/// Scores pairs of dataset records under one measure. For the Jaccard
/// measures the symbol/edge sets of every record are interned once into
/// sorted id vectors; the other measures evaluate the terms directly.
/// Results are bit-identical to `score(measure, a.content, b.content, p)`.
class PairScorer {
 public:
  PairScorer(const Dataset& d, const Params& p);

  double operator()(NodeIndex a, NodeIndex b) const;

  SimilarityMeasure measure() const noexcept { return params_.similarity; }

 private:
  const Dataset* dataset_;
  Params params_;
  std::vector<std::vector<std::uint64_t>> features_;
};

}  // namespace tgl
