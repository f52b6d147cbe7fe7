#pragma once

// Deterministic synthetic citation datasets.
//
// The only randomness source is std::mt19937_64 seeded with `seed`; its raw
// 64-bit outputs are mapped to ranges without std::*_distribution so files
// are identical across standard libraries:
//   uniform index in [0, n):  (x * n) >> 64   (128-bit product)
//   uniform real in [0, 1):   (x >> 11) * 2^-53
// Draws happen node by node in id order: label, citations, content.

#include <cstdint>
#include <iosfwd>
#include <string>

#include "tgl/dataset.hpp"

namespace tgl {

struct SynthConfig {
  std::size_t nodes = 1000;
  std::size_t labels = 5;
  std::size_t out_degree = 4;
  double homophily = 0.8;
  std::size_t vocab_per_label = 8;
  double noise = 0.2;
  double train_fraction = 0.6;
  double valid_fraction = 0.2;
  double test_fraction = 0.2;
  std::uint64_t seed = 1;

  /// Throws std::invalid_argument on an unusable configuration.
  void validate() const;
};

/// Records in id order: labels uniform; each node cites up to `out_degree`
/// distinct earlier nodes, each draw targeting a same-label earlier node with
/// probability `homophily` (uniform over earlier nodes otherwise, or when no
/// same-label node exists yet); contents are `text_term(...)` trees over the
/// label's vocabulary with a `noise` fraction of symbols taken from other
/// labels; splits are contiguous id ranges tr, va, te.
Dataset generate_synthetic(const SynthConfig& cfg);

void write_synthetic(std::ostream& out, const SynthConfig& cfg);

}  // namespace tgl
