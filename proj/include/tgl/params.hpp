#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace tgl {

enum class SimilarityMeasure { mock, termlet, shared_path, forest_path, jaccard_node, jaccard_edge };

inline constexpr SimilarityMeasure kAllMeasures[] = {
    SimilarityMeasure::mock,        SimilarityMeasure::termlet,      SimilarityMeasure::shared_path,
    SimilarityMeasure::forest_path, SimilarityMeasure::jaccard_node, SimilarityMeasure::jaccard_edge,
};

std::string_view measure_name(SimilarityMeasure m);
std::optional<SimilarityMeasure> parse_measure(std::string_view name);

enum class NeighborKind { plain, diverse, none };

std::string_view neighbor_kind_name(NeighborKind k);
std::optional<NeighborKind> parse_neighbor_kind(std::string_view name);

/// Run configuration. Defaults reproduce the reference configuration:
/// jaccard_node, 100 neighbors, 4 peers per label, plain neighbors.
struct Params {
  SimilarityMeasure similarity = SimilarityMeasure::jaccard_node;
  std::size_t max_neighbor_nodes = 100;
  std::size_t max_peer_nodes = 4;
  NeighborKind neighbor_kind = NeighborKind::plain;
  std::size_t max_termlet_size = 7;
  std::size_t forest_split_depth = 1;

  /// Throws std::invalid_argument when a cap is zero.
  void validate() const;
  std::string describe() const;
};

}  // namespace tgl
