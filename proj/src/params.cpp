#include "tgl/params.hpp"

#include <stdexcept>

namespace tgl {

std::string_view measure_name(SimilarityMeasure m) {
  switch (m) {
    case SimilarityMeasure::mock: return "mock";
    case SimilarityMeasure::termlet: return "termlet";
    case SimilarityMeasure::shared_path: return "shared_path";
    case SimilarityMeasure::forest_path: return "forest_path";
    case SimilarityMeasure::jaccard_node: return "jaccard_node";
    case SimilarityMeasure::jaccard_edge: return "jaccard_edge";
  }
  return "?";
}

std::optional<SimilarityMeasure> parse_measure(std::string_view name) {
  for (auto m : kAllMeasures) {
    if (measure_name(m) == name) return m;
  }
  return std::nullopt;
}

std::string_view neighbor_kind_name(NeighborKind k) {
  switch (k) {
    case NeighborKind::plain: return "plain";
    case NeighborKind::diverse: return "diverse";
    case NeighborKind::none: return "none";
  }
  return "?";
}

std::optional<NeighborKind> parse_neighbor_kind(std::string_view name) {
  if (name == "plain") return NeighborKind::plain;
  if (name == "diverse") return NeighborKind::diverse;
  if (name == "none") return NeighborKind::none;
  return std::nullopt;
}

void Params::validate() const {
  if (max_neighbor_nodes == 0) throw std::invalid_argument("max_neighbor_nodes must be >= 1");
  if (max_peer_nodes == 0) throw std::invalid_argument("max_peer_nodes must be >= 1");
  if (max_termlet_size == 0) throw std::invalid_argument("max_termlet_size must be >= 1");
  if (forest_split_depth == 0) throw std::invalid_argument("forest_split_depth must be >= 1");
}

std::string Params::describe() const {
  std::string s = "similarity=";
  s += measure_name(similarity);
  s += " max_neighbor_nodes=" + std::to_string(max_neighbor_nodes);
  s += " max_peer_nodes=" + std::to_string(max_peer_nodes);
  s += " neighbor_kind=";
  s += neighbor_kind_name(neighbor_kind);
  s += " max_termlet_size=" + std::to_string(max_termlet_size);
  s += " forest_split_depth=" + std::to_string(forest_split_depth);
  return s;
}

}  // namespace tgl
