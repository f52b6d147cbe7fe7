#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tgl/term.hpp"

namespace tgl {

using NodeId = std::uint64_t;
using Label = std::int32_t;
/// Position of a record inside a Dataset (records are kept sorted by id).
using NodeIndex = std::uint32_t;

enum class Split : std::uint8_t { tr, va, te };

std::string_view split_name(Split s);
std::optional<Split> parse_split(std::string_view name);

/// One `at/5` fact.
struct NodeRecord {
  NodeId id = 0;
  Split split = Split::tr;
  Label label = 0;
  GroundTerm content = GroundTerm::atom("empty");
  std::vector<NodeId> neighbors;

  friend bool operator==(const NodeRecord&, const NodeRecord&) = default;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Validated, immutable collection of node records.
class Dataset {
 public:
  Dataset() = default;

  /// Sorts by id and validates: unique ids, every neighbor present, labels in
  /// [0, num_labels). When `num_labels` is absent it becomes 1 + max label.
  static Dataset from_records(std::vector<NodeRecord> records,
                              std::optional<Label> num_labels = std::nullopt);

  std::size_t size() const noexcept { return records_.size(); }
  bool empty() const noexcept { return records_.empty(); }
  Label num_labels() const noexcept { return num_labels_; }

  std::span<const NodeRecord> records() const noexcept { return records_; }
  const NodeRecord& record(NodeIndex i) const { return records_[i]; }
  std::optional<NodeIndex> find(NodeId id) const;

  std::span<const NodeIndex> neighbor_indices(NodeIndex i) const { return neighbor_index_[i]; }
  std::span<const NodeIndex> split_indices(Split s) const {
    return split_index_[static_cast<std::size_t>(s)];
  }
  std::vector<NodeId> split_ids(Split s) const;

  /// tr or va.
  bool in_extended_training(NodeIndex i) const { return records_[i].split != Split::te; }
  /// Ascending indices of tr and va records.
  std::span<const NodeIndex> extended_training() const noexcept { return extended_training_; }

  /// Label counts over tr and va.
  std::span<const std::size_t> label_histogram() const noexcept { return histogram_; }

  friend bool operator==(const Dataset& a, const Dataset& b) {
    return a.num_labels_ == b.num_labels_ && a.records_ == b.records_;
  }

 private:
  std::vector<NodeRecord> records_;
  Label num_labels_ = 0;
  std::vector<std::vector<NodeIndex>> neighbor_index_;
  std::vector<NodeIndex> split_index_[3];
  std::vector<NodeIndex> extended_training_;
  std::vector<std::size_t> histogram_;
};

}  // namespace tgl
