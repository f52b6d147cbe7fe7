#include "tgl/dataset.hpp"

#include <algorithm>
#include <limits>

namespace tgl {

std::string_view split_name(Split s) {
  switch (s) {
    case Split::tr: return "tr";
    case Split::va: return "va";
    case Split::te: return "te";
  }
  return "?";
}

std::optional<Split> parse_split(std::string_view name) {
  if (name == "tr") return Split::tr;
  if (name == "va") return Split::va;
  if (name == "te") return Split::te;
  return std::nullopt;
}

Dataset Dataset::from_records(std::vector<NodeRecord> records, std::optional<Label> num_labels) {
  if (records.size() > std::numeric_limits<NodeIndex>::max()) {
    throw ValidationError("too many records");
  }
  std::sort(records.begin(), records.end(),
            [](const NodeRecord& a, const NodeRecord& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < records.size(); ++i) {
    if (records[i].id == records[i - 1].id) {
      throw ValidationError("duplicate node id " + std::to_string(records[i].id));
    }
  }

  Label max_label = -1;
  for (const auto& r : records) {
    if (r.label < 0) {
      throw ValidationError("node " + std::to_string(r.id) + ": negative label");
    }
    max_label = std::max(max_label, r.label);
  }
  Dataset d;
  d.num_labels_ = num_labels.value_or(max_label + 1);
  if (max_label >= d.num_labels_) {
    throw ValidationError("label " + std::to_string(max_label) + " out of range [0, " +
                          std::to_string(d.num_labels_) + ")");
  }
  d.records_ = std::move(records);

  d.neighbor_index_.resize(d.records_.size());
  d.histogram_.assign(static_cast<std::size_t>(d.num_labels_), 0);
  for (NodeIndex i = 0; i < d.records_.size(); ++i) {
    const auto& r = d.records_[i];
    auto& out = d.neighbor_index_[i];
    out.reserve(r.neighbors.size());
    for (NodeId n : r.neighbors) {
      auto j = d.find(n);
      if (!j) {
        throw ValidationError("node " + std::to_string(r.id) + ": dangling neighbor id " +
                              std::to_string(n));
      }
      out.push_back(*j);
    }
    d.split_index_[static_cast<std::size_t>(r.split)].push_back(i);
    if (r.split != Split::te) {
      d.extended_training_.push_back(i);
      ++d.histogram_[static_cast<std::size_t>(r.label)];
    }
  }
  return d;
}

std::optional<NodeIndex> Dataset::find(NodeId id) const {
  auto it = std::lower_bound(records_.begin(), records_.end(), id,
                             [](const NodeRecord& r, NodeId v) { return r.id < v; });
  if (it == records_.end() || it->id != id) return std::nullopt;
  return static_cast<NodeIndex>(it - records_.begin());
}

std::vector<NodeId> Dataset::split_ids(Split s) const {
  std::vector<NodeId> out;
  for (NodeIndex i : split_indices(s)) out.push_back(records_[i].id);
  return out;
}

}  // namespace tgl
