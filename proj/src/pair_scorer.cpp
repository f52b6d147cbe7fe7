#include "tgl/pair_scorer.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "tgl/similarity.hpp"

namespace tgl {

namespace {

class Interner {
 public:
  std::uint64_t id(const Symbol& s) {
    auto [it, inserted] = ids_.try_emplace(s, ids_.size());
    return it->second;
  }

 private:
  std::unordered_map<Symbol, std::uint64_t> ids_;
};

void collect_symbols(const GroundTerm& t, Interner& in, std::vector<std::uint64_t>& out) {
  out.push_back(in.id(t.symbol()));
  for (const auto& a : t.args()) collect_symbols(a, in, out);
}

void collect_edges(const GroundTerm& t, Interner& in, std::vector<std::uint64_t>& out) {
  if (t.is_atomic()) return;
  const std::uint64_t parent = in.id(t.symbol());
  for (const auto& a : t.args()) {
    out.push_back((parent << 32) | in.id(a.symbol()));
    collect_edges(a, in, out);
  }
}

void sort_unique(std::vector<std::uint64_t>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  v.shrink_to_fit();
}

double sorted_jaccard(std::span<const std::uint64_t> x, std::span<const std::uint64_t> y) {
  std::size_t inter = 0, i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i] < y[j]) {
      ++i;
    } else if (y[j] < x[i]) {
      ++j;
    } else {
      ++inter;
      ++i;
      ++j;
    }
  }
  const std::size_t uni = x.size() + y.size() - inter;
  if (uni == 0) return 0.0;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

}  // namespace

PairScorer::PairScorer(const Dataset& d, const Params& p) : dataset_(&d), params_(p) {
  const bool nodes = p.similarity == SimilarityMeasure::jaccard_node;
  const bool edges = p.similarity == SimilarityMeasure::jaccard_edge;
  if (!nodes && !edges) return;
  Interner interner;
  features_.resize(d.size());
  for (NodeIndex i = 0; i < d.size(); ++i) {
    auto& f = features_[i];
    if (nodes) {
      collect_symbols(d.record(i).content, interner, f);
    } else {
      collect_edges(d.record(i).content, interner, f);
    }
    sort_unique(f);
  }
}

double PairScorer::operator()(NodeIndex a, NodeIndex b) const {
  if (!features_.empty()) return sorted_jaccard(features_[a], features_[b]);
  return score(params_.similarity, dataset_->record(a).content, dataset_->record(b).content,
               params_);
}

}  // namespace tgl
