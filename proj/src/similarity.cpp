#include "tgl/similarity.hpp"

#include <algorithm>
#include <cstdint>
#include <string_view>
#include <unordered_map>

namespace tgl {

namespace {

using PathView = std::vector<std::string_view>;
using PathSet = std::set<PathView>;

// All solutions of the pathlet grammar for (s, t), the empty one included.
// Every derivation produces exactly one path, so the result is never empty.
PathSet pathlet_solutions(const GroundTerm& s, const GroundTerm& t) {
  if (s.is_atomic() || t.is_atomic()) {
    if (s.symbol() == t.symbol()) return {PathView{s.symbol()}};
    return {PathView{}};
  }
  PathSet below;
  for (const auto& x : s.args()) {
    for (const auto& y : t.args()) below.merge(pathlet_solutions(x, y));
  }
  if (s.symbol() != t.symbol()) return below;
  PathSet out;
  for (const auto& q : below) {
    PathView p;
    p.reserve(q.size() + 1);
    p.push_back(s.symbol());
    p.insert(p.end(), q.begin(), q.end());
    out.insert(out.end(), std::move(p));
  }
  return out;
}

void collect_forest(const GroundTerm& t, std::size_t depth, std::vector<GroundTerm>& out) {
  if (depth == 0) {
    out.push_back(t);
    return;
  }
  for (const auto& a : t.args()) collect_forest(a, depth - 1, out);
}

void count_small_subterms(const GroundTerm& t, std::size_t max_size,
                          std::unordered_map<GroundTerm, std::uint64_t, GroundTermHash>& counts) {
  if (t.node_count() <= max_size) ++counts[t];
  for (const auto& a : t.args()) count_small_subterms(a, max_size, counts);
}

std::uint64_t sum_shared(const GroundTerm& t, std::size_t max_size,
                         const std::unordered_map<GroundTerm, std::uint64_t, GroundTermHash>& counts) {
  std::uint64_t total = 0;
  if (t.node_count() <= max_size) {
    auto it = counts.find(t);
    if (it != counts.end()) total += t.node_count() * it->second;
  }
  for (const auto& a : t.args()) total += sum_shared(a, max_size, counts);
  return total;
}

template <class Set>
double jaccard(const Set& x, const Set& y) {
  std::size_t inter = 0;
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() && j != y.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
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

double mock_similarity(const GroundTerm&, const GroundTerm&) { return 1.0; }

std::set<Pathlet> shared_pathlets(const GroundTerm& s, const GroundTerm& t) {
  std::set<Pathlet> out;
  for (const auto& p : pathlet_solutions(s, t)) {
    if (!p.empty()) out.emplace(p.begin(), p.end());
  }
  return out;
}

double shared_path_similarity(const GroundTerm& a, const GroundTerm& b) {
  std::size_t total = 0;
  for (const auto& p : pathlet_solutions(a, b)) total += p.size();
  return static_cast<double>(total);
}

std::vector<GroundTerm> split_forest(const GroundTerm& t, std::size_t depth) {
  std::vector<GroundTerm> out;
  collect_forest(t, depth, out);
  return out;
}

double forest_path_similarity(const GroundTerm& a, const GroundTerm& b, std::size_t depth) {
  const auto xs = split_forest(a, depth);
  const auto ys = split_forest(b, depth);
  double total = 0.0;
  for (const auto& x : xs) {
    for (const auto& y : ys) total += shared_path_similarity(x, y);
  }
  return total;
}

double termlet_similarity(const GroundTerm& a, const GroundTerm& b, std::size_t max_size) {
  std::unordered_map<GroundTerm, std::uint64_t, GroundTermHash> counts;
  count_small_subterms(b, max_size, counts);
  return static_cast<double>(sum_shared(a, max_size, counts));
}

double jaccard_node_similarity(const GroundTerm& a, const GroundTerm& b) {
  return jaccard(symbol_set(a), symbol_set(b));
}

double jaccard_edge_similarity(const GroundTerm& a, const GroundTerm& b) {
  return jaccard(edge_set(a), edge_set(b));
}

double score(SimilarityMeasure m, const GroundTerm& a, const GroundTerm& b, const Params& p) {
  switch (m) {
    case SimilarityMeasure::mock: return mock_similarity(a, b);
    case SimilarityMeasure::termlet: return termlet_similarity(a, b, p.max_termlet_size);
    case SimilarityMeasure::shared_path: return shared_path_similarity(a, b);
    case SimilarityMeasure::forest_path: return forest_path_similarity(a, b, p.forest_split_depth);
    case SimilarityMeasure::jaccard_node: return jaccard_node_similarity(a, b);
    case SimilarityMeasure::jaccard_edge: return jaccard_edge_similarity(a, b);
  }
  return 0.0;
}

}  // namespace tgl
