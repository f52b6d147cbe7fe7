#pragma once

// Ground-term similarity measures. All functions are pure and reentrant and
// return finite, non-negative scores.

#include <cstddef>
#include <set>
#include <vector>

#include "tgl/params.hpp"
#include "tgl/term.hpp"

namespace tgl {

/// Symbol sequence shared by two terms along a root-to-leaf walk, with the
/// levels whose symbols differ skipped.
using Pathlet = std::vector<Symbol>;

/// Constant 1.0: every term is equally similar to every other one.
double mock_similarity(const GroundTerm& a, const GroundTerm& b);

/// Distinct non-empty pathlets. Two atomic terms share their symbol when
/// equal; an atomic term against a compound compares against the functor and
/// stops; two compounds share the functor when equal and then continue over
/// every (argument of s, argument of t) pair.
std::set<Pathlet> shared_pathlets(const GroundTerm& s, const GroundTerm& t);

/// Sum of the lengths of the distinct shared pathlets.
double shared_path_similarity(const GroundTerm& a, const GroundTerm& b);

/// Subtrees left after removing the top `depth` levels; empty for atoms.
std::vector<GroundTerm> split_forest(const GroundTerm& t, std::size_t depth);

/// Sum of shared_path_similarity over all pairs of the two forests.
double forest_path_similarity(const GroundTerm& a, const GroundTerm& b, std::size_t depth = 1);

/// Sum over every subterm position of `a` with at most `max_size` nodes of
/// node_count times the number of equal positions in `b`.
double termlet_similarity(const GroundTerm& a, const GroundTerm& b, std::size_t max_size = 7);

/// Jaccard index of the symbol sets.
double jaccard_node_similarity(const GroundTerm& a, const GroundTerm& b);

/// Jaccard index of the edge sets; 0.0 when both are empty.
double jaccard_edge_similarity(const GroundTerm& a, const GroundTerm& b);

double score(SimilarityMeasure m, const GroundTerm& a, const GroundTerm& b, const Params& p = {});

}  // namespace tgl
