#include <doctest.h>

#include <cmath>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "tgl/gff.hpp"
#include "tgl/similarity.hpp"

using namespace tgl;

namespace {

GroundTerm T(std::string_view s) { return parse_term(s); }

std::set<Pathlet> as_set(const std::vector<std::vector<std::string>>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("mock") {
  CHECK(mock_similarity(T("a"), T("a")) == 1.0);
  CHECK(mock_similarity(T("f(a)"), T("g(b,c)")) == 1.0);
  CHECK(mock_similarity(T("a"), T("f(f(f(a)))")) == 1.0);
}

TEST_CASE("shared pathlets of the reference example") {
  const auto s = T("g(f(a(1)),b(1),c)");
  const auto t = T("h(f(a(2)),b(1),c)");
  const std::set<Pathlet> expected{{"f", "a"}, {"b", "1"}, {"c"}};
  CHECK(shared_pathlets(s, t) == expected);
  CHECK(as_set(oracle::distinct_pathlets(s, t)) == expected);
  CHECK(shared_path_similarity(s, t) == 5.0);
}

TEST_CASE("shared pathlets follow the grammar") {
  CHECK(shared_pathlets(T("a"), T("a")) == std::set<Pathlet>{{"a"}});
  CHECK(shared_path_similarity(T("a"), T("b")) == 0.0);

  // Frozen from the brute-force derivation enumerator.
  const auto swapped = oracle::distinct_pathlets(T("f(x,y)"), T("f(y,x)"));
  CHECK(as_set(swapped) == std::set<Pathlet>{{"f"}, {"f", "x"}, {"f", "y"}});
  CHECK(shared_pathlets(T("f(x,y)"), T("f(y,x)")) ==
        std::set<Pathlet>{{"f"}, {"f", "x"}, {"f", "y"}});
  CHECK(shared_path_similarity(T("f(x,y)"), T("f(y,x)")) == 5.0);

  CHECK(as_set(oracle::distinct_pathlets(T("f(a)"), T("f(a)"))) == std::set<Pathlet>{{"f", "a"}});
  CHECK(shared_path_similarity(T("f(a)"), T("f(a)")) == 2.0);

  // an atom meets a compound: compare with the functor, do not descend
  CHECK(shared_pathlets(T("a"), T("a(a)")) == std::set<Pathlet>{{"a"}});
  CHECK(shared_pathlets(T("b"), T("a(b)")).empty());
}

TEST_CASE("forest path") {
  CHECK(split_forest(T("f(a,g(b))"), 1).size() == 2);
  CHECK(split_forest(T("f(a,g(b))"), 2) == std::vector<GroundTerm>{T("b")});
  CHECK(split_forest(T("a"), 1).empty());
  CHECK(forest_path_similarity(T("f(a,b)"), T("g(a,c)"), 1) == 1.0);
  CHECK(forest_path_similarity(T("a"), T("b"), 1) == 0.0);
  CHECK(oracle::forest_path(T("f(g(x))"), T("h(g(x))"), 1) == 2.0);
  CHECK(forest_path_similarity(T("f(g(x))"), T("h(g(x))"), 1) == 2.0);
}

TEST_CASE("termlet") {
  CHECK(oracle::termlet(T("a"), T("a"), 7) == 1.0);
  CHECK(termlet_similarity(T("a"), T("a"), 7) == 1.0);
  CHECK(oracle::termlet(T("f(a,a)"), T("g(a)"), 7) == 2.0);
  CHECK(termlet_similarity(T("f(a,a)"), T("g(a)"), 7) == 2.0);
  CHECK(termlet_similarity(T("a"), T("b"), 7) == 0.0);
  // f(a,a) vs f(a,a): whole term 3, plus 2x2 `a` matches
  CHECK(termlet_similarity(T("f(a,a)"), T("f(a,a)"), 7) == 7.0);
  CHECK(termlet_similarity(T("f(a,a)"), T("f(a,a)"), 2) == 4.0);
}

TEST_CASE("jaccard") {
  const auto t = T("g(f(a(1)),b(1),c)");
  CHECK(jaccard_node_similarity(t, t) == 1.0);
  CHECK(jaccard_node_similarity(T("f(a,b)"), T("f(a,c)")) == 0.5);
  CHECK(jaccard_node_similarity(T("a"), T("b")) == 0.0);
  CHECK(jaccard_edge_similarity(T("f(a,b)"), T("f(a,b)")) == 1.0);
  CHECK(jaccard_edge_similarity(T("f(a,b)"), T("f(a,c)")) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(jaccard_edge_similarity(T("a"), T("b")) == 0.0);
  CHECK(jaccard_edge_similarity(T("a"), T("a")) == 0.0);
}

TEST_CASE("score dispatch") {
  Params p;
  CHECK(score(SimilarityMeasure::mock, T("a"), T("b"), p) == 1.0);
  CHECK(score(SimilarityMeasure::jaccard_node, T("f(a,b)"), T("f(a,c)"), p) == 0.5);
  CHECK(score(SimilarityMeasure::shared_path, T("g(f(a(1)),b(1),c)"), T("h(f(a(2)),b(1),c)"), p) ==
        5.0);
  p.max_termlet_size = 2;
  CHECK(score(SimilarityMeasure::termlet, T("f(a,a)"), T("f(a,a)"), p) == 4.0);
  p.forest_split_depth = 2;
  CHECK(score(SimilarityMeasure::forest_path, T("f(g(x))"), T("h(g(x))"), p) == 1.0);
  for (auto m : kAllMeasures) {
    CHECK(parse_measure(measure_name(m)) == m);
  }
  CHECK_FALSE(parse_measure("node_jaccard_similarity"));
}

TEST_CASE("properties over random pairs") {
  testing::Rng rng(2024);
  Params p;
  for (int i = 0; i < 400; ++i) {
    const auto a = testing::random_term(rng, 1 + testing::pick(rng, 12));
    const auto b = testing::random_term(rng, 1 + testing::pick(rng, 12));
    for (auto m : kAllMeasures) {
      const double ab = score(m, a, b, p);
      CHECK(std::isfinite(ab));
      CHECK(ab >= 0.0);
      CHECK(ab == score(m, b, a, p));
      CHECK(ab == oracle::similarity(m, a, b, p));
    }
    CHECK(jaccard_node_similarity(a, b) <= 1.0);
    CHECK(jaccard_edge_similarity(a, b) <= 1.0);
    CHECK(jaccard_node_similarity(a, a) == 1.0);
    if (a.is_compound()) CHECK(jaccard_edge_similarity(a, a) == 1.0);
    for (std::size_t cap = 1; cap < 14; ++cap) {
      CHECK(termlet_similarity(a, b, cap) <= termlet_similarity(a, b, cap + 1));
    }
    for (std::size_t d = 1; d <= 3; ++d) {
      CHECK(forest_path_similarity(a, b, d) == oracle::forest_path(a, b, d));
    }
  }
}
