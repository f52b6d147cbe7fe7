#include <doctest.h>

#include <algorithm>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "tgl/explainer.hpp"
#include "tgl/gff.hpp"
#include "tgl/inference.hpp"
#include "tgl/synth.hpp"

using namespace tgl;

namespace {

Params mock_params() {
  Params p;
  p.similarity = SimilarityMeasure::mock;
  return p;
}

const NodeRecord& rec(const Dataset& d, NodeId id) { return d.record(*d.find(id)); }

}  // namespace

TEST_CASE("extended training set") {
  const auto d = parse_fact_text("at(0,tr,4,a,[]).\nat(1,va,4,a,[]).\nat(2,te,3,a,[0]).\n");
  CHECK(extended_training_ids(d) == std::vector<NodeId>{0, 1});
  const auto all_te = parse_fact_text("at(0,te,1,a,[]).\nat(1,te,0,a,[]).\n");
  CHECK(extended_training_ids(all_te).empty());
  CHECK_THROWS_AS(most_freq_class(all_te), EmptyTrainingSet);
}

TEST_CASE("most_freq_class") {
  CHECK(most_freq_class(parse_fact_text("at(0,tr,4,a,[]). at(1,va,4,a,[]). at(2,tr,3,a,[]).")) == 4);
  CHECK(most_freq_class(parse_fact_text("at(0,tr,1,a,[]). at(1,va,2,a,[]).")) == 1);
  CHECK(most_freq_class(parse_fact_text("at(0,tr,7,a,[]). at(1,te,2,a,[]). at(2,te,2,a,[]).")) == 7);
}

TEST_CASE("select_diverse_peers") {
  const auto d = parse_fact_text("at(0,tr,5,a,[]). at(1,tr,5,a,[]). at(2,va,9,a,[]). at(3,te,9,a,[]).");
  Params p;
  p.max_peer_nodes = 1;
  auto pool = select_diverse_peers(d, p);
  CHECK(pool.by_label[5] == std::vector<NodeId>{0});
  CHECK(pool.by_label[9] == std::vector<NodeId>{2});
  CHECK(pool.size() == 2);
  p.max_peer_nodes = 4;
  pool = select_diverse_peers(d, p);
  CHECK(pool.by_label[5] == std::vector<NodeId>{0, 1});
  CHECK(pool.by_label[9] == std::vector<NodeId>{2});
}

TEST_CASE("neighbor_evidence") {
  const auto d = parse_fact_text(
      "at(5,tr,2,a,[]). at(9,tr,2,b,[]). at(7,te,1,a,[]). at(8,te,1,a,[]).\n"
      "at(0,te,2,a,[]). at(1,te,2,a,[5,9]). at(2,te,2,a,[7,8]).\n");
  const Params p = mock_params();
  CHECK(neighbor_evidence(d, rec(d, 0), p).empty());
  CHECK(neighbor_evidence(d, rec(d, 1), p) == Evidence{{2, 1.0}, {2, 1.0}});
  CHECK(neighbor_evidence(d, rec(d, 2), p).empty());

  Params capped = p;
  capped.max_neighbor_nodes = 1;
  CHECK(neighbor_evidence(d, rec(d, 1), capped) == Evidence{{2, 1.0}});

  Params none = p;
  none.neighbor_kind = NeighborKind::none;
  CHECK(neighbor_evidence(d, rec(d, 1), none).empty());

  // zero-similarity neighbors still vote
  Params jaccard;
  CHECK(neighbor_evidence(d, rec(d, 1), jaccard) == Evidence{{2, 1.0}, {2, 0.0}});
}

TEST_CASE("diverse neighbors cycle through labels") {
  const auto d = parse_fact_text(
      "at(0,tr,1,a,[]). at(1,tr,1,a,[]). at(2,tr,1,a,[]). at(3,tr,0,a,[]). at(4,va,2,a,[]).\n"
      "at(9,te,0,a,[2,1,0,4,3]).\n");
  Params p = mock_params();
  p.neighbor_kind = NeighborKind::diverse;
  const auto ev = neighbor_evidence(d, rec(d, 9), p);
  std::vector<Label> order;
  for (const auto& w : ev) order.push_back(w.label);
  CHECK(order == std::vector<Label>{0, 1, 2, 1, 1});
  p.max_neighbor_nodes = 3;
  CHECK(neighbor_evidence(d, rec(d, 9), p).size() == 3);
  // plain keeps stored order
  p.neighbor_kind = NeighborKind::plain;
  CHECK(neighbor_evidence(d, rec(d, 9), p) == Evidence{{1, 1.0}, {1, 1.0}, {1, 1.0}});
}

TEST_CASE("peer_evidence") {
  const auto d = parse_fact_text(
      "at(0,tr,3,f(a,b),[]). at(1,tr,4,g(x),[]). at(2,te,0,f(a,b),[]). at(3,te,0,z,[]).\n");
  Params p;
  CHECK(peer_evidence(d, rec(d, 2), PeerPool{}, p).empty());
  const auto pool = select_diverse_peers(d, p);
  CHECK(peer_evidence(d, rec(d, 2), pool, p) == Evidence{{3, 1.0}});
  CHECK(peer_evidence(d, rec(d, 3), pool, p).empty());
}

TEST_CASE("vote_for_best_label") {
  CHECK(vote_for_best_label(Evidence{{3, 0.5}, {7, 0.4}, {3, 0.2}}) == 3);
  CHECK(vote_for_best_label(Evidence{{2, 0.5}, {5, 0.5}}) == 5);
  CHECK(vote_for_best_label(Evidence{{9, 1.0}}) == 9);
  CHECK(vote_for_best_label(Evidence{{1, 0.0}, {0, 0.0}}) == 1);
  CHECK_THROWS_AS(vote_for_best_label(Evidence{}), EmptyEvidence);
}

TEST_CASE("vote invariants") {
  testing::Rng rng(99);
  std::uniform_real_distribution<double> scale(0.01, 100.0);
  for (int i = 0; i < 1000; ++i) {
    auto ev = testing::random_evidence(rng);
    const Label chosen = vote_for_best_label(ev);
    std::vector<std::pair<Label, double>> raw;
    for (const auto& e : ev) raw.emplace_back(e.label, e.weight);
    CHECK(chosen == oracle::vote(raw));
    std::shuffle(ev.begin(), ev.end(), rng);
    CHECK(vote_for_best_label(ev) == chosen);
    const double c = scale(rng);
    for (auto& e : ev) e.weight *= c;
    CHECK(vote_for_best_label(ev) == chosen);
  }
}

TEST_CASE("infer_label cascade") {
  const auto d = parse_fact_text(
      "at(0,tr,8,f(a),[]). at(1,tr,2,q,[]). at(2,tr,2,r,[]).\n"
      "at(10,te,8,z,[0]). at(11,te,5,zz,[]). at(12,te,4,f(a),[]).\n");
  Params p;
  const auto pool = select_diverse_peers(d, p);
  // isolated node, nothing in common with any peer -> majority class
  auto isolated = decide_label(d, rec(d, 11), pool, p);
  CHECK(isolated.stage == Stage::fallback);
  CHECK(isolated.label == most_freq_class(d));
  CHECK(isolated.evidence == Evidence{{2, 1.0}});

  auto cited = decide_label(d, rec(d, 10), pool, mock_params());
  CHECK(cited.stage == Stage::neighbor);
  CHECK(cited.label == 8);

  auto similar = decide_label(d, rec(d, 12), pool, p);
  CHECK(similar.stage == Stage::peer);
  CHECK(similar.label == 8);

  Params none = p;
  none.neighbor_kind = NeighborKind::none;
  CHECK(decide_label(d, rec(d, 10), pool, none).stage != Stage::neighbor);
}

TEST_CASE("engine agrees with the free functions and the oracle cascade") {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    SynthConfig cfg;
    cfg.nodes = 150;
    cfg.seed = seed;
    cfg.noise = 0.4;
    const auto d = generate_synthetic(cfg);
    const std::vector<NodeRecord> raw(d.records().begin(), d.records().end());
    for (auto m : kAllMeasures) {
      for (auto kind : {NeighborKind::plain, NeighborKind::diverse, NeighborKind::none}) {
        Params p;
        p.similarity = m;
        p.neighbor_kind = kind;
        p.max_neighbor_nodes = 2;
        const LabelInference engine(d, p);
        const auto pool = select_diverse_peers(d, p);
        for (NodeIndex i : d.split_indices(Split::te)) {
          const auto decision = *engine.decide(i);
          const auto via_free = decide_label(d, d.record(i), pool, p);
          CHECK(decision.label == via_free.label);
          CHECK(decision.stage == via_free.stage);
          CHECK(decision.evidence == via_free.evidence);
          CHECK(decision.label == oracle::cascade_label(raw, d.record(i), p));
        }
      }
    }
  }
}

TEST_CASE("inference never reads held-out labels") {
  SynthConfig cfg;
  cfg.nodes = 300;
  cfg.seed = 17;
  const auto d = generate_synthetic(cfg);
  std::vector<NodeRecord> masked(d.records().begin(), d.records().end());
  testing::Rng rng(1);
  for (auto& r : masked) {
    if (r.split == Split::te) r.label = static_cast<Label>(testing::pick(rng, cfg.labels));
  }
  const auto m = Dataset::from_records(masked, d.num_labels());
  for (auto measure : {SimilarityMeasure::mock, SimilarityMeasure::jaccard_node,
                       SimilarityMeasure::termlet}) {
    Params p;
    p.similarity = measure;
    const LabelInference a(d, p), b(m, p);
    for (NodeIndex i : d.split_indices(Split::te)) CHECK(a.infer(i) == b.infer(i));
  }
}

TEST_CASE("evaluate_accuracy") {
  const auto trivial = parse_fact_text(
      "at(0,tr,1,f(a),[]). at(1,tr,2,g(b),[]). at(2,te,1,f(a),[0]). at(3,te,2,g(b),[1]).\n");
  const auto r = evaluate_accuracy(trivial, mock_params());
  CHECK(r.accuracy == 1.0);
  CHECK(r.correct == 2);
  CHECK(r.total == 2);

  CHECK_THROWS_AS(evaluate_accuracy(parse_fact_text("at(0,tr,1,a,[])."), Params{}), EmptyTestSet);
  CHECK_THROWS_AS(evaluate_accuracy(parse_fact_text("at(0,te,1,a,[])."), Params{}),
                  EmptyTrainingSet);
}

TEST_CASE("parallel evaluation matches the serial loop for any worker count") {
  SynthConfig cfg;
  cfg.nodes = 800;
  cfg.seed = 5;
  const auto d = generate_synthetic(cfg);
  for (auto m : {SimilarityMeasure::jaccard_node, SimilarityMeasure::shared_path}) {
    Params p;
    p.similarity = m;
    const auto reference = serial::evaluate_accuracy(d, p);
    for (int workers : {1, 2, 3, 8}) {
      EvalOptions o;
      o.workers = workers;
      const auto r = evaluate_accuracy(d, p, o);
      CHECK(r.correct == reference.correct);
      CHECK(r.total == reference.total);
    }
  }
}

TEST_CASE("neighbors-only accuracy is bounded by the network limit") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    SynthConfig cfg;
    cfg.nodes = 200;
    cfg.seed = seed;
    cfg.homophily = 0.5;
    const auto d = generate_synthetic(cfg);
    EvalOptions o;
    o.stages.peer = false;
    o.stages.fallback = false;
    const auto acc = evaluate_accuracy(d, Params{}, o);
    const auto limit = network_limits(d);
    CHECK(acc.correct <= limit.guessable);
  }
}
