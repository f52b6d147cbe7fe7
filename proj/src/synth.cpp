#include "tgl/synth.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>
#include <stdexcept>
#include <vector>

#include "tgl/gff.hpp"

namespace tgl {

namespace {

class Draws {
 public:
  explicit Draws(std::uint64_t seed) : gen_(seed) {}

  std::size_t index(std::size_t n) {
    const unsigned __int128 x = gen_();
    return static_cast<std::size_t>((x * n) >> 64);
  }

  double real() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 gen_;
};

class ContentBuilder {
 public:
  ContentBuilder(const SynthConfig& cfg, Draws& draws) : cfg_(cfg), draws_(draws) {}

  GroundTerm build(Label label) {
    const std::size_t width = 1 + draws_.index(3);
    std::vector<GroundTerm> args;
    for (std::size_t i = 0; i < width; ++i) args.push_back(subtree(label, 2));
    return GroundTerm::compound("text_term", std::move(args));
  }

 private:
  GroundTerm subtree(Label label, int depth) {
    if (depth == 0 || draws_.real() < 0.4) return GroundTerm::atom(symbol(label));
    std::string functor = symbol(label);
    const std::size_t width = 1 + draws_.index(2);
    std::vector<GroundTerm> args;
    for (std::size_t i = 0; i < width; ++i) args.push_back(subtree(label, depth - 1));
    return GroundTerm::compound(std::move(functor), std::move(args));
  }

  std::string symbol(Label label) {
    auto owner = static_cast<std::size_t>(label);
    if (cfg_.labels > 1 && draws_.real() < cfg_.noise) {
      owner = draws_.index(cfg_.labels - 1);
      if (owner >= static_cast<std::size_t>(label)) ++owner;
    }
    const std::size_t word = draws_.index(cfg_.vocab_per_label);
    return "w" + std::to_string(owner) + "_" + std::to_string(word);
  }

  const SynthConfig& cfg_;
  Draws& draws_;
};

}  // namespace

void SynthConfig::validate() const {
  if (nodes == 0) throw std::invalid_argument("nodes must be >= 1");
  if (labels == 0) throw std::invalid_argument("labels must be >= 1");
  if (vocab_per_label == 0) throw std::invalid_argument("vocab_per_label must be >= 1");
  if (!(homophily >= 0.0 && homophily <= 1.0)) throw std::invalid_argument("homophily must be in [0,1]");
  if (!(noise >= 0.0 && noise <= 1.0)) throw std::invalid_argument("noise must be in [0,1]");
  for (double f : {train_fraction, valid_fraction, test_fraction}) {
    if (!(f >= 0.0 && f <= 1.0)) throw std::invalid_argument("split fractions must be in [0,1]");
  }
  if (std::abs(train_fraction + valid_fraction + test_fraction - 1.0) > 1e-9) {
    throw std::invalid_argument("split fractions must sum to 1");
  }
}

Dataset generate_synthetic(const SynthConfig& cfg) {
  cfg.validate();
  Draws draws(cfg.seed);
  ContentBuilder content(cfg, draws);

  const std::size_t n = cfg.nodes;
  const auto n_tr = std::min(n, static_cast<std::size_t>(std::llround(cfg.train_fraction * n)));
  const auto n_va =
      std::min(n - n_tr, static_cast<std::size_t>(std::llround(cfg.valid_fraction * n)));

  std::vector<NodeRecord> records(n);
  std::vector<std::vector<NodeId>> by_label(cfg.labels);
  for (std::size_t i = 0; i < n; ++i) {
    NodeRecord& r = records[i];
    r.id = i;
    r.split = i < n_tr ? Split::tr : (i < n_tr + n_va ? Split::va : Split::te);
    r.label = static_cast<Label>(draws.index(cfg.labels));

    const auto& same = by_label[static_cast<std::size_t>(r.label)];
    for (std::size_t c = 0; c < cfg.out_degree && i > 0; ++c) {
      const double u = draws.real();
      NodeId target = 0;
      if (u < cfg.homophily && !same.empty()) {
        target = same[draws.index(same.size())];
      } else {
        target = draws.index(i);
      }
      if (std::find(r.neighbors.begin(), r.neighbors.end(), target) == r.neighbors.end()) {
        r.neighbors.push_back(target);
      }
    }
    r.content = content.build(r.label);
    by_label[static_cast<std::size_t>(r.label)].push_back(i);
  }
  return Dataset::from_records(std::move(records), static_cast<Label>(cfg.labels));
}

void write_synthetic(std::ostream& out, const SynthConfig& cfg) {
  write_fact_file(out, generate_synthetic(cfg));
}

}  // namespace tgl
