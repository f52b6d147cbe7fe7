#include "tgl/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include "tgl/explainer.hpp"
#include "tgl/gff.hpp"
#include "tgl/inference.hpp"
#include "tgl/synth.hpp"

namespace tgl {

namespace {

using nlohmann::json;

constexpr int kDomainError = 1;
constexpr int kInputError = 2;

std::string fixed4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::vector<std::string> measure_names() {
  std::vector<std::string> out;
  for (auto m : kAllMeasures) out.emplace_back(measure_name(m));
  return out;
}

struct ParamFlags {
  std::string similarity = "jaccard_node";
  std::string neighbor_kind = "plain";
  Params params;

  Params resolve() const {
    Params p = params;
    p.similarity = *parse_measure(similarity);
    p.neighbor_kind = *parse_neighbor_kind(neighbor_kind);
    return p;
  }
};

struct Common {
  std::string facts;
  int workers = 0;
  bool json = false;
  bool strict = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--facts", c.facts, "GFF fact file")->required();
  cmd->add_option("--workers", c.workers, "worker threads (0 = all available)")
      ->envname("TGL_WORKERS")
      ->check(CLI::NonNegativeNumber);
  cmd->add_flag("--json", c.json, "machine-readable output");
  cmd->add_flag("--strict", c.strict, "reject clauses other than at/5");
}

void add_measure_flags(CLI::App* cmd, ParamFlags& f) {
  cmd->add_option("--similarity", f.similarity, "similarity measure")
      ->check(CLI::IsMember(measure_names()))
      ->capture_default_str();
  cmd->add_option("--max-termlet-size", f.params.max_termlet_size)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--forest-depth", f.params.forest_split_depth)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

void add_param_flags(CLI::App* cmd, ParamFlags& f) {
  add_measure_flags(cmd, f);
  cmd->add_option("--max-neighbor-nodes", f.params.max_neighbor_nodes)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--max-peer-nodes", f.params.max_peer_nodes)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--neighbor-kind", f.neighbor_kind)
      ->check(CLI::IsMember({"plain", "diverse", "none"}))
      ->capture_default_str();
}

json params_json(const Params& p) {
  return {
      {"similarity", std::string(measure_name(p.similarity))},
      {"max_neighbor_nodes", p.max_neighbor_nodes},
      {"max_peer_nodes", p.max_peer_nodes},
      {"neighbor_kind", std::string(neighbor_kind_name(p.neighbor_kind))},
      {"max_termlet_size", p.max_termlet_size},
      {"forest_split_depth", p.forest_split_depth},
  };
}

int effective_workers(int requested) {
  if (requested > 0) return requested;
  return omp_get_max_threads();
}

Dataset load(const Common& c, std::ostream& err) {
  ParseOptions options;
  options.strict = c.strict;
  ParseStats stats;
  Dataset d = load_fact_file(c.facts, options, &stats);
  if (stats.skipped > 0) {
    err << "warning: skipped " << stats.skipped << " clause(s) that are not at/5\n";
  }
  return d;
}

json limit_json(const LimitReport& r) {
  json j = {{"guessable", r.guessable},
            {"total", r.total},
            {"ratio", r.ratio},
            {"kind", r.kind == LimitKind::network ? "network" : "content"}};
  if (r.measure) {
    j["measure"] = std::string(measure_name(*r.measure));
    j["threshold"] = r.threshold;
  }
  return j;
}

int cmd_evaluate(const Common& c, const ParamFlags& f, std::ostream& out, std::ostream& err) {
  const Dataset d = load(c, err);
  const Params p = f.resolve();
  EvalOptions options;
  options.workers = c.workers;
  const AccuracyReport r = evaluate_accuracy(d, p, options);
  const int workers = effective_workers(c.workers);
  if (c.json) {
    out << json{{"accuracy", r.accuracy},
                {"correct", r.correct},
                {"total", r.total},
                {"elapsed_seconds", r.elapsed_seconds},
                {"workers", workers},
                {"params", params_json(p)}}
               .dump()
        << '\n';
    return 0;
  }
  char elapsed[32];
  std::snprintf(elapsed, sizeof elapsed, "%.2f", r.elapsed_seconds);
  out << "accuracy: " << fixed4(r.accuracy) << '\n'
      << "correct: " << r.correct << '/' << r.total << '\n'
      << "elapsed: " << elapsed << " s\n"
      << "params: " << p.describe() << " workers=" << workers << '\n';
  return 0;
}

int cmd_explain_network(const Common& c, std::ostream& out, std::ostream& err) {
  const Dataset d = load(c, err);
  const LimitReport r = network_limits(d, c.workers);
  if (c.json) {
    out << limit_json(r).dump() << '\n';
  } else {
    out << format_limit(r) << '\n';
  }
  return 0;
}

int cmd_explain_content(const Common& c, const ParamFlags& f, double threshold,
                        std::optional<std::size_t> sample, const std::string& side,
                        std::ostream& out, std::ostream& err) {
  const Dataset d = load(c, err);
  const Params p = f.resolve();
  CoverageOptions options;
  options.sample = sample;
  options.peer_side = side == "tr" ? PeerSide::tr : PeerSide::trva;
  options.workers = c.workers;
  const LimitReport r = content_coverage(d, p.similarity, threshold, p, options);
  if (c.json) {
    out << limit_json(r).dump() << '\n';
  } else {
    out << format_limit(r) << '\n';
  }
  return 0;
}

int cmd_predict(const Common& c, const ParamFlags& f, NodeId node, bool reveal, std::ostream& out,
                std::ostream& err) {
  const Dataset d = load(c, err);
  const auto index = d.find(node);
  if (!index) {
    err << "error: unknown node " << node << '\n';
    return kDomainError;
  }
  if (d.record(*index).split != Split::te) {
    err << "error: node " << node << " is not a test node\n";
    return kDomainError;
  }
  const LabelInference engine(d, f.resolve());
  const Decision decision = *engine.decide(*index);
  const Label truth = d.record(*index).label;
  if (c.json) {
    json ev = json::array();
    for (const auto& w : decision.evidence) ev.push_back({{"label", w.label}, {"weight", w.weight}});
    json j = {{"node", node},
              {"stage", std::string(stage_name(decision.stage))},
              {"evidence", ev},
              {"label", decision.label}};
    if (reveal) j["true_label"] = truth;
    out << j.dump() << '\n';
    return 0;
  }
  out << "node: " << node << '\n' << "stage: " << stage_name(decision.stage) << '\n';
  out << "evidence:";
  for (const auto& w : decision.evidence) out << ' ' << w.label << ':' << fixed4(w.weight);
  out << '\n' << "label: " << decision.label << '\n';
  if (reveal) out << "true_label: " << truth << '\n';
  return 0;
}

int cmd_gen_synth(const SynthConfig& cfg, const std::string& path, std::ostream& out) {
  const Dataset d = generate_synthetic(cfg);
  if (path == "-") {
    write_fact_file(out, d);
    return 0;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  write_fact_file(file, d);
  file.close();
  if (!file) throw std::runtime_error("failed writing " + path);
  out << "wrote " << d.size() << " clauses to " << path << '\n';
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symbolic node label inference over ground-term citation graphs", "tgl"};
  app.require_subcommand(1);

  Common common;
  ParamFlags flags;

  auto* evaluate = app.add_subcommand("evaluate", "accuracy of label inference on the test split");
  add_common(evaluate, common);
  add_param_flags(evaluate, flags);

  auto* explain = app.add_subcommand("explain", "dataset-intrinsic accuracy limits");
  explain->require_subcommand(1);
  auto* network = explain->add_subcommand("network", "share of test nodes with a same-label training neighbor");
  add_common(network, common);
  auto* content = explain->add_subcommand("content", "share of test nodes with a similar training peer");
  add_common(content, common);
  add_measure_flags(content, flags);
  double threshold = 0.0;
  std::optional<std::size_t> sample;
  std::string side = "trva";
  content->add_option("--threshold", threshold, "minimum similarity")->required();
  content->add_option("--sample", sample, "only the first K test ids");
  content->add_option("--peer-side", side, "witness records")
      ->check(CLI::IsMember({"tr", "trva"}))
      ->capture_default_str();

  auto* predict = app.add_subcommand("predict", "inspect the inference for one test node");
  add_common(predict, common);
  add_param_flags(predict, flags);
  NodeId node = 0;
  bool reveal = false;
  predict->add_option("--node", node, "test node id")->required();
  predict->add_flag("--reveal", reveal, "also print the held label");

  auto* gen = app.add_subcommand("gen-synth", "write a deterministic synthetic GFF file");
  SynthConfig cfg;
  std::string out_path;
  gen->add_option("--out", out_path, "output path, - for stdout")->required();
  gen->add_option("--nodes", cfg.nodes)->capture_default_str();
  gen->add_option("--labels", cfg.labels)->capture_default_str();
  gen->add_option("--out-degree", cfg.out_degree)->capture_default_str();
  gen->add_option("--homophily", cfg.homophily)->capture_default_str();
  gen->add_option("--vocab-per-label", cfg.vocab_per_label)->capture_default_str();
  gen->add_option("--noise", cfg.noise)->capture_default_str();
  gen->add_option("--train-fraction", cfg.train_fraction)->capture_default_str();
  gen->add_option("--valid-fraction", cfg.valid_fraction)->capture_default_str();
  gen->add_option("--test-fraction", cfg.test_fraction)->capture_default_str();
  gen->add_option("--seed", cfg.seed)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (evaluate->parsed()) return cmd_evaluate(common, flags, out, err);
    if (network->parsed()) return cmd_explain_network(common, out, err);
    if (content->parsed()) {
      return cmd_explain_content(common, flags, threshold, sample, side, out, err);
    }
    if (predict->parsed()) return cmd_predict(common, flags, node, reveal, out, err);
    if (gen->parsed()) return cmd_gen_synth(cfg, out_path, out);
  } catch (const SyntaxError& e) {
    err << "error: " << common.facts << ':' << e.what() << '\n';
    return kInputError;
  } catch (const ValidationError& e) {
    err << "error: invalid fact file: " << e.what() << '\n';
    return kInputError;
  } catch (const EmptyTestSet& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const EmptyTrainingSet& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kDomainError;
}

}  // namespace tgl
