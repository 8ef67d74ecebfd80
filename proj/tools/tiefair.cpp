// tiefair: fairness measurement and recommender simulations on edge-list graphs.

#include <fstream>
#include <iostream>
#include <memory>

#include "CLI11.hpp"
#include "tiefair/experiment.hpp"

namespace {

struct Shared {
  tiefair::CommonOptions common;
  std::string influencers;
  std::string baseline = "ba";
  std::string output;
};

void add_shared(CLI::App& cmd, Shared& s, bool needs_graph = true) {
  auto* graph = cmd.add_option("--graph", s.common.graph_path, "Edge-list file");
  if (needs_graph) graph->required();
  cmd.add_option("--k-percent", s.common.k_percent, "Influencers: top k% by betweenness")
      ->capture_default_str();
  cmd.add_option("--t-percent", s.common.t_percent, "Graph fairness: mean of the top t% distances")
      ->capture_default_str();
  cmd.add_option("--seed", s.common.seed, "Base seed")->capture_default_str();
  cmd.add_option("--influencers", s.influencers, "Manual influencer labels, comma separated");
  cmd.add_option("--baseline", s.baseline, "Random-graph normalizer")
      ->check(CLI::IsMember({"ba", "er"}))
      ->capture_default_str();
  cmd.add_option("--baseline-seeds", s.common.baseline_seeds, "Random graphs per baseline")
      ->capture_default_str();
  cmd.add_option("--threads", s.common.threads, "Threads for betweenness")->capture_default_str();
  cmd.add_option("--output", s.output, "Output CSV path (default: stdout)");
}

void finalize(Shared& s) {
  s.common.baseline_model = tiefair::parse_random_model(s.baseline);
  s.common.influencer_labels.clear();
  std::size_t start = 0;
  while (start < s.influencers.size()) {
    const std::size_t comma = std::min(s.influencers.find(',', start), s.influencers.size());
    if (comma > start) s.common.influencer_labels.push_back(s.influencers.substr(start, comma - start));
    start = comma + 1;
  }
}

template <class Fn>
int with_output(const std::string& path, Fn&& fn) {
  if (path.empty()) {
    fn(std::cout);
    std::cout.flush();
    return 0;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot open output '" + path + "'");
  fn(file);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fairness of access to influencers, and recommenders that improve it"};
  app.set_config("--config", "", "TOML/INI file with default flag values (flags override it)");
  app.require_subcommand(1);

  Shared fairness_opts;
  auto* fairness = app.add_subcommand("fairness", "Fairness report and fairness index of a graph");
  add_shared(*fairness, fairness_opts);

  Shared sweep_opts;
  tiefair::SweepSpec spec;
  std::vector<double> p_values = spec.p_values;
  std::string ab_pairs;
  std::vector<std::uint64_t> seeds = spec.seeds;
  auto* sweep = app.add_subcommand("sweep", "Simulate recommenders over a (a,b) x P x seed grid");
  add_shared(*sweep, sweep_opts);
  sweep->add_option("--n-visits", spec.visits, "Visits per run")->capture_default_str();
  sweep->add_option("--p-values", p_values, "Triadic-branch probabilities")->delimiter(',');
  sweep->add_option("--ab-pairs", ab_pairs, "Weak-tie exponents, \"a:b[,a:b...]\" (default: the seven standard pairs)");
  sweep->add_option("--seeds", seeds, "Simulation seeds")->delimiter(',');
  sweep->add_option("--checkpoint-every", spec.checkpoint_every, "Visits between checkpoints")
      ->capture_default_str();
  sweep->add_option("--workers", spec.workers, "Concurrent grid cells")->capture_default_str();

  Shared conv_opts;
  std::size_t conv_n = 300;
  std::vector<std::size_t> edge_counts{600, 1200, 2400, 4800};
  std::size_t conv_seeds = 20;
  auto* conv = app.add_subcommand("baseline-convergence", "Spread of random-graph fairness over seeds");
  add_shared(*conv, conv_opts, false);
  conv->add_option("--nodes", conv_n, "Node count")->capture_default_str();
  conv->add_option("--edge-counts", edge_counts, "Edge counts")->delimiter(',');
  conv->add_option("--seeds-per-point", conv_seeds, "Seeds per (model, edge count)")->capture_default_str();

  Shared scatter_opts;
  auto* scatter = app.add_subcommand("scatter", "Degree vs 1/distance-to-influencers per node");
  add_shared(*scatter, scatter_opts);

  Shared kl_opts;
  std::size_t kl_sources = 50;
  auto* kl = app.add_subcommand("kl", "KL divergence of triadic weights from uniform, per source node");
  add_shared(*kl, kl_opts);
  kl->add_option("--sources", kl_sources, "Number of sampled source nodes")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*fairness) {
      finalize(fairness_opts);
      return with_output(fairness_opts.output,
                         [&](std::ostream& out) { tiefair::run_fairness(fairness_opts.common, out); });
    }
    if (*sweep) {
      finalize(sweep_opts);
      spec.common = sweep_opts.common;
      spec.p_values = p_values;
      spec.seeds = seeds;
      if (!ab_pairs.empty()) spec.ab_pairs = tiefair::parse_ab_pairs(ab_pairs);
      return with_output(sweep_opts.output, [&](std::ostream& out) { tiefair::run_sweep(spec, out); });
    }
    if (*conv) {
      finalize(conv_opts);
      return with_output(conv_opts.output, [&](std::ostream& out) {
        tiefair::run_baseline_convergence(conv_n, edge_counts, conv_seeds, conv_opts.common, out);
      });
    }
    if (*scatter) {
      finalize(scatter_opts);
      return with_output(scatter_opts.output,
                         [&](std::ostream& out) { tiefair::run_scatter(scatter_opts.common, out); });
    }
    if (*kl) {
      finalize(kl_opts);
      return with_output(kl_opts.output,
                         [&](std::ostream& out) { tiefair::run_kl(kl_opts.common, kl_sources, out); });
    }
  } catch (const std::exception& e) {
    std::cerr << "tiefair: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
