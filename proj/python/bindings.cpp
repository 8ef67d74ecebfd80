#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tiefair/centrality.hpp"
#include "tiefair/fairness.hpp"
#include "tiefair/graph.hpp"
#include "tiefair/recommender.hpp"

namespace py = pybind11;
using namespace tiefair;

namespace {

py::list distances_list(const DistanceField& d) {
  py::list out;
  for (NodeId v = 0; v < d.size(); ++v) {
    if (d[v]) {
      out.append(*d[v]);
    } else {
      out.append(py::none());
    }
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_tiefair, m) {
  m.doc() = "Fairness of access to influencers in social graphs";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<std::size_t>(), py::arg("node_count"))
      .def(py::init<std::vector<std::string>>(), py::arg("labels"))
      .def_property_readonly("node_count", &Graph::node_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("labels", &Graph::labels)
      .def("neighbors",
           [](const Graph& g, NodeId v) {
             const auto span = g.neighbors(v);
             return std::vector<NodeId>(span.begin(), span.end());
           })
      .def("degree", &Graph::degree)
      .def("has_edge", &Graph::has_edge)
      .def("add_edge", &Graph::add_edge)
      .def("label", &Graph::label)
      .def("find_label", [](const Graph& g, const std::string& label) { return g.find_label(label); })
      .def("edges",
           [](const Graph& g) {
             std::vector<std::pair<NodeId, NodeId>> out;
             for (NodeId u = 0; u < g.node_count(); ++u) {
               for (NodeId v : g.neighbors(u)) {
                 if (u < v) out.emplace_back(u, v);
               }
             }
             return out;
           })
      .def("__len__", &Graph::node_count)
      .def("__repr__", [](const Graph& g) {
        return "<Graph nodes=" + std::to_string(g.node_count()) + " edges=" + std::to_string(g.edge_count()) + ">";
      });

  py::class_<EdgeListLoad>(m, "EdgeListLoad")
      .def_readonly("graph", &EdgeListLoad::graph)
      .def_readonly("records", &EdgeListLoad::records)
      .def_readonly("duplicates_dropped", &EdgeListLoad::duplicates_dropped)
      .def_readonly("self_loops_dropped", &EdgeListLoad::self_loops_dropped);

  m.def("load_edge_list", [](const std::string& path) { return load_edge_list_file(path); }, py::arg("path"));
  m.def(
      "graph_from_edges",
      [](std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& edges) { return graph_from_edges(n, edges); },
      py::arg("node_count"), py::arg("edges"));
  m.def("erdos_renyi", &erdos_renyi, py::arg("n"), py::arg("m"), py::arg("seed"));
  m.def("barabasi_albert", &barabasi_albert, py::arg("n"), py::arg("m_attach"), py::arg("seed"));
  m.def("is_connected", &is_connected);
  m.def("component_count", &component_count);
  m.def("mutual_friends", &mutual_friends);
  m.def(
      "distances",
      [](const Graph& g, const std::vector<NodeId>& sources) {
        return distances_list(multi_source_distances(g, sources));
      },
      py::arg("graph"), py::arg("sources"), "Hop distance to the nearest source; None when unreachable.");

  m.def("betweenness", &betweenness, py::arg("graph"), py::arg("threads") = 1);

  py::class_<InfluencerSet>(m, "InfluencerSet")
      .def_readonly("members", &InfluencerSet::members)
      .def_readonly("k_percent", &InfluencerSet::k_percent)
      .def_readonly("scores", &InfluencerSet::scores)
      .def_readonly("manual", &InfluencerSet::manual)
      .def("__contains__", &InfluencerSet::contains)
      .def("__len__", [](const InfluencerSet& s) { return s.members.size(); });

  m.def("influencer_count", &influencer_count, py::arg("node_count"), py::arg("k_percent"));
  m.def(
      "top_influencers",
      [](const Graph& g, double k, unsigned threads) { return top_influencers(g, k, threads); },
      py::arg("graph"), py::arg("k_percent"), py::arg("threads") = 1);
  m.def("manual_influencers", &manual_influencers, py::arg("graph"), py::arg("members"));
  m.def("manual_influencers_by_label", &manual_influencers_by_label, py::arg("graph"), py::arg("labels"));

  py::class_<FairnessReport>(m, "FairnessReport")
      .def_property_readonly("mode", [](const FairnessReport& r) { return std::string(to_string(r.mode)); })
      .def_readonly("graph_fairness", &FairnessReport::graph_fairness)
      .def_readonly("unreachable_fraction", &FairnessReport::unreachable_fraction)
      .def_readonly("t_percent", &FairnessReport::t_percent)
      .def_property_readonly("node_distances", [](const FairnessReport& r) {
        py::dict out;
        for (const auto& nf : r.node_fairness) {
          out[py::int_(nf.node)] = nf.distance ? py::object(py::int_(*nf.distance)) : py::none();
        }
        return out;
      });

  m.def("graph_fairness", &graph_fairness, py::arg("graph"), py::arg("influencers"), py::arg("t_percent"));

  py::class_<BaselineFairness>(m, "BaselineFairness")
      .def_property_readonly("model", [](const BaselineFairness& b) { return std::string(to_string(b.model)); })
      .def_readonly("mean", &BaselineFairness::mean)
      .def_readonly("per_seed", &BaselineFairness::per_seed)
      .def_readonly("n", &BaselineFairness::n)
      .def_readonly("m", &BaselineFairness::m)
      .def_readonly("actual_edge_counts", &BaselineFairness::actual_edge_counts)
      .def_readonly("attempts", &BaselineFairness::attempts);

  m.def(
      "baseline_fairness",
      [](std::size_t n, std::size_t edges, const std::string& model, double k, double t,
         const std::vector<std::uint64_t>& seeds, std::size_t er_retry_cap, unsigned threads) {
        BaselineOptions opts;
        opts.er_retry_cap = er_retry_cap;
        opts.threads = threads;
        return baseline_fairness(n, edges, parse_random_model(model), k, t, seeds, opts);
      },
      py::arg("n"), py::arg("m"), py::arg("model"), py::arg("k_percent"), py::arg("t_percent"), py::arg("seeds"),
      py::arg("er_retry_cap") = BaselineOptions{}.er_retry_cap, py::arg("threads") = 1);
  m.def("fairness_index", &fairness_index, py::arg("report"), py::arg("baseline"));

  py::class_<SimulationTrace>(m, "SimulationTrace")
      .def_property_readonly("metric_mode",
                             [](const SimulationTrace& t) { return std::string(to_string(t.metric_mode)); })
      .def_property_readonly("added_edges",
                             [](const SimulationTrace& t) {
                               std::vector<std::tuple<std::size_t, NodeId, NodeId, std::string>> out;
                               for (const auto& e : t.added_edges) {
                                 out.emplace_back(e.visit, e.source, e.target, to_string(e.branch));
                               }
                               return out;
                             })
      .def_readonly("skipped_visits", &SimulationTrace::skipped_visits)
      .def_property_readonly("checkpoints",
                             [](const SimulationTrace& t) {
                               std::vector<std::pair<std::size_t, FairnessReport>> out;
                               for (const auto& c : t.checkpoints) out.emplace_back(c.visit, c.report);
                               return out;
                             })
      .def_readonly("final_report", &SimulationTrace::final_report)
      .def_readonly("final_graph", &SimulationTrace::final_graph)
      .def("metric", &SimulationTrace::metric);

  m.def(
      "simulate",
      [](const Graph& g, const InfluencerSet& s, std::size_t visits, double p, double a, double b, double t,
         std::uint64_t seed, std::size_t checkpoint_every) {
        SimulationConfig cfg;
        cfg.visits = visits;
        cfg.p = p;
        cfg.a = a;
        cfg.b = b;
        cfg.t_percent = t;
        cfg.seed = seed;
        cfg.checkpoint_every = checkpoint_every;
        py::gil_scoped_release release;
        return simulate(g, s, cfg);
      },
      py::arg("graph"), py::arg("influencers"), py::arg("visits"), py::arg("p") = 1.0, py::arg("a") = 0.0,
      py::arg("b") = 0.0, py::arg("t_percent") = 20.0, py::arg("seed") = 0, py::arg("checkpoint_every") = 1);

  m.def("kl_distance", &kl_distance, py::arg("graph"), py::arg("source"), py::arg("influencers"));
}
