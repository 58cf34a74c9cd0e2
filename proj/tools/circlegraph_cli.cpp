// Command-line front end: recognize / certify / split-tree / gen / bench /
// oracle-check over the text formats in circlegraph/io.hpp.
//
// Exit codes: 0 success, 1 negative outcome (not a circle graph, certificate
// mismatch, oracle disagreement), 2 malformed input or usage error.
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "circlegraph/graph.hpp"
#include "circlegraph/io.hpp"
#include "circlegraph/lbfs.hpp"
#include "circlegraph/oracle.hpp"
#include "circlegraph/recognizer.hpp"
#include "circlegraph/split_tree.hpp"

namespace {

cg::NamedGraph read_graph(const std::string& path) {
  if (path == "-") return cg::parse_edge_list(std::cin, &std::cerr);
  std::ifstream in(path);
  if (!in) throw cg::ParseError(0, "cannot open '" + path + "'");
  return cg::parse_edge_list(in, &std::cerr);
}

cg::NamedDiagram read_diagram(const std::string& path) {
  if (path == "-") return cg::parse_diagram(std::cin);
  std::ifstream in(path);
  if (!in) throw cg::ParseError(0, "cannot open '" + path + "'");
  return cg::parse_diagram(in);
}

std::vector<int> parse_size_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::stoi(item));
  return out;
}

int run_recognize(const std::string& input, bool verify) {
  const cg::NamedGraph ng = read_graph(input);
  const cg::RecognizeResult r = cg::recognize(ng.graph);
  if (!r.is_circle) {
    std::cout << "NOT-CIRCLE at vertex "
              << ng.names[static_cast<std::size_t>(r.failed_vertex)] << "\n";
    return 1;
  }
  if (verify) {
    cg::ChordWord whole;  // components cannot interleave, so concatenation works
    for (const cg::ChordWord& w : r.diagrams)
      whole.insert(whole.end(), w.begin(), w.end());
    if (!cg::certify(ng.graph, whole)) {
      std::cerr << "error: extracted diagram failed verification\n";
      return 1;
    }
  }
  for (std::size_t i = 0; i < r.diagrams.size(); ++i)
    std::cout << i << ": " << cg::format_diagram(r.diagrams[i], ng.names)
              << "\n";
  return 0;
}

int run_certify(const std::string& graph_path, const std::string& diagram_path) {
  const cg::NamedGraph ng = read_graph(graph_path);
  const cg::NamedDiagram nd = read_diagram(diagram_path);
  std::map<std::string, int> vertex_of;
  for (std::size_t v = 0; v < ng.names.size(); ++v)
    vertex_of[ng.names[v]] = static_cast<int>(v);
  if (nd.names.size() != ng.names.size()) {
    std::cerr << "error: diagram has " << nd.names.size()
              << " chords but the graph has " << ng.names.size()
              << " vertices\n";
    return 1;
  }
  cg::ChordWord w;
  w.reserve(nd.word.size());
  for (const cg::Endpoint& e : nd.word) {
    const auto it = vertex_of.find(nd.names[static_cast<std::size_t>(e.chord)]);
    if (it == vertex_of.end()) {
      std::cerr << "error: chord '" << nd.names[static_cast<std::size_t>(e.chord)]
                << "' is not a vertex of the graph\n";
      return 1;
    }
    w.push_back({it->second, e.index});
  }
  if (!cg::certify(ng.graph, w)) {
    std::cerr << "error: diagram does not encode the graph "
                 "(crossing pairs differ from the edge set)\n";
    return 1;
  }
  return 0;
}

void dump_component_tree(const cg::SplitTree& t,
                         const std::vector<std::string>& leaf_names,
                         std::ostream& os) {
  for (const int u : t.alive_nodes()) {
    os << "node " << u << " kind=";
    switch (t.kind(u)) {
      case cg::NodeKind::Prime: os << "prime"; break;
      case cg::NodeKind::Clique: os << "clique"; break;
      case cg::NodeKind::Star: os << "star centre=" << t.centre(u); break;
    }
    os << " markers=[";
    bool sep = false;
    for (const cg::MarkerId m : t.markers(u)) {
      if (sep) os << ' ';
      os << m;
      sep = true;
    }
    os << "]\n";
  }
  for (const int u : t.alive_nodes()) {
    for (const cg::MarkerId m : t.markers(u)) {
      const cg::Vertex leaf = t.opposite_leaf(m);
      if (leaf >= 0) {
        os << "edge " << u << ":" << m << " -- leaf:"
           << leaf_names[static_cast<std::size_t>(leaf)] << "\n";
        continue;
      }
      const cg::MarkerId o = t.opposite_marker(m);
      if (m < o)
        os << "edge " << u << ":" << m << " -- " << t.marker_node(o) << ":" << o
           << "\n";
    }
  }
}

void dump_component_dot(const cg::SplitTree& t,
                        const std::vector<std::string>& leaf_names,
                        std::size_t comp, std::ostream& os) {
  const std::string p = "c" + std::to_string(comp) + "_";
  os << "  subgraph cluster_" << comp << " {\n"
     << "    label=\"component " << comp << "\";\n";
  for (const int u : t.alive_nodes()) {
    os << "    " << p << "n" << u << " [shape=ellipse,label=\"";
    switch (t.kind(u)) {
      case cg::NodeKind::Prime: os << "prime"; break;
      case cg::NodeKind::Clique: os << "clique"; break;
      case cg::NodeKind::Star: os << "star"; break;
    }
    os << " #" << u << "\"];\n";
  }
  for (const int u : t.alive_nodes()) {
    for (const cg::MarkerId m : t.markers(u)) {
      const cg::Vertex leaf = t.opposite_leaf(m);
      if (leaf >= 0) {
        os << "    " << p << "v" << leaf << " [shape=box,label=\""
           << leaf_names[static_cast<std::size_t>(leaf)] << "\"];\n";
        os << "    " << p << "n" << u << " -- " << p << "v" << leaf << ";\n";
        continue;
      }
      const cg::MarkerId o = t.opposite_marker(m);
      if (m < o)
        os << "    " << p << "n" << u << " -- " << p << "n" << t.marker_node(o)
           << ";\n";
    }
  }
  os << "  }\n";
}

int run_split_tree(const std::string& input, bool dot) {
  const cg::NamedGraph ng = read_graph(input);
  const auto comps = cg::connected_components(ng.graph);
  if (dot) std::cout << "graph splittree {\n";
  for (std::size_t k = 0; k < comps.size(); ++k) {
    const cg::InducedSubgraph sub = cg::induced_subgraph(ng.graph, comps[k]);
    const cg::LbfsOrdering ord = cg::lbfs(sub.graph, 0);
    cg::RecognizerState st;
    std::vector<char> placed(static_cast<std::size_t>(sub.graph.vertex_count()), 0);
    std::vector<cg::Vertex> s;
    for (const cg::Vertex x : ord.order) {
      s.clear();
      for (const cg::Vertex nb : sub.graph.neighbors(x))
        if (placed[static_cast<std::size_t>(nb)]) s.push_back(nb);
      if (!cg::insert_vertex(st, x, s)) {
        if (dot) std::cout << "}\n";
        std::cout << "NOT-CIRCLE at vertex "
                  << ng.names[static_cast<std::size_t>(
                         sub.to_old[static_cast<std::size_t>(x)])]
                  << "\n";
        return 1;
      }
      placed[static_cast<std::size_t>(x)] = 1;
    }
    std::vector<std::string> leaf_names;
    leaf_names.reserve(sub.to_old.size());
    for (const cg::Vertex v : sub.to_old)
      leaf_names.push_back(ng.names[static_cast<std::size_t>(v)]);
    if (dot) {
      dump_component_dot(st.tree, leaf_names, k, std::cout);
    } else {
      std::cout << "# component " << k << "\n";
      if (st.tree.empty()) {
        std::cout << "# trivial (fewer than three vertices):";
        for (const std::string& name : leaf_names) std::cout << " " << name;
        std::cout << "\n";
      } else {
        dump_component_tree(st.tree, leaf_names, std::cout);
      }
    }
  }
  if (dot) std::cout << "}\n";
  return 0;
}

int run_gen(const std::string& kind, int n, long long m, int window,
            std::uint64_t seed, const std::string& out_path) {
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (out_path != "-") {
    file.open(out_path);
    if (!file) {
      std::cerr << "error: cannot open '" << out_path << "' for writing\n";
      return 2;
    }
    os = &file;
  }
  std::mt19937_64 rng(seed);
  cg::Graph g(0);
  if (kind == "circle") {
    const cg::ChordWord w = window > 0
                                ? cg::windowed_random_diagram(n, window, rng)
                                : cg::random_diagram(n, rng);
    g = cg::diagram_graph(w);
    *os << "# gen circle n=" << n << " window=" << window << " seed=" << seed
        << "\n";
  } else {
    const long long max_m =
        static_cast<long long>(n) * (n - 1) / 2;
    if (m < 0 || m > max_m) {
      std::cerr << "error: infeasible edge count " << m << " for n=" << n
                << " (max " << max_m << ")\n";
      return 2;
    }
    g = cg::Graph(n);
    std::uniform_int_distribution<int> pick(0, n - 1);
    long long added = 0;
    while (added < m) {
      const int u = pick(rng);
      const int v = pick(rng);
      if (u != v && g.add_edge(u, v)) ++added;
    }
    *os << "# gen random n=" << n << " m=" << m << " seed=" << seed << "\n";
  }
  for (int u = 0; u < g.vertex_count(); ++u)
    for (const cg::Vertex v : g.neighbors(u))
      if (u < v) *os << "v" << u << " v" << v << "\n";
  for (int u = 0; u < g.vertex_count(); ++u)
    if (g.degree(u) == 0) *os << "# isolated vertex: v" << u << "\n";
  return 0;
}

int run_bench(const std::string& sizes_csv, int window, std::uint64_t seed) {
  for (const int n : parse_size_list(sizes_csv)) {
    if (n < 1) {
      std::cerr << "error: sizes must be positive\n";
      return 2;
    }
    std::mt19937_64 rng(seed);
    const cg::ChordWord w = cg::windowed_random_diagram(n, window, rng);
    const cg::Graph g = cg::diagram_graph(w);
    const auto t0 = std::chrono::steady_clock::now();
    const cg::RecognizeResult r = cg::recognize(g);
    const auto t1 = std::chrono::steady_clock::now();
    if (!r.is_circle) {
      std::cerr << "error: generated circle graph was rejected (n=" << n
                << ")\n";
      return 1;
    }
    const double ms =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
    std::cout << n << " " << g.edge_count() << " " << ms << "\n";
  }
  return 0;
}

int run_oracle_check(int max_n, int samples, const std::string& sample_sizes,
                     std::uint64_t seed) {
  long long agree = 0;
  const auto check = [&](const cg::Graph& g) {
    const bool fast = cg::recognize(g).is_circle;
    const bool slow = cg::brute_force_is_circle(g);
    if (fast != slow) {
      std::cerr << "disagreement: recognizer says "
                << (fast ? "circle" : "not-circle") << ", oracle says "
                << (slow ? "circle" : "not-circle") << "; edges:";
      for (int u = 0; u < g.vertex_count(); ++u)
        for (const cg::Vertex v : g.neighbors(u))
          if (u < v) std::cerr << " v" << u << "-v" << v;
      std::cerr << "\n";
      return false;
    }
    ++agree;
    return true;
  };
  for (const cg::Graph& g : cg::connected_graphs_up_to(max_n))
    if (!check(g)) return 1;
  std::mt19937_64 rng(seed);
  for (const int n : parse_size_list(sample_sizes)) {
    const long long max_m = static_cast<long long>(n) * (n - 1) / 2;
    std::uniform_int_distribution<long long> pick_m(n - 1, max_m);
    for (int i = 0; i < samples; ++i)
      if (!check(cg::random_connected_graph(n, pick_m(rng), rng))) return 1;
  }
  std::cout << "agree " << agree << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"circle graph recognition toolkit"};
  app.require_subcommand(1);
  int rc = 0;

  auto* rec = app.add_subcommand(
      "recognize", "decide whether an edge list is a circle graph");
  std::string rec_input = "-";
  bool rec_verify = false;
  rec->add_option("input", rec_input, "edge list file ('-' = stdin)");
  rec->add_flag("--verify", rec_verify,
                "re-check the output diagram against the input graph");
  rec->callback([&]() { rc = run_recognize(rec_input, rec_verify); });

  auto* cert = app.add_subcommand(
      "certify", "check that a chord diagram encodes an edge list");
  std::string cert_graph, cert_diagram;
  cert->add_option("graph", cert_graph, "edge list file ('-' = stdin)")
      ->required();
  cert->add_option("diagram", cert_diagram, "diagram file ('-' = stdin)")
      ->required();
  cert->callback([&]() { rc = run_certify(cert_graph, cert_diagram); });

  auto* tree = app.add_subcommand(
      "split-tree", "print the split decomposition tree of a circle graph");
  std::string tree_input = "-";
  bool tree_dot = false;
  tree->add_option("input", tree_input, "edge list file ('-' = stdin)");
  tree->add_flag("--dot", tree_dot, "emit DOT instead of plain text");
  tree->callback([&]() { rc = run_split_tree(tree_input, tree_dot); });

  auto* gen = app.add_subcommand("gen", "generate an edge list");
  std::string gen_kind;
  int gen_n = 0;
  long long gen_m = -1;
  int gen_window = 0;
  std::uint64_t gen_seed = 1;
  std::string gen_out = "-";
  gen->add_option("kind", gen_kind, "circle | random")
      ->required()
      ->check(CLI::IsMember({"circle", "random"}));
  gen->add_option("-n,--vertices", gen_n, "number of vertices / chords")
      ->required()
      ->check(CLI::PositiveNumber);
  gen->add_option("-m,--edges", gen_m, "edge count (random kind)");
  gen->add_option("--window", gen_window,
                  "pair chord endpoints within this many free positions "
                  "(circle kind; 0 = uniform matching)");
  gen->add_option("--seed", gen_seed, "random seed");
  gen->add_option("-o,--output", gen_out, "output file ('-' = stdout)");
  gen->callback([&]() {
    if (gen_kind == "random" && gen_m < 0)
      throw CLI::ValidationError("gen", "random kind requires -m");
    rc = run_gen(gen_kind, gen_n, gen_m, gen_window, gen_seed, gen_out);
  });

  auto* bench = app.add_subcommand(
      "bench", "time recognition on generated circle graphs; rows `n m millis`");
  std::string bench_sizes = "10000,20000,40000";
  int bench_window = 8;
  std::uint64_t bench_seed = 1;
  bench->add_option("--sizes", bench_sizes, "comma-separated vertex counts");
  bench->add_option("--window", bench_window, "generator window (sparsity)");
  bench->add_option("--seed", bench_seed, "random seed");
  bench->callback([&]() { rc = run_bench(bench_sizes, bench_window, bench_seed); });

  auto* oc = app.add_subcommand(
      "oracle-check",
      "compare the recognizer against exhaustive search on small graphs");
  int oc_max_n = 6;
  int oc_samples = 0;
  std::string oc_sample_sizes = "7,8";
  std::uint64_t oc_seed = 1;
  oc->add_option("--max-n", oc_max_n, "exhaustive check up to this size (<= 6)")
      ->check(CLI::Range(1, 6));
  oc->add_option("--samples", oc_samples,
                 "random connected graphs per sampled size");
  oc->add_option("--sample-n", oc_sample_sizes,
                 "comma-separated sizes for random sampling");
  oc->add_option("--seed", oc_seed, "random seed");
  oc->callback([&]() {
    rc = run_oracle_check(oc_max_n, oc_samples, oc_sample_sizes, oc_seed);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const cg::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
