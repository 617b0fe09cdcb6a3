#include "mapbij/cli.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mapbij/bijection.hpp"
#include "mapbij/census.hpp"
#include "mapbij/corpus.hpp"
#include "mapbij/error.hpp"
#include "mapbij/graph_util.hpp"
#include "mapbij/literals.hpp"
#include "mapbij/map_io.hpp"
#include "mapbij/report.hpp"
#include "mapbij/sandpile.hpp"
#include "mapbij/tree.hpp"
#include "mapbij/tutte.hpp"
#include "mapbij/verify.hpp"

namespace mapbij
{

namespace
{

struct Options
{
  std::string format = "human";
  std::string map_path;
  std::string root;
  std::string subgraph;
  std::string orient;
  std::string tree;
  std::string config;
  std::string delta;
  bool strong = false;
  bool corpus = false;
  std::uint64_t seed = 42;
  int max_half_edges = 12;
  int random_count = 50;
  unsigned threads = 0;
  bool timing = false;
};

std::string map_name(std::string const &path)
{
  return std::filesystem::path(path).stem().string();
}

CombinatorialMap load(Options const &opt)
{
  CombinatorialMap map = load_map(opt.map_path);
  if (opt.root.empty())
    return map;
  auto h = map.find_token(opt.root);
  if (!h)
    fail(ErrorKind::UnknownRoot, "root token " + opt.root + " is not a half-edge");
  return map.with_root(*h);
}

using Handler = std::function<int(Options const &, OutputFormat, std::ostream &)>;

int run_tutte(Options const &opt, OutputFormat fmt, std::ostream &out)
{
  CombinatorialMap map = load(opt);
  write_records(out, {{{"tutte", tutte_polynomial(map).to_string()}}}, fmt);
  return 0;
}

int run_delta(Options const &opt, OutputFormat fmt, std::ostream &out)
{
  CombinatorialMap map = load(opt);
  Subgraph s = parse_edge_list(map, opt.subgraph);
  EdgeSet tree = delta(map, s);
  write_records(out, {{{"tree", format_edge_list(map, tree)}}}, fmt);
  return 0;
}

int run_phi(Options const &opt, OutputFormat fmt, std::ostream &out)
{
  CombinatorialMap map = load(opt);
  Subgraph s = parse_edge_list(map, opt.subgraph);
  write_records(out, {{{"orientation", format_orientation(map, phi(map, s))}}}, fmt);
  return 0;
}

int run_psi(Options const &opt, OutputFormat fmt, std::ostream &out)
{
  CombinatorialMap map = load(opt);
  Orientation o = parse_orientation(map, opt.orient);
  write_records(out, {{{"subgraph", format_edge_list(map, psi(map, o))}}}, fmt);
  return 0;
}

int run_lambda(Options const &opt, OutputFormat fmt, std::ostream &out)
{
  CombinatorialMap map = load(opt);
  EdgeSet tree = parse_edge_list(map, opt.tree);
  write_records(out, {{{"config", format_vertex_values(map, lambda(map, tree))}}}, fmt);
  return 0;
}

int run_upsilon(Options const &opt, OutputFormat fmt, std::ostream &out)
{
  CombinatorialMap map = load(opt);
  SandpileConfig config = parse_vertex_values(map, opt.config);
  write_records(out, {{{"tree", format_edge_list(map, upsilon(map, config))}}}, fmt);
  return 0;
}

int run_gamma(Options const &opt, OutputFormat fmt, std::ostream &out)
{
  CombinatorialMap map = load(opt);
  bool forward = !opt.subgraph.empty() || opt.delta.empty();
  if (!opt.subgraph.empty() && !opt.delta.empty())
    fail(ErrorKind::InvalidArgument, "give either --subgraph or --delta, not both");
  if (forward) {
    Subgraph forest = parse_edge_list(map, opt.subgraph);
    write_records(out, {{{"delta", format_vertex_values(map, gamma(map, forest))}}}, fmt);
  } else {
    OutdegreeSequence d = parse_vertex_values(map, opt.delta);
    write_records(out, {{{"forest", format_edge_list(map, gamma_inverse(map, d))}}}, fmt);
  }
  return 0;
}

int run_census(Options const &opt, OutputFormat fmt, std::ostream &out)
{
  CombinatorialMap map = load(opt);
  Census census = specialization_census(map);
  write_census(out, map_name(opt.map_path), census, fmt);
  return census.consistent() ? 0 : 1;
}

int run_rootcomp(Options const &opt, OutputFormat fmt, std::ostream &out)
{
  CombinatorialMap map = load(opt);
  Orientation o = parse_orientation(map, opt.orient);
  RootComponentPartition p = opt.strong ? root_strong_components(map, o) : root_components(map, o);
  std::vector<Record> records;
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    std::string link = i == 0 ? "-" : map.edge_name(p.linking_edges[i - 1]);
    records.push_back({{"block", std::to_string(i)},
                       {"vertices", format_vertex_set(map, p.blocks[i])},
                       {"linking_edge", link}});
  }
  if (fmt == OutputFormat::Human) {
    for (auto const &r : records) {
      out << r[0].second << '\t' << r[1].second;
      if (r[0].second != "0")
        out << "\tvia " << r[2].second;
      out << '\n';
    }
    return 0;
  }
  write_records(out, records, fmt);
  return 0;
}

int run_dual(Options const &opt, OutputFormat fmt, std::ostream &out)
{
  CombinatorialMap map = load(opt);
  std::string text = serialize_map(dual_map(map));
  if (fmt == OutputFormat::Human)
    out << text;
  else
    write_records(out, {{{"dual", text}}}, fmt);
  return 0;
}

int run_verify(Options const &opt, OutputFormat fmt, std::ostream &out)
{
  VerifyOptions vo;
  vo.max_half_edges = opt.max_half_edges;
  vo.threads = opt.threads;
  VerificationReport report;
  if (opt.corpus) {
    CorpusOptions co;
    co.seed = opt.seed;
    co.max_half_edges = opt.max_half_edges;
    co.random_count = opt.random_count;
    report = verify_all(build_corpus(co), vo);
    report.seed = opt.seed;
  } else {
    if (opt.map_path.empty())
      fail(ErrorKind::InvalidArgument, "verify needs a map file or --corpus");
    report = verify_all(NamedMap{map_name(opt.map_path), load(opt)}, vo);
  }
  write_report(out, report, fmt, opt.timing);
  return report.passed() ? 0 : 1;
}

} // namespace

int cli_main(int argc, char const *const *argv, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Bijections and Tutte activities on combinatorial maps", "mapbij"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Output format")
    ->check(CLI::IsMember({"human", "tsv", "json-lines"}));

  std::vector<std::pair<CLI::App *, Handler>> handlers;
  auto command = [&](char const *name, char const *help, Handler h, bool needs_map = true) {
    CLI::App *sub = app.add_subcommand(name, help);
    auto *m = sub->add_option("map", opt.map_path, "Map file");
    if (needs_map)
      m->required();
    sub->add_option("--root", opt.root, "Override the root half-edge");
    sub->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"human", "tsv", "json-lines"}));
    handlers.emplace_back(sub, std::move(h));
    return sub;
  };

  command("tutte", "Tutte polynomial", run_tutte);
  command("delta", "Tree whose interval contains a subgraph", run_delta)
    ->add_option("--subgraph", opt.subgraph, "Edge list")
    ->required();
  command("phi", "Orientation of a subgraph", run_phi)
    ->add_option("--subgraph", opt.subgraph, "Edge list")
    ->required();
  command("psi", "Subgraph of an orientation", run_psi)
    ->add_option("--orient", opt.orient, "Tail half-edges")
    ->required();
  command("lambda", "Recurrent configuration of a spanning tree", run_lambda)
    ->add_option("--tree", opt.tree, "Edge list")
    ->required();
  command("upsilon", "Spanning tree of a recurrent configuration", run_upsilon)
    ->add_option("--config", opt.config, "Vertex values")
    ->required();
  auto *g = command("gamma", "Outdegrees of a forest, or the forest of outdegrees", run_gamma);
  g->add_option("--subgraph", opt.subgraph, "Forest edge list");
  g->add_option("--delta", opt.delta, "Outdegree per vertex");
  command("census", "Specialization table", run_census);
  auto *rc = command("rootcomp", "Root components of an orientation", run_rootcomp);
  rc->add_option("--orient", opt.orient, "Tail half-edges")->required();
  rc->add_flag("--strong", opt.strong, "Root-strong components");
  command("dual", "Dual map", run_dual);
  auto *v = command("verify", "Exhaustive verification", run_verify, false);
  v->add_flag("--corpus", opt.corpus, "Verify the built-in corpus");
  v->add_option("--seed", opt.seed, "Random corpus seed");
  v->add_option("--max-halfedges", opt.max_half_edges, "Half-edge cap")
    ->check(CLI::Range(1, 64));
  v->add_option("--random-count", opt.random_count, "Random corpus maps")
    ->check(CLI::NonNegativeNumber);
  v->add_option("--threads", opt.threads, "Worker threads, 0 for all cores");
  v->add_flag("--timing", opt.timing, "Print per-map timing");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    OutputFormat fmt = parse_output_format(opt.format);
    for (auto const &[sub, handler] : handlers) {
      if (sub->parsed())
        return handler(opt, fmt, out);
    }
  } catch (Error const &e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::Internal ? 1 : 2;
  } catch (std::exception const &e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

} // namespace mapbij
