#include "alliance/bounds.hpp"
#include "alliance/corpus.hpp"
#include "alliance/json.hpp"
#include "alliance/solver.hpp"
#include "alliance/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace alliance;
using nlohmann::json;

namespace {

enum ExitCode
{
  exit_ok = 0,
  exit_violations = 1,
  exit_input = 2,
  exit_infeasible = 3,
  exit_budget = 4,
};

struct InputError : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

auto read_text(const std::string & path) -> std::string
{
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

auto load_graph(const std::string & path, std::string format) -> Graph
{
  if (format.empty())
    format = std::filesystem::path(path).extension() == ".g6" ? "g6" : "edgelist";
  auto text = read_text(path);
  if (format == "g6") {
    auto graphs = parse_graph6_corpus(text);
    if (graphs.size() != 1)
      throw InputError(path + ": expected exactly one graph6 record, found " + std::to_string(graphs.size()));
    return graphs.front();
  }
  if (format == "edgelist")
    return parse_edge_list(text);
  throw InputError("unknown format '" + format + "'");
}

auto write_output(const std::string & text, const std::string & path) -> void
{
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw InputError("cannot write " + path);
  out << text;
}

auto budget_from(std::optional<std::uint64_t> nodes, std::optional<double> secs) -> Budget
{
  Budget b;
  if (nodes)
    b.max_nodes = *nodes;
  else if (const char * env = std::getenv("ALLIANCE_BUDGET_NODES"); env && *env)
    b.max_nodes = std::stoull(env);
  if (secs)
    b.max_time = std::chrono::milliseconds(static_cast<long long>(*secs * 1000));
  return b;
}

auto split_csv(const std::string & text) -> std::set<std::string>
{
  std::set<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty())
      out.insert(item);
  return out;
}

// ---- compute ------------------------------------------------------------

struct ComputeArgs
{
  std::string input;
  std::string format;
  std::string kind;
  bool line = false;
  bool oracle = false;
  int oracle_cap = default_oracle_cap;
  std::optional<std::uint64_t> budget_nodes;
  std::optional<double> budget_secs;
  bool pretty = false;
};

auto cmd_compute(const ComputeArgs & args) -> int
{
  auto g = load_graph(args.input, args.format);
  auto kind = parse_kind(args.kind);
  auto budget = budget_from(args.budget_nodes, args.budget_secs);

  json out;
  SolveResult result;
  std::optional<LineGraph> lg;
  if (args.line) {
    auto r = line_alliance_number(g, kind, budget);
    out = to_json(r);
    result = r.result;
    lg.emplace(g);
  }
  else {
    result = min_alliance(g, kind, budget);
    out = to_json(result);
  }

  int code = result.certified ? exit_ok : exit_budget;
  if (args.oracle) {
    const auto & target = lg ? lg->graph() : g;
    try {
      auto o = brute_force_oracle(target, kind, args.oracle_cap);
      bool agrees = result.certified && o.value == result.value && o.witness == result.witness;
      out["oracle"] = {{"value", o.value}, {"witness", to_json(o.witness)}, {"agrees", agrees}};
      if (!agrees && code == exit_ok)
        code = exit_violations;
    }
    catch (const std::length_error & e) {
      out["oracle"] = {{"error", e.what()}};
    }
  }

  if (args.pretty) {
    std::cout << kind_name(kind) << (args.line ? " alliance number of L(G): " : " alliance number: ")
              << result.value << (result.certified ? "" : " (lower bound only)") << '\n'
              << "witness: " << to_json(result.witness).dump() << '\n'
              << "method: " << method_name(result.method) << ", nodes: " << result.nodes_explored << '\n';
    if (out.contains("oracle") && out["oracle"].contains("value"))
      std::cout << "oracle: " << out["oracle"]["value"] << (out["oracle"]["agrees"] ? " (agrees)" : " (DISAGREES)")
                << '\n';
  }
  else
    std::cout << out.dump() << '\n';
  return code;
}

// ---- verify -------------------------------------------------------------

struct VerifyArgs
{
  int max_n = 7;
  std::vector<std::string> corpus_files;
  std::string corpus_dir = ALLIANCE_CORPUS_DIR;
  bool enumerate = false;
  std::string family;
  int p = 0;
  int q = 0;
  std::string checks;
  bool star_erratum = false;
  unsigned threads = 0;
  int line_oracle_cap = 21;
  std::optional<std::uint64_t> budget_nodes;
  std::optional<double> budget_secs;
  std::string output;
  bool pretty = false;
};

auto print_run_pretty(const VerificationRun & run) -> void
{
  std::cout << "corpus: " << run.corpus << '\n' << "graphs: " << run.outcomes.size() << '\n';
  for (const auto & [check, count] : run.executed)
    std::cout << "  " << std::left << std::setw(28) << check << count << '\n';
  for (const auto & t : run.tight_examples)
    std::cout << "tight: " << t.bound << " on " << t.graph6 << " (value " << t.value << ")\n";
  for (const auto & v : run.violations)
    std::cout << "VIOLATION " << v.check << " " << v.graph6 << ": " << v.details << '\n';
  std::cout << (run.ok() ? "all checks passed" : "violations found") << '\n';
}

auto cmd_verify(const VerifyArgs & args) -> int
{
  if (args.star_erratum) {
    std::vector<int> leaves = {3, 4, 5};
    auto rows = star_erratum(leaves);
    json out = {
      {"star_erratum", to_json(rows)},
      {"note", "oracle a(L(K_{1,n})) = ceil(n/2); rows marked erratum disagree with the value n-1"},
    };
    if (args.pretty) {
      for (const auto & r : rows)
        std::cout << "K_{1," << r.leaves << "}: oracle a(L) = " << r.oracle_value << ", remark n-1 = "
                  << r.remark_value << (r.remark_agrees ? "" : "  [erratum]") << '\n';
    }
    else
      write_output(out.dump() + "\n", args.output);
    return exit_ok;
  }

  VerifyOptions options;
  options.checks = split_csv(args.checks);
  options.threads = args.threads;
  options.line_oracle_cap = args.line_oracle_cap;
  options.budget = budget_from(args.budget_nodes, args.budget_secs);

  std::vector<Graph> graphs;
  std::string corpus;
  if (!args.family.empty()) {
    GraphFamily family{parse_family(args.family), args.p, args.q};
    graphs.push_back(generate(family));
    corpus = "family " + args.family + " p=" + std::to_string(args.p) + " q=" + std::to_string(args.q);
    if (options.checks.empty())
      options.checks = {family_check_ids().begin(), family_check_ids().end()};
  }
  else if (!args.corpus_files.empty()) {
    for (const auto & f : args.corpus_files) {
      if (!std::filesystem::exists(f))
        throw InputError("missing corpus file " + f);
      for (auto & g : load_graph6_file(f))
        graphs.push_back(std::move(g));
    }
    corpus = "files";
    for (const auto & f : args.corpus_files)
      corpus += " " + std::filesystem::path(f).filename().string();
  }
  else if (args.enumerate) {
    graphs = connected_corpus(args.max_n);
    corpus = "enumerated connected graphs, n <= " + std::to_string(args.max_n);
  }
  else {
    for (int n = 1; n <= args.max_n; ++n) {
      auto path = std::filesystem::path(args.corpus_dir) / ("connected_n" + std::to_string(n) + ".g6");
      if (!std::filesystem::exists(path))
        throw InputError("missing corpus file " + path.string());
      for (auto & g : load_graph6_file(path))
        graphs.push_back(std::move(g));
    }
    corpus = "bundled connected graphs, n <= " + std::to_string(args.max_n);
  }

  auto run = verify_graphs(graphs, corpus, options);
  if (args.family.empty())
    run.notes.push_back("tightness of the sqrt and diameter lower bounds is shown on corpus graphs listed in "
                        "tight_examples");

  if (args.pretty)
    print_run_pretty(run);
  else
    write_output(to_json(run).dump() + "\n", args.output);
  return run.ok() ? exit_ok : exit_violations;
}

// ---- bounds / classify / linegraph / generate ---------------------------

auto cmd_bounds(const std::string & input, const std::string & format, bool pretty) -> int
{
  auto g = load_graph(input, format);
  auto report = bound_report(g);
  if (pretty) {
    std::cout << "n = " << g.order() << ", m = " << g.size() << '\n';
    for (const auto & e : report.entries) {
      std::cout << std::left << std::setw(36) << e.id;
      if (!e.applicable)
        std::cout << "n/a (" << e.reason << ")\n";
      else {
        if (e.exact)
          std::cout << "= " << *e.exact;
        else {
          std::cout << ">= " << (e.lower ? std::to_string(*e.lower) : "-");
          if (e.upper)
            std::cout << ", <= " << *e.upper;
        }
        std::cout << '\n';
      }
    }
    std::cout << "comparison a(G) <= a(L): " << verdict_name(report.comparison) << '\n';
    return exit_ok;
  }
  auto out = to_json(report);
  out["n"] = g.order();
  out["m"] = g.size();
  out["degree_sequence"] = degree_sequence(g);
  out["metrics"] = to_json(metrics(g));
  std::cout << out.dump() << '\n';
  return exit_ok;
}

auto cmd_classify(const std::string & input, const std::string & format) -> int
{
  auto g = load_graph(input, format);
  json out = {{"graph", to_json(classify_small_alliance(g))}};
  out["line"] = g.size() >= 1 ? to_json(classify_small_line_alliance(g)) : json(nullptr);
  std::cout << out.dump() << '\n';
  return exit_ok;
}

auto cmd_linegraph(const std::string & input, const std::string & format, const std::string & output,
                   std::string map_path) -> int
{
  auto g = load_graph(input, format);
  auto lg = line_graph(g);
  write_output(encode_graph6(lg.graph()) + "\n", output);
  if (map_path.empty() && !output.empty())
    map_path = output + ".map.json";
  if (!map_path.empty())
    write_output(edge_map_json(lg).dump() + "\n", map_path);
  return exit_ok;
}

auto cmd_generate(const std::string & family, int p, int q, const std::string & format, const std::string & output)
    -> int
{
  auto g = generate({parse_family(family), p, q});
  if (format == "g6")
    write_output(encode_graph6(g) + "\n", output);
  else if (format == "edgelist")
    write_output(encode_edge_list(g), output);
  else
    throw InputError("unknown format '" + format + "'");
  return exit_ok;
}

} // namespace

int main(int argc, char ** argv)
{
  CLI::App app{"Exact defensive-alliance numbers of graphs and their line graphs"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto * c = app.add_subcommand("compute", "Minimum alliance of one kind, as JSON");
  c->add_option("--input", compute.input, "Graph file ('-' for stdin)")->required();
  c->add_option("--format", compute.format, "g6 or edgelist (default: by extension)");
  c->add_option("--kind", compute.kind, "Alliance kind")->required();
  c->add_flag("--line", compute.line, "Solve on the line graph");
  c->add_flag("--oracle", compute.oracle, "Cross-check with the brute-force oracle");
  c->add_option("--oracle-cap", compute.oracle_cap, "Largest order given to the oracle");
  c->add_option("--budget-nodes", compute.budget_nodes, "Search node limit");
  c->add_option("--budget-secs", compute.budget_secs, "Wall-clock limit in seconds");
  c->add_flag("--pretty", compute.pretty, "Human-readable output");

  VerifyArgs verify;
  auto * v = app.add_subcommand("verify", "Run the invariant checks over a corpus");
  v->add_option("--max-n", verify.max_n, "Largest order of the bundled corpus")->check(CLI::Range(1, 8));
  v->add_option("--corpus", verify.corpus_files, "Explicit .g6 corpus files");
  v->add_option("--corpus-dir", verify.corpus_dir, "Directory holding connected_n<k>.g6");
  v->add_flag("--enumerate", verify.enumerate, "Generate the corpus instead of reading it");
  v->add_option("--family", verify.family, "Verify one generated graph");
  v->add_option("--n,-p", verify.p, "First family parameter");
  v->add_option("--q", verify.q, "Second family parameter");
  v->add_option("--checks", verify.checks, "Comma-separated check ids");
  v->add_flag("--star-erratum", verify.star_erratum, "Report the K_{1,n} line-graph values");
  v->add_option("--threads", verify.threads, "Worker threads (0 = hardware)");
  v->add_option("--line-oracle-cap", verify.line_oracle_cap, "Largest line graph given to the oracle");
  v->add_option("--budget-nodes", verify.budget_nodes, "Per-search node limit");
  v->add_option("--budget-secs", verify.budget_secs, "Per-search wall-clock limit");
  v->add_option("--output", verify.output, "Also write the JSON report here instead of stdout");
  v->add_flag("--pretty", verify.pretty, "Human-readable summary");

  std::string input, format, output, map_path, family = "cycle", gen_format = "g6";
  bool pretty = false;
  int p = 0, q = 0;

  auto * b = app.add_subcommand("bounds", "Evaluate every bound, as JSON");
  b->add_option("--input", input)->required();
  b->add_option("--format", format);
  b->add_flag("--pretty", pretty);

  auto * cl = app.add_subcommand("classify", "Classify a(G) and a(L(G)) into 1, 2, 3 or >=4");
  cl->add_option("--input", input)->required();
  cl->add_option("--format", format);

  auto * l = app.add_subcommand("linegraph", "Emit L(G) in graph6 with an edge map");
  l->add_option("--input", input)->required();
  l->add_option("--format", format);
  l->add_option("--output", output, "graph6 output file (default stdout)");
  l->add_option("--map", map_path, "Sidecar JSON {line_vertex: [u, v]}");

  auto * gen = app.add_subcommand("generate", "Emit a named graph");
  gen->add_option("--family", family)->required();
  gen->add_option("--n,-p", p, "First parameter");
  gen->add_option("--q", q, "Second parameter");
  gen->add_option("--format", gen_format, "g6 or edgelist");
  gen->add_option("--output", output);

  try {
    app.parse(argc, argv);
  }
  catch (const CLI::ParseError & e) {
    auto code = app.exit(e);
    return code == 0 ? exit_ok : exit_input;
  }

  try {
    if (*c)
      return cmd_compute(compute);
    if (*v)
      return cmd_verify(verify);
    if (*b)
      return cmd_bounds(input, format, pretty);
    if (*cl)
      return cmd_classify(input, format);
    if (*l)
      return cmd_linegraph(input, format, output, map_path);
    if (*gen)
      return cmd_generate(family, p, q, gen_format, output);
  }
  catch (const InfeasibleError & e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return exit_infeasible;
  }
  catch (const ParseError & e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return exit_input;
  }
  catch (const InputError & e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input;
  }
  catch (const std::invalid_argument & e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input;
  }
  catch (const std::length_error & e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input;
  }
  return exit_input;
}
