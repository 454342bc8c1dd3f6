// Command-line front end: graph-class classification, pre-coloring
// extension solving, contraction, verification runs, and graph generation.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "prext/contraction.hpp"
#include "prext/detect.hpp"
#include "prext/errors.hpp"
#include "prext/harness.hpp"
#include "prext/io.hpp"
#include "prext/solve.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_infeasible_or_violation = 1;
constexpr int exit_input_error = 2;
constexpr int exit_resource_guard = 3;

struct RunConfig {
  std::string command;
  std::string graph_path;
  std::string family_path;
  std::string property;
  std::string gen_class;
  int k = -1;
  bool co = false;
  int n = 0;
  int count = 1;
  int n_max = 5;
  int samples = 0;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::uint64_t node_budget = 10'000'000;
  std::string format = "text";
  std::string out_path;
};

void emit(const RunConfig& config, const std::string& text) {
  if (config.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(config.out_path);
  if (!out) throw std::runtime_error("cannot open output file: " + config.out_path);
  out << text;
}

std::string render(const RunConfig& config, const nlohmann::json& json,
                   const std::string& text) {
  return config.format == "json" ? json.dump(2) + "\n" : text;
}

int cmd_classify(const RunConfig& config) {
  const prext::LoadedGraph loaded = prext::read_graph_file(config.graph_path);
  const prext::ClassReport report = prext::classify(loaded.graph);
  emit(config, render(config, prext::class_report_json(report, loaded.labels),
                      prext::class_report_text(report, loaded.labels)));
  return exit_ok;
}

int cmd_prext(const RunConfig& config) {
  const prext::LoadedGraph loaded = prext::read_graph_file(config.graph_path);
  const prext::Family family = prext::parse_family_file(config.family_path);
  const prext::SolveLimits limits{config.node_budget};

  prext::PrextAnswer answer;
  if (config.co) {
    const prext::CliqueFamily q(family.classes());
    q.validate(loaded.graph);
    if (!prext::is_meyniel(loaded.graph).holds)
      std::cerr << "warning: graph is not Meyniel; the polynomial-case "
                   "guarantee does not apply, exact search still correct\n";
    if (config.k >= 0)
      answer = prext::prext_decide(prext::complement(loaded.graph),
                                   prext::as_stable(q), config.k, limits);
    else
      answer = prext::co_prext_optimize(loaded.graph, q, limits);
  } else {
    const prext::StableFamily q(family.classes());
    q.validate(loaded.graph);
    if (!prext::is_meyniel(prext::complement(loaded.graph)).holds)
      std::cerr << "warning: graph is not co-Meyniel; the polynomial-case "
                   "guarantee does not apply, exact search still correct\n";
    if (config.k >= 0)
      answer = prext::prext_decide(loaded.graph, q, config.k, limits);
    else
      answer = prext::prext_optimize(loaded.graph, q, limits);
  }
  emit(config, render(config, prext::prext_answer_json(answer, loaded.labels),
                      prext::prext_answer_text(answer, loaded.labels)));
  return answer.feasible ? exit_ok : exit_infeasible_or_violation;
}

int cmd_contract(const RunConfig& config) {
  const prext::LoadedGraph loaded = prext::read_graph_file(config.graph_path);
  const prext::Family family = prext::parse_family_file(config.family_path);

  prext::ContractionResult res;
  if (config.co) {
    res = prext::cocontract(loaded.graph, prext::CliqueFamily(family.classes()));
  } else {
    res = prext::contract(loaded.graph, prext::StableFamily(family.classes()));
  }

  std::vector<std::string> comments;
  comments.push_back(std::string(config.co ? "co-contraction" : "contraction") +
                     " of " + config.graph_path);
  for (prext::Vertex id = 0; id < res.graph.vertex_count(); ++id) {
    if (res.is_class_vertex(id))
      comments.push_back("origin " + std::to_string(id + 1) + " class " +
                         std::to_string(res.origin_class(id)));
    else
      comments.push_back(
          "origin " + std::to_string(id + 1) + " vertex " +
          std::to_string(loaded.labels[res.origin_vertex(id)]));
  }
  std::ostringstream out;
  prext::write_dimacs(out, res.graph, comments);
  emit(config, out.str());
  return exit_ok;
}

int cmd_verify(const RunConfig& config) {
  if (config.samples > 0 && !config.seed_set)
    throw std::invalid_argument("--seed is required when --samples > 0");
  prext::VerificationReport report;
  if (config.property == "theorem1") {
    report = prext::verify_theorem1(config.n_max);
  } else if (config.property == "theorem2") {
    report = prext::verify_theorem2(config.n_max, config.samples, config.seed);
  } else if (config.property == "lemma1") {
    report = prext::verify_lemma1(config.n_max);
  } else if (config.property == "lemmas") {
    report = prext::verify_structural_lemmas(config.n_max, config.samples,
                                             config.seed);
  } else if (config.property == "closure") {
    report = prext::closure_probe(config.n_max);
  } else {
    throw std::invalid_argument("unknown property: " + config.property);
  }
  emit(config, render(config, prext::report_json(report),
                      prext::report_text(report)));
  return report.passed() ? exit_ok : exit_infeasible_or_violation;
}

int cmd_gen(const RunConfig& config) {
  if (!config.seed_set) throw std::invalid_argument("--seed is required");
  if (config.n < 0 || config.n > prext::Graph::max_vertices)
    throw std::invalid_argument("n out of range");
  prext::SampleResult sample;
  if (config.gen_class == "any") {
    sample = prext::sample_any(config.n, config.count, config.seed);
  } else if (config.gen_class == "meyniel" || config.gen_class == "co-meyniel") {
    if (config.n > 16)
      throw std::invalid_argument(
          "class-filtered generation is limited to n <= 16");
    sample = config.gen_class == "meyniel"
                 ? prext::sample_meyniel(config.n, config.count, config.seed)
                 : prext::sample_co_meyniel(config.n, config.count, config.seed);
  } else {
    throw std::invalid_argument("unknown class: " + config.gen_class);
  }

  for (std::size_t i = 0; i < sample.graphs.size(); ++i) {
    std::vector<std::string> comments{
        "class " + config.gen_class + " n " + std::to_string(config.n) +
        " seed " + std::to_string(config.seed) + " index " + std::to_string(i)};
    if (config.out_path.empty()) {
      prext::write_dimacs(std::cout, sample.graphs[i], comments);
    } else {
      const std::string path = config.out_path + std::to_string(i) + ".col";
      std::ofstream out(path);
      if (!out) throw std::runtime_error("cannot open output file: " + path);
      prext::write_dimacs(out, sample.graphs[i], comments);
    }
  }
  if (sample.budget_exhausted) {
    std::cerr << "error: sampling budget exhausted; produced "
              << sample.graphs.size() << " of " << config.count << " graphs\n";
    return exit_resource_guard;
  }
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig config;
  CLI::App app{"Pre-coloring extension via contraction, Meyniel/Artemis/Berge "
               "recognition, and small-scale verification"};
  app.require_subcommand(1);

  auto* classify = app.add_subcommand("classify", "Classify a graph file");
  classify->add_option("graph", config.graph_path, "DIMACS .col or edge-list file")
      ->required();

  auto* prext_cmd =
      app.add_subcommand("prext", "Solve pre-coloring extension for a graph "
                                  "and a family file");
  prext_cmd->add_option("graph", config.graph_path)->required();
  prext_cmd->add_option("family", config.family_path)->required();
  prext_cmd->add_option("-k", config.k, "Decide with exactly k colors "
                                        "(default: optimize)");
  prext_cmd->add_flag("--co", config.co,
                      "Family classes are cliques; solve the clique-cover side");
  prext_cmd->add_option("--node-budget", config.node_budget,
                        "Solver node budget");

  auto* contract_cmd =
      app.add_subcommand("contract", "Emit the (co-)contracted graph in DIMACS");
  contract_cmd->add_option("graph", config.graph_path)->required();
  contract_cmd->add_option("family", config.family_path)->required();
  contract_cmd->add_flag("--co", config.co, "Co-contract (clique classes)");

  auto* verify = app.add_subcommand("verify", "Run a verification property");
  verify
      ->add_option("property", config.property,
                   "theorem1|theorem2|lemma1|lemmas|closure")
      ->required();
  verify->add_option("--nmax", config.n_max, "Exhaustive size bound");
  verify->add_option("--samples", config.samples, "Sampled graphs beyond nmax");
  verify->add_option("--seed", config.seed, "Sampling seed")
      ->each([&](const std::string&) { config.seed_set = true; });

  auto* gen = app.add_subcommand("gen", "Generate seeded random graphs");
  gen->add_option("class", config.gen_class, "any|meyniel|co-meyniel")->required();
  gen->add_option("n", config.n, "Vertex count")->required();
  gen->add_option("count", config.count, "Number of graphs")->required();
  gen->add_option("--seed", config.seed, "Sampling seed")
      ->each([&](const std::string&) { config.seed_set = true; });
  gen->add_option("--out", config.out_path,
                  "Output file prefix (one .col file per graph)");

  for (CLI::App* sub : {classify, prext_cmd, contract_cmd, verify}) {
    sub->add_option("--format", config.format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", config.out_path, "Write output to a file");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input_error;
  }

  try {
    if (app.got_subcommand(classify)) return cmd_classify(config);
    if (app.got_subcommand(prext_cmd)) return cmd_prext(config);
    if (app.got_subcommand(contract_cmd)) return cmd_contract(config);
    if (app.got_subcommand(verify)) return cmd_verify(config);
    if (app.got_subcommand(gen)) return cmd_gen(config);
  } catch (const prext::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return exit_input_error;
  } catch (const prext::GuardError& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return exit_resource_guard;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return exit_input_error;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input_error;
  }
  return exit_input_error;
}
