#ifndef PREXT_IO_HPP
#define PREXT_IO_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "prext/detect.hpp"
#include "prext/family.hpp"
#include "prext/graph.hpp"
#include "prext/harness.hpp"
#include "prext/solve.hpp"

namespace prext {

// Parsed graph plus the external numeric label of each internal id (1-based
// for DIMACS, 0-based for edge lists).
struct LoadedGraph {
  Graph graph;
  std::vector<long long> labels;
};

// DIMACS .col: `c` comments, one `p edge <n> <m>` line, `e <u> <v>` lines
// with 1-based endpoints.  Duplicate and reversed edge lines are tolerated.
LoadedGraph parse_dimacs(std::istream& in);

// Compact edge list: first line n, then one `u v` pair per line, 0-based.
LoadedGraph parse_edge_list(std::istream& in);

// Sniffs the format: DIMACS when the first token is `c` or `p`.
LoadedGraph read_graph(std::istream& in);
LoadedGraph read_graph_file(const std::string& path);

void write_dimacs(std::ostream& out, const Graph& g,
                  std::span<const std::string> comments = {});
void write_edge_list(std::ostream& out, const Graph& g);
std::string edge_list_string(const Graph& g);
Graph parse_edge_list_string(const std::string& text);

// Family file: lines `q <j>: <v1> <v2> ...` with 0-based vertex ids and
// class indices covering 1..m; `c` comments and blank lines are skipped.
// Whether the classes must be stable sets or cliques is decided by the
// caller's validation.
Family parse_family(std::istream& in);
Family parse_family_file(const std::string& path);
Family parse_family_string(const std::string& text);
std::string family_string(const Family& q);

// JSON views.  `labels` maps internal ids to external ones (empty = identity).
nlohmann::json witness_json(const Witness& w,
                            std::span<const long long> labels = {});
nlohmann::json class_report_json(const ClassReport& report,
                                 std::span<const long long> labels = {});
nlohmann::json prext_answer_json(const PrextAnswer& answer,
                                 std::span<const long long> labels = {});
nlohmann::json report_json(const VerificationReport& report);

// Human-readable views with the same content.
std::string witness_text(const Witness& w, std::span<const long long> labels = {});
std::string class_report_text(const ClassReport& report,
                              std::span<const long long> labels = {});
std::string prext_answer_text(const PrextAnswer& answer,
                              std::span<const long long> labels = {});
std::string report_text(const VerificationReport& report);

}  // namespace prext

#endif
