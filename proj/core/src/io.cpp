#include "prext/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "prext/errors.hpp"

namespace prext {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> tokens;
  std::string t;
  while (ss >> t) tokens.push_back(t);
  return tokens;
}

long long parse_int(const std::string& token, int line) {
  std::size_t pos = 0;
  long long value = 0;
  try {
    value = std::stoll(token, &pos);
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + token + "'", line);
  }
  if (pos != token.size())
    throw ParseError("expected an integer, got '" + token + "'", line);
  return value;
}

}  // namespace

LoadedGraph parse_dimacs(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<std::pair<Vertex, Vertex>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens[0] == "c") continue;
    if (tokens[0] == "p") {
      if (n >= 0) throw ParseError("duplicate problem line", lineno);
      if (tokens.size() != 4 || tokens[1] != "edge")
        throw ParseError("expected 'p edge <n> <m>'", lineno);
      const long long nn = parse_int(tokens[2], lineno);
      if (nn < 0 || nn > Graph::max_vertices)
        throw ParseError("vertex count out of range", lineno);
      if (parse_int(tokens[3], lineno) < 0)
        throw ParseError("negative edge count", lineno);
      n = static_cast<int>(nn);
      continue;
    }
    if (tokens[0] == "e") {
      if (n < 0) throw ParseError("edge before problem line", lineno);
      if (tokens.size() != 3) throw ParseError("expected 'e <u> <v>'", lineno);
      const long long u = parse_int(tokens[1], lineno);
      const long long v = parse_int(tokens[2], lineno);
      if (u < 1 || u > n || v < 1 || v > n)
        throw ParseError("vertex id out of range 1.." + std::to_string(n), lineno);
      if (u == v) throw ParseError("self loop", lineno);
      edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
      continue;
    }
    throw ParseError("unrecognized line '" + tokens[0] + " ...'", lineno);
  }
  if (n < 0) throw ParseError("missing problem line", lineno + 1);
  LoadedGraph out;
  out.graph = Graph(n, edges);
  for (int i = 0; i < n; ++i) out.labels.push_back(i + 1);
  return out;
}

LoadedGraph parse_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<std::pair<Vertex, Vertex>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (n < 0) {
      if (tokens.size() != 1)
        throw ParseError("expected the vertex count alone on the first line",
                         lineno);
      const long long nn = parse_int(tokens[0], lineno);
      if (nn < 0 || nn > Graph::max_vertices)
        throw ParseError("vertex count out of range", lineno);
      n = static_cast<int>(nn);
      continue;
    }
    if (tokens.size() != 2) throw ParseError("expected '<u> <v>'", lineno);
    const long long u = parse_int(tokens[0], lineno);
    const long long v = parse_int(tokens[1], lineno);
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError("vertex id out of range 0.." + std::to_string(n - 1),
                       lineno);
    if (u == v) throw ParseError("self loop", lineno);
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (n < 0) throw ParseError("empty edge-list input", lineno + 1);
  LoadedGraph out;
  out.graph = Graph(n, edges);
  for (int i = 0; i < n; ++i) out.labels.push_back(i);
  return out;
}

LoadedGraph read_graph(std::istream& in) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  std::istringstream probe(text);
  std::string line;
  int lineno = 0;
  while (std::getline(probe, line)) {
    ++lineno;
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    std::istringstream data(text);
    if (tokens[0] == "c" || tokens[0] == "p") return parse_dimacs(data);
    return parse_edge_list(data);
  }
  throw ParseError("empty graph input", lineno + 1);
}

LoadedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return read_graph(in);
}

void write_dimacs(std::ostream& out, const Graph& g,
                  std::span<const std::string> comments) {
  for (const std::string& c : comments) out << "c " << c << "\n";
  out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

std::string edge_list_string(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

Graph parse_edge_list_string(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in).graph;
}

Family parse_family(std::istream& in) {
  std::string line;
  int lineno = 0;
  std::map<int, VertexSet> classes;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto tokens = tokenize(line);
    if (tokens.empty() || tokens[0] == "c") continue;
    if (tokens[0] != "q" || tokens.size() < 2)
      throw ParseError("expected 'q <j>: <v1> <v2> ...'", lineno);
    std::string jtok = tokens[1];
    if (jtok.empty() || jtok.back() != ':')
      throw ParseError("class index must be followed by ':'", lineno);
    jtok.pop_back();
    const long long j = parse_int(jtok, lineno);
    if (j < 1 || j > 63) throw ParseError("class index out of range", lineno);
    if (classes.count(static_cast<int>(j)))
      throw ParseError("duplicate class index " + std::to_string(j), lineno);
    VertexSet members;
    for (std::size_t i = 2; i < tokens.size(); ++i) {
      const long long v = parse_int(tokens[i], lineno);
      if (v < 0 || v >= Graph::max_vertices)
        throw ParseError("vertex id out of range", lineno);
      members.add(static_cast<Vertex>(v));
    }
    classes[static_cast<int>(j)] = members;
  }
  std::vector<VertexSet> ordered;
  int expected = 1;
  for (const auto& [j, members] : classes) {
    if (j != expected)
      throw ParseError("class indices must cover 1..m; missing " +
                           std::to_string(expected),
                       lineno + 1);
    ++expected;
    ordered.push_back(members);
  }
  return Family(ordered);
}

Family parse_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open family file: " + path);
  return parse_family(in);
}

Family parse_family_string(const std::string& text) {
  std::istringstream in(text);
  return parse_family(in);
}

std::string family_string(const Family& q) {
  std::ostringstream out;
  for (int j = 1; j <= q.size(); ++j) {
    out << "q " << j << ":";
    for (Vertex v : q.class_at(j)) out << " " << v;
    out << "\n";
  }
  return out.str();
}

namespace {

long long map_label(Vertex v, std::span<const long long> labels) {
  return labels.empty() ? v : labels[static_cast<std::size_t>(v)];
}

nlohmann::json vertex_array(std::span<const Vertex> vs,
                            std::span<const long long> labels) {
  nlohmann::json arr = nlohmann::json::array();
  for (Vertex v : vs) arr.push_back(map_label(v, labels));
  return arr;
}

}  // namespace

nlohmann::json witness_json(const Witness& w, std::span<const long long> labels) {
  nlohmann::json extra = nlohmann::json::object();
  switch (w.kind) {
    case WitnessKind::House:
      extra["chord"] = nlohmann::json::array(
          {map_label(w.chords[0].first, labels),
           map_label(w.chords[0].second, labels)});
      break;
    case WitnessKind::OddCycleFewChords: {
      nlohmann::json chords = nlohmann::json::array();
      for (auto [a, b] : w.chords)
        chords.push_back(nlohmann::json::array(
            {map_label(a, labels), map_label(b, labels)}));
      extra["chords"] = chords;
      break;
    }
    case WitnessKind::Prism: {
      const auto [r, s, t] = w.prism_lengths;
      std::span<const Vertex> all(w.vertices);
      extra["paths"] = nlohmann::json::array(
          {vertex_array(all.subspan(0, r + 1), labels),
           vertex_array(all.subspan(r + 1, s + 1), labels),
           vertex_array(all.subspan(r + s + 2, t + 1), labels)});
      extra["triangle_a"] = nlohmann::json::array(
          {map_label(all[0], labels), map_label(all[r + 1], labels),
           map_label(all[r + s + 2], labels)});
      extra["triangle_b"] = nlohmann::json::array(
          {map_label(all[r], labels), map_label(all[r + s + 1], labels),
           map_label(all[r + s + t + 2], labels)});
      break;
    }
    default:
      break;
  }
  return nlohmann::json{{"kind", std::string(to_string(w.kind))},
                        {"vertices", vertex_array(w.vertices, labels)},
                        {"extra", extra}};
}

namespace {

nlohmann::json optional_witness_json(const std::optional<Witness>& w,
                                     std::span<const long long> labels) {
  return w ? witness_json(*w, labels) : nlohmann::json(nullptr);
}

}  // namespace

nlohmann::json class_report_json(const ClassReport& report,
                                 std::span<const long long> labels) {
  return nlohmann::json{
      {"is_meyniel", report.meyniel},
      {"meyniel_witness", optional_witness_json(report.meyniel_witness, labels)},
      {"is_artemis", report.artemis},
      {"artemis_witness", optional_witness_json(report.artemis_witness, labels)},
      {"is_berge", report.berge},
      {"berge_witness", optional_witness_json(report.berge_witness, labels)},
      {"is_co_meyniel", report.co_meyniel},
      {"co_meyniel_witness",
       optional_witness_json(report.co_meyniel_witness, labels)},
  };
}

nlohmann::json prext_answer_json(const PrextAnswer& answer,
                                 std::span<const long long> labels) {
  nlohmann::json j{{"feasible", answer.feasible},
                   {"colors_used", nullptr},
                   {"assignment", nullptr},
                   {"contracted_size", answer.contracted.graph.vertex_count()}};
  if (answer.colors_used) j["colors_used"] = *answer.colors_used;
  if (answer.extension) {
    nlohmann::json assignment = nlohmann::json::array();
    for (Vertex v = 0; v < static_cast<int>(answer.extension->color.size()); ++v)
      assignment.push_back(nlohmann::json::array(
          {map_label(v, labels), answer.extension->color[v]}));
    j["assignment"] = assignment;
  }
  return j;
}

nlohmann::json report_json(const VerificationReport& report) {
  nlohmann::json violations = nlohmann::json::array();
  for (const Violation& v : report.violations)
    violations.push_back(nlohmann::json{
        {"graph", v.graph},
        {"family", v.family},
        {"witness", optional_witness_json(v.witness, {})},
        {"detail", v.detail}});
  return nlohmann::json{{"property", report.property},
                        {"scope", report.scope},
                        {"checked", report.checked},
                        {"violations", violations},
                        {"notes", report.notes}};
}

std::string witness_text(const Witness& w, std::span<const long long> labels) {
  std::string out(to_string(w.kind));
  out += " [";
  for (std::size_t i = 0; i < w.vertices.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(map_label(w.vertices[i], labels));
  }
  out += "]";
  if (w.kind == WitnessKind::House)
    out += " chord (" + std::to_string(map_label(w.chords[0].first, labels)) +
           "," + std::to_string(map_label(w.chords[0].second, labels)) + ")";
  if (w.kind == WitnessKind::Prism)
    out += " paths r=" + std::to_string(w.prism_lengths[0]) +
           " s=" + std::to_string(w.prism_lengths[1]) +
           " t=" + std::to_string(w.prism_lengths[2]);
  if (w.kind == WitnessKind::OddCycleFewChords)
    out += " chords: " + std::to_string(w.chords.size());
  return out;
}

namespace {

void flag_line(std::string& out, const char* name, bool value,
               const std::optional<Witness>& w,
               std::span<const long long> labels) {
  out += name;
  out += value ? ": yes" : ": no";
  if (w) {
    out += "  witness: ";
    out += witness_text(*w, labels);
  }
  out += "\n";
}

}  // namespace

std::string class_report_text(const ClassReport& report,
                              std::span<const long long> labels) {
  std::string out;
  flag_line(out, "meyniel", report.meyniel, report.meyniel_witness, labels);
  flag_line(out, "artemis", report.artemis, report.artemis_witness, labels);
  flag_line(out, "berge", report.berge, report.berge_witness, labels);
  flag_line(out, "co-meyniel (witness ids refer to the complement)",
            report.co_meyniel, report.co_meyniel_witness, labels);
  return out;
}

std::string prext_answer_text(const PrextAnswer& answer,
                              std::span<const long long> labels) {
  std::string out = answer.feasible ? "feasible: yes\n" : "feasible: no\n";
  if (answer.colors_used)
    out += "colors used: " + std::to_string(*answer.colors_used) + "\n";
  out += "contracted size: " +
         std::to_string(answer.contracted.graph.vertex_count()) + "\n";
  if (answer.extension) {
    out += "assignment:\n";
    for (Vertex v = 0; v < static_cast<int>(answer.extension->color.size()); ++v)
      out += "  " + std::to_string(map_label(v, labels)) + " -> " +
             std::to_string(answer.extension->color[v]) + "\n";
  }
  return out;
}

std::string report_text(const VerificationReport& report) {
  std::string out;
  out += "property: " + report.property + "\n";
  out += "scope: " + report.scope + "\n";
  out += "checked: " + std::to_string(report.checked) + "\n";
  out += "violations: " + std::to_string(report.violations.size()) + "\n";
  for (const std::string& note : report.notes) out += "note: " + note + "\n";
  for (const Violation& v : report.violations) {
    out += "violation: " + v.detail + "\n";
    std::istringstream graph_lines(v.graph);
    std::string line;
    while (std::getline(graph_lines, line)) out += "  graph| " + line + "\n";
    std::istringstream family_lines(v.family);
    while (std::getline(family_lines, line)) out += "  family| " + line + "\n";
    if (v.witness) out += "  witness| " + witness_text(*v.witness, {}) + "\n";
  }
  return out;
}

}  // namespace prext
