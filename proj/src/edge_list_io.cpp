#include "kcut/edge_list_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "kcut/error.hpp"

namespace kcut {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw InvalidInput("line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

long long parse_index(const std::string& t, std::size_t line) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(t, &used);
    if (used != t.size()) fail(line, "malformed integer '" + t + "'");
    return v;
  } catch (const std::logic_error&) {
    fail(line, "malformed integer '" + t + "'");
  }
}

}  // namespace

MultiGraph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  long long declared_m = 0;
  MultiGraph g;
  std::size_t edges = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto t = tokens(line);
    if (t.empty()) continue;
    if (!have_header) {
      if (t.size() != 4 || t[0] != "p") fail(lineno, "expected header 'p <n> <m> <weighted|multi>'");
      long long n = parse_index(t[1], lineno);
      declared_m = parse_index(t[2], lineno);
      if (n < 0 || n > (1LL << 30)) fail(lineno, "vertex count out of range");
      if (declared_m < 0) fail(lineno, "negative edge count");
      GraphMode mode;
      if (t[3] == "weighted") mode = GraphMode::weighted;
      else if (t[3] == "multi") mode = GraphMode::multi;
      else fail(lineno, "unknown mode '" + t[3] + "'");
      g = MultiGraph(static_cast<Vertex>(n), mode);
      have_header = true;
      continue;
    }
    if (t.size() != 3) fail(lineno, "expected 'u v w'");
    long long u = parse_index(t[0], lineno);
    long long v = parse_index(t[1], lineno);
    if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count())
      fail(lineno, "endpoint out of range");
    try {
      g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v), parse_rational(t[2]));
    } catch (const InvalidInput& e) {
      fail(lineno, e.what());
    }
    ++edges;
  }
  if (!have_header) fail(lineno, "missing header line");
  if (static_cast<long long>(edges) != declared_m)
    fail(lineno, "header declares " + std::to_string(declared_m) + " edges, found " +
                     std::to_string(edges));
  return g;
}

MultiGraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const MultiGraph& g) {
  out << "p " << g.vertex_count() << ' ' << g.edge_count() << ' '
      << (g.is_multi() ? "multi" : "weighted") << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << format_rational(e.weight) << '\n';
}

std::string to_edge_list(const MultiGraph& g) {
  std::ostringstream os;
  write_edge_list(os, g);
  return os.str();
}

}  // namespace kcut
