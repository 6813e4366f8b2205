#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "er/graph.hpp"

namespace er {

void dimacs_write(const Graph& g, std::ostream& os) {
  if (!g.loops().empty()) {
    os << "c loops:";
    for (auto v : g.loops()) os << " " << v + 1;
    os << "\n";
  }
  os << "p edge " << g.n() << " " << g.edge_count() << "\n";
  for (std::uint32_t u = 0; u < g.n(); ++u)
    for (std::uint32_t v : g.neighbors(u))
      if (v > u) os << "e " << u + 1 << " " << v + 1 << "\n";
}

Graph dimacs_parse(std::istream& is) {
  std::string line;
  bool have_p = false;
  std::uint32_t n = 0;
  std::uint64_t m = 0, seen = 0;
  Graph g(0);
  std::vector<std::uint32_t> loops;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == 'c') {
      std::istringstream ls(line);
      std::string c, tag;
      ls >> c >> tag;
      if (tag == "loops:") {
        std::uint64_t v;
        while (ls >> v) {
          if (v < 1) throw Error("loop vertex out of range");
          loops.push_back(std::uint32_t(v - 1));
        }
      }
      continue;
    }
    std::istringstream ls(line);
    std::string kind;
    ls >> kind;
    if (kind == "p") {
      std::string fmt;
      ls >> fmt >> n >> m;
      if (!ls || fmt != "edge") throw Error("bad problem line");
      g = Graph(n);
      have_p = true;
    } else if (kind == "e") {
      if (!have_p) throw Error("edge before problem line");
      std::uint64_t u, v;
      ls >> u >> v;
      if (!ls || u < 1 || v < 1 || u > n || v > n || u == v) throw Error("bad edge line");
      g.add_edge(std::uint32_t(u - 1), std::uint32_t(v - 1));
      ++seen;
    } else {
      throw Error("unrecognized line: " + line);
    }
  }
  if (!have_p) throw Error("missing problem line");
  if (seen != m) throw Error("edge count does not match problem line");
  for (auto v : loops) {
    if (v >= n) throw Error("loop vertex out of range");
    g.add_loop(v);
  }
  g.finalize_loops();
  return g;
}

}  // namespace er
