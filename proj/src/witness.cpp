#include "er/witness.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

#include "er/chrom4.hpp"
#include "er/graph.hpp"
#include "er/polarity.hpp"

namespace er {

namespace {

Field field_from_str(const std::string& s) {
  std::size_t caret = s.find('^'), slash = s.find('/');
  if (caret == std::string::npos || slash == std::string::npos || caret > slash)
    throw Error("malformed field string");
  unsigned long long p = std::stoull(s.substr(0, caret));
  unsigned long n = std::stoul(s.substr(caret + 1, slash - caret - 1));
  std::vector<fe> mod;
  std::stringstream cs(s.substr(slash + 1));
  std::string tok;
  while (std::getline(cs, tok, ',')) mod.push_back(fe(std::stoul(tok)));
  if (n == 1) return Field(fe(p), 1);
  return Field(fe(p), unsigned(n), mod);
}

struct HName {
  enum Kind { Apex, Class, Affine } kind;
  std::uint32_t zi = 0;  // Class: index in [1, q]
  fe x1 = 0, x2 = 0;     // Affine coordinates
};

HName parse_name(const Field& F, const std::string& s) {
  const std::uint64_t q = F.q();
  if (s == "y") return {HName::Apex, 0, 0, 0};
  if (s.rfind("z:", 0) == 0) {
    unsigned long i = std::stoul(s.substr(2));
    if (i < 1 || i > q) throw Error("class index out of range");
    return {HName::Class, std::uint32_t(i), 0, 0};
  }
  if (s.rfind("a:", 0) == 0) {
    std::size_t comma = s.find(',', 2);
    if (comma == std::string::npos) throw Error("malformed affine name");
    unsigned long a = std::stoul(s.substr(2, comma - 2));
    unsigned long b = std::stoul(s.substr(comma + 1));
    if (a >= q || b >= q) throw Error("affine coordinate out of range");
    return {HName::Affine, 0, fe(a), fe(b)};
  }
  throw Error("unrecognized vertex name");
}

fe class_rep(const Field& F, std::uint32_t zi) { return zi == F.q() ? 0 : fe(zi); }

bool rule_adjacent(const Field& F, const HName& u, const HName& v) {
  if (u.kind == HName::Apex) return v.kind == HName::Class;
  if (v.kind == HName::Apex) return u.kind == HName::Class;
  if (u.kind == HName::Class && v.kind == HName::Class) return false;
  if (u.kind == HName::Class) return class_rep(F, u.zi) == v.x1;
  if (v.kind == HName::Class) return class_rep(F, v.zi) == u.x1;
  fe s = F.add(u.x1, v.x1);
  return F.mul(s, s) == F.add(u.x2, v.x2);
}

std::array<fe, 3> point_image(const Field& F, const HName& v) {
  if (v.kind == HName::Apex) return {0, 0, 1};
  if (v.kind == HName::Class) return {0, 1, class_rep(F, v.zi)};
  fe half = F.inv(F.scalar(2));
  return {1, v.x1, F.mul(half, F.sub(v.x2, F.mul(v.x1, v.x1)))};
}

std::vector<std::uint32_t> reversed_order(const Graph& g) {
  std::vector<std::uint32_t> order(g.n());
  for (std::uint32_t i = 0; i < g.n(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) < g.degree(b);
    return a > b;
  });
  return order;
}

}  // namespace

Witness build_witness(const Field& F) {
  const std::uint32_t q = std::uint32_t(F.q());
  Witness w;
  w.field = F.str();
  w.alphas = find_alphas(F, 5);
  for (unsigned i = 0; i < 5; ++i)
    for (unsigned j = i + 1; j < 5; ++j) {
      fe s = F.add(w.alphas[i], w.alphas[j]);
      auto rt = F.sqrt_min(s);
      if (!rt || F.mul(*rt, *rt) != s) throw Error("pair sum is not a square");
      w.roots.push_back(*rt);
    }

  std::vector<HName> vs;
  vs.push_back({HName::Apex, 0, 0, 0});
  w.names.push_back("y");
  for (fe a : w.alphas) {
    std::uint32_t zi = (a == 0) ? q : std::uint32_t(a);
    vs.push_back({HName::Class, zi, 0, 0});
    w.names.push_back("z:" + std::to_string(zi));
  }
  std::map<std::pair<fe, fe>, std::uint32_t> seen;
  auto add_affine = [&](fe x1, fe x2) {
    auto key = std::make_pair(x1, x2);
    if (seen.count(key)) return;
    seen.emplace(key, std::uint32_t(vs.size()));
    vs.push_back({HName::Affine, 0, x1, x2});
    w.names.push_back("a:" + std::to_string(x1) + "," + std::to_string(x2));
  };
  auto sqsum = [&](unsigned i, unsigned j) {
    fe s = F.add(w.alphas[i], w.alphas[j]);
    return F.mul(s, s);
  };
  for (unsigned i = 0; i < 5; ++i)
    for (unsigned j = i + 1; j < 5; ++j)
      for (unsigned k = j + 1; k < 5; ++k) {
        Triangle t = triangle_solve(F, sqsum(i, j), sqsum(j, k), sqsum(i, k));
        if (F.add(t.u, t.v) != sqsum(i, j) || F.add(t.v, t.w) != sqsum(j, k) ||
            F.add(t.u, t.w) != sqsum(i, k))
          throw Error("triangle solve failed");
        add_affine(w.alphas[i], t.u);
        add_affine(w.alphas[j], t.v);
        add_affine(w.alphas[k], t.w);
      }

  Graph g(std::uint32_t(vs.size()));
  for (std::uint32_t a = 0; a < vs.size(); ++a)
    for (std::uint32_t b = a + 1; b < vs.size(); ++b)
      if (rule_adjacent(F, vs[a], vs[b])) {
        g.add_edge(a, b);
        w.edges.push_back({a, b});
      }
  if (exact_k_colorable(g, 3).colorable)
    throw NotFourChromatic("assembled subgraph admits a 3-coloring");
  return w;
}

std::string witness_format(const Witness& w) {
  std::ostringstream os;
  os << "witness_v1\n";
  os << "field " << w.field << "\n";
  os << "alphas";
  for (fe a : w.alphas) os << ' ' << a;
  os << "\nroots";
  for (fe r : w.roots) os << ' ' << r;
  os << "\nvertices " << w.names.size() << "\n";
  for (auto& s : w.names) os << s << "\n";
  os << "edges " << w.edges.size() << "\n";
  for (auto& [u, v] : w.edges) os << u << ' ' << v << "\n";
  return os.str();
}

Witness witness_parse(const std::string& text) {
  std::istringstream is(text);
  std::string line, tag;
  Witness w;
  if (!std::getline(is, line) || line != "witness_v1") throw Error("missing witness header");
  if (!std::getline(is, line)) throw Error("missing field line");
  {
    std::istringstream ls(line);
    if (!(ls >> tag >> w.field) || tag != "field") throw Error("malformed field line");
  }
  if (!std::getline(is, line)) throw Error("missing alphas line");
  {
    std::istringstream ls(line);
    if (!(ls >> tag) || tag != "alphas") throw Error("malformed alphas line");
    std::uint64_t v;
    while (ls >> v) w.alphas.push_back(fe(v));
  }
  if (!std::getline(is, line)) throw Error("missing roots line");
  {
    std::istringstream ls(line);
    if (!(ls >> tag) || tag != "roots") throw Error("malformed roots line");
    std::uint64_t v;
    while (ls >> v) w.roots.push_back(fe(v));
  }
  std::size_t nv = 0, ne = 0;
  if (!std::getline(is, line)) throw Error("missing vertices line");
  {
    std::istringstream ls(line);
    if (!(ls >> tag >> nv) || tag != "vertices" || nv == 0 || nv > 10000)
      throw Error("malformed vertices line");
  }
  for (std::size_t i = 0; i < nv; ++i) {
    if (!std::getline(is, line) || line.empty()) throw Error("missing vertex name");
    w.names.push_back(line);
  }
  if (!std::getline(is, line)) throw Error("missing edges line");
  {
    std::istringstream ls(line);
    if (!(ls >> tag >> ne) || tag != "edges") throw Error("malformed edges line");
  }
  for (std::size_t i = 0; i < ne; ++i) {
    std::uint32_t u, v;
    if (!std::getline(is, line)) throw Error("missing edge line");
    std::istringstream ls(line);
    if (!(ls >> u >> v) || u >= v || v >= nv) throw Error("malformed edge line");
    w.edges.push_back({u, v});
  }
  return w;
}

WitnessReport witness_verify(const Witness& w) {
  Field F = field_from_str(w.field);
  WitnessReport rep;
  rep.vertices = std::uint32_t(w.names.size());

  rep.alphas_ok = w.alphas.size() == 5;
  for (unsigned i = 0; rep.alphas_ok && i < 5; ++i) {
    if (w.alphas[i] >= F.q() || (i + 1 < 5 && w.alphas[i] >= w.alphas[i + 1]))
      rep.alphas_ok = false;
    for (unsigned j = i + 1; rep.alphas_ok && j < 5; ++j)
      if (F.quad_char(F.add(w.alphas[i], w.alphas[j])) != 1) rep.alphas_ok = false;
  }

  rep.roots_ok = rep.alphas_ok && w.roots.size() == 10;
  if (rep.roots_ok) {
    unsigned idx = 0;
    for (unsigned i = 0; i < 5; ++i)
      for (unsigned j = i + 1; j < 5; ++j, ++idx)
        if (w.roots[idx] >= F.q() ||
            F.mul(w.roots[idx], w.roots[idx]) != F.add(w.alphas[i], w.alphas[j]))
          rep.roots_ok = false;
  }

  std::vector<HName> vs;
  rep.names_ok = !w.names.empty() && w.names.size() <= 36;
  try {
    for (auto& s : w.names) vs.push_back(parse_name(F, s));
  } catch (const Error&) {
    rep.names_ok = false;
  }
  {
    auto sorted = w.names;
    std::sort(sorted.begin(), sorted.end());
    if (std::unique(sorted.begin(), sorted.end()) != sorted.end()) rep.names_ok = false;
  }
  if (!rep.names_ok) return rep;

  // rebuild the edge set from the adjacency rules and compare
  std::vector<std::pair<std::uint32_t, std::uint32_t>> rebuilt;
  Graph g(std::uint32_t(vs.size()));
  for (std::uint32_t a = 0; a < vs.size(); ++a)
    for (std::uint32_t b = a + 1; b < vs.size(); ++b)
      if (rule_adjacent(F, vs[a], vs[b])) {
        rebuilt.push_back({a, b});
        g.add_edge(a, b);
      }
  auto stored = w.edges;
  std::sort(stored.begin(), stored.end());
  rep.edges_ok = stored == rebuilt;

  // independent route: polarity-point images must reproduce the adjacency
  rep.transport_ok = true;
  std::vector<std::array<fe, 3>> pts;
  for (auto& v : vs) pts.push_back(point_image(F, v));
  for (std::uint32_t a = 0; a < vs.size() && rep.transport_ok; ++a)
    for (std::uint32_t b = a + 1; b < vs.size(); ++b) {
      if (pts[a] == pts[b] || er_adjacent(F, pts[a], pts[b]) != rule_adjacent(F, vs[a], vs[b])) {
        rep.transport_ok = false;
        break;
      }
    }

  auto r1 = exact_k_colorable(g, 3);
  rep.refuted_first = !r1.colorable;
  rep.nodes_first = r1.nodes;
  auto r2 = exact_k_colorable(g, 3, reversed_order(g));
  rep.refuted_second = !r2.colorable;
  rep.nodes_second = r2.nodes;

  for (std::uint32_t i = 0; i < vs.size(); ++i)
    if (vs[i].kind == HName::Apex) {
      std::vector<std::uint32_t> rest;
      for (std::uint32_t j = 0; j < vs.size(); ++j)
        if (j != i) rest.push_back(j);
      auto sub = subgraph_induced(g, rest);
      rep.apexless_3colorable = exact_k_colorable(sub.g, 3).colorable;
      break;
    }
  return rep;
}

}  // namespace er
