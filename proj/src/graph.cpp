#include "er/graph.hpp"

#include <algorithm>
#include <queue>
#include <bit>

namespace er {

namespace {
std::uint32_t popcount_row(const std::uint64_t* w, std::size_t words) {
  std::uint32_t c = 0;
  for (std::size_t i = 0; i < words; ++i) c += std::popcount(w[i]);
  return c;
}
}  // namespace

Graph::Graph(std::uint32_t n) : n_(n), words_((std::size_t(n) + 63) / 64) {
  bits_.assign(std::size_t(n_) * words_, 0);
}

void Graph::add_edge(std::uint32_t u, std::uint32_t v) {
  if (u == v) throw Error("use add_loop for loops");
  set_arc(u, v);
  set_arc(v, u);
}

void Graph::add_loop(std::uint32_t v) { loops_.push_back(v); }

void Graph::finalize_loops() {
  std::sort(loops_.begin(), loops_.end());
  loops_.erase(std::unique(loops_.begin(), loops_.end()), loops_.end());
}

bool Graph::has_loop(std::uint32_t v) const {
  return std::binary_search(loops_.begin(), loops_.end(), v);
}

std::uint32_t Graph::degree(std::uint32_t v) const { return popcount_row(row(v), words_); }

std::uint64_t Graph::edge_count() const {
  std::uint64_t total = 0;
#pragma omp parallel for reduction(+ : total) schedule(static)
  for (std::int64_t v = 0; v < std::int64_t(n_); ++v) total += degree(std::uint32_t(v));
  return total / 2;
}

std::vector<std::uint32_t> Graph::neighbors(std::uint32_t v) const {
  std::vector<std::uint32_t> out;
  const std::uint64_t* r = row(v);
  for (std::size_t i = 0; i < words_; ++i) {
    std::uint64_t w = r[i];
    while (w) {
      out.push_back(std::uint32_t(i * 64 + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

GraphStats graph_stats(const Graph& g) {
  GraphStats s{g.n(), 0, 0, std::uint32_t(g.loops().size())};
  std::uint64_t m = 0;
  std::uint32_t maxd = 0;
#pragma omp parallel for reduction(+ : m) reduction(max : maxd) schedule(static)
  for (std::int64_t v = 0; v < std::int64_t(g.n()); ++v) {
    std::uint32_t d = g.degree(std::uint32_t(v));
    m += d;
    maxd = std::max(maxd, d);
  }
  s.m = m / 2;
  s.max_degree = maxd;
  return s;
}

namespace {
// Two common neighbors of a pair u < v; returns the first pair's first two
// common neighbors when scanning u, then v, lexicographically.
std::optional<C4Witness> c4_from_pair(const Graph& g, std::uint32_t u, std::uint32_t v) {
  const std::uint64_t* ru = g.row(u);
  const std::uint64_t* rv = g.row(v);
  std::uint32_t first = UINT32_MAX;
  for (std::size_t i = 0; i < g.words(); ++i) {
    std::uint64_t w = ru[i] & rv[i];
    while (w) {
      std::uint32_t x = std::uint32_t(i * 64 + std::countr_zero(w));
      if (first == UINT32_MAX)
        first = x;
      else
        return C4Witness{u, first, v, x};
      w &= w - 1;
    }
  }
  return std::nullopt;
}
}  // namespace

std::optional<C4Witness> find_c4(const Graph& g) {
  for (std::uint32_t u = 0; u + 1 < g.n(); ++u)
    for (std::uint32_t v = u + 1; v < g.n(); ++v)
      if (auto w = c4_from_pair(g, u, v)) return w;
  return std::nullopt;
}

bool c4_exists_serial(const Graph& g) { return find_c4(g).has_value(); }

bool c4_exists(const Graph& g) {
  bool found = false;
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t u = 0; u < std::int64_t(g.n()) - 1; ++u) {
    if (found) continue;
    for (std::uint32_t v = std::uint32_t(u) + 1; v < g.n(); ++v)
      if (c4_from_pair(g, std::uint32_t(u), v)) {
        found = true;
        break;
      }
  }
  return found;
}

DegeneracyResult degeneracy_order(const Graph& g) {
  std::uint32_t n = g.n();
  std::vector<std::uint32_t> deg(n);
  for (std::uint32_t v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<char> removed(n, 0);
  std::vector<std::uint32_t> removal;
  removal.reserve(n);
  std::uint32_t degeneracy = 0;
  // lazy min-heap over (current degree, id); stale entries are skipped
  using Entry = std::pair<std::uint32_t, std::uint32_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
  for (std::uint32_t v = 0; v < n; ++v) heap.push({deg[v], v});
  for (std::uint32_t step = 0; step < n; ++step) {
    std::uint32_t v;
    std::uint32_t d;
    while (true) {
      auto [dd, vv] = heap.top();
      heap.pop();
      if (!removed[vv] && deg[vv] == dd) {
        v = vv;
        d = dd;
        break;
      }
    }
    removed[v] = 1;
    removal.push_back(v);
    degeneracy = std::max(degeneracy, d);
    for (std::uint32_t u : g.neighbors(v))
      if (!removed[u]) {
        --deg[u];
        heap.push({deg[u], u});
      }
  }
  std::reverse(removal.begin(), removal.end());
  return {std::move(removal), degeneracy};
}

namespace {
void check_order(std::uint32_t n, const std::vector<std::uint32_t>& order) {
  if (order.size() != n) throw BadOrder("order must list every vertex exactly once");
  std::vector<char> seen(n, 0);
  for (auto v : order) {
    if (v >= n || seen[v]) throw BadOrder("order must be a permutation of the vertices");
    seen[v] = 1;
  }
}
}  // namespace

Coloring greedy_color(const Graph& g, const std::vector<std::uint32_t>& order) {
  check_order(g.n(), order);
  std::vector<std::uint32_t> color(g.n(), UINT32_MAX);
  std::vector<std::uint32_t> mark(g.n() + 1, UINT32_MAX);
  std::uint32_t palette = 0;
  for (std::uint32_t step = 0; step < g.n(); ++step) {
    std::uint32_t v = order[step];
    for (std::uint32_t u : g.neighbors(v))
      if (color[u] != UINT32_MAX) mark[color[u]] = step;
    std::uint32_t c = 0;
    while (mark[c] == step) ++c;
    color[v] = c;
    palette = std::max(palette, c + 1);
  }
  return {std::move(color), palette};
}

std::uint64_t coloring_violations(const Graph& g, const std::vector<std::uint32_t>& color) {
  if (color.size() != g.n()) throw NotTotal("coloring must assign every vertex");
  std::uint64_t bad = 0;
#pragma omp parallel for reduction(+ : bad) schedule(dynamic, 64)
  for (std::int64_t v = 0; v < std::int64_t(g.n()); ++v) {
    for (std::uint32_t u : g.neighbors(std::uint32_t(v)))
      if (u > v && color[u] == color[v]) ++bad;
  }
  return bad;
}

std::uint64_t coloring_violations_serial(const Graph& g, const std::vector<std::uint32_t>& color) {
  if (color.size() != g.n()) throw NotTotal("coloring must assign every vertex");
  std::uint64_t bad = 0;
  for (std::uint32_t v = 0; v < g.n(); ++v)
    for (std::uint32_t u : g.neighbors(v))
      if (u > v && color[u] == color[v]) ++bad;
  return bad;
}

bool is_independent(const Graph& g, const std::vector<std::uint32_t>& vs) {
  std::vector<std::uint64_t> mask(g.words(), 0);
  for (auto v : vs) {
    if (v >= g.n()) throw Error("vertex out of range");
    mask[v >> 6] |= 1ull << (v & 63);
  }
  for (auto v : vs) {
    const std::uint64_t* r = g.row(v);
    for (std::size_t i = 0; i < g.words(); ++i)
      if (r[i] & mask[i]) return false;
  }
  return true;
}

KColorResult exact_k_colorable(const Graph& g, std::uint32_t k, std::vector<std::uint32_t> order) {
  if (k == 0) throw Error("k must be positive");
  if (order.empty()) {
    order.resize(g.n());
    for (std::uint32_t v = 0; v < g.n(); ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      return g.degree(a) > g.degree(b);
    });
  } else {
    check_order(g.n(), order);
  }

  {  // fast path: a greedy attempt, valid at any size
    Coloring c = greedy_color(g, degeneracy_order(g).order);
    if (c.palette <= k) return {true, std::move(c.color), 0};
  }
  if (g.n() > 64) throw TooLarge("exact refutation is limited to 64 vertices");

  std::uint32_t n = g.n();
  std::vector<std::uint64_t> adj(n, 0);  // over order positions
  std::vector<std::uint32_t> pos(n);
  for (std::uint32_t i = 0; i < n; ++i) pos[order[i]] = i;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t u : g.neighbors(order[i])) adj[i] |= 1ull << pos[u];

  std::vector<std::uint64_t> colorMask(k, 0);
  std::vector<std::uint32_t> assign(n, 0);
  std::uint64_t nodes = 0;

  // canonical search: a vertex may open at most one new color
  auto rec = [&](auto&& self, std::uint32_t p, std::uint32_t used) -> bool {
    if (p == n) return true;
    std::uint32_t limit = std::min(k, used + 1);
    for (std::uint32_t c = 0; c < limit; ++c) {
      if (adj[p] & colorMask[c]) continue;
      ++nodes;
      colorMask[c] |= 1ull << p;
      assign[p] = c;
      if (self(self, p + 1, std::max(used, c + 1))) return true;
      colorMask[c] &= ~(1ull << p);
    }
    return false;
  };
  bool ok = rec(rec, 0, 0);
  KColorResult r{ok, {}, nodes};
  if (ok) {
    r.color.assign(n, 0);
    for (std::uint32_t i = 0; i < n; ++i) r.color[order[i]] = assign[i];
  }
  return r;
}

Subgraph subgraph_induced(const Graph& g, const std::vector<std::uint32_t>& vs) {
  std::vector<std::uint32_t> sorted(vs);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error("duplicate vertex in induced subgraph");
  Subgraph s{Graph(std::uint32_t(vs.size())), vs};
  for (std::uint32_t i = 0; i < vs.size(); ++i) {
    if (vs[i] >= g.n()) throw Error("vertex out of range");
    for (std::uint32_t j = i + 1; j < vs.size(); ++j)
      if (g.test(vs[i], vs[j])) s.g.add_edge(i, j);
    if (g.has_loop(vs[i])) s.g.add_loop(i);
  }
  s.g.finalize_loops();
  return s;
}

bool verify_vertex_map(const Graph& G, const Graph& H, const std::vector<std::uint32_t>& f,
                       MapMode mode) {
  if (f.size() != G.n()) throw NotTotal("map must assign every vertex");
  for (auto y : f)
    if (y >= H.n()) throw NotTotal("map image out of range");
  std::vector<char> hit(H.n(), 0);
  for (auto y : f) {
    if (hit[y]) return false;  // not injective
    hit[y] = 1;
  }
  if (mode == MapMode::Isomorphism && G.n() != H.n()) return false;
  // loops are out-of-band annotations and are not compared here
  bool ok = true;
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t u = 0; u < std::int64_t(G.n()); ++u) {
    if (!ok) continue;
    bool local = true;
    for (std::uint32_t v = std::uint32_t(u) + 1; v < G.n() && local; ++v)
      if (G.test(std::uint32_t(u), v) != H.test(f[u], f[v])) local = false;
    if (!local) ok = false;
  }
  return ok;
}

}  // namespace er
