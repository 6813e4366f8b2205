#pragma once
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "er/errors.hpp"

namespace er {

// Dense undirected graph on vertex set [0, n) with one bitset row per vertex.
// Loops are tracked out-of-band: they never appear in the bitset rows and are
// not counted by degree() or edge_count().
class Graph {
 public:
  explicit Graph(std::uint32_t n);

  std::uint32_t n() const { return n_; }
  std::size_t words() const { return words_; }
  std::uint64_t* row(std::uint32_t v) { return bits_.data() + std::size_t(v) * words_; }
  const std::uint64_t* row(std::uint32_t v) const { return bits_.data() + std::size_t(v) * words_; }

  bool test(std::uint32_t u, std::uint32_t v) const {
    return (row(u)[v >> 6] >> (v & 63)) & 1;
  }
  // Sets only u's row; parallel builders use this so each thread owns its rows.
  void set_arc(std::uint32_t u, std::uint32_t v) { row(u)[v >> 6] |= 1ull << (v & 63); }
  void add_edge(std::uint32_t u, std::uint32_t v);  // u != v, both rows
  void add_loop(std::uint32_t v);
  void finalize_loops();  // sort + dedupe
  const std::vector<std::uint32_t>& loops() const { return loops_; }
  bool has_loop(std::uint32_t v) const;

  std::uint32_t degree(std::uint32_t v) const;
  std::uint64_t edge_count() const;
  std::vector<std::uint32_t> neighbors(std::uint32_t v) const;

 private:
  std::uint32_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint32_t> loops_;
};

struct GraphStats {
  std::uint32_t n;
  std::uint64_t m;
  std::uint32_t max_degree;
  std::uint32_t loop_count;
};
GraphStats graph_stats(const Graph& g);

// Four-cycle detection: a pair of distinct vertices with two common neighbors.
// find_c4 scans pairs in lexicographic order and reports the first witness
// (edges a-b, b-c, c-d, d-a); c4_exists is the OpenMP any-witness version.
struct C4Witness {
  std::uint32_t a, b, c, d;
};
std::optional<C4Witness> find_c4(const Graph& g);
bool c4_exists(const Graph& g);
bool c4_exists_serial(const Graph& g);

// Smallest-last elimination; the returned sequence is the coloring order
// (reverse of removal), so each vertex sees at most `degeneracy` earlier
// neighbors. Ties broken by smallest vertex id.
struct DegeneracyResult {
  std::vector<std::uint32_t> order;
  std::uint32_t degeneracy;
};
DegeneracyResult degeneracy_order(const Graph& g);

struct Coloring {
  std::vector<std::uint32_t> color;
  std::uint32_t palette;  // number of distinct colors used
};
// First-fit along `order`, which must be a permutation of [0, n) (BadOrder).
Coloring greedy_color(const Graph& g, const std::vector<std::uint32_t>& order);

// Number of edges whose endpoints share a color (loops ignored).
std::uint64_t coloring_violations(const Graph& g, const std::vector<std::uint32_t>& color);
std::uint64_t coloring_violations_serial(const Graph& g, const std::vector<std::uint32_t>& color);

bool is_independent(const Graph& g, const std::vector<std::uint32_t>& vs);

struct KColorResult {
  bool colorable;
  std::vector<std::uint32_t> color;  // valid when colorable
  std::uint64_t nodes;               // color placements explored
};
// Exact k-colorability by backtracking with color-introduction symmetry
// breaking. A greedy attempt runs first; past that, refutation is only
// attempted for n <= 64 (TooLarge otherwise). `order` defaults to descending
// degree (ties by id).
KColorResult exact_k_colorable(const Graph& g, std::uint32_t k,
                               std::vector<std::uint32_t> order = {});

struct Subgraph {
  Graph g;
  std::vector<std::uint32_t> vertex;  // vertex[new id] = original id
};
Subgraph subgraph_induced(const Graph& g, const std::vector<std::uint32_t>& vs);

enum class MapMode { Isomorphism, InducedEmbedding };
// Checks f : V(G) -> V(H) edge-biconditionally; loop annotations are
// out-of-band and not compared. Isomorphism additionally demands a bijection
// on equal vertex counts. NotTotal when f is not defined on all of V(G) or
// maps out of range.
bool verify_vertex_map(const Graph& G, const Graph& H, const std::vector<std::uint32_t>& f,
                       MapMode mode);

// DIMACS-style text: "p edge n m", 1-indexed "e u v" lines with u < v, loops
// on a "c loops:" comment line (1-indexed).
void dimacs_write(const Graph& g, std::ostream& os);
Graph dimacs_parse(std::istream& is);

}  // namespace er
