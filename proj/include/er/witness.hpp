#pragma once
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "er/field.hpp"

namespace er {

// A small non-3-colorable subgraph of the extension graph: the apex, one
// class vertex per alpha, and one solved triangle of affine vertices per
// alpha triple.  Stored with enough data to re-derive and re-certify
// everything from scratch.
struct Witness {
  std::string field;       // Field::str() form "p^n/c0,...,cn"
  std::vector<fe> alphas;  // 5, ascending, chi(a_i + a_j) = +1 for i < j
  std::vector<fe> roots;   // 10, pair-lex order: roots of a_i + a_j
  std::vector<std::string> names;  // vertex names: "y", "z:i", "a:x1,x2"
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // u < v, sorted
};

// Constructs the witness over F (odd q): lexicographically least alphas,
// least square roots, one triangle per alpha triple via the linear solve.
// Throws SearchExhausted when no alpha tuple exists and NotFourChromatic if
// the assembled subgraph unexpectedly admits a 3-coloring.
Witness build_witness(const Field& F);

std::string witness_format(const Witness& w);
Witness witness_parse(const std::string& text);  // Error on malformed input

struct WitnessReport {
  bool alphas_ok = false;     // five ascending values, pairwise chi = +1
  bool roots_ok = false;      // root^2 = a_i + a_j per pair
  bool names_ok = false;      // <= 36 distinct well-formed vertex names
  bool edges_ok = false;      // stored edges == adjacency rules on the names
  bool transport_ok = false;  // polarity-point images reproduce the adjacency
  bool refuted_first = false;   // no 3-coloring, default search order
  bool refuted_second = false;  // no 3-coloring, reversed search order
  bool apexless_3colorable = false;  // informational sharpness probe
  std::uint32_t vertices = 0;
  std::uint64_t nodes_first = 0, nodes_second = 0;

  bool ok() const {
    return alphas_ok && roots_ok && names_ok && edges_ok && transport_ok && refuted_first &&
           refuted_second;
  }
};

// Full replay: reparses nothing but the witness content, rebuilds the edge
// set from the adjacency rules, cross-checks the polarity-point transport,
// and re-certifies non-3-colorability under two search orders.
WitnessReport witness_verify(const Witness& w);

}  // namespace er
