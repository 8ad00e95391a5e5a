#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twostar/triples.hpp"

namespace twostar {

using Vertex = std::uint32_t;

/// Simple undirected graph; edges stored as sorted (u < v) pairs.
struct Graph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;

  static Graph from_edges(std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges);
  std::vector<std::vector<Vertex>> adjacency() const;
  friend bool operator==(const Graph&, const Graph&) = default;
};

/// Loopless digraph; arcs stored sorted.
struct Digraph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<Vertex, Vertex>> arcs;

  static Digraph from_arcs(std::size_t n, std::vector<std::pair<Vertex, Vertex>> arcs);
  friend bool operator==(const Digraph&, const Digraph&) = default;
};

/// u ~ v iff u v^-1 lies in {x, g, g^-1}. Throws NotTypeI unless g has order at least 3.
Graph cayley_type1(const TwoStarTriple& t);

/// Right cosets of <x>, numbered by their least element; Ha -> Hb is an arc
/// iff b a^-1 lies in <x> g <x>. Throws XCentral.
Digraph coset_digraph(const TwoStarTriple& t);

/// Vertex of the coset digraph holding element a.
std::vector<Vertex> coset_index(const TwoStarTriple& t);

bool is_asymmetric(const Digraph& d);

/// Forgets arc directions. Throws NotAsymmetric.
Graph underlying_graph(const Digraph& d);

/// Whether right multiplication by G on the arcs of the coset digraph is free and transitive.
bool arc_regular(const TwoStarTriple& t, const Digraph& d);

/// Whether G, acting by right multiplication on cosets, is vertex- and
/// edge-transitive but not arc-transitive on the underlying graph of d.
/// Throws NotAsymmetric.
bool half_arc_transitive_check(const TwoStarTriple& t, const Digraph& d);

// GR1/AR1 text: "GR1 <n> <m>" (or "AR1") then one "u v" line per edge or arc.
std::string to_gr1(const Graph& g);
std::string to_ar1(const Digraph& d);
Graph parse_gr1(std::string_view text);
Digraph parse_ar1(std::string_view text);

/// Canonical form, as GR1/AR1 text of the least relabeling reached by colour
/// refinement and individualization. Equal iff isomorphic.
std::string graph_certificate(const Graph& g);
std::string digraph_certificate(const Digraph& d);

}  // namespace twostar
