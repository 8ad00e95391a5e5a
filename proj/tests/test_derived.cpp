#include <gtest/gtest.h>

#include <bit>
#include <map>
#include <random>
#include <set>

#include "support/brute.hpp"
#include "twostar/census.hpp"
#include "twostar/derived.hpp"
#include "twostar/error.hpp"

namespace twostar {
namespace {

// Canonical AR1 text of the first asymmetric coset digraph met when the
// order-47 census is scanned in triple order (an A4 triple, 6 vertices).
constexpr const char* kFirstAsymmetricDigraph =
    "AR1 6 12\n0 3\n0 4\n1 0\n1 5\n2 0\n2 5\n3 1\n3 2\n4 1\n4 2\n5 3\n5 4\n";

constexpr const char* kK4 = "GR1 4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
constexpr const char* kK33 = "GR1 6 9\n0 1\n0 2\n0 3\n1 4\n1 5\n2 4\n2 5\n3 4\n3 5\n";

template <typename Fn>
Errc error_code(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return Errc::Io;
}

Graph k33() {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex a = 0; a < 3; ++a) {
    for (Vertex b = 3; b < 6; ++b) e.emplace_back(a, b);
  }
  return Graph::from_edges(6, e);
}

Graph prism() {
  return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

bool brute_digraphs_isomorphic(const Digraph& a, const Digraph& b) {
  if (a.vertex_count != b.vertex_count || a.arcs.size() != b.arcs.size()) return false;
  std::vector<Vertex> perm(a.vertex_count);
  std::iota(perm.begin(), perm.end(), 0U);
  const std::set<std::pair<Vertex, Vertex>> target(b.arcs.begin(), b.arcs.end());
  do {
    bool ok = true;
    for (auto [u, v] : a.arcs) ok = ok && target.count({perm[u], perm[v]});
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Graph random_graph(std::size_t n, std::size_t m, std::mt19937_64& rng) {
  std::set<std::pair<Vertex, Vertex>> edges;
  while (edges.size() < m) {
    Vertex u = static_cast<Vertex>(rng() % n), v = static_cast<Vertex>(rng() % n);
    if (u == v) continue;
    edges.insert({std::min(u, v), std::max(u, v)});
  }
  return Graph::from_edges(n, {edges.begin(), edges.end()});
}

Digraph random_digraph(std::size_t n, std::size_t m, std::mt19937_64& rng) {
  std::set<std::pair<Vertex, Vertex>> arcs;
  while (arcs.size() < m) {
    Vertex u = static_cast<Vertex>(rng() % n), v = static_cast<Vertex>(rng() % n);
    if (u != v) arcs.insert({u, v});
  }
  return Digraph::from_arcs(n, {arcs.begin(), arcs.end()});
}

// Right cosets {a, x a} numbered by rank of their least element, computed here
// without the library's coset code.
std::vector<Vertex> cosets(const TwoStarTriple& t) {
  const GroupTable& g = *t.group;
  std::vector<Elem> minima;
  for (Elem a = 0; a < g.order(); ++a) {
    if (a < g.mul(t.x, a)) minima.push_back(a);
  }
  std::vector<Vertex> out(g.order());
  for (Elem a = 0; a < g.order(); ++a) {
    const Elem m = std::min(a, g.mul(t.x, a));
    out[a] = static_cast<Vertex>(std::lower_bound(minima.begin(), minima.end(), m) - minima.begin());
  }
  return out;
}

// Orbits of G acting on the right of pairs (u, v) of cosets.
std::size_t pair_orbits(const TwoStarTriple& t, const std::set<std::pair<Vertex, Vertex>>& pairs,
                        bool unordered) {
  const GroupTable& g = *t.group;
  const auto idx = cosets(t);
  std::vector<Elem> rep(g.order() / 2);
  for (Elem a = g.order(); a-- > 0;) rep[idx[a]] = a;
  auto act = [&](std::pair<Vertex, Vertex> p, Elem r) {
    std::pair<Vertex, Vertex> q{idx[g.mul(rep[p.first], r)], idx[g.mul(rep[p.second], r)]};
    if (unordered && q.first > q.second) std::swap(q.first, q.second);
    return q;
  };
  std::set<std::pair<Vertex, Vertex>> seen;
  std::size_t orbits = 0;
  for (const auto& p : pairs) {
    if (seen.count(p)) continue;
    ++orbits;
    for (Elem r = 0; r < g.order(); ++r) seen.insert(act(p, r));
  }
  return orbits;
}

TEST(CayleyType1, K4FromC4) {
  const auto t = make_triple(share(cyclic_group(4)), 2, 1);
  const Graph g = cayley_type1(t);
  EXPECT_EQ(g.edges.size(), 6U);
  EXPECT_EQ(graph_certificate(g), kK4);
}

TEST(CayleyType1, K33FromC6) {
  const auto t = make_triple(share(cyclic_group(6)), 3, 1);
  const Graph g = cayley_type1(t);
  EXPECT_TRUE(testing::brute_graphs_isomorphic(g, k33()));
  EXPECT_FALSE(testing::brute_graphs_isomorphic(g, prism()));
  EXPECT_EQ(graph_certificate(g), kK33);
  EXPECT_EQ(graph_certificate(k33()), kK33);
  EXPECT_NE(graph_certificate(g), graph_certificate(prism()));
  // Bipartite by parity of the element.
  for (auto [u, v] : g.edges) EXPECT_NE(u % 2, v % 2);
}

TEST(CayleyType1, NotTypeI) {
  const auto t = make_triple(share(direct_product(cyclic_group(2), cyclic_group(2))), 1, 2);
  EXPECT_EQ(error_code([&] { cayley_type1(t); }), Errc::NotTypeI);
}

TEST(CayleyType1, NeighbourhoodDefinition) {
  const auto t = make_triple(share(dihedral_group(5)), 5, 1);
  const GroupTable& G = *t.group;
  const Graph g = cayley_type1(t);
  const std::set<std::pair<Vertex, Vertex>> edges(g.edges.begin(), g.edges.end());
  for (Elem u = 0; u < G.order(); ++u) {
    for (Elem v = u + 1; v < G.order(); ++v) {
      const Elem q = G.mul(u, G.inv(v));
      const bool adjacent = q == t.x || q == t.g || q == G.inv(t.g);
      EXPECT_EQ(edges.count({u, v}) == 1, adjacent);
    }
  }
}

TEST(CosetDigraph, S3IsComplete) {
  std::vector<testing::Perm> perms;
  const GroupPtr s3 = share(testing::s3_table(&perms));
  const auto t = make_triple(s3, testing::index_of(perms, {1, 0, 2}), testing::index_of(perms, {1, 2, 0}));
  const Digraph d = coset_digraph(t);
  EXPECT_EQ(d.vertex_count, 3U);
  EXPECT_EQ(d.arcs.size(), 6U);
  EXPECT_FALSE(is_asymmetric(d));
  EXPECT_EQ(error_code([&] { underlying_graph(d); }), Errc::NotAsymmetric);
  EXPECT_EQ(error_code([&] { half_arc_transitive_check(t, d); }), Errc::NotAsymmetric);
}

TEST(CosetDigraph, XCentral) {
  const auto t = make_triple(share(cyclic_group(4)), 2, 1);
  EXPECT_EQ(error_code([&] { coset_digraph(t); }), Errc::XCentral);
}

TEST(CosetDigraph, FirstAsymmetricInCensus) {
  CensusConfig c;
  c.max_order = 24;
  const CensusDB db = run_census(c);
  for (const auto& ct : db.triples) {
    const auto t = make_triple(db.groups[ct.group].group, ct.x, ct.g);
    const GroupTable& G = *t.group;
    if (G.mul(t.x, t.g) == G.mul(t.g, t.x)) continue;
    const Digraph d = coset_digraph(t);
    if (!is_asymmetric(d)) continue;
    EXPECT_EQ(G.order(), 12U);
    EXPECT_EQ(db.groups[ct.group].certificate, canonical_group_certificate(testing::a4_table())->certificate);
    EXPECT_EQ(digraph_certificate(d), kFirstAsymmetricDigraph);
    const Graph u = underlying_graph(d);
    EXPECT_EQ(u.vertex_count, 6U);
    EXPECT_EQ(u.edges.size(), 12U);
    for (const auto& nbrs : u.adjacency()) EXPECT_EQ(nbrs.size(), 4U);
    EXPECT_TRUE(half_arc_transitive_check(t, d));
    return;
  }
  ADD_FAILURE() << "no asymmetric coset digraph up to order 24";
}

TEST(CosetDigraph, PropertiesOverCensus) {
  CensusConfig c;
  c.max_order = 32;
  const CensusDB db = run_census(c);
  std::size_t asymmetric = 0;
  for (const auto& ct : db.triples) {
    const auto t = make_triple(db.groups[ct.group].group, ct.x, ct.g);
    const GroupTable& G = *t.group;
    if (G.mul(t.x, t.g) == G.mul(t.g, t.x)) continue;
    const Digraph d = coset_digraph(t);
    EXPECT_EQ(coset_index(t), cosets(t));
    EXPECT_EQ(d.vertex_count, G.order() / 2);
    EXPECT_EQ(d.arcs.size(), G.order());
    EXPECT_TRUE(arc_regular(t, d));
    // Arc criterion read off the definition: b a^-1 in <x> g <x>.
    const auto idx = cosets(t);
    std::set<Elem> dcoset;
    for (Elem a : {Elem{0}, t.x}) {
      for (Elem b : {Elem{0}, t.x}) dcoset.insert(G.mul(G.mul(a, t.g), b));
    }
    std::set<std::pair<Vertex, Vertex>> arcs;
    for (Elem a = 0; a < G.order(); ++a) {
      for (Elem b = 0; b < G.order(); ++b) {
        if (dcoset.count(G.mul(b, G.inv(a)))) arcs.insert({idx[a], idx[b]});
      }
    }
    const std::vector<std::pair<Vertex, Vertex>> expected(arcs.begin(), arcs.end());
    EXPECT_EQ(expected, d.arcs);
    EXPECT_EQ(pair_orbits(t, arcs, false), 1U);
    if (!is_asymmetric(d)) continue;
    ++asymmetric;
    const Graph u = underlying_graph(d);
    EXPECT_EQ(u.edges.size(), 2 * u.vertex_count);
    std::set<std::pair<Vertex, Vertex>> reversed;
    for (auto [a, b] : arcs) reversed.insert({b, a});
    std::set<std::pair<Vertex, Vertex>> both = arcs;
    both.insert(reversed.begin(), reversed.end());
    EXPECT_EQ(pair_orbits(t, both, false), 2U);
    const std::set<std::pair<Vertex, Vertex>> edges(u.edges.begin(), u.edges.end());
    EXPECT_EQ(pair_orbits(t, edges, true), 1U);
    EXPECT_TRUE(half_arc_transitive_check(t, d));
  }
  EXPECT_GT(asymmetric, 0U);
}

TEST(Certificate, SingleVertexAndEmpty) {
  EXPECT_EQ(graph_certificate(Graph::from_edges(1, {})), "GR1 1 0\n");
  EXPECT_EQ(digraph_certificate(Digraph::from_arcs(1, {})), "AR1 1 0\n");
  EXPECT_EQ(graph_certificate(Graph::from_edges(0, {})), "GR1 0 0\n");
}

TEST(Certificate, InvariantUnderRelabeling) {
  const Graph k4 = parse_gr1(kK4);
  for (std::uint64_t s = 0; s < 5; ++s) EXPECT_EQ(graph_certificate(testing::relabel_graph(k4, testing::shuffled(4, s))), kK4);
  CensusConfig c;
  c.max_order = 32;
  const CensusDB db = run_census(c);
  for (const auto& ct : db.triples) {
    const auto t = make_triple(db.groups[ct.group].group, ct.x, ct.g);
    if (t.group->element_order(t.g) < 3) continue;
    const Graph g = cayley_type1(t);
    const auto perm = testing::shuffled(g.vertex_count, ct.x * 31 + ct.g);
    EXPECT_EQ(graph_certificate(testing::relabel_graph(g, perm)), graph_certificate(g));
    EXPECT_TRUE(parse_gr1(graph_certificate(g)).edges.size() == g.edges.size());
  }
}

TEST(Certificate, AgreesWithBruteForceOnSmallGraphs) {
  std::mt19937_64 rng(2024);
  for (std::size_t n : {5, 6, 7, 8}) {
    for (std::size_t m : {n - 1, n, n + 2, 2 * n - 3}) {
      std::vector<Graph> pool;
      for (int i = 0; i < 8; ++i) pool.push_back(random_graph(n, m, rng));
      pool.push_back(testing::relabel_graph(pool.front(), testing::shuffled(n, m)));
      for (const auto& a : pool) {
        for (const auto& b : pool) {
          EXPECT_EQ(graph_certificate(a) == graph_certificate(b), testing::brute_graphs_isomorphic(a, b));
        }
      }
    }
  }
}

TEST(Certificate, RegularGraphsOnEightVertices) {
  // Two 4-regular graphs on 8 vertices: the circulant C8(1,2) and the complement of the cube.
  std::vector<std::pair<Vertex, Vertex>> c8, cube_complement;
  for (Vertex i = 0; i < 8; ++i) {
    c8.emplace_back(i, (i + 1) % 8);
    c8.emplace_back(i, (i + 2) % 8);
  }
  for (Vertex i = 0; i < 8; ++i) {
    for (Vertex j = i + 1; j < 8; ++j) {
      if (std::popcount(i ^ j) != 1) cube_complement.emplace_back(i, j);
    }
  }
  const Graph a = [&] {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (auto [u, v] : c8) e.emplace_back(std::min(u, v), std::max(u, v));
    return Graph::from_edges(8, e);
  }();
  const Graph b = Graph::from_edges(8, cube_complement);
  EXPECT_EQ(graph_certificate(a) == graph_certificate(b), testing::brute_graphs_isomorphic(a, b));
}

TEST(Certificate, DigraphsAgreeWithBruteForce) {
  std::mt19937_64 rng(99);
  for (std::size_t n : {4, 5, 6, 7}) {
    std::vector<Digraph> pool;
    for (int i = 0; i < 10; ++i) pool.push_back(random_digraph(n, n + 2, rng));
    pool.push_back(testing::relabel_digraph(pool.front(), testing::shuffled(n, n)));
    for (const auto& a : pool) {
      for (const auto& b : pool) {
        EXPECT_EQ(digraph_certificate(a) == digraph_certificate(b), brute_digraphs_isomorphic(a, b));
      }
    }
  }
  // A directed 3-cycle and its reverse are isomorphic; a transitive triangle is not.
  const Digraph cyc = Digraph::from_arcs(3, {{0, 1}, {1, 2}, {2, 0}});
  const Digraph rev = Digraph::from_arcs(3, {{1, 0}, {2, 1}, {0, 2}});
  const Digraph tt = Digraph::from_arcs(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(digraph_certificate(cyc), digraph_certificate(rev));
  EXPECT_NE(digraph_certificate(cyc), digraph_certificate(tt));
}

TEST(TextFormats, RoundTripAndErrors) {
  const Graph g = prism();
  EXPECT_EQ(parse_gr1(to_gr1(g)), g);
  const Digraph d = Digraph::from_arcs(4, {{0, 1}, {1, 2}, {3, 0}});
  EXPECT_EQ(parse_ar1(to_ar1(d)), d);
  EXPECT_THROW(parse_gr1("GR1 2 1\n0 0\n"), Error);
  EXPECT_THROW(parse_gr1("GR1 2 2\n0 1\n"), Error);
  EXPECT_THROW(parse_ar1("GR1 2 1\n0 1\n"), Error);
  EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), Error);
}

}  // namespace
}  // namespace twostar
