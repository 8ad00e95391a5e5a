#include "twostar/derived.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "twostar/error.hpp"

namespace twostar {

namespace {

using Edge = std::pair<Vertex, Vertex>;

// Colour refinement with individualization over out/in adjacency.
class Canonizer {
 public:
  Canonizer(std::size_t n, const std::vector<Edge>& arcs, bool directed)
      : n_(n), directed_(directed), out_(n), in_(n) {
    for (auto [u, v] : arcs) {
      out_[u].push_back(v);
      in_[v].push_back(u);
    }
  }

  std::vector<Edge> run() {
    std::vector<std::uint64_t> init(n_);
    for (Vertex v = 0; v < n_; ++v) init[v] = (std::uint64_t{out_[v].size()} << 32) | in_[v].size();
    search(compress(init));
    return best_;
  }

 private:
  static std::vector<std::uint32_t> compress(const std::vector<std::uint64_t>& keys) {
    std::vector<std::uint64_t> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<std::uint32_t> out(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) {
      out[i] = static_cast<std::uint32_t>(std::lower_bound(sorted.begin(), sorted.end(), keys[i]) - sorted.begin());
    }
    return out;
  }

  static std::size_t cell_count(const std::vector<std::uint32_t>& colour) {
    return colour.empty() ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
  }

  std::vector<std::uint32_t> refine(std::vector<std::uint32_t> colour) const {
    std::size_t cells = cell_count(colour);
    while (true) {
      std::vector<std::vector<std::uint32_t>> sig(n_);
      for (Vertex v = 0; v < n_; ++v) {
        auto& s = sig[v];
        s.push_back(colour[v]);
        std::vector<std::uint32_t> outs, ins;
        for (Vertex w : out_[v]) outs.push_back(colour[w]);
        std::sort(outs.begin(), outs.end());
        s.insert(s.end(), outs.begin(), outs.end());
        if (directed_) {
          s.push_back(~std::uint32_t{0});
          for (Vertex w : in_[v]) ins.push_back(colour[w]);
          std::sort(ins.begin(), ins.end());
          s.insert(s.end(), ins.begin(), ins.end());
        }
      }
      std::vector<std::vector<std::uint32_t>> sorted = sig;
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      for (Vertex v = 0; v < n_; ++v) {
        colour[v] = static_cast<std::uint32_t>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
      }
      if (sorted.size() == cells) return colour;
      cells = sorted.size();
    }
  }

  void search(std::vector<std::uint32_t> colour) {
    colour = refine(std::move(colour));
    const std::size_t cells = cell_count(colour);
    if (cells == n_) {
      std::vector<Edge> relabeled;
      for (Vertex u = 0; u < n_; ++u) {
        for (Vertex v : out_[u]) {
          Vertex a = colour[u], b = colour[v];
          if (!directed_ && a > b) std::swap(a, b);
          if (directed_ || a < b) relabeled.emplace_back(a, b);
        }
      }
      std::sort(relabeled.begin(), relabeled.end());
      relabeled.erase(std::unique(relabeled.begin(), relabeled.end()), relabeled.end());
      if (!have_best_ || relabeled < best_) {
        best_ = std::move(relabeled);
        have_best_ = true;
      }
      return;
    }
    std::vector<std::size_t> size(cells, 0);
    for (auto c : colour) ++size[c];
    std::uint32_t target = 0;
    std::size_t target_size = n_ + 1;
    for (std::uint32_t c = 0; c < cells; ++c) {
      if (size[c] > 1 && size[c] < target_size) {
        target = c;
        target_size = size[c];
      }
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (colour[v] != target) continue;
      std::vector<std::uint64_t> keys(n_);
      for (Vertex w = 0; w < n_; ++w) keys[w] = 2 * std::uint64_t{colour[w]} + (colour[w] == target && w != v ? 1 : 0);
      search(compress(keys));
    }
  }

  std::size_t n_;
  bool directed_;
  std::vector<std::vector<Vertex>> out_, in_;
  std::vector<Edge> best_;
  bool have_best_ = false;
};

std::string edge_text(const char* magic, std::size_t n, const std::vector<Edge>& edges) {
  std::string out = std::string(magic) + ' ' + std::to_string(n) + ' ' + std::to_string(edges.size()) + '\n';
  for (auto [u, v] : edges) out += std::to_string(u) + ' ' + std::to_string(v) + '\n';
  return out;
}

std::pair<std::size_t, std::vector<Edge>> parse_edge_text(std::string_view text, const char* magic) {
  std::istringstream in{std::string(text)};
  std::string tag;
  std::size_t n = 0, m = 0;
  if (!(in >> tag >> n >> m) || tag != magic) throw Error(Errc::MalformedInput, std::string("bad ") + magic + " header");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t u = 0, v = 0;
    if (!(in >> u >> v) || u >= n || v >= n) throw Error(Errc::MalformedInput, "bad edge line");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return {n, std::move(edges)};
}

// Orbit of one item under repeated application of the generator maps.
template <typename T, typename Step>
std::size_t orbit_size(const T& start, Step&& step, std::size_t generator_count) {
  std::set<T> seen{start};
  std::vector<T> queue{start};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (std::size_t j = 0; j < generator_count; ++j) {
      T next = step(queue[i], j);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return seen.size();
}

}  // namespace

Graph Graph::from_edges(std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges) {
  for (auto& [u, v] : edges) {
    if (u >= n || v >= n) throw Error(Errc::MalformedInput, "edge endpoint out of range");
    if (u == v) throw Error(Errc::MalformedInput, "graphs may not have loops");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph{n, std::move(edges)};
}

std::vector<std::vector<Vertex>> Graph::adjacency() const {
  std::vector<std::vector<Vertex>> adj(vertex_count);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

Digraph Digraph::from_arcs(std::size_t n, std::vector<std::pair<Vertex, Vertex>> arcs) {
  for (auto [u, v] : arcs) {
    if (u >= n || v >= n) throw Error(Errc::MalformedInput, "arc endpoint out of range");
    if (u == v) throw Error(Errc::MalformedInput, "digraphs may not have loops");
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  return Digraph{n, std::move(arcs)};
}

Graph cayley_type1(const TwoStarTriple& t) {
  const GroupTable& g = *t.group;
  if (g.element_order(t.g) < 3) throw Error(Errc::NotTypeI, "g must have order at least 3");
  std::vector<Edge> edges;
  for (Elem v = 0; v < g.order(); ++v) {
    edges.emplace_back(v, g.mul(t.x, v));
    edges.emplace_back(v, g.mul(t.g, v));
  }
  return Graph::from_edges(g.order(), std::move(edges));
}

std::vector<Vertex> coset_index(const TwoStarTriple& t) {
  const GroupTable& g = *t.group;
  std::vector<Elem> minima;
  for (Elem a = 0; a < g.order(); ++a) {
    if (a < g.mul(t.x, a)) minima.push_back(a);
  }
  std::vector<Vertex> index(g.order());
  for (Elem a = 0; a < g.order(); ++a) {
    const Elem m = std::min(a, g.mul(t.x, a));
    index[a] = static_cast<Vertex>(std::lower_bound(minima.begin(), minima.end(), m) - minima.begin());
  }
  return index;
}

Digraph coset_digraph(const TwoStarTriple& t) {
  const GroupTable& g = *t.group;
  if (g.mul(t.g, t.x) == g.mul(t.x, t.g)) throw Error(Errc::XCentral, "<x> is central");
  const auto index = coset_index(t);
  const Elem gx = g.mul(t.g, t.x);
  std::vector<Edge> arcs;
  for (Elem a = 0; a < g.order(); ++a) {
    if (a > g.mul(t.x, a)) continue;
    arcs.emplace_back(index[a], index[g.mul(t.g, a)]);
    arcs.emplace_back(index[a], index[g.mul(gx, a)]);
  }
  return Digraph::from_arcs(g.order() / 2, std::move(arcs));
}

bool is_asymmetric(const Digraph& d) {
  for (auto [u, v] : d.arcs) {
    if (std::binary_search(d.arcs.begin(), d.arcs.end(), Edge{v, u})) return false;
  }
  return true;
}

Graph underlying_graph(const Digraph& d) {
  if (!is_asymmetric(d)) throw Error(Errc::NotAsymmetric, "digraph has a pair of opposite arcs");
  return Graph::from_edges(d.vertex_count, d.arcs);
}

bool arc_regular(const TwoStarTriple& t, const Digraph& d) {
  const GroupTable& g = *t.group;
  const auto index = coset_index(t);
  std::set<Edge> images;
  for (Elem r = 0; r < g.order(); ++r) {
    const Edge image{index[r], index[g.mul(t.g, r)]};
    if (!std::binary_search(d.arcs.begin(), d.arcs.end(), image)) return false;
    images.insert(image);
  }
  if (images.size() != g.order() || d.arcs.size() != g.order()) return false;
  // Each arc (Ha, Hb) must map to an arc under right multiplication.
  std::vector<Elem> rep(d.vertex_count);
  for (Elem a = g.order(); a-- > 0;) rep[index[a]] = a;
  for (auto [u, v] : d.arcs) {
    for (Elem r : {t.x, t.g}) {
      const Edge moved{index[g.mul(rep[u], r)], index[g.mul(rep[v], r)]};
      if (!std::binary_search(d.arcs.begin(), d.arcs.end(), moved)) return false;
    }
  }
  return true;
}

bool half_arc_transitive_check(const TwoStarTriple& t, const Digraph& d) {
  const Graph u = underlying_graph(d);
  const GroupTable& g = *t.group;
  const auto index = coset_index(t);
  std::vector<Elem> rep(d.vertex_count);
  for (Elem a = g.order(); a-- > 0;) rep[index[a]] = a;
  const Elem gens[] = {t.x, t.g};
  auto move = [&](Vertex v, std::size_t j) { return index[g.mul(rep[v], gens[j])]; };
  const std::size_t vertex_orbit = orbit_size(Vertex{0}, move, 2);
  const Edge first = u.edges.front();
  const std::size_t edge_orbit = orbit_size(first, [&](const Edge& e, std::size_t j) {
    Vertex a = move(e.first, j), b = move(e.second, j);
    if (a > b) std::swap(a, b);
    return Edge{a, b};
  }, 2);
  const std::size_t arc_orbit = orbit_size(first, [&](const Edge& e, std::size_t j) {
    return Edge{move(e.first, j), move(e.second, j)};
  }, 2);
  return vertex_orbit == u.vertex_count && edge_orbit == u.edges.size() &&
         arc_orbit < 2 * u.edges.size();
}

std::string to_gr1(const Graph& g) { return edge_text("GR1", g.vertex_count, g.edges); }
std::string to_ar1(const Digraph& d) { return edge_text("AR1", d.vertex_count, d.arcs); }

Graph parse_gr1(std::string_view text) {
  auto [n, edges] = parse_edge_text(text, "GR1");
  return Graph::from_edges(n, std::move(edges));
}

Digraph parse_ar1(std::string_view text) {
  auto [n, arcs] = parse_edge_text(text, "AR1");
  return Digraph::from_arcs(n, std::move(arcs));
}

std::string graph_certificate(const Graph& g) {
  std::vector<Edge> arcs;
  for (auto [u, v] : g.edges) {
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  return edge_text("GR1", g.vertex_count, Canonizer(g.vertex_count, arcs, false).run());
}

std::string digraph_certificate(const Digraph& d) {
  return edge_text("AR1", d.vertex_count, Canonizer(d.vertex_count, d.arcs, true).run());
}

}  // namespace twostar
