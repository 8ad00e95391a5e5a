#include "twostar/triples.hpp"

#include <algorithm>
#include <map>

#include "twostar/error.hpp"

namespace twostar {

TwoStarTriple make_triple(GroupPtr group, Elem x, Elem g) {
  const GroupTable& G = *group;
  if (x >= G.order() || g >= G.order()) throw Error(Errc::MalformedInput, "index out of range");
  if (G.element_order(x) != 2) throw Error(Errc::XNotInvolution, "x is not an involution");
  const Elem gens[] = {x, g};
  if (!generates(G, gens)) throw Error(Errc::NotGenerating, "{x, g} does not generate");
  return TwoStarTriple{std::move(group), x, g};
}

PairCertificate triple_certificate(const TwoStarTriple& t) {
  return pair_certificate(*t.group, t.x, t.g);
}

bool is_degenerate(const TwoStarTriple& t) { return t.g == 0; }

std::vector<TwoStarTriple> enumerate_triples(const GroupPtr& group) {
  const GroupTable& G = *group;
  std::map<Certificate, std::pair<Elem, Elem>> buckets;
  for (Elem x = 0; x < G.order(); ++x) {
    if (G.element_order(x) != 2) continue;
    for (Elem g = 0; g < G.order(); ++g) {
      const Elem gens[] = {x, g};
      auto cert = generator_certificate(G, gens);
      if (!cert) continue;
      // Pairs arrive in lexicographic order, so the first one seen is the least.
      buckets.try_emplace(std::move(*cert), x, g);
    }
  }
  std::vector<TwoStarTriple> out;
  out.reserve(buckets.size());
  for (const auto& [cert, pair] : buckets) out.push_back(TwoStarTriple{group, pair.first, pair.second});
  std::sort(out.begin(), out.end(), [](const TwoStarTriple& a, const TwoStarTriple& b) {
    return std::pair(a.x, a.g) < std::pair(b.x, b.g);
  });
  return out;
}

namespace {

// Orbit representatives (least element of each orbit) of a permutation group on 0..n-1.
std::vector<Elem> orbit_minima(std::size_t n, const std::vector<const std::vector<Elem>*>& perms,
                               const std::vector<bool>& domain) {
  std::vector<bool> seen(n, false);
  std::vector<Elem> reps;
  for (Elem a = 0; a < n; ++a) {
    if (!domain[a] || seen[a]) continue;
    reps.push_back(a);
    for (const auto* phi : perms) seen[(*phi)[a]] = true;
  }
  return reps;
}

}  // namespace

std::vector<TwoStarTriple> enumerate_triples_autorbit(const GroupPtr& group) {
  const GroupTable& G = *group;
  const std::size_t n = G.order();
  // Any generating pair gives Aut(G) by certificate alignment.
  std::optional<std::pair<Elem, Elem>> base;
  for (Elem s = 0; s < n && !base; ++s) {
    for (Elem t = 0; t < n && !base; ++t) {
      const Elem gens[] = {s, t};
      if (generates(G, gens)) base.emplace(s, t);
    }
  }
  if (!base) return {};
  const auto autos = automorphisms_from_pair(G, base->first, base->second);

  std::vector<const std::vector<Elem>*> all;
  for (const auto& phi : autos) all.push_back(&phi);
  std::vector<bool> is_inv(n, false);
  for (Elem a : involutions(G)) is_inv[a] = true;
  std::vector<TwoStarTriple> out;
  for (Elem x : orbit_minima(n, all, is_inv)) {
    std::vector<const std::vector<Elem>*> stab;
    for (const auto& phi : autos) {
      if (phi[x] == x) stab.push_back(&phi);
    }
    for (Elem g : orbit_minima(n, stab, std::vector<bool>(n, true))) {
      const Elem gens[] = {x, g};
      if (generates(G, gens)) out.push_back(TwoStarTriple{group, x, g});
    }
  }
  return out;
}

}  // namespace twostar
