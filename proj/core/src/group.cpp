#include "twostar/group.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "twostar/error.hpp"

namespace twostar {

namespace {

constexpr std::size_t kFullAssociativityLimit = 256;
constexpr std::size_t kAssociativitySamples = 1'000'000;

void validate_latin_and_identity(std::size_t n, const std::vector<Elem>& t) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] >= n) {
      throw Error(Errc::NotLatinSquare, "entry out of range at position " + std::to_string(i));
    }
  }
  std::vector<unsigned char> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      if (seen[t[a * n + b]]++) {
        throw Error(Errc::NotLatinSquare, "row " + std::to_string(a) + " repeats an entry");
      }
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t a = 0; a < n; ++a) {
      if (seen[t[a * n + b]]++) {
        throw Error(Errc::NotLatinSquare, "column " + std::to_string(b) + " repeats an entry");
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (t[a] != a || t[a * n] != a) {
      throw Error(Errc::NoIdentityAtZero, "index 0 is not a two-sided identity");
    }
  }
}

void validate_associativity(std::size_t n, const std::vector<Elem>& t) {
  auto fail = [](std::size_t a, std::size_t b, std::size_t c) {
    throw Error(Errc::NotAssociative, "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                          std::to_string(c) + ")");
  };
  if (n <= kFullAssociativityLimit) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        const std::size_t ab = t[a * n + b];
        const Elem* row_ab = t.data() + ab * n;
        const Elem* row_b = t.data() + b * n;
        const Elem* row_a = t.data() + a * n;
        for (std::size_t c = 0; c < n; ++c) {
          if (row_ab[c] != row_a[row_b[c]]) fail(a, b, c);
        }
      }
    }
    return;
  }
  std::mt19937_64 rng(0x5eed5eedULL);
  for (std::size_t k = 0; k < kAssociativitySamples; ++k) {
    const std::size_t a = rng() % n, b = rng() % n, c = rng() % n;
    if (t[t[a * n + b] * n + c] != t[a * n + t[b * n + c]]) fail(a, b, c);
  }
}

ElementSubset from_mask(const std::vector<bool>& mask) {
  std::vector<Elem> members;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) members.push_back(static_cast<Elem>(i));
  }
  return ElementSubset(mask.size(), std::move(members));
}

// Product set AB of two normal subgroups, which is again a normal subgroup.
ElementSubset product_set(const GroupTable& g, const ElementSubset& a, const ElementSubset& b) {
  std::vector<bool> mask(g.order(), false);
  for (Elem x : a.members()) {
    for (Elem y : b.members()) mask[g.mul(x, y)] = true;
  }
  return from_mask(mask);
}

}  // namespace

GroupTable::GroupTable(std::size_t n, std::vector<Elem> table)
    : n_(n), table_(std::move(table)), inv_(n), orders_(n) {
  for (std::size_t a = 0; a < n_; ++a) {
    const Elem* r = table_.data() + a * n_;
    for (std::size_t b = 0; b < n_; ++b) {
      if (r[b] == 0) {
        inv_[a] = static_cast<Elem>(b);
        break;
      }
    }
    unsigned k = 1;
    Elem p = static_cast<Elem>(a);
    while (p != 0) {
      p = table_[std::size_t{p} * n_ + a];
      ++k;
    }
    orders_[a] = k;
  }
}

GroupTable GroupTable::from_flat(std::size_t n, std::vector<Elem> flat) {
  if (n == 0) throw Error(Errc::MalformedInput, "group order must be positive");
  if (flat.size() != n * n) throw Error(Errc::MalformedInput, "table size is not n*n");
  validate_latin_and_identity(n, flat);
  validate_associativity(n, flat);
  return GroupTable(n, std::move(flat));
}

Elem GroupTable::pow(Elem a, long long k) const noexcept {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  k %= orders_[a];
  Elem r = 0;
  for (long long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

bool GroupTable::is_abelian() const noexcept {
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = a + 1; b < n_; ++b) {
      if (table_[a * n_ + b] != table_[b * n_ + a]) return false;
    }
  }
  return true;
}

ElementSubset::ElementSubset(std::size_t parent_order, std::vector<Elem> members)
    : members_(std::move(members)), mask_(parent_order, false) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (Elem a : members_) {
    if (a >= parent_order) throw Error(Errc::MalformedInput, "subset element out of range");
    mask_[a] = true;
  }
}

GroupTable group_from_table(const std::vector<std::vector<Elem>>& raw) {
  const std::size_t n = raw.size();
  if (n == 0) throw Error(Errc::MalformedInput, "empty table");
  std::vector<Elem> flat;
  flat.reserve(n * n);
  for (const auto& r : raw) {
    if (r.size() != n) throw Error(Errc::MalformedInput, "table is not square");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return GroupTable::from_flat(n, std::move(flat));
}

GroupTable cyclic_group(std::size_t n) {
  if (n == 0) throw Error(Errc::MalformedInput, "cyclic group order must be positive");
  std::vector<Elem> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) flat[a * n + b] = static_cast<Elem>((a + b) % n);
  }
  return GroupTable::from_flat(n, std::move(flat));
}

GroupTable dihedral_group(std::size_t n) {
  if (n == 0) throw Error(Errc::MalformedInput, "dihedral degree must be positive");
  // r^i s^e stored as e*n + i; s r = r^-1 s.
  const std::size_t m = 2 * n;
  std::vector<Elem> flat(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const std::size_t ia = a % n, ea = a / n, ib = b % n, eb = b / n;
      const std::size_t i = ea == 0 ? (ia + ib) % n : (ia + n - ib) % n;
      flat[a * m + b] = static_cast<Elem>(((ea ^ eb) * n) + i);
    }
  }
  return GroupTable::from_flat(m, std::move(flat));
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  std::vector<Elem> flat(n * n);
  // (x, y) stored as x * nb + y.
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      const Elem x = a.mul(static_cast<Elem>(u / nb), static_cast<Elem>(v / nb));
      const Elem y = b.mul(static_cast<Elem>(u % nb), static_cast<Elem>(v % nb));
      flat[u * n + v] = static_cast<Elem>(x * nb + y);
    }
  }
  return GroupTable::from_flat(n, std::move(flat));
}

GroupTable group_from_permutations(const std::vector<std::vector<std::uint32_t>>& gens) {
  std::size_t degree = gens.empty() ? 0 : gens.front().size();
  for (const auto& p : gens) {
    if (p.size() != degree) throw Error(Errc::MalformedInput, "generators differ in degree");
    std::vector<bool> hit(degree, false);
    for (auto v : p) {
      if (v >= degree || hit[v]) throw Error(Errc::MalformedInput, "generator is not a permutation");
      hit[v] = true;
    }
  }
  using Perm = std::vector<std::uint32_t>;
  Perm id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<std::uint32_t>(i);
  // Product convention: (p * q)(i) = q(p(i)), i.e. apply p first.
  auto compose = [degree](const Perm& p, const Perm& q) {
    Perm r(degree);
    for (std::size_t i = 0; i < degree; ++i) r[i] = q[p[i]];
    return r;
  };
  std::vector<Perm> elems{id};
  std::map<Perm, Elem> index{{id, 0}};
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (const auto& s : gens) {
      Perm next = compose(elems[k], s);
      if (!index.contains(next)) {
        index.emplace(next, static_cast<Elem>(elems.size()));
        elems.push_back(std::move(next));
      }
    }
  }
  const std::size_t n = elems.size();
  std::vector<Elem> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) flat[a * n + b] = index.at(compose(elems[a], elems[b]));
  }
  return GroupTable::from_flat(n, std::move(flat));
}

GroupTable relabel(const GroupTable& g, std::span<const Elem> new_label) {
  const std::size_t n = g.order();
  if (new_label.size() != n || new_label[0] != 0) {
    throw Error(Errc::MalformedInput, "relabeling must fix the identity");
  }
  std::vector<Elem> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      flat[std::size_t{new_label[a]} * n + new_label[b]] =
          new_label[g.mul(static_cast<Elem>(a), static_cast<Elem>(b))];
    }
  }
  return GroupTable::from_flat(n, std::move(flat));
}

unsigned element_order(const GroupTable& g, Elem a) { return g.element_order(a); }

std::vector<Elem> involutions(const GroupTable& g) {
  std::vector<Elem> out;
  for (Elem a = 0; a < g.order(); ++a) {
    if (g.element_order(a) == 2) out.push_back(a);
  }
  return out;
}

ElementSubset subgroup_generated(const GroupTable& g, std::span<const Elem> gens) {
  std::vector<bool> mask(g.order(), false);
  std::vector<Elem> members{0};
  mask[0] = true;
  for (std::size_t k = 0; k < members.size(); ++k) {
    for (Elem s : gens) {
      const Elem next = g.mul(members[k], s);
      if (!mask[next]) {
        mask[next] = true;
        members.push_back(next);
      }
    }
  }
  return ElementSubset(g.order(), std::move(members));
}

bool generates(const GroupTable& g, std::span<const Elem> gens) {
  return subgroup_generated(g, gens).size() == g.order();
}

bool is_subgroup(const GroupTable& g, const ElementSubset& h) {
  if (!h.contains(0)) return false;
  for (Elem a : h.members()) {
    if (!h.contains(g.inv(a))) return false;
    for (Elem b : h.members()) {
      if (!h.contains(g.mul(a, b))) return false;
    }
  }
  return true;
}

bool is_normal(const GroupTable& g, const ElementSubset& h) {
  if (!is_subgroup(g, h)) return false;
  for (Elem a : h.members()) {
    for (Elem b = 0; b < g.order(); ++b) {
      if (!h.contains(g.conj(a, b))) return false;
    }
  }
  return true;
}

std::vector<std::vector<Elem>> conjugacy_classes(const GroupTable& g) {
  const std::size_t n = g.order();
  std::vector<bool> done(n, false);
  std::vector<std::vector<Elem>> classes;
  for (Elem a = 0; a < n; ++a) {
    if (done[a]) continue;
    std::vector<Elem> cls;
    for (Elem b = 0; b < n; ++b) {
      const Elem c = g.conj(a, b);
      if (!done[c]) {
        done[c] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<ElementSubset> normal_subgroups(const GroupTable& g) {
  std::set<ElementSubset> found;
  found.insert(ElementSubset(g.order(), {0}));
  for (const auto& cls : conjugacy_classes(g)) found.insert(subgroup_generated(g, cls));
  // Every normal subgroup is the join of the class closures it contains, so
  // closing the class closures under pairwise joins reaches all of them.
  std::vector<ElementSubset> list(found.begin(), found.end());
  std::size_t done_prefix = 0;
  while (done_prefix < list.size()) {
    const std::size_t end = list.size();
    for (std::size_t i = done_prefix; i < end; ++i) {
      for (std::size_t j = 0; j < end; ++j) {
        if (j >= done_prefix && j >= i) continue;
        ElementSubset join = product_set(g, list[i], list[j]);
        if (found.insert(join).second) list.push_back(std::move(join));
      }
    }
    done_prefix = end;
  }
  std::vector<ElementSubset> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const ElementSubset& a, const ElementSubset& b) { return a.size() < b.size(); });
  return out;
}

ElementSubset derived_subgroup(const GroupTable& g, const ElementSubset& h) {
  std::vector<bool> mask(g.order(), false);
  std::vector<Elem> comms;
  for (Elem a : h.members()) {
    for (Elem b : h.members()) {
      const Elem c = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
      if (!mask[c]) {
        mask[c] = true;
        comms.push_back(c);
      }
    }
  }
  return subgroup_generated(g, comms);
}

bool is_soluble(const GroupTable& g, const ElementSubset& h) {
  ElementSubset cur = h;
  while (cur.size() > 1) {
    ElementSubset next = derived_subgroup(g, cur);
    if (next.size() == cur.size()) return false;
    cur = std::move(next);
  }
  return true;
}

ElementSubset soluble_radical(const GroupTable& g) {
  ElementSubset radical(g.order(), {0});
  for (const auto& n : normal_subgroups(g)) {
    if (is_soluble(g, n)) radical = product_set(g, radical, n);
  }
  return radical;
}

ElementSubset center(const GroupTable& g) {
  std::vector<Elem> members;
  for (Elem a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Elem b = 0; b < g.order() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) members.push_back(a);
  }
  return ElementSubset(g.order(), std::move(members));
}

Quotient quotient(const GroupTable& g, const ElementSubset& n) {
  if (n.parent_order() != g.order() || !is_normal(g, n)) {
    throw Error(Errc::NotNormal, "subset is not a normal subgroup");
  }
  const std::size_t order = g.order();
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> proj(order, kUnset);
  std::vector<Elem> reps;
  for (Elem a = 0; a < order; ++a) {
    if (proj[a] != kUnset) continue;
    const Elem id = static_cast<Elem>(reps.size());
    reps.push_back(a);
    for (Elem m : n.members()) proj[g.mul(a, m)] = id;
  }
  const std::size_t k = reps.size();
  std::vector<Elem> flat(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) flat[i * k + j] = proj[g.mul(reps[i], reps[j])];
  }
  return Quotient{GroupTable::from_flat(k, std::move(flat)), std::move(proj)};
}

GroupTable subgroup_as_group(const GroupTable& g, const ElementSubset& h,
                             std::vector<Elem>* embedding) {
  if (!is_subgroup(g, h)) throw Error(Errc::MalformedInput, "subset is not a subgroup");
  const auto members = h.members();
  const std::size_t k = members.size();
  std::vector<Elem> local(g.order(), 0);
  for (std::size_t i = 0; i < k; ++i) local[members[i]] = static_cast<Elem>(i);
  std::vector<Elem> flat(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) flat[i * k + j] = local[g.mul(members[i], members[j])];
  }
  if (embedding) embedding->assign(members.begin(), members.end());
  return GroupTable::from_flat(k, std::move(flat));
}

bool is_automorphism(const GroupTable& g, std::span<const Elem> phi) {
  const std::size_t n = g.order();
  if (phi.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (Elem v : phi) {
    if (v >= n || hit[v]) return false;
    hit[v] = true;
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (phi[g.mul(a, b)] != g.mul(phi[a], phi[b])) return false;
    }
  }
  return true;
}

GroupTable semidirect_with_involutory_automorphism(const GroupTable& g,
                                                   std::span<const Elem> tau) {
  if (!is_automorphism(g, tau)) throw Error(Errc::NotAutomorphism, "tau is not an automorphism");
  const std::size_t n = g.order();
  for (Elem a = 0; a < n; ++a) {
    if (tau[tau[a]] != a) throw Error(Errc::NotInvolutory, "tau squared is not the identity");
  }
  const std::size_t m = 2 * n;
  std::vector<Elem> flat(m * m);
  // (a, i) stored as i * n + a; (a, i)(b, j) = (a * tau^i(b), i xor j).
  for (std::size_t u = 0; u < m; ++u) {
    const Elem a = static_cast<Elem>(u % n);
    const std::size_t i = u / n;
    for (std::size_t v = 0; v < m; ++v) {
      const Elem b = static_cast<Elem>(v % n);
      const std::size_t j = v / n;
      const Elem tb = i ? tau[b] : b;
      flat[u * m + v] = static_cast<Elem>((i ^ j) * n + g.mul(a, tb));
    }
  }
  return GroupTable::from_flat(m, std::move(flat));
}

std::vector<Elem> generating_set(const GroupTable& g) {
  const std::size_t n = g.order();
  if (n == 1) return {};
  std::vector<Elem> by_order(n - 1);
  for (std::size_t i = 1; i < n; ++i) by_order[i - 1] = static_cast<Elem>(i);
  std::stable_sort(by_order.begin(), by_order.end(), [&](Elem a, Elem b) {
    return g.element_order(a) > g.element_order(b);
  });
  if (g.element_order(by_order.front()) == n) return {by_order.front()};
  // Prefer a generating pair when one exists among the first few high-order elements.
  const std::size_t head = std::min<std::size_t>(by_order.size(), 8);
  for (std::size_t i = 0; i < head; ++i) {
    for (Elem b : by_order) {
      const Elem pair[] = {by_order[i], b};
      if (generates(g, pair)) return {pair[0], pair[1]};
    }
  }
  std::vector<Elem> gens;
  ElementSubset h(n, {0});
  for (Elem a : by_order) {
    if (h.contains(a)) continue;
    gens.push_back(a);
    h = subgroup_generated(g, gens);
    if (h.size() == n) break;
  }
  return gens;
}

bool is_p_group(const GroupTable& g, unsigned p) {
  std::size_t n = g.order();
  while (n % p == 0) n /= p;
  return n == 1;
}

std::string to_grp1(const GroupTable& g) {
  std::string out = "GRP1 " + std::to_string(g.order()) + "\n";
  for (Elem a = 0; a < g.order(); ++a) {
    for (Elem b = 0; b < g.order(); ++b) {
      if (b) out += ' ';
      out += std::to_string(g.mul(a, b));
    }
    out += '\n';
  }
  return out;
}

GroupTable parse_grp1(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string magic;
  long long n = 0;
  if (!(in >> magic) || magic != "GRP1") throw Error(Errc::MalformedInput, "missing GRP1 header");
  if (!(in >> n) || n <= 0 || n > 65536) throw Error(Errc::MalformedInput, "bad group order");
  const auto order = static_cast<std::size_t>(n);
  std::vector<Elem> flat(order * order);
  for (auto& v : flat) {
    long long x = 0;
    if (!(in >> x)) throw Error(Errc::MalformedInput, "truncated table");
    if (x < 0 || x >= n) throw Error(Errc::NotLatinSquare, "entry out of range");
    v = static_cast<Elem>(x);
  }
  std::string extra;
  if (in >> extra) throw Error(Errc::MalformedInput, "trailing data after table");
  return GroupTable::from_flat(order, std::move(flat));
}

}  // namespace twostar
