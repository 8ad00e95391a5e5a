#include "twostar/maps.hpp"

#include <algorithm>

#include "twostar/error.hpp"

namespace twostar {

namespace {

std::size_t generated_order(const GroupTable& g, std::initializer_list<Elem> gens) {
  const std::vector<Elem> list(gens);
  return subgroup_generated(g, list).size();
}

long long genus_of(long long euler, bool orientable) {
  return orientable ? (2 - euler) / 2 : 2 - euler;
}

}  // namespace

OrientedRotaryMap make_rotary_map(GroupPtr group, Elem R, Elem S) {
  if (!group) throw Error(Errc::NotRotaryMap, "no group");
  const GroupTable& g = *group;
  if (R >= g.order() || S >= g.order()) throw Error(Errc::NotRotaryMap, "index out of range");
  const Elem rs[] = {R, S};
  if (!generates(g, rs)) throw Error(Errc::NotRotaryMap, "{R, S} does not generate");
  if (g.element_order(g.mul(R, S)) != 2) throw Error(Errc::NotRotaryMap, "R S is not an involution");
  return {std::move(group), R, S};
}

RegularMap make_regular_map(GroupPtr group, Elem a, Elem b, Elem c) {
  if (!group) throw Error(Errc::NotRegularMap, "no group");
  const GroupTable& g = *group;
  for (Elem e : {a, b, c}) {
    if (e >= g.order()) throw Error(Errc::NotRegularMap, "index out of range");
    if (g.element_order(e) != 2) throw Error(Errc::NotRegularMap, "generator is not an involution");
  }
  const Elem abc[] = {a, b, c};
  if (!generates(g, abc)) throw Error(Errc::NotRegularMap, "{a, b, c} does not generate");
  if (generated_order(g, {a, c}) != 4) throw Error(Errc::NotRegularMap, "|<a, c>| is not 4");
  return {std::move(group), a, b, c};
}

OrientedRotaryMap rotary_from_triple(const TwoStarTriple& t) {
  const GroupTable& g = *t.group;
  return {t.group, t.g, g.mul(g.inv(t.g), t.x)};
}

TwoStarTriple triple_from_rotary(const OrientedRotaryMap& m) {
  return {m.group, m.group->mul(m.R, m.S), m.R};
}

PairCertificate rotary_map_certificate(const OrientedRotaryMap& m) {
  return pair_certificate(*m.group, m.R, m.S);
}

MapInvariants map_invariants(const OrientedRotaryMap& m) {
  const GroupTable& g = *m.group;
  MapInvariants inv;
  inv.face_length = g.element_order(m.R);
  inv.valence = g.element_order(m.S);
  inv.V = g.order() / inv.valence;
  inv.E = g.order() / 2;
  inv.F = g.order() / inv.face_length;
  inv.euler = static_cast<long long>(inv.V) - static_cast<long long>(inv.E) + static_cast<long long>(inv.F);
  inv.orientable = true;
  inv.genus = genus_of(inv.euler, true);
  inv.reflexible = is_reflexible(m).reflexible;
  return inv;
}

bool is_degenerate_map(const OrientedRotaryMap& m) {
  return m.group->element_order(m.R) <= 2 || m.group->element_order(m.S) <= 2;
}

OrientedRotaryMap mirror(const OrientedRotaryMap& m) {
  return {m.group, m.group->inv(m.R), m.group->inv(m.S)};
}

Reflexibility is_reflexible(const OrientedRotaryMap& m) {
  const GroupTable& g = *m.group;
  const Elem from[] = {m.R, m.S};
  const Elem to[] = {g.inv(m.R), g.inv(m.S)};
  auto tau = align_generators(g, from, to);
  Reflexibility out;
  out.reflexible = tau.has_value();
  out.tau = std::move(tau);
  return out;
}

RegularMap orientable_regularisation(const OrientedRotaryMap& m) {
  auto refl = is_reflexible(m);
  if (!refl.reflexible) throw Error(Errc::NotReflexible, "map is chiral");
  const std::size_t n = m.group->order();
  auto A = share(semidirect_with_involutory_automorphism(*m.group, *refl.tau));
  const Elem b = static_cast<Elem>(n);
  return make_regular_map(A, A->mul(m.R, b), b, A->mul(b, m.S));
}

bool is_orientable(const RegularMap& rm) {
  const GroupTable& A = *rm.group;
  return 2 * generated_order(A, {A.mul(rm.a, rm.b), A.mul(rm.b, rm.c)}) == A.order();
}

std::vector<Elem> antipodal_reflectors(const OrientedRotaryMap& m) {
  const GroupTable& g = *m.group;
  const Elem r_inv = g.inv(m.R), s_inv = g.inv(m.S);
  std::vector<Elem> out;
  for (Elem b : involutions(g)) {
    if (g.conj(m.R, b) == r_inv && g.conj(m.S, b) == s_inv) out.push_back(b);
  }
  return out;
}

RegularMap nonorientable_regularisation(const OrientedRotaryMap& m, Elem b) {
  const GroupTable& g = *m.group;
  if (b >= g.order() || g.element_order(b) != 2 || g.conj(m.R, b) != g.inv(m.R) ||
      g.conj(m.S, b) != g.inv(m.S)) {
    throw Error(Errc::NotAntipodal, "b is not an antipodal reflector");
  }
  return make_regular_map(m.group, g.mul(m.R, b), b, g.mul(b, m.S));
}

OrientedRotaryMap underlying_rotary(const RegularMap& rm) {
  const GroupTable& A = *rm.group;
  const Elem R = A.mul(rm.a, rm.b), S = A.mul(rm.b, rm.c);
  if (!is_orientable(rm)) return make_rotary_map(rm.group, R, S);
  const Elem rs[] = {R, S};
  const ElementSubset sub = subgroup_generated(A, rs);
  std::vector<Elem> embedding;
  auto G = share(subgroup_as_group(A, sub, &embedding));
  auto local = [&](Elem e) {
    return static_cast<Elem>(std::lower_bound(embedding.begin(), embedding.end(), e) - embedding.begin());
  };
  return make_rotary_map(G, local(R), local(S));
}

MapInvariants regular_map_invariants(const RegularMap& rm) {
  const GroupTable& A = *rm.group;
  MapInvariants inv;
  inv.face_length = A.element_order(A.mul(rm.a, rm.b));
  inv.valence = A.element_order(A.mul(rm.b, rm.c));
  inv.V = A.order() / generated_order(A, {rm.b, rm.c});
  inv.E = A.order() / generated_order(A, {rm.a, rm.c});
  inv.F = A.order() / generated_order(A, {rm.a, rm.b});
  inv.euler = static_cast<long long>(inv.V) - static_cast<long long>(inv.E) + static_cast<long long>(inv.F);
  inv.orientable = is_orientable(rm);
  inv.genus = genus_of(inv.euler, inv.orientable);
  inv.reflexible = true;
  return inv;
}

Certificate regular_map_certificate(const RegularMap& rm) {
  const Elem gens[] = {rm.a, rm.b, rm.c};
  auto cert = generator_certificate(*rm.group, gens);
  if (!cert) throw Error(Errc::NotRegularMap, "{a, b, c} does not generate");
  return std::move(*cert);
}

}  // namespace twostar
