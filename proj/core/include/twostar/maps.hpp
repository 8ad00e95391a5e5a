#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "twostar/certificate.hpp"
#include "twostar/triples.hpp"

namespace twostar {

/// (G, R, S): {R, S} generates G and R*S is an involution.
struct OrientedRotaryMap {
  GroupPtr group;
  Elem R = 0;
  Elem S = 0;
};

/// (A, a, b, c): involutions generating A with |<a, c>| = 4.
struct RegularMap {
  GroupPtr group;
  Elem a = 0;
  Elem b = 0;
  Elem c = 0;
};

struct MapInvariants {
  unsigned face_length = 0;
  unsigned valence = 0;
  std::size_t V = 0;
  std::size_t E = 0;
  std::size_t F = 0;
  long long euler = 0;
  long long genus = 0;  // orientable genus, or crosscap number when !orientable
  bool orientable = true;
  bool reflexible = true;  // regular maps always count as reflexible
};

/// Throws NotRotaryMap.
OrientedRotaryMap make_rotary_map(GroupPtr group, Elem R, Elem S);
/// Throws NotRegularMap.
RegularMap make_regular_map(GroupPtr group, Elem a, Elem b, Elem c);

/// R = g, S = g^-1 x.
OrientedRotaryMap rotary_from_triple(const TwoStarTriple& t);
/// (G, R S, R).
TwoStarTriple triple_from_rotary(const OrientedRotaryMap& m);

PairCertificate rotary_map_certificate(const OrientedRotaryMap& m);
MapInvariants map_invariants(const OrientedRotaryMap& m);
/// Face length or valence at most 2.
bool is_degenerate_map(const OrientedRotaryMap& m);

OrientedRotaryMap mirror(const OrientedRotaryMap& m);

struct Reflexibility {
  bool reflexible = false;
  std::optional<std::vector<Elem>> tau;  // tau(R) = R^-1, tau(S) = S^-1
};
Reflexibility is_reflexible(const OrientedRotaryMap& m);

/// A = G x| <tau>, with b the adjoined involution (index |G|), a = R b, c = b S.
/// Throws NotReflexible.
RegularMap orientable_regularisation(const OrientedRotaryMap& m);

bool is_orientable(const RegularMap& rm);

/// Involutions b with b R b = R^-1 and b S b = S^-1, ascending.
std::vector<Elem> antipodal_reflectors(const OrientedRotaryMap& m);

/// (G, R b, b, b S). Throws NotAntipodal, or NotRegularMap when R b or b S
/// is the identity.
RegularMap nonorientable_regularisation(const OrientedRotaryMap& m, Elem b);

/// (<ab, bc>, ab, bc); the subgroup is a standalone table when orientable.
OrientedRotaryMap underlying_rotary(const RegularMap& rm);

/// V = |A : <b,c>|, E = |A : <a,c>|, F = |A : <a,b>|.
MapInvariants regular_map_invariants(const RegularMap& rm);

/// BFS certificate over the generator tuple (a, b, c).
Certificate regular_map_certificate(const RegularMap& rm);

}  // namespace twostar
