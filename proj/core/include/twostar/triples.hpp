#pragma once

#include <vector>

#include "twostar/certificate.hpp"
#include "twostar/group.hpp"

namespace twostar {

/// (G, x, g) with x an involution and {x, g} generating G.
struct TwoStarTriple {
  GroupPtr group;
  Elem x = 0;
  Elem g = 0;
};

/// Throws XNotInvolution or NotGenerating.
TwoStarTriple make_triple(GroupPtr group, Elem x, Elem g);

PairCertificate triple_certificate(const TwoStarTriple& t);

/// One triple per isomorphism class, by bucketing every valid (x, g) on its
/// certificate. Each bucket is represented by its least (x, g); the list is
/// sorted by (x, g). Empty exactly when G is not a (2,*)-group.
std::vector<TwoStarTriple> enumerate_triples(const GroupPtr& group);

/// The same classes computed from Aut(G): orbit representatives of Aut(G) on
/// involutions, then of each stabiliser Aut(G)_x on G, keeping generating pairs.
/// Empty when G is not 2-generated.
std::vector<TwoStarTriple> enumerate_triples_autorbit(const GroupPtr& group);

/// Degenerate triples have g equal to the identity; see the census flag.
bool is_degenerate(const TwoStarTriple& t);

}  // namespace twostar
