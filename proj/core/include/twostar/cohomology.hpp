#pragma once

#include <cstddef>
#include <vector>

#include "twostar/gf.hpp"
#include "twostar/group.hpp"
#include "twostar/modrep.hpp"

namespace twostar {

inline constexpr std::size_t kDefaultH2Cap = std::size_t{1} << 16;

/// A normalized 2-cocycle Q x Q -> GF(p)^d. Only pairs of non-identity
/// elements are stored: coordinate ((q1-1)(n-1) + (q2-1)) d + k holds
/// component k of f(q1, q2).
struct Cocycle {
  std::size_t order = 1;  // |Q|
  std::size_t dim = 0;
  GFVec values;

  static std::size_t coordinate(std::size_t order, std::size_t dim, Elem q1, Elem q2,
                                std::size_t k) {
    return ((std::size_t{q1} - 1) * (order - 1) + (q2 - 1)) * dim + k;
  }
  /// f(q1, q2); zero whenever an argument is the identity.
  GFVec value(Elem q1, Elem q2) const;
};

Cocycle zero_cocycle(const ActionModule& m);
/// Builds a cocycle from a full table f[q1][q2]; throws NotNormalized if any
/// value with an identity argument is nonzero.
Cocycle cocycle_from_table(const ActionModule& m, const std::vector<std::vector<GFVec>>& table);

/// The action used for cohomology is the left action q.v = v * M_{q^-1}.
/// Bases are returned as rows over the stored coordinates.
GFMatrix cocycle_space(const GroupTable& q, const ActionModule& m);
GFMatrix coboundary_space(const GroupTable& q, const ActionModule& m);

/// One cocycle per class of Z^2 / B^2, the zero cocycle first. Throws
/// CohomologyTooLarge when |H^2| exceeds `cap`.
std::vector<Cocycle> h2_reps(const GroupTable& q, const ActionModule& m,
                             std::size_t cap = kDefaultH2Cap);

bool is_cocycle(const GroupTable& q, const ActionModule& m, const Cocycle& f);

struct Extension {
  GroupTable group;
  std::vector<Elem> embedding;   // base-p code of v -> element (v, 1)
  std::vector<Elem> projection;  // element -> its image in Q
};

/// The group on pairs (v, q) with (v1,q1)(v2,q2) = (v1 + q1.v2 + f(q1,q2), q1 q2),
/// where (v, q) has index q * p^d + sum_k v_k p^k. Throws NotCocycle.
Extension extension_from_cocycle(const GroupTable& q, const ActionModule& m, const Cocycle& f);

}  // namespace twostar
