#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "twostar/group.hpp"

namespace twostar {

/// Canonical form of a group marked by an ordered generating tuple.
///
/// Elements are relabeled breadth-first from the identity: labeled elements
/// are processed in label order, and for each one the products e*s_1, e*s_2,
/// ... are visited in generator order, unseen products taking the next free
/// label. The certificate lists the labels of those products, k per element.
/// Two marked groups have equal certificates exactly when an isomorphism
/// carries one generator tuple onto the other.
struct Certificate {
  std::vector<Elem> values;

  /// Big-endian 32-bit encoding, so byte order agrees with operator<=>.
  std::string bytes() const;

  friend bool operator==(const Certificate&, const Certificate&) = default;
  friend auto operator<=>(const Certificate&, const Certificate&) = default;
};

using PairCertificate = Certificate;

struct BfsLabeling {
  std::vector<Elem> label_of;    // element -> label
  std::vector<Elem> element_at;  // label -> element
};

/// Returns nullopt unless `gens` generates the group.
std::optional<BfsLabeling> bfs_labeling(const GroupTable& g, std::span<const Elem> gens);
std::optional<Certificate> generator_certificate(const GroupTable& g, std::span<const Elem> gens);

/// Throws Error(NotGenerating) when {s, t} does not generate.
PairCertificate pair_certificate(const GroupTable& g, Elem s, Elem t);

/// The automorphism carrying gens_from onto gens_to, if one exists.
std::optional<std::vector<Elem>> align_generators(const GroupTable& g,
                                                  std::span<const Elem> gens_from,
                                                  std::span<const Elem> gens_to);

/// All of Aut(G), read off from generating pairs with the same certificate as (s, t).
/// Sorted lexicographically, so the identity map comes first.
std::vector<std::vector<Elem>> automorphisms_from_pair(const GroupTable& g, Elem s, Elem t);

struct CanonicalForm {
  Certificate certificate;
  Elem x = 0;  // the minimizing pair, least (x, g) among ties
  Elem g = 0;
};

/// Least pair certificate over generating pairs (x, g) with x an involution.
/// nullopt when the group is not a (2,*)-group.
std::optional<CanonicalForm> canonical_group_certificate(const GroupTable& g);

/// The group relabeled by the BFS labeling of its canonical pair.
GroupTable canonical_relabel(const GroupTable& g, const CanonicalForm& form);

/// 64-bit FNV-1a of the certificate bytes, as 16 lowercase hex digits.
std::string certificate_hash(const Certificate& c);
std::string fnv1a_hex(std::string_view bytes);

}  // namespace twostar
