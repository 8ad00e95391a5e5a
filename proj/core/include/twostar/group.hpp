#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace twostar {

using Elem = std::uint32_t;

/// A finite group stored as its full multiplication table.
///
/// Index 0 is always the identity. Instances are immutable once built and are
/// validated on construction: the table must be a Latin square with a two-sided
/// identity at 0, and associative. Associativity is checked exhaustively up to
/// order 256 and on 10^6 pseudo-random triples beyond that.
class GroupTable {
 public:
  /// `flat` is row-major, flat[a * n + b] = a * b.
  static GroupTable from_flat(std::size_t n, std::vector<Elem> flat);

  std::size_t order() const noexcept { return n_; }
  Elem mul(Elem a, Elem b) const noexcept { return table_[std::size_t{a} * n_ + b]; }
  Elem inv(Elem a) const noexcept { return inv_[a]; }
  unsigned element_order(Elem a) const noexcept { return orders_[a]; }
  std::span<const Elem> row(Elem a) const noexcept {
    return {table_.data() + std::size_t{a} * n_, n_};
  }
  std::span<const Elem> flat() const noexcept { return table_; }

  /// Conjugate a^b = b^-1 a b.
  Elem conj(Elem a, Elem b) const noexcept { return mul(mul(inv(b), a), b); }
  Elem pow(Elem a, long long k) const noexcept;

  bool is_abelian() const noexcept;

  friend bool operator==(const GroupTable& lhs, const GroupTable& rhs) noexcept {
    return lhs.n_ == rhs.n_ && lhs.table_ == rhs.table_;
  }

 private:
  GroupTable(std::size_t n, std::vector<Elem> table);

  std::size_t n_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inv_;
  std::vector<unsigned> orders_;
};

using GroupPtr = std::shared_ptr<const GroupTable>;

inline GroupPtr share(GroupTable g) { return std::make_shared<const GroupTable>(std::move(g)); }

/// A subset of a group's elements, kept sorted, with O(1) membership.
/// The parent group is not referenced; callers pass it alongside.
class ElementSubset {
 public:
  ElementSubset() = default;
  ElementSubset(std::size_t parent_order, std::vector<Elem> members);

  std::span<const Elem> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  std::size_t parent_order() const noexcept { return mask_.size(); }
  bool contains(Elem a) const noexcept { return a < mask_.size() && mask_[a]; }

  friend bool operator==(const ElementSubset& lhs, const ElementSubset& rhs) noexcept {
    return lhs.members_ == rhs.members_;
  }
  friend auto operator<=>(const ElementSubset& lhs, const ElementSubset& rhs) noexcept {
    return lhs.members_ <=> rhs.members_;
  }

 private:
  std::vector<Elem> members_;
  std::vector<bool> mask_;
};

struct Quotient {
  GroupTable group;
  std::vector<Elem> projection;  // element of G -> coset index
};

// Construction.
GroupTable group_from_table(const std::vector<std::vector<Elem>>& raw);
GroupTable cyclic_group(std::size_t n);
GroupTable dihedral_group(std::size_t n);  // order 2n; 0..n-1 rotations, n..2n-1 reflections
GroupTable direct_product(const GroupTable& a, const GroupTable& b);
GroupTable group_from_permutations(const std::vector<std::vector<std::uint32_t>>& gens);
/// Relabels so that old element `a` becomes `new_label[a]`; new_label[0] must be 0.
GroupTable relabel(const GroupTable& g, std::span<const Elem> new_label);

// Structure.
unsigned element_order(const GroupTable& g, Elem a);
std::vector<Elem> involutions(const GroupTable& g);
ElementSubset subgroup_generated(const GroupTable& g, std::span<const Elem> gens);
bool generates(const GroupTable& g, std::span<const Elem> gens);
bool is_subgroup(const GroupTable& g, const ElementSubset& h);
bool is_normal(const GroupTable& g, const ElementSubset& h);
std::vector<std::vector<Elem>> conjugacy_classes(const GroupTable& g);
std::vector<ElementSubset> normal_subgroups(const GroupTable& g);
ElementSubset derived_subgroup(const GroupTable& g, const ElementSubset& h);
bool is_soluble(const GroupTable& g, const ElementSubset& h);
ElementSubset soluble_radical(const GroupTable& g);
ElementSubset center(const GroupTable& g);
Quotient quotient(const GroupTable& g, const ElementSubset& n);
/// The subgroup as a standalone group; `embedding[i]` is the parent element of new index i.
GroupTable subgroup_as_group(const GroupTable& g, const ElementSubset& h,
                             std::vector<Elem>* embedding = nullptr);
bool is_automorphism(const GroupTable& g, std::span<const Elem> phi);
GroupTable semidirect_with_involutory_automorphism(const GroupTable& g,
                                                   std::span<const Elem> tau);
/// A small generating set found greedily (first element of largest order, then fill in).
std::vector<Elem> generating_set(const GroupTable& g);
bool is_p_group(const GroupTable& g, unsigned p);

// GRP1 text format: "GRP1 <n>" then n rows of n space-separated integers.
std::string to_grp1(const GroupTable& g);
GroupTable parse_grp1(std::string_view text);

}  // namespace twostar
