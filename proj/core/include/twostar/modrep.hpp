#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twostar/gf.hpp"
#include "twostar/group.hpp"

namespace twostar {

inline constexpr std::uint64_t kDefaultMeatAxeSeed = 0x6d656174617865ULL;

/// A random element of the group algebra, recorded so it can be replayed in
/// another module: the pool starts as [I, M_1, ..., M_k], each product
/// appends pool[i] * pool[j], and the element is sum(coeffs[i] * pool[i]).
struct AlgebraWord {
  std::vector<std::pair<std::size_t, std::size_t>> products;
  std::vector<unsigned> coeffs;
};

/// Produced when the MeatAxe proves irreducibility: the null space of
/// factor(word) has dimension deg(factor).
struct IrreducibilityWitness {
  AlgebraWord word;
  std::vector<unsigned> factor;  // monic, low degree first
};

/// A GF(p)Q-module with Q acting on row vectors from the right: the matrix of
/// a product ab is M_a * M_b.
struct ActionModule {
  unsigned p = 2;
  std::size_t dim = 0;
  GroupPtr group;
  std::vector<Elem> gens;
  std::vector<GFMatrix> mats;
  std::optional<IrreducibilityWitness> witness;
};

/// Validates shapes and invertibility and that the generator assignment
/// extends to a homomorphism. Throws NotModule otherwise.
ActionModule make_module(GroupPtr group, unsigned p, std::vector<Elem> gens,
                         std::vector<GFMatrix> mats);

/// Matrices of every group element, indexed by element. Throws NotModule.
std::vector<GFMatrix> element_matrices(const ActionModule& m);

ActionModule trivial_module(const GroupPtr& group, unsigned p);
ActionModule regular_module(const GroupPtr& group, unsigned p);

/// RREF basis of the submodule generated by v. Throws ZeroVector.
GFMatrix spin(const ActionModule& m, const GFVec& v);

/// Restriction to the submodule with RREF basis `sub`, and the induced
/// action on the quotient by it.
ActionModule submodule(const ActionModule& m, const GFMatrix& sub);
ActionModule quotient_module(const ActionModule& m, const GFMatrix& sub);

/// Exhaustive check that every nonzero vector spins to the whole space.
/// Returns a vector spinning to a proper submodule, if there is one.
std::optional<GFVec> find_proper_submodule_bruteforce(const ActionModule& m);
bool brute_force_checkable(const ActionModule& m);

/// Module isomorphism for irreducible modules of equal dimension.
bool are_isomorphic(const ActionModule& a, const ActionModule& b);

struct Factor {
  ActionModule module;
  std::size_t multiplicity = 0;
};

/// Composition factors up to isomorphism, sorted by dimension.
std::vector<Factor> chop_irreducibles(const ActionModule& m,
                                      std::uint64_t seed = kDefaultMeatAxeSeed);

/// All irreducible GF(p)Q-modules of dimension at most max_dim, up to isomorphism.
std::vector<ActionModule> irreducible_modules(const GroupPtr& group, unsigned p,
                                              std::size_t max_dim,
                                              std::uint64_t seed = kDefaultMeatAxeSeed);

// MOD1 dump: "MOD1 <p> <d> <k>", then per generator a line "gen <element>"
// followed by d rows of d integers.
std::string to_mod1(const ActionModule& m);
ActionModule parse_mod1(std::string_view text, GroupPtr group);

}  // namespace twostar
