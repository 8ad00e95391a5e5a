#pragma once

#include <cstddef>
#include <vector>

#include "twostar/triples.hpp"

namespace twostar {

inline constexpr std::size_t kOracleDefaultCap = 47;
inline constexpr std::size_t kOracleStretchCap = 63;

struct OracleOptions {
  std::size_t cap = kOracleDefaultCap;
  unsigned workers = 1;
  bool exclude_degenerate = false;  // drop triples whose g is the identity
};

/// Every (2,*)-triple of order at most n_max up to isomorphism, indexed by
/// order (entry 0 is empty), each list sorted by triple certificate.
///
/// The triples are found without any group-theoretic input: the search
/// builds the right-regular action of <x, g> on labels 0..n-1 slot by slot
/// (e*g before e*x, labels introduced in order), while tracking the left
/// multiplication maps, which must commute with both generators. A finished
/// action that is regular is written out as a multiplication table.
/// Throws CapExceeded when n_max exceeds the cap or the cap exceeds kOracleStretchCap.
std::vector<std::vector<TwoStarTriple>> oracle_triples_by_order(std::size_t n_max,
                                                                const OracleOptions& options = {});

/// The triples of order exactly n.
std::vector<TwoStarTriple> oracle_enumerate(std::size_t n, const OracleOptions& options = {});

struct OracleRow {
  std::size_t order = 0;
  std::size_t groups = 0;
  std::size_t triples = 0;
};

/// Rows for n = 1..n_max; groups are counted by canonical group certificate.
std::vector<OracleRow> oracle_counts(std::size_t n_max, const OracleOptions& options = {});

}  // namespace twostar
