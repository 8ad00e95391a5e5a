#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "twostar/certificate.hpp"
#include "twostar/group.hpp"
#include "twostar/modrep.hpp"

namespace twostar {

inline constexpr std::size_t kCensusDefaultCap = 128;
inline constexpr std::size_t kCensusStretchCap = 256;

/// A group with trivial soluble radical, given by permutation generators.
struct SeedEntry {
  std::string name;
  std::size_t order = 0;
  std::vector<std::vector<std::uint32_t>> generators;  // image lists on 0..k-1
};

/// The built-in entries, sorted by order.
const std::vector<SeedEntry>& seed_table();

/// Builds the group and checks its order and that its soluble radical is
/// trivial. Throws SeedVerificationFailed.
GroupTable verify_seed(const SeedEntry& entry);

struct SeedGroup {
  std::string name;  // "C<k>" for odd cyclics, the table name otherwise
  GroupPtr group;
  bool odd_cyclic = false;
};

/// Odd cyclic groups C1, C3, ... up to m, then verified table entries up to m.
std::vector<SeedGroup> seed_groups(std::size_t m);

struct PoolEntry {
  std::string id;
  GroupPtr group;
  bool odd_cyclic = false;
};

struct RawExtension {
  GroupPtr group;
  std::size_t source = 0;  // index into the pool
  unsigned p = 0;
  std::size_t dim = 0;
  std::size_t module_index = 0;
  std::size_t class_index = 0;
};

struct ExtendOptions {
  unsigned workers = 1;
  std::uint64_t seed = kDefaultMeatAxeSeed;
};

/// Every extension of a pool member Q by an irreducible GF(p)Q-module N with
/// |N| |Q| <= m, one per H^2 class. Odd cyclic Q only use p = 2. When p does
/// not divide |Q| only the split extension is formed. Not deduplicated.
std::vector<RawExtension> extend_step(const std::vector<PoolEntry>& pool, std::size_t m,
                                      const ExtendOptions& options = {});

struct CensusConfig {
  std::size_t max_order = 24;
  bool exclude_degenerate = false;
  unsigned workers = 1;
  std::uint64_t seed = kDefaultMeatAxeSeed;
  std::size_t cap = kCensusDefaultCap;
};

struct CensusGroup {
  std::string id;  // "<order>.<rank within order>"
  GroupPtr group;  // relabeled by its canonical pair
  Certificate certificate;
  std::string hash;
  std::string provenance;
};

struct CensusTriple {
  std::size_t group = 0;  // index into CensusDB::groups
  Elem x = 0;
  Elem g = 0;
};

struct CensusDB {
  std::size_t max_order = 0;
  bool exclude_degenerate = false;
  std::uint64_t seed = kDefaultMeatAxeSeed;
  std::size_t cap = kCensusDefaultCap;
  std::vector<std::string> seeds;
  std::vector<CensusGroup> groups;  // sorted by (order, certificate)
  std::vector<CensusTriple> triples;  // grouped by group, then (x, g)
};

/// Throws CapExceeded when max_order exceeds the configured cap, or the cap
/// exceeds kCensusStretchCap.
CensusDB run_census(const CensusConfig& config);

struct OrderCount {
  std::size_t order = 0;
  std::size_t groups = 0;
  std::size_t triples = 0;
};

/// One row per order 1..max_order.
std::vector<OrderCount> per_order_counts(const CensusDB& db);

/// "n,f,f_t" with cumulative counts for n = 1..max_order.
std::string stats_csv(const CensusDB& db);

// On-disk layout: groups/<hash>.grp, groups.csv, triples.tsv, meta.txt.
std::map<std::string, std::string> census_files(const CensusDB& db);

enum class WriteOutcome { Written, Unchanged };

/// Writes into a fresh sibling directory and renames it into place. An
/// existing directory is left alone: Unchanged if its DB files already match
/// (an atlas/ subdirectory is ignored), Error(Io) otherwise.
WriteOutcome write_census(const CensusDB& db, const std::filesystem::path& dir);

/// Reads a DB directory back, validating every group file. Throws Io or MalformedInput.
CensusDB load_census(const std::filesystem::path& dir);

}  // namespace twostar
