#include "twostar/census.hpp"
#include "twostar/error.hpp"

namespace twostar {

const std::vector<SeedEntry>& seed_table() {
  static const std::vector<SeedEntry> table = {
      {"A5", 60, {{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}}},
      {"S5", 120, {{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}}},
      {"PSL(2,7)", 168,
       {{1, 2, 3, 4, 5, 6, 0, 7}, {0, 2, 4, 6, 1, 3, 5, 7}, {7, 6, 3, 2, 5, 4, 1, 0}}},
      {"PGL(2,7)", 336,
       {{1, 2, 3, 4, 5, 6, 0, 7}, {0, 3, 6, 2, 5, 1, 4, 7}, {7, 6, 3, 2, 5, 4, 1, 0}}},
      {"A6", 360, {{1, 2, 3, 4, 0, 5}, {0, 2, 3, 4, 5, 1}}},
      {"PSL(2,8)", 504,
       {{4, 5, 6, 7, 0, 1, 2, 3, 8}, {0, 6, 1, 7, 2, 4, 3, 5, 8}, {8, 7, 5, 6, 4, 2, 3, 1, 0}}},
      {"PSL(2,11)", 660,
       {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 0, 11},
        {0, 4, 8, 1, 5, 9, 2, 6, 10, 3, 7, 11},
        {11, 10, 5, 7, 8, 2, 9, 3, 4, 6, 1, 0}}},
      {"S6", 720, {{1, 2, 3, 4, 5, 0}, {1, 0, 2, 3, 4, 5}}},
      {"PGL(2,9)", 720,
       {{3, 4, 5, 6, 7, 8, 0, 1, 2, 9},
        {0, 5, 7, 1, 3, 8, 2, 4, 6, 9},
        {9, 8, 4, 6, 2, 5, 3, 7, 1, 0}}},
      {"M10", 720,
       {{3, 4, 5, 6, 7, 8, 0, 1, 2, 9},
        {0, 8, 4, 5, 1, 6, 7, 3, 2, 9},
        {9, 8, 4, 6, 2, 5, 3, 7, 1, 0},
        {0, 6, 3, 1, 7, 4, 2, 8, 5, 9}}},
  };
  return table;
}

GroupTable verify_seed(const SeedEntry& entry) {
  GroupTable g = group_from_permutations(entry.generators);
  if (g.order() != entry.order) {
    throw Error(Errc::SeedVerificationFailed,
                entry.name + ": generated order " + std::to_string(g.order()) + ", expected " +
                    std::to_string(entry.order));
  }
  if (soluble_radical(g).size() != 1) {
    throw Error(Errc::SeedVerificationFailed, entry.name + ": soluble radical is nontrivial");
  }
  return g;
}

std::vector<SeedGroup> seed_groups(std::size_t m) {
  std::vector<SeedGroup> out;
  for (std::size_t k = 1; k <= m; k += 2) {
    out.push_back({"C" + std::to_string(k), share(cyclic_group(k)), true});
  }
  for (const auto& entry : seed_table()) {
    if (entry.order <= m) out.push_back({entry.name, share(verify_seed(entry)), false});
  }
  return out;
}

}  // namespace twostar
