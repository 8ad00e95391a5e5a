#include <gtest/gtest.h>

#include <set>

#include "support/brute.hpp"
#include "twostar/census.hpp"
#include "twostar/error.hpp"
#include "twostar/triples.hpp"

namespace twostar {
namespace {

Errc error_code(const GroupPtr& g, Elem x, Elem y) {
  try {
    make_triple(g, x, y);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return Errc::Io;
}

std::set<Certificate> certs(const std::vector<TwoStarTriple>& ts) {
  std::set<Certificate> out;
  for (const auto& t : ts) out.insert(triple_certificate(t));
  return out;
}

TEST(MakeTriple, Examples) {
  const GroupPtr c2 = share(cyclic_group(2));
  const GroupPtr c4 = share(cyclic_group(4));
  EXPECT_NO_THROW(make_triple(c2, 1, 0));
  EXPECT_NO_THROW(make_triple(c4, 2, 1));
  EXPECT_EQ(error_code(c4, 2, 2), Errc::NotGenerating);
  EXPECT_EQ(error_code(c4, 1, 2), Errc::XNotInvolution);
  EXPECT_EQ(error_code(c4, 0, 1), Errc::XNotInvolution);
}

TEST(TripleCertificate, Examples) {
  const GroupPtr c2 = share(cyclic_group(2));
  EXPECT_NE(triple_certificate(make_triple(c2, 1, 1)), triple_certificate(make_triple(c2, 1, 0)));

  std::vector<testing::Perm> perms;
  const GroupPtr s3 = share(testing::s3_table(&perms));
  const auto t1 = make_triple(s3, testing::index_of(perms, {1, 0, 2}), testing::index_of(perms, {1, 2, 0}));
  const auto t2 = make_triple(s3, testing::index_of(perms, {2, 1, 0}), testing::index_of(perms, {2, 0, 1}));
  EXPECT_EQ(triple_certificate(t1), triple_certificate(t2));
  EXPECT_EQ(triple_certificate(t1), triple_certificate(t1));
}

TEST(EnumerateTriples, Examples) {
  EXPECT_TRUE(enumerate_triples(share(cyclic_group(5))).empty());
  EXPECT_EQ(enumerate_triples(share(direct_product(cyclic_group(2), cyclic_group(2)))).size(), 1U);
  EXPECT_EQ(enumerate_triples(share(testing::s3_table())).size(), 2U);
  EXPECT_TRUE(enumerate_triples(share(testing::q8_table())).empty());
}

TEST(EnumerateTriplesAutorbit, Examples) {
  const GroupPtr s3 = share(testing::s3_table());
  EXPECT_EQ(certs(enumerate_triples_autorbit(s3)), certs(enumerate_triples(s3)));
  const auto c6 = enumerate_triples_autorbit(share(cyclic_group(6)));
  ASSERT_EQ(c6.size(), 2U);
  std::multiset<unsigned> g_orders;
  for (const auto& t : c6) g_orders.insert(t.group->element_order(t.g));
  EXPECT_EQ(g_orders, (std::multiset<unsigned>{3, 6}));
  EXPECT_TRUE(enumerate_triples_autorbit(share(cyclic_group(5))).empty());
}

// Independent count: pairs (x, g) up to the equivalence "some bijection fixing 0
// is an isomorphism carrying one pair to the other".
std::size_t brute_class_count(const GroupTable& g) {
  std::vector<std::pair<Elem, Elem>> reps;
  for (Elem x = 0; x < g.order(); ++x) {
    if (g.element_order(x) != 2) continue;
    for (Elem y = 0; y < g.order(); ++y) {
      const Elem gens[] = {x, y};
      if (!generates(g, gens)) continue;
      bool fresh = true;
      for (auto [a, b] : reps) {
        if (testing::brute_marked_isomorphic(g, {a, b}, g, {x, y})) {
          fresh = false;
          break;
        }
      }
      if (fresh) reps.emplace_back(x, y);
    }
  }
  return reps.size();
}

TEST(EnumerateTriples, MatchesBruteForceClassCount) {
  for (const GroupTable& g : {testing::s3_table(), dihedral_group(4), cyclic_group(6), cyclic_group(8),
                              direct_product(cyclic_group(2), cyclic_group(4)), testing::q8_table()}) {
    EXPECT_EQ(enumerate_triples(share(g)).size(), brute_class_count(g)) << "order " << g.order();
  }
}

TEST(EnumerateTriples, RepresentativesAreLeastInTheirClass) {
  const GroupPtr d6 = share(dihedral_group(6));
  const auto reps = enumerate_triples(d6);
  for (const auto& t : reps) {
    for (Elem x = 0; x < d6->order(); ++x) {
      for (Elem y = 0; y < d6->order(); ++y) {
        if (std::pair(x, y) >= std::pair(t.x, t.g)) continue;
        if (d6->element_order(x) != 2) continue;
        const Elem gens[] = {x, y};
        if (!generates(*d6, gens)) continue;
        EXPECT_NE(pair_certificate(*d6, x, y), triple_certificate(t));
      }
    }
  }
}

TEST(EnumerateTriples, MethodsAgreeOverSmallCensus) {
  CensusConfig config;
  config.max_order = 64;
  const CensusDB db = run_census(config);
  std::vector<GroupPtr> groups;
  for (const auto& g : db.groups) groups.push_back(g.group);
  groups.push_back(share(testing::q8_table()));
  groups.push_back(share(direct_product(direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(2))));
  for (const auto& g : groups) {
    EXPECT_EQ(certs(enumerate_triples(g)), certs(enumerate_triples_autorbit(g))) << "order " << g->order();
  }
}

TEST(Degenerate, IdentityG) {
  const GroupPtr c2 = share(cyclic_group(2));
  EXPECT_TRUE(is_degenerate(make_triple(c2, 1, 0)));
  EXPECT_FALSE(is_degenerate(make_triple(c2, 1, 1)));
}

}  // namespace
}  // namespace twostar
