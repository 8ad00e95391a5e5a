#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "support/brute.hpp"
#include "twostar/census.hpp"
#include "twostar/certificate.hpp"
#include "twostar/error.hpp"
#include "twostar/group.hpp"

namespace twostar {
namespace {

using testing::s3_table;

template <typename Fn>
Errc error_code(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return Errc::Io;
}

GroupTable a5() { return verify_seed(seed_table().front()); }

TEST(GroupTable, TrivialFromTable) {
  const GroupTable g = group_from_table({{0}});
  EXPECT_EQ(g.order(), 1U);
  EXPECT_EQ(g.inv(0), 0U);
}

TEST(GroupTable, C2FromTable) {
  const GroupTable g = group_from_table({{0, 1}, {1, 0}});
  EXPECT_EQ(g.order(), 2U);
  EXPECT_EQ(g.element_order(1), 2U);
  EXPECT_EQ(g, cyclic_group(2));
}

TEST(GroupTable, RejectsBadTables) {
  EXPECT_EQ(error_code([] { group_from_table({{0, 1}, {1, 1}}); }), Errc::NotLatinSquare);
  EXPECT_EQ(error_code([] { group_from_table({{1, 0}, {0, 1}}); }), Errc::NoIdentityAtZero);
  // A Latin square with identity 0 that is not associative: (1*1)*2 = 2 but 1*(1*2) = 4.
  EXPECT_EQ(error_code([] {
              group_from_table({{0, 1, 2, 3, 4},
                                {1, 0, 3, 4, 2},
                                {2, 4, 0, 1, 3},
                                {3, 2, 4, 0, 1},
                                {4, 3, 1, 2, 0}});
            }),
            Errc::NotAssociative);
  EXPECT_EQ(error_code([] { group_from_table({{0, 2}, {1, 0}}); }), Errc::NotLatinSquare);
  EXPECT_EQ(error_code([] { group_from_table({{0, 1}, {1}}); }), Errc::MalformedInput);
}

TEST(Cyclic, Examples) {
  EXPECT_EQ(cyclic_group(1).order(), 1U);
  const GroupTable c5 = cyclic_group(5);
  for (Elem a = 1; a < 5; ++a) EXPECT_EQ(c5.element_order(a), 5U);
  const GroupTable c6 = cyclic_group(6);
  EXPECT_EQ(involutions(c6), std::vector<Elem>{3});
}

TEST(ElementOrder, Examples) {
  const GroupTable c6 = cyclic_group(6);
  EXPECT_EQ(element_order(c6, 3), 2U);
  EXPECT_EQ(element_order(c6, 2), 3U);
  EXPECT_EQ(element_order(c6, 0), 1U);
}

TEST(ElementOrder, DividesGroupOrder) {
  for (const GroupTable& g : {cyclic_group(12), dihedral_group(5), s3_table(), testing::a4_table(), a5()}) {
    for (Elem a = 0; a < g.order(); ++a) {
      EXPECT_EQ(g.order() % g.element_order(a), 0U);
      EXPECT_EQ(g.pow(a, g.element_order(a)), 0U);
    }
  }
}

TEST(SubgroupGenerated, Examples) {
  std::vector<testing::Perm> perms;
  const GroupTable s3 = s3_table(&perms);
  const Elem cycle = testing::index_of(perms, {1, 2, 0});
  const Elem one[] = {cycle};
  EXPECT_EQ(subgroup_generated(s3, one).size(), 3U);
  const ElementSubset trivial = subgroup_generated(s3, std::span<const Elem>{});
  EXPECT_EQ(std::vector<Elem>(trivial.members().begin(), trivial.members().end()), std::vector<Elem>{0});
  const GroupTable c6 = cyclic_group(6);
  const Elem gens[] = {2, 3};
  EXPECT_EQ(subgroup_generated(c6, gens).size(), 6U);
}

TEST(NormalSubgroups, Examples) {
  EXPECT_EQ(normal_subgroups(s3_table()).size(), 3U);
  EXPECT_EQ(normal_subgroups(cyclic_group(4)).size(), 3U);
  EXPECT_EQ(normal_subgroups(a5()).size(), 2U);
}

TEST(NormalSubgroups, ConjugationInvariant) {
  for (const GroupTable& g : {dihedral_group(6), testing::a4_table(), testing::q8_table()}) {
    for (const auto& n : normal_subgroups(g)) {
      EXPECT_TRUE(is_subgroup(g, n));
      for (Elem a : n.members()) {
        for (Elem b = 0; b < g.order(); ++b) EXPECT_TRUE(n.contains(g.conj(a, b)));
      }
    }
  }
}

TEST(NormalSubgroups, A4HasKleinAndTrivialAndWhole) {
  std::vector<std::size_t> sizes;
  for (const auto& n : normal_subgroups(testing::a4_table())) sizes.push_back(n.size());
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 4, 12}));
}

TEST(SolubleRadical, Examples) {
  EXPECT_EQ(soluble_radical(s3_table()).size(), 6U);
  EXPECT_EQ(soluble_radical(a5()).size(), 1U);
  EXPECT_EQ(soluble_radical(cyclic_group(1)).size(), 1U);
}

TEST(SolubleRadical, ContainsEverySolubleNormalSubgroup) {
  const GroupTable s5 = verify_seed(seed_table()[1]);
  for (const GroupTable& g : {s5, dihedral_group(6), testing::a4_table()}) {
    const ElementSubset radical = soluble_radical(g);
    EXPECT_TRUE(is_normal(g, radical));
    EXPECT_TRUE(is_soluble(g, radical));
    for (const auto& n : normal_subgroups(g)) {
      if (!is_soluble(g, n)) continue;
      for (Elem a : n.members()) EXPECT_TRUE(radical.contains(a));
    }
  }
}

TEST(Quotient, Examples) {
  const GroupTable c4 = cyclic_group(4);
  const Quotient q1 = quotient(c4, ElementSubset(4, {0, 2}));
  EXPECT_EQ(q1.group, cyclic_group(2));

  const GroupTable s3 = s3_table();
  ElementSubset c3;
  for (const auto& n : normal_subgroups(s3)) {
    if (n.size() == 3) c3 = n;
  }
  EXPECT_EQ(quotient(s3, c3).group.order(), 2U);

  const GroupTable d5 = dihedral_group(5);
  const Quotient same = quotient(d5, ElementSubset(10, {0}));
  EXPECT_EQ(same.group.order(), 10U);
  std::vector<Elem> sorted = same.projection;
  std::sort(sorted.begin(), sorted.end());
  for (Elem i = 0; i < 10; ++i) EXPECT_EQ(sorted[i], i);
}

TEST(Quotient, ProjectionIsHomomorphism) {
  const GroupTable d6 = dihedral_group(6);
  for (const auto& n : normal_subgroups(d6)) {
    const Quotient q = quotient(d6, n);
    EXPECT_EQ(q.projection[0], 0U);
    EXPECT_TRUE(testing::is_homomorphism(d6, q.group, q.projection));
  }
}

TEST(Quotient, RejectsNonNormal) {
  const GroupTable s3 = dihedral_group(3);
  EXPECT_EQ(error_code([&] { quotient(s3, ElementSubset(6, {0, 3})); }), Errc::NotNormal);
}

TEST(Center, Examples) {
  EXPECT_EQ(center(s3_table()).size(), 1U);
  EXPECT_EQ(center(dihedral_group(4)).size(), 2U);
  const GroupTable ab = direct_product(cyclic_group(4), cyclic_group(6));
  EXPECT_EQ(center(ab).size(), ab.order());
}

TEST(Semidirect, C3ByInversionIsS3) {
  const GroupTable c3 = cyclic_group(3);
  const std::vector<Elem> inversion{0, 2, 1};
  const GroupTable g = semidirect_with_involutory_automorphism(c3, inversion);
  EXPECT_EQ(g.order(), 6U);
  EXPECT_FALSE(g.is_abelian());
  EXPECT_EQ(canonical_group_certificate(g)->certificate,
            canonical_group_certificate(s3_table())->certificate);
  for (Elem a = 0; a < 3; ++a) {
    for (Elem b = 0; b < 3; ++b) EXPECT_EQ(g.mul(a, b), c3.mul(a, b));
  }
}

TEST(Semidirect, C3ByIdentityIsC6) {
  const std::vector<Elem> id{0, 1, 2};
  const GroupTable g = semidirect_with_involutory_automorphism(cyclic_group(3), id);
  EXPECT_TRUE(g.is_abelian());
  EXPECT_EQ(testing::order_spectrum(g), testing::order_spectrum(cyclic_group(6)));
}

TEST(Semidirect, C4ByInversionIsD4) {
  const std::vector<Elem> inversion{0, 3, 2, 1};
  const GroupTable g = semidirect_with_involutory_automorphism(cyclic_group(4), inversion);
  EXPECT_EQ(canonical_group_certificate(g)->certificate,
            canonical_group_certificate(dihedral_group(4))->certificate);
}

TEST(Semidirect, RejectsBadMaps) {
  const GroupTable c5 = cyclic_group(5);
  EXPECT_EQ(error_code([&] {
              const std::vector<Elem> bad{0, 1, 2, 4, 3};
              semidirect_with_involutory_automorphism(c5, bad);
            }),
            Errc::NotAutomorphism);
  EXPECT_EQ(error_code([&] {
              const std::vector<Elem> doubling{0, 2, 4, 1, 3};  // order 4
              semidirect_with_involutory_automorphism(c5, doubling);
            }),
            Errc::NotInvolutory);
}

TEST(PairCertificate, C2Examples) {
  const GroupTable c2 = cyclic_group(2);
  EXPECT_EQ(pair_certificate(c2, 1, 1).values, (std::vector<Elem>{1, 1, 0, 0}));
  EXPECT_EQ(pair_certificate(c2, 1, 0).values, (std::vector<Elem>{1, 0, 0, 1}));
}

TEST(PairCertificate, BytesAreBigEndian) {
  const Certificate c = pair_certificate(cyclic_group(2), 1, 0);
  const std::string bytes = c.bytes();
  ASSERT_EQ(bytes.size(), 16U);
  EXPECT_EQ(bytes.substr(0, 4), std::string("\0\0\0\1", 4));
  EXPECT_EQ(bytes.substr(12, 4), std::string("\0\0\0\1", 4));
}

TEST(PairCertificate, V4DistinctInvolutionsShareOneCertificate) {
  const GroupTable v4 = direct_product(cyclic_group(2), cyclic_group(2));
  std::set<Certificate> certs;
  int pairs = 0;
  for (Elem s = 1; s < 4; ++s) {
    for (Elem t = 1; t < 4; ++t) {
      if (s == t) continue;
      certs.insert(pair_certificate(v4, s, t));
      ++pairs;
    }
  }
  EXPECT_EQ(pairs, 6);
  EXPECT_EQ(certs.size(), 1U);
}

TEST(PairCertificate, NotGenerating) {
  EXPECT_EQ(error_code([] { pair_certificate(cyclic_group(4), 2, 2); }), Errc::NotGenerating);
}

TEST(PairCertificate, MatchesBruteForceIsomorphism) {
  for (const GroupTable& g : {s3_table(), dihedral_group(4), cyclic_group(6), cyclic_group(8)}) {
    std::vector<std::pair<Elem, Elem>> pairs;
    for (Elem s = 0; s < g.order(); ++s) {
      for (Elem t = 0; t < g.order(); ++t) {
        const Elem gens[] = {s, t};
        if (generates(g, gens)) pairs.emplace_back(s, t);
      }
    }
    for (auto [s1, t1] : pairs) {
      for (auto [s2, t2] : pairs) {
        const bool same = pair_certificate(g, s1, t1) == pair_certificate(g, s2, t2);
        EXPECT_EQ(same, testing::brute_marked_isomorphic(g, {s1, t1}, g, {s2, t2}))
            << "order " << g.order() << " (" << s1 << "," << t1 << ") vs (" << s2 << "," << t2 << ")";
      }
    }
  }
}

TEST(Automorphisms, Counts) {
  const GroupTable v4 = direct_product(cyclic_group(2), cyclic_group(2));
  EXPECT_EQ(automorphisms_from_pair(v4, 1, 2).size(), 6U);
  EXPECT_EQ(automorphisms_from_pair(cyclic_group(4), 2, 1).size(), 2U);
  std::vector<testing::Perm> perms;
  const GroupTable s3 = s3_table(&perms);
  const Elem t = testing::index_of(perms, {1, 0, 2});
  const Elem c = testing::index_of(perms, {1, 2, 0});
  EXPECT_EQ(automorphisms_from_pair(s3, t, c).size(), 6U);
}

TEST(Automorphisms, FormAGroupAndPreserveCertificates) {
  const GroupTable d6 = dihedral_group(6);
  const Elem s = 6, r = 1;
  const auto autos = automorphisms_from_pair(d6, s, r);
  std::set<std::vector<Elem>> set(autos.begin(), autos.end());
  EXPECT_EQ(autos.front(), (std::vector<Elem>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}));
  for (const auto& a : autos) {
    EXPECT_TRUE(is_automorphism(d6, a));
    EXPECT_EQ(pair_certificate(d6, a[s], a[r]), pair_certificate(d6, s, r));
    for (const auto& b : autos) {
      std::vector<Elem> ab(d6.order());
      for (Elem e = 0; e < d6.order(); ++e) ab[e] = b[a[e]];
      EXPECT_TRUE(set.count(ab));
    }
  }
  // Independent of the generating pair used.
  EXPECT_EQ(automorphisms_from_pair(d6, 7, 1).size(), autos.size());
}

TEST(Grp1, RoundTrip) {
  const GroupTable g = dihedral_group(5);
  const std::string text = to_grp1(g);
  EXPECT_EQ(text.substr(0, 8), "GRP1 10\n");
  EXPECT_EQ(parse_grp1(text), g);
}

TEST(Grp1, RejectsMalformed) {
  EXPECT_EQ(error_code([] { parse_grp1("GRP2 1\n0\n"); }), Errc::MalformedInput);
  EXPECT_EQ(error_code([] { parse_grp1("GRP1 2\n0 1\n1\n"); }), Errc::MalformedInput);
  EXPECT_EQ(error_code([] { parse_grp1("GRP1 2\n0 1\n1 1\n"); }), Errc::NotLatinSquare);
}

TEST(Relabel, PreservesStructure) {
  const GroupTable d4 = dihedral_group(4);
  const std::vector<Elem> perm{0, 3, 1, 2, 7, 6, 5, 4};
  const GroupTable r = relabel(d4, perm);
  for (Elem a = 0; a < 8; ++a) {
    for (Elem b = 0; b < 8; ++b) EXPECT_EQ(r.mul(perm[a], perm[b]), perm[d4.mul(a, b)]);
  }
}

TEST(Permutations, MatchesIndependentClosure) {
  const GroupTable lib = group_from_permutations({{1, 2, 0, 3}, {1, 0, 3, 2}});
  EXPECT_EQ(lib.order(), 12U);
  EXPECT_EQ(testing::order_spectrum(lib), testing::order_spectrum(testing::a4_table()));
}

}  // namespace
}  // namespace twostar
