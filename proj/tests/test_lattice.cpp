#include <gtest/gtest.h>

#include <map>

#include "burnside/catalog.hpp"
#include "burnside/error.hpp"
#include "burnside/lattice.hpp"
#include "oracles.hpp"

using namespace burnside;

namespace {

std::vector<FiniteGroup> small_groups() {
  std::vector<FiniteGroup> out;
  for (const auto& entry : catalog())
    if (entry.spec.order() <= 16) out.push_back(build(entry.spec));
  // Non-p-groups where conjugacy classes of subgroups are not singletons.
  const std::vector<Permutation> s3{parse_cycles("(0 1 2)", 3), parse_cycles("(0 1)", 3)};
  out.push_back(group_from_perm_generators(3, s3, kDefaultGroupOrderCap, "S3"));
  const std::vector<Permutation> a4{parse_cycles("(0 1 2)", 4), parse_cycles("(0 1)(2 3)", 4)};
  out.push_back(group_from_perm_generators(4, a4, kDefaultGroupOrderCap, "A4"));
  return out;
}

}  // namespace

TEST(EnumerateSubgroups, TrivialGroup) {
  const auto lat = enumerate_subgroups(build(GroupSpec::cyclic(1, 0)));
  EXPECT_EQ(lat.subgroups().size(), 1U);
  EXPECT_EQ(lat.num_classes(), 1U);
}

TEST(EnumerateSubgroups, CyclicGroupsHaveOneSubgroupPerDivisor) {
  for (std::uint64_t p : {2, 3, 5}) {
    for (unsigned n = 0; n <= 3; ++n) {
      const auto lat = enumerate_subgroups(build(GroupSpec::cyclic(p, n)));
      ASSERT_EQ(lat.subgroups().size(), n + 1U);
      ASSERT_EQ(lat.num_classes(), n + 1U);
      std::uint64_t expected = 1;
      for (const auto& c : lat.classes()) {
        EXPECT_TRUE(c.is_normal);
        EXPECT_EQ(c.order(), expected);
        expected *= p;
      }
    }
  }
}

TEST(EnumerateSubgroups, QuaternionEight) {
  const auto lat = enumerate_subgroups(build(GroupSpec::quaternion(8)));
  EXPECT_EQ(lat.subgroups().size(), 6U);
  ASSERT_EQ(lat.num_classes(), 6U);
  const std::vector<std::size_t> orders{1, 2, 4, 4, 4, 8};
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(lat.classes()[i].order(), orders[i]);
    EXPECT_TRUE(lat.classes()[i].is_normal);
  }
}

TEST(EnumerateSubgroups, RejectsGroupsAboveCap) {
  const auto g = build(GroupSpec::dihedral(64));
  try {
    enumerate_subgroups(g, 32);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("32"), std::string::npos);
  }
}

TEST(EnumerateSubgroups, MatchesExhaustiveOracle) {
  for (const auto& g : small_groups()) {
    SCOPED_TRACE(g.name());
    const auto lat = enumerate_subgroups(g);
    const auto subs = oracle::all_subgroups(g);
    ASSERT_EQ(lat.subgroups().size(), subs.size());

    const auto oracle_classes = oracle::conjugacy_classes(g, subs);
    ASSERT_EQ(lat.num_classes(), oracle_classes.size());
    for (const auto& c : lat.classes()) {
      std::set<oracle::ElementList> members;
      for (auto m : c.members) {
        const auto& s = lat.subgroups()[m];
        members.insert({s.elements().begin(), s.elements().end()});
      }
      EXPECT_TRUE(oracle_classes.contains(members));
    }
  }
}

TEST(EnumerateSubgroups, InvariantsAcrossCatalog) {
  for (const auto& entry : catalog()) {
    if (entry.spec.order() > 64) continue;
    SCOPED_TRACE(entry.label);
    const auto g = build(entry.spec);
    const auto lat = enumerate_subgroups(g);
    std::size_t total = 0;
    for (const auto& c : lat.classes()) {
      total += c.size();
      EXPECT_EQ(c.size() * c.normalizer.order(), g.order());
      EXPECT_EQ(c.is_normal, c.size() == 1);
      EXPECT_EQ(normalizer(g, c.representative), c.normalizer);
      for (auto m : c.members) {
        const auto& s = lat.subgroups()[m];
        EXPECT_EQ(s.order(), c.order());
        EXPECT_EQ(lat.class_of_subgroup(m), c.class_index);
      }
      if (g.is_abelian()) EXPECT_TRUE(c.is_normal);
    }
    EXPECT_EQ(total, lat.subgroups().size());
    EXPECT_EQ(lat.classes().front().order(), 1U);
    EXPECT_EQ(lat.classes().back().order(), g.order());

    // Canonical order.
    for (std::size_t i = 1; i < lat.num_classes(); ++i) {
      const auto& a = lat.classes()[i - 1];
      const auto& b = lat.classes()[i];
      ASSERT_TRUE(a.order() < b.order() || (a.order() == b.order() && a.size() > b.size()) ||
                  (a.order() == b.order() && a.size() == b.size() && a.representative < b.representative));
    }
    const auto ea = select_family(lat, FamilyKind::ElementaryAbelian);
    ASSERT_FALSE(ea.empty());
    EXPECT_EQ(ea.front(), 0U);
  }
}

TEST(EnumerateSubgroups, DeterministicAcrossRuns) {
  const auto g = build(parse_group_spec("D8xC2"));
  const auto a = enumerate_subgroups(g);
  const auto b = enumerate_subgroups(g);
  ASSERT_EQ(a.num_classes(), b.num_classes());
  for (std::size_t i = 0; i < a.num_classes(); ++i) {
    EXPECT_EQ(a.classes()[i].representative, b.classes()[i].representative);
  }
}

TEST(Normalizer, Examples) {
  const auto d8 = build(GroupSpec::dihedral(8));
  EXPECT_EQ(normalizer(d8, whole_group(d8)).order(), 8U);
  EXPECT_EQ(normalizer(d8, trivial_subgroup(d8)).order(), 8U);
  const auto reflection = generated_subgroup(d8, std::vector<Element>{4});
  const auto n = normalizer(d8, reflection);
  EXPECT_EQ(n.order(), 4U);
  EXPECT_TRUE(reflection.is_subset_of(n));
}

TEST(ElementaryAbelian, Examples) {
  const auto q8 = build(GroupSpec::quaternion(8));
  EXPECT_TRUE(is_elementary_abelian(q8, trivial_subgroup(q8)));
  EXPECT_FALSE(is_elementary_abelian(q8, generated_subgroup(q8, std::vector<Element>{1})));

  const auto c4c2 = build(parse_group_spec("C4xC2"));
  ElementSet squares_to_one(c4c2.order());
  for (Element x = 0; x < c4c2.order(); ++x)
    if (c4c2.mul(x, x) == kIdentity) squares_to_one.insert(x);
  ASSERT_TRUE(is_subgroup(c4c2, squares_to_one));
  const Subgroup ubar(squares_to_one);
  EXPECT_TRUE(is_elementary_abelian(c4c2, ubar));
  EXPECT_EQ(ubar.order(), 4U);

  const std::vector<Permutation> s3gens{parse_cycles("(0 1 2)", 3), parse_cycles("(0 1)", 3)};
  const auto s3 = group_from_perm_generators(3, s3gens);
  EXPECT_FALSE(is_elementary_abelian(s3, whole_group(s3)));
}

TEST(MaximalElementaryAbelian, Examples) {
  const auto ea = build(GroupSpec::elementary_abelian(3, 2));
  EXPECT_EQ(maximal_elementary_abelian(ea).order(), 9U);

  const auto c9 = build(GroupSpec::cyclic(3, 2));
  const auto u = maximal_elementary_abelian(c9);
  EXPECT_EQ(u.order(), 3U);
  EXPECT_EQ(u, generated_subgroup(c9, std::vector<Element>{3}));

  const auto c4c2 = build(parse_group_spec("C4xC2"));
  const auto v = maximal_elementary_abelian(c4c2);
  EXPECT_EQ(v.order(), oracle::solutions_of_power(c4c2, 2));
  EXPECT_EQ(v.order(), 4U);

  EXPECT_THROW(maximal_elementary_abelian(build(GroupSpec::dihedral(8))), DomainError);
}

TEST(SelectFamily, Examples) {
  const auto d8 = enumerate_subgroups(build(GroupSpec::dihedral(8)));
  EXPECT_EQ(select_family(d8, FamilyKind::AllSubgroups).size(), d8.num_classes());

  for (unsigned gamma = 1; gamma <= 5; ++gamma) {
    const auto lat = enumerate_subgroups(build(GroupSpec::cyclic(2, gamma)));
    EXPECT_EQ(select_family(lat, FamilyKind::ElementaryAbelian), (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(select_family(lat, FamilyKind::Cyclic).size(), gamma + 1U);
  }

  const auto q8 = enumerate_subgroups(build(GroupSpec::quaternion(8)));
  EXPECT_EQ(select_family(q8, FamilyKind::ElementaryAbelian), (std::vector<std::size_t>{0, 1}));
}

TEST(SelectFamily, FamilyNames) {
  EXPECT_EQ(parse_family("ea"), FamilyKind::ElementaryAbelian);
  EXPECT_EQ(parse_family("cyclic"), FamilyKind::Cyclic);
  EXPECT_EQ(parse_family("all"), FamilyKind::AllSubgroups);
  EXPECT_THROW(parse_family("abelian"), DomainError);
}
