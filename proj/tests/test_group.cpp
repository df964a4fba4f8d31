#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "boolsym/decompose.hpp"
#include "boolsym/group.hpp"
#include "boolsym/orbits.hpp"
#include "boolsym/quotient.hpp"
#include "oracle.hpp"

namespace boolsym {
namespace {

Permutation P(const char* cycles, std::size_t n) { return Permutation::parse(cycles, n); }

PermutationGroup example2_group() {
  return PermutationGroup::from_elements(
      6, {Permutation::identity(6), P("(3 5)(4 6)", 6), P("(1 2)(3 4)(5 6)", 6),
          P("(1 2)(3 6)(4 5)", 6)});
}

TEST(Generate, NamedOrders) {
  EXPECT_EQ(group_from_cycles(4, {"(1 2)(3 4)", "(1 3)(2 4)"}).order(), 4u);
  EXPECT_EQ(generate(5, {}).order(), 1u);
  EXPECT_EQ(group_from_cycles(6, {"(1 2 3 4 5 6)"}).order(), 6u);
  EXPECT_EQ(symmetric_group(5).order(), 120u);
  EXPECT_EQ(dihedral_group(5).order(), 10u);
  EXPECT_EQ(dihedral_group(4).order(), 8u);
  EXPECT_EQ(dihedral_group(3), symmetric_group(3));
}

TEST(Generate, ErrorsOnCapAndDegree) {
  EXPECT_THROW(symmetric_group(6, 100), OrderCapExceeded);
  EXPECT_THROW(generate(3, {Permutation::identity(4)}), DegreeMismatch);
}

TEST(Generate, ElementsAreAGroup) {
  for (const auto& g : {symmetric_group(4), dihedral_group(5), klein_group(),
                        direct_sum(cyclic_group(3), cyclic_group(2))}) {
    EXPECT_TRUE(g.contains(Permutation::identity(g.degree())));
    for (const auto& a : g.elements()) {
      EXPECT_TRUE(g.contains(a.inverse()));
      for (const auto& b : g.elements()) EXPECT_TRUE(g.contains(compose(a, b)));
    }
    // Generating from the full element list gives the same set.
    EXPECT_EQ(generate(g.degree(), g.elements()), g);
    EXPECT_TRUE(std::is_sorted(g.elements().begin(), g.elements().end()));
  }
}

TEST(Generate, MinimalGeneratorsRegenerate) {
  for (const auto& g : {symmetric_group(5), example2_group(), parallel_sum(klein_group())}) {
    EXPECT_EQ(generate(g.degree(), g.minimal_generators()), g);
  }
}

TEST(Orbits, PointsAndMasks) {
  auto k4 = klein_group();
  auto pts = orbits(k4, OrbitDomain::kPoints);
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_EQ(pts.blocks[0], (std::vector<std::uint32_t>{0, 1, 2, 3}));

  auto masks = mask_orbits(k4);
  std::vector<std::vector<std::uint32_t>> weight2;
  for (const auto& b : masks.blocks) {
    if (weight(b.front()) == 2) weight2.push_back(b);
  }
  // {0011,1100}, {0101,1010}, {0110,1001} in lexicographic order.
  EXPECT_EQ(weight2, (std::vector<std::vector<std::uint32_t>>{{0b0011, 0b1100},
                                                             {0b0101, 0b1010},
                                                             {0b0110, 0b1001}}));
  EXPECT_EQ(masks.size(), 7u);
}

TEST(Orbits, AgreeWithBruteForce) {
  for (const auto& g : {klein_group(), cyclic_group(5), example2_group(),
                        direct_sum(cyclic_group(2), klein_group()), dihedral_group(4)}) {
    const auto fast = mask_orbits(g);
    std::set<std::set<Mask>> got;
    for (const auto& b : fast.blocks) {
      got.insert(std::set<Mask>(b.begin(), b.end()));
      // Every block is weight-homogeneous and invariant under each generator.
      for (auto x : b) {
        EXPECT_EQ(weight(x), weight(b.front()));
        for (const auto& s : g.generators()) {
          EXPECT_EQ(fast.block_of[s.image_of(x)], fast.block_of[x]);
        }
      }
    }
    EXPECT_EQ(got, oracle::naive_mask_orbits(g));
    for (std::size_t i = 1; i < fast.blocks.size(); ++i) {
      EXPECT_LT(fast.blocks[i - 1].front(), fast.blocks[i].front());
    }
  }
}

TEST(Orbits, CyclicAndDihedralShareMaskOrbits) {
  auto c3 = cyclic_group(3);
  auto d3 = dihedral_group(3);
  EXPECT_EQ(mask_orbits(c3).blocks, mask_orbits(d3).blocks);
}

TEST(Orbits, DegreeCap) {
  EXPECT_THROW(mask_orbits(trivial_group(25)), SearchCapExceeded);
}

TEST(Sums, DirectSum) {
  auto g = direct_sum(cyclic_group(2), klein_group());
  EXPECT_EQ(g.degree(), 6u);
  EXPECT_EQ(g.order(), 8u);
  EXPECT_EQ(direct_sum(klein_group(), trivial_group(0)), klein_group());
  auto c33 = direct_sum(cyclic_group(3), cyclic_group(3));
  EXPECT_EQ(c33.degree(), 6u);
  EXPECT_EQ(c33.order(), 9u);
  // Matches the piecewise definition: first block by sigma, second shifted by n.
  EXPECT_TRUE(g.contains(P("(1 2)(3 4)(5 6)", 6)));
  EXPECT_FALSE(g.contains(P("(1 3)", 6)));
}

TEST(Sums, ParallelSum) {
  auto c2 = parallel_sum(cyclic_group(2));
  EXPECT_EQ(c2.elements(), (std::vector<Permutation>{Permutation::identity(4), P("(1 2)(3 4)", 4)}));
  EXPECT_EQ(parallel_sum(cyclic_group(4)).order(), 4u);
  EXPECT_EQ(parallel_sum(cyclic_group(4)).degree(), 8u);
  auto k2 = parallel_sum(klein_group());
  EXPECT_EQ(k2.order(), 4u);
  EXPECT_EQ(k2, group_from_cycles(8, {"(1 2)(3 4)(5 6)(7 8)", "(1 3)(2 4)(5 7)(6 8)"}));
}

TEST(Structure, Predicates) {
  auto r = structure_tests(cyclic_group(6));
  EXPECT_TRUE(r.transitive);
  EXPECT_TRUE(r.regular);
  EXPECT_TRUE(r.semiregular);
  auto k = structure_tests(klein_group());
  EXPECT_TRUE(k.transitive && k.regular);
  auto s = structure_tests(symmetric_group(3));
  EXPECT_TRUE(s.transitive);
  EXPECT_FALSE(s.regular);
  EXPECT_FALSE(s.semiregular);
  auto par = structure_tests(parallel_sum(cyclic_group(3)));
  EXPECT_FALSE(par.transitive);
  EXPECT_TRUE(par.semiregular);
  EXPECT_EQ(cycle_type(P("(1 2 3)(4 5 6)", 6)), (std::vector<std::size_t>{3, 3}));
}

TEST(Selector, SmallestPointPerOrbit) {
  EXPECT_EQ(selector(direct_sum(cyclic_group(2), klein_group())).to_string(), "101000");
  EXPECT_TRUE(regular_set_check(BitVector::parse("1000"), klein_group()));
  EXPECT_FALSE(regular_set_check(BitVector::parse("1100"), klein_group()));
  EXPECT_TRUE(regular_set_check(BitVector::parse("101000"),
                                direct_sum(cyclic_group(2), klein_group())));
}

TEST(Quotient, CosetsAndTables) {
  auto c4 = cyclic_group(4);
  auto m = group_from_cycles(4, {"(1 3)(2 4)"});
  auto q = quotient(c4, m);
  EXPECT_EQ(q.order(), 2u);
  EXPECT_EQ(q.cosets[0].size(), 2u);

  auto whole = quotient(klein_group(), klein_group());
  EXPECT_EQ(whole.order(), 1u);

  auto c6 = cyclic_group(6);
  auto half = group_from_cycles(6, {"(1 4)(2 5)(3 6)"});
  auto q3 = quotient(c6, half);
  ASSERT_EQ(q3.order(), 3u);
  // Group table: identity row, associativity, inverses.
  for (std::size_t a = 0; a < 3; ++a) {
    EXPECT_EQ(q3.table[0][a], a);
    bool has_inverse = false;
    for (std::size_t b = 0; b < 3; ++b) {
      has_inverse |= q3.table[a][b] == 0;
      for (std::size_t c = 0; c < 3; ++c) {
        EXPECT_EQ(q3.table[q3.table[a][b]][c], q3.table[a][q3.table[b][c]]);
      }
    }
    EXPECT_TRUE(has_inverse);
  }
  // Isomorphic to C_3 / 1.
  auto c3 = quotient(cyclic_group(3), trivial_group(3));
  EXPECT_EQ(quotient_isomorphisms(q3, c3).size(), 2u);
}

TEST(Quotient, Errors) {
  auto s3 = symmetric_group(3);
  EXPECT_THROW(quotient(s3, group_from_cycles(3, {"(1 2)"})), NotNormal);
  EXPECT_THROW(quotient(cyclic_group(3), group_from_cycles(3, {"(1 2)"})), NotSubgroup);
}

TEST(Quotient, Isomorphisms) {
  auto q2a = quotient(cyclic_group(2), trivial_group(2));
  auto q2b = quotient(cyclic_group(4), group_from_cycles(4, {"(1 3)(2 4)"}));
  EXPECT_EQ(quotient_isomorphisms(q2a, q2b).size(), 1u);
  auto q3 = quotient(cyclic_group(3), trivial_group(3));
  EXPECT_TRUE(quotient_isomorphisms(q3, q2a).empty());
  EXPECT_EQ(quotient_isomorphisms(q3, q3).size(), 2u);
  for (const auto& q : {q2a, q2b, q3, quotient(klein_group(), trivial_group(4))}) {
    auto isos = quotient_isomorphisms(q, q);
    std::vector<std::size_t> id(q.order());
    std::iota(id.begin(), id.end(), 0);
    EXPECT_NE(std::find(isos.begin(), isos.end(), QuotientIso{id}), isos.end());
  }
  // Aut(K_4) = S_3.
  auto k = quotient(klein_group(), trivial_group(4));
  EXPECT_EQ(quotient_isomorphisms(k, k).size(), 6u);
}

TEST(SubdirectSum, CyclicFromC2AndC4) {
  auto a = quotient(cyclic_group(2), trivial_group(2));
  auto b = quotient(cyclic_group(4), group_from_cycles(4, {"(1 3)(2 4)"}));
  auto isos = quotient_isomorphisms(a, b);
  ASSERT_EQ(isos.size(), 1u);
  auto g = subdirect_sum(a, b, isos[0]);
  EXPECT_EQ(g.degree(), 6u);
  EXPECT_EQ(g.order(), 4u);
  EXPECT_TRUE(g.contains(P("(1 2)(3 4 5 6)", 6)));
}

TEST(SubdirectSum, TrivialQuotientsGiveDirectSum) {
  auto a = quotient(cyclic_group(3), cyclic_group(3));
  auto b = quotient(klein_group(), klein_group());
  auto g = subdirect_sum(a, b, QuotientIso{{0}});
  EXPECT_EQ(g, direct_sum(cyclic_group(3), klein_group()));
}

TEST(SubdirectSum, ParallelC3) {
  auto a = quotient(cyclic_group(3), trivial_group(3));
  auto isos = quotient_isomorphisms(a, a);
  ASSERT_EQ(isos.size(), 2u);
  std::vector<PermutationGroup> sums;
  for (const auto& iso : isos) sums.push_back(subdirect_sum(a, a, iso));
  EXPECT_NE(std::find(sums.begin(), sums.end(), parallel_sum(cyclic_group(3))), sums.end());
  EXPECT_EQ(parallel_sum(cyclic_group(3)), group_from_cycles(6, {"(1 2 3)(4 5 6)"}));
}

TEST(SubdirectSum, OrderLawAndProjections) {
  struct Case {
    PermutationGroup g1, n1, g2, n2;
  };
  std::vector<Case> cases{
      {cyclic_group(2), trivial_group(2), klein_group(), group_from_cycles(4, {"(1 3)(2 4)"})},
      {cyclic_group(6), group_from_cycles(6, {"(1 4)(2 5)(3 6)"}), cyclic_group(3),
       trivial_group(3)},
      {cyclic_group(4), group_from_cycles(4, {"(1 3)(2 4)"}), cyclic_group(6),
       group_from_cycles(6, {"(1 3 5)(2 4 6)"})},
  };
  for (const auto& c : cases) {
    auto qa = quotient(c.g1, c.n1);
    auto qb = quotient(c.g2, c.n2);
    for (const auto& iso : quotient_isomorphisms(qa, qb)) {
      auto s = subdirect_sum(qa, qb, iso);
      EXPECT_EQ(s.order(), c.g1.order() * c.n2.order());
      EXPECT_EQ(s.order(), c.n1.order() * c.g2.order());
      std::vector<Point> left(c.g1.degree()), right(c.g2.degree());
      std::iota(left.begin(), left.end(), Point{0});
      std::iota(right.begin(), right.end(), static_cast<Point>(c.g1.degree()));
      EXPECT_EQ(restrict_to(s, left), c.g1);
      EXPECT_EQ(restrict_to(s, right), c.g2);
    }
  }
}

TEST(SubdirectSum, RejectsBadIso) {
  auto a = quotient(cyclic_group(3), trivial_group(3));
  EXPECT_THROW(subdirect_sum(a, a, QuotientIso{{0, 1, 1}}), InvalidIsomorphism);
}

TEST(Decompose, IndependentSummands) {
  auto direct = decompose_independent(direct_sum(cyclic_group(3), klein_group()));
  ASSERT_EQ(direct.size(), 2u);
  EXPECT_TRUE(direct[0].independent);
  EXPECT_EQ(direct[0].restricted, cyclic_group(3));
  EXPECT_TRUE(direct[1].independent);

  auto par = decompose_independent(parallel_sum(cyclic_group(3)));
  ASSERT_EQ(par.size(), 2u);
  EXPECT_FALSE(par[0].independent);
  EXPECT_FALSE(par[1].independent);
  EXPECT_EQ(par[0].factor, par[1].factor);

  auto ex2 = decompose_independent(example2_group());
  ASSERT_EQ(ex2.size(), 2u);
  EXPECT_EQ(ex2[0].orbit, (std::vector<Point>{0, 1}));
  EXPECT_EQ(ex2[1].orbit, (std::vector<Point>{2, 3, 4, 5}));
  EXPECT_FALSE(ex2[0].independent);
  EXPECT_FALSE(ex2[1].independent);
  EXPECT_EQ(ex2[1].restricted, klein_group());
}

TEST(Decompose, MixedBlocks) {
  // C_3 (+) C_3^(2): first orbit splits off, the other two stay together.
  auto g = direct_sum(cyclic_group(3), parallel_sum(cyclic_group(3)));
  auto parts = decompose_independent(g);
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_TRUE(parts[0].independent);
  EXPECT_FALSE(parts[1].independent);
  EXPECT_FALSE(parts[2].independent);
  EXPECT_EQ(parts[1].factor, parts[2].factor);
  EXPECT_NE(parts[0].factor, parts[1].factor);
}

TEST(Relabel, ConjugatesGroup) {
  auto r = P("(1 3)", 4);
  auto g = relabel(group_from_cycles(4, {"(1 2)"}), r);
  EXPECT_EQ(g, group_from_cycles(4, {"(2 3)"}));
}

}  // namespace
}  // namespace boolsym
