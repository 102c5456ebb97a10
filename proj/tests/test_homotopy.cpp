#include "isotopy/homotopy.hpp"

#include <gtest/gtest.h>

#include <random>

#include "isotopy/gem_surgery.hpp"
#include "isotopy/testkit.hpp"
#include "test_util.hpp"

using namespace isotopy;

TEST(Homotopy, TorusAbelian) {
  GeneratorSystem gs = build_generator_system(testutil::torus_one_vertex());
  HomotopyContext ctx(gs);
  EXPECT_TRUE(ctx.cycles_freely_homotopic({1, 2}, {2, 1}));
  EXPECT_TRUE(ctx.cycles_freely_homotopic({1, 2, -1}, {2}));
  EXPECT_FALSE(ctx.cycles_freely_homotopic({1}, {2}));
  EXPECT_FALSE(ctx.cycles_freely_homotopic({1}, {-1}));
  EXPECT_TRUE(ctx.paths_homotopic_fixed_endpoints({1, 2}, {2, 1}));
  EXPECT_FALSE(ctx.paths_homotopic_fixed_endpoints({1}, {2}));
}

TEST(Homotopy, SphereAlwaysTrue) {
  RotationSystem rs;
  rs.vertex_count = 2;
  rs.edges = {{0, 1}, {0, 1}, {0, 1}};
  rs.rotation = {{Dart(0, true), Dart(1, true), Dart(2, true)},
                 {Dart(2, false), Dart(1, false), Dart(0, false)}};
  GeneratorSystem gs = build_generator_system(gem_from_rotation(rs));
  HomotopyContext ctx(gs);
  EXPECT_TRUE(ctx.cycles_freely_homotopic({}, {}));
  EXPECT_TRUE(ctx.paths_homotopic_fixed_endpoints({}, {}));
}

TEST(Homotopy, Genus2ViaSchema) {
  GeneratorSystem gs = build_generator_system(testutil::genus2_one_vertex());
  HomotopyContext ctx(gs);
  EXPECT_TRUE(ctx.cycles_freely_homotopic({1}, {1}));
  EXPECT_FALSE(ctx.cycles_freely_homotopic({1}, {2}));
  // w1 w2- = relator  =>  paths homotopic
  Word r = gs.relator;
  Word w1(r.begin(), r.begin() + 3);
  Word w2 = inverse(Word(r.begin() + 3, r.end()));
  EXPECT_TRUE(ctx.paths_homotopic_fixed_endpoints(w1, w2));
  EXPECT_FALSE(ctx.paths_homotopic_fixed_endpoints(w1, concat(w2, {1})));
}

TEST(Homotopy, SubdividedGenus2AgainstOracle) {
  std::mt19937 rng(23);
  Gem h = testutil::genus2_one_vertex();
  h = subdivide_edge(h, 1);
  h = subdivide_edge(h, 3);
  GeneratorSystem gs = build_generator_system(h);
  HomotopyContext ctx(gs);
  Presentation pres{gs.generator_count(), gs.relator};

  std::uniform_int_distribution<int> letter(1, gs.generator_count());
  std::uniform_int_distribution<int> sign(0, 1);
  int agree = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Word w1, w2;
    int l1 = 1 + trial % 3, l2 = 1 + (trial / 3) % 3;
    for (int i = 0; i < l1; ++i) w1.push_back(letter(rng) * (sign(rng) ? 1 : -1));
    for (int i = 0; i < l2; ++i) w2.push_back(letter(rng) * (sign(rng) ? 1 : -1));
    bool engine = ctx.cycles_freely_homotopic(w1, w2);
    bool oracle = cayley_conjugacy_oracle(pres, w1, w2, 11);
    ASSERT_EQ(engine, oracle) << word_to_string(w1) << " vs " << word_to_string(w2);
    ++agree;
  }
  EXPECT_EQ(agree, 60);
}

TEST(Homotopy, FreeGroupHelpers) {
  EXPECT_TRUE(free_cycles_conjugate({1, 2}, {2, 1}));
  EXPECT_TRUE(free_cycles_conjugate({1, 2, -1}, {2}));
  EXPECT_FALSE(free_cycles_conjugate({1}, {2}));
  EXPECT_FALSE(free_cycles_conjugate({1, 2}, {2, -1}));
  EXPECT_TRUE(free_words_equal({1, 2, -2}, {1}));
  EXPECT_FALSE(free_words_equal({1}, {2}));
}

TEST(Oracle, Basics) {
  Presentation free2{2, std::nullopt};
  EXPECT_TRUE(cayley_conjugacy_oracle(free2, {1, 2}, {2, 1}, 8));
  EXPECT_FALSE(cayley_conjugacy_oracle(free2, {1}, {2}, 8));

  Presentation g2{4, canonical_relator(2)};
  EXPECT_TRUE(cayley_conjugacy_oracle(g2, canonical_relator(2), {}, 12));
  EXPECT_TRUE(cayley_conjugacy_oracle(g2, {1}, {1}, 0));
  EXPECT_FALSE(cayley_conjugacy_oracle(g2, {1}, {2}, 12));
  // d c d- is conjugate to a b a- b- c
  EXPECT_TRUE(cayley_conjugacy_oracle(g2, {4, 3, -4}, {1, 2, -1, -2, 3}, 12));
}

TEST(Oracle, PartitionSmall) {
  Presentation g2{4, canonical_relator(2)};
  std::vector<Word> words = {{1}, {2}, {1, 2}, {2, 1}, {-1}, {4, 3, -4}, {3}};
  auto cls = cayley_partition(g2, words, 10);
  EXPECT_EQ(cls[2], cls[3]);  // ab ~ ba
  EXPECT_EQ(cls[5], cls[6]);  // dcd- ~ c
  EXPECT_NE(cls[0], cls[1]);
  EXPECT_NE(cls[0], cls[4]);
}
