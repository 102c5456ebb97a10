#include "isotopy/schema.hpp"

#include <gtest/gtest.h>

#include <random>

#include "isotopy/dehn.hpp"
#include "isotopy/gem_surgery.hpp"
#include "isotopy/generator_system.hpp"
#include "isotopy/homotopy.hpp"
#include "isotopy/testkit.hpp"
#include "test_util.hpp"

using namespace isotopy;

namespace {

void expect_valid_canonicalization(const Word& relator) {
  CanonicalSchema cs = canonicalize_schema(relator);
  const int g = static_cast<int>(relator.size()) / 4;
  ASSERT_EQ(cs.genus, g);
  if (g >= 2) {
    DehnEngine eng(canonical_relator(g));
    Word img = cs.translate(relator);
    EXPECT_TRUE(eng.is_trivial(img))
        << "relator " << word_to_string(relator) << " -> " << word_to_string(img);
  } else {
    auto v = abelianization(cs.translate(relator), 2);
    EXPECT_EQ(v[0], 0);
    EXPECT_EQ(v[1], 0);
  }
}

}  // namespace

TEST(Schema, AlreadyCanonical) {
  Word r = canonical_relator(2);
  CanonicalSchema cs = canonicalize_schema(r);
  EXPECT_EQ(cs.genus, 2);
  for (Letter x = 1; x <= 4; ++x) EXPECT_EQ(cs.substitution[x - 1].size(), 1u);
  expect_valid_canonicalization(r);
}

TEST(Schema, RotatedTorusRelator) {
  Word r = {2, -1, -2, 1};  // rotation of the commutator
  expect_valid_canonicalization(r);
}

TEST(Schema, RejectsNonSchema) {
  EXPECT_THROW(canonicalize_schema({1, 2, -1, -2, 3}), Error);
  EXPECT_THROW(canonicalize_schema({1, 2, 1, 2}), Error);    // same signs
  EXPECT_THROW(canonicalize_schema({1, -1, 2, -2}), Error);  // two vertex classes (sphere-like)
}

TEST(Schema, NonCanonicalGenus2Forms) {
  // a b c d a- b- c- d- : the classical genus-2 "aabb"-style interleaving
  expect_valid_canonicalization({1, 2, 3, 4, -1, -2, -3, -4});
  // another interleaving
  expect_valid_canonicalization({1, 2, -1, 3, 4, -2, -3, -4});
}

TEST(Schema, RandomizedSubdividedSurfaces) {
  // generator systems of refined one-vertex maps give non-canonical schemas
  std::mt19937 rng(17);
  for (int trial = 0; trial < 6; ++trial) {
    Gem h = trial % 2 ? testutil::genus2_one_vertex() : testutil::genus_g_one_vertex(3);
    std::uniform_int_distribution<int32_t> pick(0, 3);
    for (int s = 0; s < 2 + trial; ++s) h = subdivide_edge(h, pick(rng) % h.edge_count());
    GeneratorSystem gs = build_generator_system(h);
    expect_valid_canonicalization(gs.relator);
  }
}

TEST(Schema, SubstitutionPreservesConjugacyAgainstOracle) {
  // Translate small words through the canonicalization of a shuffled schema
  // and compare conjugacy verdicts with the blind BFS oracle applied to the
  // ORIGINAL presentation.
  Word relator = {1, 2, 3, 4, -1, -2, -3, -4};
  CanonicalSchema cs = canonicalize_schema(relator);
  DehnEngine eng(canonical_relator(2));
  Presentation pres{4, relator};

  std::vector<Word> samples = {{1}, {2}, {3},      {4},    {1, 2},  {2, 1}, {1, -2},
                               {3, 4}, {1, 3}, {1, 2, 3}, {-1}, {2, -3}};
  int checked = 0;
  for (size_t i = 0; i < samples.size(); ++i) {
    for (size_t j = i; j < samples.size(); ++j) {
      bool engine = eng.conjugate(cs.translate(samples[i]), cs.translate(samples[j]));
      bool oracle = cayley_conjugacy_oracle(pres, samples[i], samples[j], 10);
      EXPECT_EQ(engine, oracle) << word_to_string(samples[i]) << " vs "
                                << word_to_string(samples[j]);
      ++checked;
    }
  }
  EXPECT_GT(checked, 70);
}
