#include "isotopy/dehn.hpp"

#include <gtest/gtest.h>

#include <random>

#include "isotopy/word.hpp"

using namespace isotopy;

TEST(Word, FreeAndCyclicReduction) {
  EXPECT_EQ(free_reduce({1, -1}), Word{});
  EXPECT_EQ(free_reduce({1, 2, -2, -1, 3}), Word{3});
  EXPECT_EQ(cyclic_reduce({1, 2, -1}), Word{2});
  EXPECT_EQ(cyclic_reduce({1, 2, 3, -2, -1}), Word{3});
  Word w{1, 2, -1, -2};
  EXPECT_EQ(cyclic_reduce(w), w);
}

TEST(Word, LeastRotation) {
  Word w{3, 1, 2};
  EXPECT_EQ(least_rotation(w), (Word{1, 2, 3}));
  Word v{2, -1, 2, -3};
  Word lr = least_rotation(v);
  for (size_t k = 0; k < v.size(); ++k) {
    Word r = rotated(v, k);
    EXPECT_LE(lr, r);
  }
}

TEST(Dehn, RelatorIsTrivial) {
  Word r = canonical_relator(2);
  DehnEngine eng(r);
  EXPECT_TRUE(eng.cyclic_reduce_min(r).empty());
  EXPECT_TRUE(eng.is_trivial(r));
  Word conj = concat(concat({1, 2}, r), inverse({1, 2}));
  EXPECT_TRUE(eng.is_trivial(conj));
  EXPECT_TRUE(eng.cyclic_reduce_min(conj).empty());
}

TEST(Dehn, SpecReductionExample) {
  // genus 2, w = a b a- b- c: one replacement gives d c d-, which cyclically
  // reduces to the conjugacy-minimal representative c.
  DehnEngine eng(canonical_relator(2));
  Word w{1, 2, -1, -2, 3};
  Word reduced = eng.cyclic_reduce_min(w);
  EXPECT_EQ(reduced, Word{3});
  // and the intermediate d c d- is in the same class
  EXPECT_TRUE(eng.conjugate({4, 3, -4}, w));
}

TEST(Dehn, ShortWordFixed) {
  DehnEngine eng(canonical_relator(2));
  EXPECT_EQ(eng.cyclic_reduce_min({1}), Word{1});
  EXPECT_FALSE(eng.is_trivial({1}));
}

TEST(Dehn, GeneratorsNotConjugate) {
  DehnEngine eng(canonical_relator(2));
  EXPECT_FALSE(eng.conjugate({1}, {2}));
  EXPECT_FALSE(eng.conjugate({1}, {-1}));
  EXPECT_TRUE(eng.conjugate({1}, {1}));
}

TEST(Dehn, ConjugatesDetected) {
  DehnEngine eng(canonical_relator(2));
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> letter(1, 4);
  std::uniform_int_distribution<int> sign(0, 1);
  for (int trial = 0; trial < 40; ++trial) {
    Word w, u;
    for (int i = 0; i < 4; ++i) w.push_back(letter(rng) * (sign(rng) ? 1 : -1));
    for (int i = 0; i < 3; ++i) u.push_back(letter(rng) * (sign(rng) ? 1 : -1));
    Word conj = concat(concat(u, w), inverse(u));
    EXPECT_TRUE(eng.conjugate(w, conj)) << word_to_string(w) << " | " << word_to_string(u);
  }
}

TEST(Dehn, NeverIncreasesLengthAndRotationStable) {
  DehnEngine eng(canonical_relator(2));
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> letter(1, 4);
  std::uniform_int_distribution<int> sign(0, 1);
  for (int trial = 0; trial < 60; ++trial) {
    Word w;
    int len = 1 + trial % 10;
    for (int i = 0; i < len; ++i) w.push_back(letter(rng) * (sign(rng) ? 1 : -1));
    Word r = eng.cyclic_reduce_min(w);
    EXPECT_LE(r.size(), cyclic_reduce(w).size());
    for (size_t k = 0; k < w.size(); ++k) {
      Word rk = eng.cyclic_reduce_min(rotated(w, k));
      EXPECT_EQ(rk.size(), r.size());
      EXPECT_TRUE(eng.conjugate(rk, r));
    }
  }
}

TEST(Dehn, RejectsTorusRelator) {
  EXPECT_THROW(DehnEngine eng(canonical_relator(1)), Error);
}

TEST(Dehn, Genus3Works) {
  DehnEngine eng(canonical_relator(3));
  EXPECT_TRUE(eng.cyclic_reduce_min(canonical_relator(3)).empty());
  EXPECT_FALSE(eng.conjugate({1}, {5}));
}
