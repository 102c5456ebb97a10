#pragma once

// Dehn's algorithm for the canonical genus-g presentation
//   < a_1 b_1 ... a_g b_g | prod_i [a_i, b_i] >,  letters 1..2g,
// plus the conjugacy closure under rotations and half-relator swaps.

#include <cstdint>
#include <deque>
#include <unordered_set>
#include <vector>

#include "isotopy/word.hpp"

namespace isotopy {

inline Word canonical_relator(int genus) {
  Word r;
  for (int i = 0; i < genus; ++i) {
    Letter a = 2 * i + 1, b = 2 * i + 2;
    r.insert(r.end(), {a, b, -a, -b});
  }
  return r;
}

class DehnEngine {
 public:
  explicit DehnEngine(Word relator) : relator_(cyclic_reduce(relator)) {
    const size_t L = relator_.size();
    require(L >= 8 && L % 4 == 0, ErrorCode::NotCanonical, "relator length must be 4g (g >= 2)");
    genus_ = static_cast<int>(L / 4);
    // all cyclic shifts of R and R^-1
    Word rinv = inverse(relator_);
    for (size_t k = 0; k < L; ++k) {
      shifts_.push_back(rotated(relator_, k));
      shifts_.push_back(rotated(rinv, k));
    }
    verify_small_cancellation();
  }

  int genus() const { return genus_; }
  size_t relator_length() const { return relator_.size(); }
  const Word& relator() const { return relator_; }

  // Greedy Dehn reduction of a cyclic word: replace any cyclic subword longer
  // than half the relator that matches a shift of R^{+-1} by the inverse of
  // the complementary half, then freely and cyclically reduce; repeat.
  // The fixpoint has minimal length in its conjugacy class.
  Word cyclic_reduce_min(const Word& w_in) const {
    Word w = cyclic_reduce(w_in);
    const size_t L = relator_.size();
    const size_t half = L / 2;
    bool changed = true;
    while (changed && !w.empty()) {
      changed = false;
      const size_t n = w.size();
      size_t best_len = 0, best_pos = 0, best_shift = 0;
      for (size_t i = 0; i < n && best_len < std::min(n, L); ++i) {
        for (size_t s = 0; s < shifts_.size(); ++s) {
          const Word& R = shifts_[s];
          size_t m = 0;
          while (m < L && m < n && w[(i + m) % n] == R[m]) ++m;
          if (m > best_len) {
            best_len = m;
            best_pos = i;
            best_shift = s;
          }
        }
      }
      if (best_len > half) {
        const Word& R = shifts_[best_shift];
        Word v(R.begin() + best_len, R.end());
        // w = u x (cyclically, u at best_pos); u = v^{-1} in the group
        Word rest;
        for (size_t j = 0; j < w.size() - best_len; ++j)
          rest.push_back(w[(best_pos + best_len + j) % w.size()]);
        Word nw = concat(inverse(v), rest);
        w = cyclic_reduce(nw);
        changed = true;
      }
    }
    return w;
  }

  // Word problem (fixed endpoints): true iff w represents the identity.
  bool is_trivial(const Word& w) const {
    Word r = free_reduce(w);
    const size_t L = relator_.size();
    const size_t half = L / 2;
    while (!r.empty()) {
      // find a subword strictly longer than half a relator
      size_t n = r.size();
      size_t best_len = 0, best_pos = 0, best_shift = 0;
      for (size_t i = 0; i < n; ++i) {
        for (size_t s = 0; s < shifts_.size(); ++s) {
          const Word& R = shifts_[s];
          size_t m = 0;
          while (m < L && i + m < n && r[i + m] == R[m]) ++m;
          if (m > best_len) {
            best_len = m;
            best_pos = i;
            best_shift = s;
          }
        }
      }
      if (best_len <= half) return false;
      const Word& R = shifts_[best_shift];
      Word v(R.begin() + best_len, R.end());
      Word nw(r.begin(), r.begin() + best_pos);
      Word vi = inverse(v);
      nw.insert(nw.end(), vi.begin(), vi.end());
      nw.insert(nw.end(), r.begin() + best_pos + best_len, r.end());
      r = free_reduce(nw);
    }
    return true;
  }

  // Canonical conjugacy representative: the lexicographically least rotation
  // of minimal length over the closure of the Dehn-reduced word under
  // (i) cyclic rotation and (ii) length-preserving half-relator swaps.
  Word conjugacy_canonical(const Word& w) const {
    Word start = cyclic_reduce_min(w);
    while (true) {
      auto result = closure_scan(start);
      if (result.second) {
        start = cyclic_reduce_min(result.first);  // found shorter; restart
        continue;
      }
      return result.first;
    }
  }

  bool conjugate(const Word& w1, const Word& w2) const {
    Word a = cyclic_reduce_min(w1);
    Word b = cyclic_reduce_min(w2);
    if (a.size() == b.size() && least_rotation(a) == least_rotation(b)) return true;
    return conjugacy_canonical(a) == conjugacy_canonical(b);
  }

 private:
  // BFS over the rotation+swap closure of a Dehn-minimal word.  Returns
  // (canonical word, false) or (strictly shorter word, true) if the closure
  // escapes downward.
  std::pair<Word, bool> closure_scan(const Word& start) const {
    const size_t L = relator_.size();
    const size_t half = L / 2;
    Word c0 = least_rotation(start);
    if (c0.empty()) return {c0, false};
    std::unordered_set<std::string> seen;
    auto key = [](const Word& w) {
      std::string k;
      k.reserve(w.size() * 4);
      for (Letter x : w) k.append(reinterpret_cast<const char*>(&x), 4);
      return k;
    };
    std::deque<Word> queue{c0};
    seen.insert(key(c0));
    Word best = c0;
    while (!queue.empty()) {
      Word w = queue.front();
      queue.pop_front();
      if (w < best) best = w;
      const size_t n = w.size();
      for (size_t i = 0; i < n; ++i) {
        for (size_t s = 0; s < shifts_.size(); ++s) {
          const Word& R = shifts_[s];
          size_t m = 0;
          while (m < half && m < n && w[(i + m) % n] == R[m]) ++m;
          if (m != half || n < half) continue;
          Word v(R.begin() + half, R.end());
          Word rest;
          for (size_t j = 0; j < n - half; ++j) rest.push_back(w[(i + half + j) % n]);
          Word nw = cyclic_reduce(concat(inverse(v), rest));
          if (nw.size() < n) return {nw, true};
          Word cn = least_rotation(nw);
          if (seen.insert(key(cn)).second) queue.push_back(cn);
        }
      }
    }
    return {best, false};
  }

  // C'(1/6)-style check used once: no length-2 subword occurs at two distinct
  // positions among the cyclic shifts of R^{+-1} (pieces have length <= 1).
  void verify_small_cancellation() const {
    const size_t L = relator_.size();
    std::vector<std::pair<Letter, Letter>> grams;
    for (size_t s = 0; s < shifts_.size(); ++s) grams.emplace_back(shifts_[s][0], shifts_[s][1]);
    std::sort(grams.begin(), grams.end());
    for (size_t i = 1; i < grams.size(); ++i)
      require(grams[i] != grams[i - 1], ErrorCode::NotCanonical,
              "relator shares a length-2 subword between distinct cyclic shifts");
    (void)L;
  }

  Word relator_;
  std::vector<Word> shifts_;
  int genus_ = 0;
};

inline Word dehn_cyclic_reduce(const Word& w, const Word& relator) {
  return DehnEngine(relator).cyclic_reduce_min(w);
}

}  // namespace isotopy
