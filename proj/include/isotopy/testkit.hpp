#pragma once

// Independent oracles for the test and acceptance suites.  The conjugacy
// oracle does blind BFS over relator-insertion moves; it shares no machinery
// with the Dehn engine it is used to check.

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "isotopy/word.hpp"

namespace isotopy {

struct Presentation {
  int generators = 0;
  std::optional<Word> relator;  // absent: free group
};

namespace testkit_detail {

inline std::string word_key(const Word& w) {
  std::string k;
  k.reserve(w.size() * 4);
  for (Letter x : w) k.append(reinterpret_cast<const char*>(&x), 4);
  return k;
}

}  // namespace testkit_detail

// BFS ball around a cyclic word: atomic moves insert a cyclic shift of
// R^{+-1} at any position and fully reduce; states are least-rotation forms
// no longer than max_len.  Throws RadiusExceeded past the node budget.
class CayleyBall {
 public:
  CayleyBall(const Presentation& pres, const Word& seed, size_t max_len, size_t node_budget)
      : max_len_(max_len), budget_(node_budget) {
    if (pres.relator && !pres.relator->empty()) {
      Word r = cyclic_reduce(*pres.relator);
      Word ri = inverse(r);
      for (size_t k = 0; k < r.size(); ++k) {
        inserts_.push_back(rotated(r, k));
        inserts_.push_back(rotated(ri, k));
      }
    }
    explore(least_rotation(cyclic_reduce(seed)));
  }

  bool contains(const Word& w) const {
    return members_.count(testkit_detail::word_key(least_rotation(cyclic_reduce(w)))) > 0;
  }

  size_t size() const { return members_.size(); }

 private:
  void explore(const Word& start) {
    std::deque<Word> queue{start};
    members_.insert(testkit_detail::word_key(start));
    while (!queue.empty()) {
      Word w = queue.front();
      queue.pop_front();
      const size_t n = w.size();
      for (size_t pos = 0; pos <= n; ++pos) {
        for (const Word& ins : inserts_) {
          Word nw;
          nw.reserve(n + ins.size());
          nw.insert(nw.end(), w.begin(), w.begin() + pos);
          nw.insert(nw.end(), ins.begin(), ins.end());
          nw.insert(nw.end(), w.begin() + pos, w.end());
          Word red = least_rotation(cyclic_reduce(nw));
          if (red.size() > max_len_) continue;
          if (members_.insert(testkit_detail::word_key(red)).second) {
            require(members_.size() <= budget_, ErrorCode::RadiusExceeded,
                    "oracle ball exceeded the node budget");
            queue.push_back(red);
          }
        }
      }
      if (inserts_.empty()) break;  // free group: the single reduced state
    }
  }

  size_t max_len_;
  size_t budget_;
  std::vector<Word> inserts_;
  std::unordered_set<std::string> members_;
};

// Brute-force conjugacy ground truth.  radius caps the length of explored
// words; negatives are certified by ball exhaustion under the cap (callers
// pass radius with a margin over max(|w1|, |w2|)).
inline bool cayley_conjugacy_oracle(const Presentation& pres, const Word& w1, const Word& w2,
                                    size_t radius, size_t node_budget = 4000000) {
  Word a = least_rotation(cyclic_reduce(w1));
  Word b = least_rotation(cyclic_reduce(w2));
  if (!pres.relator || pres.relator->empty()) return a == b;
  if (a == b) return true;
  CayleyBall ball(pres, a, radius, node_budget);
  return ball.contains(b);
}

// Word-problem variant: is w trivial?
inline bool cayley_trivial_oracle(const Presentation& pres, const Word& w, size_t radius,
                                  size_t node_budget = 4000000) {
  return cayley_conjugacy_oracle(pres, w, Word{}, radius, node_budget);
}

// Partition a set of cyclic words into oracle conjugacy classes; returns a
// class id per word.  Balls are shared across members of a class.
inline std::vector<int32_t> cayley_partition(const Presentation& pres,
                                             const std::vector<Word>& words, size_t radius,
                                             size_t node_budget = 64000000) {
  std::vector<int32_t> cls(words.size(), -1);
  std::unordered_map<std::string, int32_t> canon_to_class;
  std::vector<std::string> keys(words.size());
  std::unordered_map<std::string, std::vector<size_t>> by_key;
  for (size_t i = 0; i < words.size(); ++i) {
    keys[i] = testkit_detail::word_key(least_rotation(cyclic_reduce(words[i])));
    by_key[keys[i]].push_back(i);
  }
  int32_t next = 0;
  std::unordered_map<std::string, int32_t> assigned;  // state key -> class
  for (size_t i = 0; i < words.size(); ++i) {
    if (cls[i] >= 0) continue;
    auto it = assigned.find(keys[i]);
    if (it != assigned.end()) {
      cls[i] = it->second;
      continue;
    }
    int32_t id = next++;
    if (!pres.relator || pres.relator->empty()) {
      assigned[keys[i]] = id;
    } else {
      CayleyBall ball(pres, words[i], radius, node_budget);
      // mark every enumerated word that is one of ours
      for (size_t j = i; j < words.size(); ++j) {
        if (cls[j] < 0 && ball.contains(words[j])) {
          cls[j] = id;
          assigned[keys[j]] = id;
        }
      }
    }
    cls[i] = id;
    assigned[keys[i]] = id;
  }
  return cls;
}

}  // namespace isotopy
