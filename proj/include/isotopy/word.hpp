#pragma once

// Signed-letter words.  A letter is a nonzero int; -x is the inverse of x.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "isotopy/errors.hpp"

namespace isotopy {

using Letter = int32_t;
using Word = std::vector<Letter>;

inline Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter x : w) {
    require(x != 0, ErrorCode::InvalidInput, "zero letter");
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

// Freely reduces, then trims cancelling first/last letters (cyclic words).
inline Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + lo, r.begin() + hi);
}

inline Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

inline Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

inline Word rotated(const Word& w, size_t k) {
  Word out;
  out.reserve(w.size());
  for (size_t i = 0; i < w.size(); ++i) out.push_back(w[(i + k) % w.size()]);
  return out;
}

// Booth's least-rotation algorithm; returns the rotation offset.
inline size_t least_rotation_offset(const Word& w) {
  const size_t n = w.size();
  if (n == 0) return 0;
  std::vector<int32_t> s(2 * n);
  for (size_t i = 0; i < 2 * n; ++i) s[i] = w[i % n];
  std::vector<ptrdiff_t> f(2 * n, -1);
  size_t k = 0;
  for (size_t j = 1; j < 2 * n; ++j) {
    int32_t sj = s[j];
    ptrdiff_t i = f[j - k - 1];
    while (i != -1 && sj != s[k + i + 1]) {
      if (sj < s[k + i + 1]) k = j - i - 1;
      i = f[i];
    }
    if (sj != s[k + i + 1]) {
      if (sj < s[k + i + 1]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k % n;
}

inline Word least_rotation(const Word& w) { return rotated(w, least_rotation_offset(w)); }

// Letters occurring in w, per generator: exponent sums (generators 1..ngen).
inline std::vector<int64_t> abelianization(const Word& w, int ngen) {
  std::vector<int64_t> v(ngen, 0);
  for (Letter x : w) {
    int g = std::abs(x) - 1;
    require(g >= 0 && g < ngen, ErrorCode::InvalidInput, "letter out of generator range");
    v[g] += x > 0 ? 1 : -1;
  }
  return v;
}

inline std::string word_to_string(const Word& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(w[i]);
  }
  return s;
}

}  // namespace isotopy
