#pragma once

// Normalization of one-vertex polygonal schemas to the canonical genus-g form
// prod_i [a_i, b_i], with an exact letter substitution tracking the induced
// isomorphism on crossing words.
//
// A schema is a cyclic word over signed letters in which every letter occurs
// exactly twice with opposite signs (orientable).  The primitive move cuts
// the polygon along a chord between two corners and reglues the pieces along
// a letter whose occurrences the chord separates.  For a chord c with pieces
// A and B, the crossing-word translation is
//   glued letter y:            y -> c            (+y side in A)  or  c^-1
//   letter z split across:     z -> z c          (+z in A, -z in B)
//                              z -> c^-1 z       (+z in B, -z in A)
//   z with both sides in A:    z -> z
//   z with both sides in B:    z -> c^-1 z c     (the basepoint lives in A).
// The schema length 4g is invariant; schemas that would cyclically cancel
// are pruned.

#include <cstdint>
#include <functional>
#include <map>
#include <queue>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "isotopy/dehn.hpp"
#include "isotopy/word.hpp"

namespace isotopy {

struct CanonicalSchema {
  int genus = 0;
  // original letter (1-based id) -> word over canonical letters 1..2g
  std::vector<Word> substitution;

  Word translate(const Word& w) const {
    Word out;
    for (Letter x : w) {
      int32_t a = std::abs(x);
      require(a >= 1 && a <= static_cast<int32_t>(substitution.size()), ErrorCode::UnknownHEdge,
              "letter outside schema alphabet");
      const Word& s = substitution[a - 1];
      if (x > 0) {
        out.insert(out.end(), s.begin(), s.end());
      } else {
        Word si = inverse(s);
        out.insert(out.end(), si.begin(), si.end());
      }
    }
    return free_reduce(out);
  }
};

namespace schema_detail {

inline void validate_schema(const Word& w) {
  require(w.size() % 4 == 0 && !w.empty(), ErrorCode::NotOneVertex,
          "schema length must be 4g");
  std::map<Letter, int> pos_count, neg_count;
  for (Letter x : w) (x > 0 ? pos_count : neg_count)[std::abs(x)]++;
  for (auto& [l, c] : pos_count)
    require(c == 1 && neg_count[l] == 1, ErrorCode::NotOneVertex,
            "each letter must occur twice with opposite signs");
  require(2 * pos_count.size() == w.size(), ErrorCode::NotOneVertex, "letter count mismatch");
  // one vertex class: corners identified through the side gluings
  const int n = static_cast<int>(w.size());
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
  std::map<Letter, std::pair<int, int>> occ;  // letter -> (pos of +, pos of -)
  for (int i = 0; i < n; ++i) {
    Letter x = w[i];
    if (x > 0)
      occ[x].first = i;
    else
      occ[-x].second = i;
  }
  for (auto& [l, pq] : occ) {
    int p = pq.first, q = pq.second;
    unite((p + 1) % n, q);
    unite(p, (q + 1) % n);
  }
  int root = find(0);
  for (int i = 0; i < n; ++i)
    require(find(i) == root, ErrorCode::NotOneVertex, "schema has several vertex classes");
}

// Letter renaming that maps a word onto the first-occurrence-positive normal
// form; used to deduplicate search states.
inline Word rename_normal(const Word& w, std::vector<Letter>* map_out = nullptr) {
  std::unordered_map<Letter, Letter> ren;
  Letter next = 1;
  Word out;
  out.reserve(w.size());
  for (Letter x : w) {
    Letter a = std::abs(x);
    auto it = ren.find(a);
    if (it == ren.end()) {
      // first occurrence becomes positive letter `next`
      ren[a] = x > 0 ? next : -next;
      ++next;
      it = ren.find(a);
    }
    Letter img = it->second;
    out.push_back(x > 0 ? img : -img);
  }
  if (map_out) {
    map_out->assign(ren.size(), 0);
    for (auto& [a, img] : ren) (*map_out)[a - 1] = img;
  }
  return out;
}

inline bool is_canonical_pattern(const Word& w) {
  const size_t n = w.size();
  if (n % 4) return false;
  for (size_t k = 0; k < n; k += 4) {
    if (w[k] != -w[k + 2] || w[k + 1] != -w[k + 3]) return false;
  }
  return true;
}

// Longest canonical prefix (in handles) over all rotations; higher is better.
inline int canonical_score(const Word& w) {
  int best = 0;
  const size_t n = w.size();
  for (size_t r = 0; r < n; ++r) {
    int k = 0;
    while (4 * (k + 1) <= static_cast<int>(n)) {
      size_t base = r + 4 * k;
      if (w[base % n] == -w[(base + 2) % n] && w[(base + 1) % n] == -w[(base + 3) % n])
        ++k;
      else
        break;
    }
    best = std::max(best, k);
  }
  return best;
}

struct Move {
  int i, j;    // chord corners (cut between corner i and corner j)
  int a, b;    // glued side positions, a in [i, j), b in [j, i)
};

// Applies the primitive; returns the new word.  The fresh chord letter id is
// `fresh`.  tau receives the per-letter translation (letter -> word) for all
// letters of the old alphabet.
inline Word apply_move(const Word& w, const Move& mv, Letter fresh,
                       std::unordered_map<Letter, Word>* tau) {
  const int n = static_cast<int>(w.size());
  auto in_A = [&](int p) {
    if (mv.i < mv.j) return p >= mv.i && p < mv.j;
    return p >= mv.i || p < mv.j;
  };
  require(in_A(mv.a) && !in_A(mv.b), ErrorCode::Internal, "move sides misplaced");
  require(std::abs(w[mv.a]) == std::abs(w[mv.b]) && w[mv.a] == -w[mv.b], ErrorCode::Internal,
          "move must glue a letter pair");
  Letter y = std::abs(w[mv.a]);
  if (tau) {
    tau->clear();
    std::unordered_map<Letter, std::pair<int, int>> occ;  // letter -> (+pos, -pos)
    for (int p = 0; p < n; ++p) {
      Letter x = w[p];
      if (x > 0)
        occ[x].first = p;
      else
        occ[-x].second = p;
    }
    // Basepoint inside piece A: letters living entirely in B are conjugated
    // by the chord crossing.
    for (auto& [z, pq] : occ) {
      if (z == y) {
        (*tau)[z] = in_A(pq.first) ? Word{fresh} : Word{-fresh};
      } else {
        bool pa = in_A(pq.first), na = in_A(pq.second);
        if (pa && na)
          (*tau)[z] = Word{z};
        else if (!pa && !na)
          (*tau)[z] = Word{-fresh, z, fresh};
        else if (pa)
          (*tau)[z] = Word{z, fresh};
        else
          (*tau)[z] = Word{-fresh, z};
      }
    }
  }
  auto seg = [&](int from, int to) {  // cyclic [from, to)
    Word s;
    for (int p = from % n; p != to % n; p = (p + 1) % n) s.push_back(w[p]);
    return s;
  };
  Word out = seg(mv.a + 1, mv.j);
  out.push_back(-fresh);
  Word s2 = seg(mv.i, mv.a);
  out.insert(out.end(), s2.begin(), s2.end());
  Word s3 = seg(mv.b + 1, mv.i);
  out.insert(out.end(), s3.begin(), s3.end());
  out.push_back(fresh);
  Word s4 = seg(mv.j, mv.b);
  out.insert(out.end(), s4.begin(), s4.end());
  require(static_cast<int>(out.size()) == n, ErrorCode::Internal, "move changed schema length");
  return out;
}

inline bool cyclically_reduced(const Word& w) {
  const size_t n = w.size();
  if (n == 0) return true;
  for (size_t p = 0; p < n; ++p)
    if (w[p] == -w[(p + 1) % n]) return false;
  return true;
}

}  // namespace schema_detail

// canonicalize_schema: transforms a one-vertex orientable schema into the
// canonical word prod_i [a_i, b_i] via cut-and-paste moves, returning the
// composite letter substitution.  Letters are 1..2g; the canonical relator is
// canonical_relator(g).
inline CanonicalSchema canonicalize_schema(const Word& relator) {
  using namespace schema_detail;
  validate_schema(relator);
  const int n = static_cast<int>(relator.size());
  const int g = n / 4;
  const Letter ngen = static_cast<Letter>(n / 2);

  // Search states: schemas up to rotation+renaming; parent pointers replay
  // the moves to rebuild the substitution.
  struct State {
    Word w;
    int parent = -1;
    Move mv{};
    Letter fresh = 0;
  };
  std::vector<State> states;
  std::unordered_set<std::string> seen;
  auto state_key = [&](const Word& w) {
    // normalize: best over rotations of rename-normal form
    std::string best;
    for (int r = 0; r < n; ++r) {
      Word rw = rename_normal(rotated(w, r));
      std::string k;
      k.reserve(rw.size() * 2);
      for (Letter x : rw) {
        k.push_back(static_cast<char>(std::abs(x)));
        k.push_back(x > 0 ? '+' : '-');
      }
      if (best.empty() || k < best) best = k;
    }
    return best;
  };

  auto push_state = [&](State s) -> int {
    std::string key = state_key(s.w);
    if (!seen.insert(key).second) return -1;
    states.push_back(std::move(s));
    return static_cast<int>(states.size()) - 1;
  };

  using QEntry = std::pair<int, int>;  // (-score, state idx)
  std::priority_queue<QEntry, std::vector<QEntry>, std::greater<QEntry>> pq;

  State root;
  root.w = relator;
  push_state(root);
  pq.push({-canonical_score(relator), 0});

  int found = -1;
  size_t budget = 200000;
  while (!pq.empty() && states.size() < budget) {
    auto [negscore, idx] = pq.top();
    pq.pop();
    Word w = states[idx].w;
    // canonical up to rotation?
    bool canon = false;
    for (int r = 0; r < n && !canon; ++r)
      if (is_canonical_pattern(rotated(w, r))) canon = true;
    if (canon) {
      found = idx;
      break;
    }
    // enumerate moves: chords (i, j) and glue letters split by them
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        auto in_A = [&](int p) {
          if (i < j) return p >= i && p < j;
          return p >= i || p < j;
        };
        for (int a = 0; a < n; ++a) {
          if (!in_A(a)) continue;
          // partner position of the same letter
          Letter y = std::abs(w[a]);
          int b = -1;
          for (int p = 0; p < n; ++p)
            if (p != a && std::abs(w[p]) == y) b = p;
          if (in_A(b)) continue;
          Move mv{i, j, a, b};
          Letter fresh = ngen + 1;  // provisional; renamed on dedup anyway
          Word nw = apply_move(w, mv, fresh, nullptr);
          // keep the alphabet dense: rename so letters stay in 1..2g
          std::unordered_map<Letter, Letter> compact;
          Letter next = 1;
          for (Letter& x : nw) {
            Letter aa = std::abs(x);
            if (!compact.count(aa)) compact[aa] = next++;
            x = x > 0 ? compact[aa] : -compact[aa];
          }
          if (!cyclically_reduced(nw)) continue;
          State s;
          s.w = nw;
          s.parent = idx;
          s.mv = mv;
          s.fresh = fresh;
          int nidx = push_state(std::move(s));
          if (nidx >= 0) pq.push({-canonical_score(states[nidx].w), nidx});
        }
      }
    }
  }
  require(found >= 0, ErrorCode::Internal, "schema normalization search failed");

  // Replay the path to build the substitution.  Note the compaction renaming
  // applied during the search must be replayed identically.
  std::vector<int> path;
  for (int idx = found; idx != -1; idx = states[idx].parent) path.push_back(idx);
  std::reverse(path.begin(), path.end());

  std::vector<Word> sigma(ngen);
  for (Letter x = 1; x <= ngen; ++x) sigma[x - 1] = Word{x};
  Word cur = relator;
  for (size_t step = 1; step < path.size(); ++step) {
    const State& st = states[path[step]];
    std::unordered_map<Letter, Word> tau;
    Word nw = apply_move(cur, st.mv, st.fresh, &tau);
    std::unordered_map<Letter, Letter> compact;
    Letter next = 1;
    for (Letter& x : nw) {
      Letter aa = std::abs(x);
      if (!compact.count(aa)) compact[aa] = next++;
      x = x > 0 ? compact[aa] : -compact[aa];
    }
    auto apply_tau = [&](const Word& w) {
      Word out;
      for (Letter x : w) {
        const Word& t = tau.at(std::abs(x));
        if (x > 0)
          out.insert(out.end(), t.begin(), t.end());
        else {
          Word ti = inverse(t);
          out.insert(out.end(), ti.begin(), ti.end());
        }
      }
      // compaction renaming
      for (Letter& x : out) {
        Letter aa = std::abs(x);
        auto it = compact.find(aa);
        require(it != compact.end(), ErrorCode::Internal, "dangling letter in substitution");
        x = x > 0 ? it->second : -it->second;
      }
      return free_reduce(out);
    };
    for (Word& s : sigma) s = apply_tau(s);
    require(nw == st.w, ErrorCode::Internal, "schema replay mismatch");
    cur = nw;
  }

  // Final renaming: rotate cur to the canonical pattern and map its letters
  // onto 1..2g in canonical order.
  int rot = -1;
  for (int r = 0; r < n; ++r)
    if (is_canonical_pattern(rotated(cur, r))) {
      rot = r;
      break;
    }
  require(rot >= 0, ErrorCode::Internal, "final schema not canonical");
  Word cw = rotated(cur, rot);
  std::unordered_map<Letter, Letter> final_map;  // signed mapping old -> canonical
  for (int k = 0; k < g; ++k) {
    Letter p = cw[4 * k], q = cw[4 * k + 1];
    Letter ca = static_cast<Letter>(2 * k + 1), cb = static_cast<Letter>(2 * k + 2);
    final_map[std::abs(p)] = p > 0 ? ca : -ca;
    final_map[std::abs(q)] = q > 0 ? cb : -cb;
  }
  CanonicalSchema out;
  out.genus = g;
  out.substitution.resize(ngen);
  for (Letter x = 1; x <= ngen; ++x) {
    Word s;
    for (Letter l : sigma[x - 1]) {
      Letter img = final_map.at(std::abs(l));
      s.push_back(l > 0 ? img : -img);
    }
    out.substitution[x - 1] = free_reduce(s);
  }
  return out;
}

}  // namespace isotopy
