#pragma once

// Extended combinatorial maps: a gem plus per-face topology, for embeddings
// that need not be cellular.  A face groups one or more face-walk orbits of
// the gem and records its genus and the number of surface-boundary components
// it contains.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isotopy/gem.hpp"

namespace isotopy {

struct FaceInfo {
  int genus = 0;
  int boundary_count = 0;             // components of the surface boundary inside
  std::vector<int32_t> cycle_flags;   // one flag per incident face-walk orbit

  int cycles() const { return static_cast<int>(cycle_flags.size()); }
  // chi of the face compactified along its graph boundary walks
  int chi() const { return 2 - 2 * genus - boundary_count - cycles(); }
  bool is_disk() const { return genus == 0 && boundary_count == 0 && cycles() == 1; }
};

struct ExtendedMap {
  Gem gem;
  std::vector<FaceInfo> faces;
  std::vector<int32_t> face_of_walk;         // walk orbit -> face id
  std::optional<std::vector<int8_t>> orientation;  // +1 CCW / -1 CW per flag

  int32_t face_of_flag(int32_t f) const { return face_of_walk[gem.walk_of(f)]; }

  // A cellular map: every walk its own disk face.
  static ExtendedMap cellular(Gem g) {
    ExtendedMap m;
    m.face_of_walk.resize(g.walk_count());
    m.faces.resize(g.walk_count());
    for (int32_t w = 0; w < g.walk_count(); ++w) {
      m.face_of_walk[w] = w;
      m.faces[w].cycle_flags = {g.walk_min_flag(w)};
    }
    m.gem = std::move(g);
    return m;
  }
};

// Checks the face partition and the Euler bookkeeping against the surface:
//   chi(S) = V - E + sum_F chi(F-bar).
inline void validate_extended(const ExtendedMap& m, SurfaceClass surface) {
  const Gem& g = m.gem;
  require(static_cast<int32_t>(m.face_of_walk.size()) == g.walk_count(), ErrorCode::InvalidInput,
          "face_of_walk size mismatch");
  std::vector<int32_t> walk_face_seen(g.walk_count(), -1);
  for (size_t fid = 0; fid < m.faces.size(); ++fid) {
    const FaceInfo& fi = m.faces[fid];
    require(fi.genus >= 0 && fi.boundary_count >= 0 && !fi.cycle_flags.empty(),
            ErrorCode::InvalidInput, "malformed face record " + std::to_string(fid));
    for (int32_t fl : fi.cycle_flags) {
      require(fl >= 0 && fl < g.flag_count(), ErrorCode::InvalidInput, "cycle flag out of range");
      int32_t w = g.walk_of(fl);
      require(walk_face_seen[w] == -1, ErrorCode::InvalidInput,
              "walk listed twice in face records");
      walk_face_seen[w] = static_cast<int32_t>(fid);
      require(m.face_of_walk[w] == static_cast<int32_t>(fid), ErrorCode::InvalidInput,
              "face_of_walk disagrees with cycle_flags");
    }
  }
  for (int32_t w = 0; w < g.walk_count(); ++w)
    require(walk_face_seen[w] >= 0, ErrorCode::InvalidInput,
            "walk missing from face records");

  int chi_sum = 0;
  for (const FaceInfo& fi : m.faces) chi_sum += fi.chi();
  require(g.vertex_count() - g.edge_count() + chi_sum == surface.chi(), ErrorCode::InvalidInput,
          "face topology inconsistent with surface Euler characteristic");

  if (m.orientation) {
    const auto& col = *m.orientation;
    require(static_cast<int32_t>(col.size()) == g.flag_count(), ErrorCode::InvalidInput,
            "orientation array size mismatch");
    for (int32_t f = 0; f < g.flag_count(); ++f) {
      require(col[f] == 1 || col[f] == -1, ErrorCode::InvalidInput, "bad orientation value");
      require(col[g.iv(f)] == -col[f] && col[g.ie(f)] == -col[f], ErrorCode::NonOrientable,
              "orientation not alternating");
      if (g.ifl(f) != f)
        require(col[g.ifl(f)] == -col[f], ErrorCode::NonOrientable,
                "orientation not alternating under if");
    }
  }
}

// Oriented comparison is against the maps' stored orientation colorings with
// a fixed sign: a bijection must map CCW flags to CCW flags.  Reversing the
// ambient orientation flips both colorings at once, so the test is
// independent of that choice; a free flip of one side would instead equate
// every chiral map with its mirror image.
enum class IsoMode { Unoriented, Oriented };

namespace detail {

// Attempts to extend the partial bijection from seed f0 -> g0 over the whole
// flag component.  phi uses -1 for unassigned.  Returns false on conflict.
inline bool propagate_iso(const ExtendedMap& m1, const ExtendedMap& m2, int32_t f0, int32_t g0,
                          int parity, const std::vector<int8_t>* col1,
                          const std::vector<int8_t>* col2, std::vector<int32_t>& phi,
                          std::vector<int32_t>& touched) {
  const Gem& a = m1.gem;
  const Gem& b = m2.gem;
  auto assign = [&](int32_t f, int32_t g) -> bool {
    if (phi[f] != -1) return phi[f] == g;
    if (a.vertex_of(f) != b.vertex_of(g) || a.edge_of(f) != b.edge_of(g)) return false;
    if (a.boundary(f) != b.boundary(g)) return false;
    if (col1 && (*col2)[g] != parity * (*col1)[f]) return false;
    phi[f] = g;
    touched.push_back(f);
    return true;
  };
  if (!assign(f0, g0)) return false;
  size_t head = touched.size() - 1;
  while (head < touched.size()) {
    int32_t f = touched[head++];
    int32_t g = phi[f];
    if (!assign(a.iv(f), b.iv(g))) return false;
    if (!assign(a.ie(f), b.ie(g))) return false;
    if (a.ifl(f) != f) {
      if (b.ifl(g) == g) return false;
      if (!assign(a.ifl(f), b.ifl(g))) return false;
    } else if (b.ifl(g) != g) {
      return false;
    }
  }
  return true;
}

inline bool faces_match(const ExtendedMap& m1, const ExtendedMap& m2,
                        const std::vector<int32_t>& phi) {
  // phi maps walks to walks; check the face partition and face invariants.
  const Gem& a = m1.gem;
  const Gem& b = m2.gem;
  std::vector<int32_t> walk_image(a.walk_count(), -1);
  for (int32_t f = 0; f < a.flag_count(); ++f) {
    int32_t w = a.walk_of(f);
    int32_t w2 = b.walk_of(phi[f]);
    if (walk_image[w] == -1)
      walk_image[w] = w2;
    else if (walk_image[w] != w2)
      return false;
  }
  std::vector<int32_t> face_image(m1.faces.size(), -1);
  std::vector<char> face_hit(m2.faces.size(), 0);
  for (int32_t w = 0; w < a.walk_count(); ++w) {
    int32_t F1 = m1.face_of_walk[w];
    int32_t F2 = m2.face_of_walk[walk_image[w]];
    if (face_image[F1] == -1) {
      face_image[F1] = F2;
      if (face_hit[F2]) return false;  // two m1 faces into one m2 face
      face_hit[F2] = 1;
    } else if (face_image[F1] != F2) {
      return false;
    }
  }
  for (size_t F1 = 0; F1 < m1.faces.size(); ++F1) {
    int32_t F2 = face_image[F1];
    if (F2 == -1) return false;
    const FaceInfo& i1 = m1.faces[F1];
    const FaceInfo& i2 = m2.faces[F2];
    if (i1.genus != i2.genus || i1.boundary_count != i2.boundary_count ||
        i1.cycles() != i2.cycles())
      return false;
  }
  return true;
}

}  // namespace detail

// Label-preserving (extended) map isomorphism.  Labels pin each edge's flag
// orbit, so the search propagates from one seed per connected component with
// at most four candidates each; face records are checked on the assembled
// bijection.  Returns the flag bijection or nullopt.
inline std::optional<std::vector<int32_t>> extended_map_isomorphic(const ExtendedMap& m1,
                                                                   const ExtendedMap& m2,
                                                                   IsoMode mode) {
  const Gem& a = m1.gem;
  const Gem& b = m2.gem;
  require(a.vertex_count() == b.vertex_count() && a.edge_count() == b.edge_count(),
          ErrorCode::LabelSetMismatch, "maps are not labeled by the same abstract graph");
  if (a.flag_count() != b.flag_count()) return std::nullopt;
  if (m1.faces.size() != m2.faces.size() || a.walk_count() != b.walk_count()) return std::nullopt;

  // Connected components of m1's flag graph, each seeded at the lowest flag
  // of its lowest non-loop edge when one exists (fewer candidates).
  const int32_t n = a.flag_count();
  std::vector<int32_t> comp(n, -1);
  std::vector<int32_t> comp_seed;
  for (int32_t s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    int32_t cid = static_cast<int32_t>(comp_seed.size());
    std::vector<int32_t> stack{s};
    comp[s] = cid;
    int32_t seed_edge = -1;
    bool seed_nonloop = false;
    while (!stack.empty()) {
      int32_t f = stack.back();
      stack.pop_back();
      int32_t e = a.edge_of(f);
      bool nonloop = a.tail_of(e) != a.head_of(e);
      if (seed_edge == -1 || (nonloop && !seed_nonloop) ||
          (nonloop == seed_nonloop && e < seed_edge)) {
        seed_edge = e;
        seed_nonloop = nonloop;
      }
      for (int32_t g : {a.iv(f), a.ie(f), a.ifl(f)})
        if (comp[g] == -1) {
          comp[g] = cid;
          stack.push_back(g);
        }
    }
    comp_seed.push_back(a.edge_min_flag(seed_edge));
  }
  const int32_t ncomp = static_cast<int32_t>(comp_seed.size());

  std::vector<int8_t> canon1, canon2;
  const std::vector<int8_t>* col1 = nullptr;
  const std::vector<int8_t>* col2 = nullptr;
  if (mode != IsoMode::Unoriented) {
    if (m1.orientation) {
      col1 = &*m1.orientation;
    } else {
      canon1 = a.orient();
      col1 = &canon1;
    }
    if (m2.orientation) {
      col2 = &*m2.orientation;
    } else {
      canon2 = b.orient();
      col2 = &canon2;
    }
  }

  std::vector<int32_t> phi(n, -1);
  std::vector<int32_t> touched;

  // Candidate images of a seed flag: flags of the same edge label.
  auto candidates = [&](int32_t f0) {
    std::vector<int32_t> out;
    int32_t e = a.edge_of(f0);
    int32_t m = b.edge_min_flag(e);
    out.push_back(m);
    out.push_back(b.iv(m));
    if (b.ifl(m) != m) {
      out.push_back(b.ifl(m));
      out.push_back(b.ifl(b.iv(m)));
    }
    return out;
  };

  // Depth-first assignment over components for a fixed global parity.
  std::vector<std::vector<int32_t>> cand(ncomp);
  for (int32_t c = 0; c < ncomp; ++c) cand[c] = candidates(comp_seed[c]);

  // The per-component choices interact only through the face partition, which
  // is checked on the assembled bijection; enumerate candidate tuples lazily
  // with propagation pruning.  Labels leave at most four candidates per
  // component (two for a non-loop seed), so this is cheap in practice.
  auto full_search = [&](int parity) -> std::optional<std::vector<int32_t>> {
    std::vector<size_t> pick(ncomp, 0);
    while (true) {
      std::fill(phi.begin(), phi.end(), -1);
      touched.clear();
      bool ok = true;
      for (int32_t c = 0; c < ncomp && ok; ++c) {
        ok = detail::propagate_iso(m1, m2, comp_seed[c], cand[c][pick[c]], parity, col1, col2,
                                   phi, touched);
      }
      if (ok && detail::faces_match(m1, m2, phi)) return phi;
      int32_t c = ncomp - 1;
      while (c >= 0) {
        if (++pick[c] < cand[c].size()) break;
        pick[c] = 0;
        --c;
      }
      if (c < 0) return std::nullopt;
    }
  };

  if (mode == IsoMode::Unoriented) return full_search(0);
  return full_search(1);
}

}  // namespace isotopy
