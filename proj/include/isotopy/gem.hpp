#pragma once

// Flag-based (gem) encoding of graph embeddings on orientable surfaces.
//
// A gem stores three involutions on a dense set of flags:
//   iv  — same edge and face, opposite vertex (move along the edge)
//   ie  — same vertex and face, opposite edge (move across a corner)
//   ifl — same vertex and edge, opposite face (flip over the edge)
// iv and ie are fixed-point free; fixed points of ifl are exactly the flags
// lying on the surface boundary.  Orbit structure:
//   vertices = orbits of <ie, ifl>, edges = orbits of <iv, ifl> (size 2 or 4),
//   face walks = orbits of <iv, ie>.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "isotopy/errors.hpp"

namespace isotopy {

struct Dart {
  int32_t edge = -1;
  bool forward = true;

  Dart() = default;
  Dart(int32_t e, bool f) : edge(e), forward(f) {}
  Dart reversed() const { return Dart(edge, !forward); }
  bool operator==(const Dart& o) const { return edge == o.edge && forward == o.forward; }
  bool operator!=(const Dart& o) const { return !(*this == o); }
  bool operator<(const Dart& o) const {
    return edge != o.edge ? edge < o.edge : forward < o.forward;
  }
};

enum class SurfaceKind { Sphere, Disk, Annulus, Torus, HyperbolicClosed, WithBoundary };

// Genus / boundary-count classification; chi = 2 - 2g - b.
struct SurfaceClass {
  int genus = 0;
  int boundary = 0;

  int chi() const { return 2 - 2 * genus - boundary; }
  SurfaceKind kind() const {
    if (boundary == 0) {
      if (genus == 0) return SurfaceKind::Sphere;
      if (genus == 1) return SurfaceKind::Torus;
      return SurfaceKind::HyperbolicClosed;
    }
    if (genus == 0 && boundary == 1) return SurfaceKind::Disk;
    if (genus == 0 && boundary == 2) return SurfaceKind::Annulus;
    return SurfaceKind::WithBoundary;
  }
  bool operator==(const SurfaceClass& o) const {
    return genus == o.genus && boundary == o.boundary;
  }
};

class Gem {
 public:
  Gem() = default;

  // Validates involution axioms, label consistency and orbit structure.
  // Throws Error on violations.
  Gem(std::vector<int32_t> iv, std::vector<int32_t> ie, std::vector<int32_t> ifl,
      std::vector<int32_t> vertex_label, std::vector<int32_t> edge_label)
      : iv_(std::move(iv)),
        ie_(std::move(ie)),
        ifl_(std::move(ifl)),
        vertex_label_(std::move(vertex_label)),
        edge_label_(std::move(edge_label)) {
    validate_and_index();
  }

  int32_t flag_count() const { return static_cast<int32_t>(iv_.size()); }
  int32_t iv(int32_t f) const { return iv_[f]; }
  int32_t ie(int32_t f) const { return ie_[f]; }
  int32_t ifl(int32_t f) const { return ifl_[f]; }
  bool boundary(int32_t f) const { return ifl_[f] == f; }

  int32_t vertex_of(int32_t f) const { return vertex_label_[f]; }
  int32_t edge_of(int32_t f) const { return edge_label_[f]; }

  int32_t vertex_count() const { return num_vertices_; }
  int32_t edge_count() const { return num_edges_; }
  int32_t walk_count() const { return num_walks_; }

  // Face-walk orbit (<iv, ie>) identifier of a flag.
  int32_t walk_of(int32_t f) const { return walk_id_[f]; }

  const std::vector<int32_t>& iv_table() const { return iv_; }
  const std::vector<int32_t>& ie_table() const { return ie_; }
  const std::vector<int32_t>& ifl_table() const { return ifl_; }
  const std::vector<int32_t>& vertex_labels() const { return vertex_label_; }
  const std::vector<int32_t>& edge_labels() const { return edge_label_; }

  // Lowest flag of each edge orbit; defines the canonical edge direction:
  // the edge points away from the vertex of its lowest flag.
  int32_t edge_min_flag(int32_t e) const { return edge_min_flag_[e]; }
  int32_t vertex_min_flag(int32_t v) const { return vertex_min_flag_[v]; }
  int32_t walk_min_flag(int32_t w) const { return walk_min_flag_[w]; }

  bool edge_on_boundary(int32_t e) const { return boundary(edge_min_flag_[e]); }

  int32_t tail_of(int32_t e) const { return vertex_label_[edge_min_flag_[e]]; }
  int32_t head_of(int32_t e) const { return vertex_label_[iv_[edge_min_flag_[e]]]; }

  int32_t tail_of(Dart d) const { return d.forward ? tail_of(d.edge) : head_of(d.edge); }
  int32_t head_of(Dart d) const { return d.forward ? head_of(d.edge) : tail_of(d.edge); }

  // Flag at the tail end of a dart, on the requested side.  Side 0 is the side
  // of the edge's lowest flag; side 1 the other.  Boundary edges have side 0
  // only.
  int32_t dart_flag(Dart d, int side) const {
    int32_t m = edge_min_flag_[d.edge];
    int32_t f = d.forward ? m : iv_[m];
    if (side == 1) {
      require(!boundary(f), ErrorCode::Internal, "boundary edge has a single side");
      f = ifl_[f];
    }
    return f;
  }

  Dart dart_of_flag(int32_t f) const {
    int32_t e = edge_label_[f];
    int32_t m = edge_min_flag_[e];
    bool fwd = (f == m || f == ifl_[m]);
    return Dart(e, fwd);
  }

  int degree(int32_t v) const { return vertex_degree_[v]; }

  // Number of flags an interior edge is short of; |flags| = 4E - 2*deficit.
  int32_t boundary_edge_count() const { return boundary_edge_count_; }

  // ---- global invariants -------------------------------------------------

  bool connected() const {
    if (flag_count() == 0) return true;
    std::vector<char> seen(flag_count(), 0);
    std::vector<int32_t> stack{0};
    seen[0] = 1;
    int32_t cnt = 1;
    while (!stack.empty()) {
      int32_t f = stack.back();
      stack.pop_back();
      for (int32_t g : {iv_[f], ie_[f], ifl_[f]}) {
        if (!seen[g]) {
          seen[g] = 1;
          ++cnt;
          stack.push_back(g);
        }
      }
    }
    return cnt == flag_count();
  }

  // Boundary cycles of the surface: orbits of boundary flags under the
  // boundary-walk permutation (cross the edge, then rotate around the far
  // vertex until the next boundary flag).  Orbits come in mirror pairs (the
  // two traversal directions, exchanged by iv); one cycle is emitted per pair.
  std::vector<std::vector<int32_t>> boundary_cycles() const {
    std::vector<std::vector<int32_t>> cycles;
    std::vector<char> seen(flag_count(), 0);
    for (int32_t f = 0; f < flag_count(); ++f) {
      if (!boundary(f) || seen[f]) continue;
      std::vector<int32_t> cyc;
      int32_t cur = f;
      do {
        seen[cur] = 1;
        seen[iv_[cur]] = 1;  // reverse-direction departure
        cyc.push_back(cur);
        cur = boundary_next(cur);
      } while (cur != f);
      cycles.push_back(std::move(cyc));
    }
    return cycles;
  }

  int32_t boundary_next(int32_t f) const {
    require(boundary(f), ErrorCode::Internal, "boundary_next on interior flag");
    int32_t cur = iv_[f];
    // walk around the vertex: alternate ie, ifl until an ifl fixed point
    cur = ie_[cur];
    while (!boundary(cur)) cur = ie_[ifl_[cur]];
    return cur;
  }

  // chi = V - E + F for the cellular embedding the gem encodes.
  int chi() const { return num_vertices_ - num_edges_ + num_walks_; }

  SurfaceClass surface_class() const {
    int b = static_cast<int>(boundary_cycles().size());
    int c = chi();
    int twice_genus = 2 - c - b;
    require(twice_genus >= 0 && twice_genus % 2 == 0, ErrorCode::NonIntegerGenus,
            "chi=" + std::to_string(c) + " b=" + std::to_string(b) +
                " does not classify an orientable surface");
    return SurfaceClass{twice_genus / 2, b};
  }

  // 2-coloring of flags alternating under all involutions, +1 = CCW.
  // Canonical: lowest flag of each connected component gets +1.
  std::vector<int8_t> orient() const {
    std::vector<int8_t> color(flag_count(), 0);
    std::vector<int32_t> stack;
    for (int32_t s = 0; s < flag_count(); ++s) {
      if (color[s] != 0) continue;
      color[s] = 1;
      stack.push_back(s);
      while (!stack.empty()) {
        int32_t f = stack.back();
        stack.pop_back();
        for (int32_t g : {iv_[f], ie_[f], ifl_[f]}) {
          if (g == f) continue;  // boundary fixed point: no constraint
          if (color[g] == 0) {
            color[g] = static_cast<int8_t>(-color[f]);
            stack.push_back(g);
          } else {
            require(color[g] == -color[f], ErrorCode::NonOrientable,
                    "odd cycle in the involution graph at flag " + std::to_string(f));
          }
        }
      }
    }
    return color;
  }

  bool operator==(const Gem& o) const {
    return iv_ == o.iv_ && ie_ == o.ie_ && ifl_ == o.ifl_ &&
           vertex_label_ == o.vertex_label_ && edge_label_ == o.edge_label_;
  }

 private:
  void validate_and_index();

  std::vector<int32_t> iv_, ie_, ifl_;
  std::vector<int32_t> vertex_label_, edge_label_;

  int32_t num_vertices_ = 0, num_edges_ = 0, num_walks_ = 0;
  int32_t boundary_edge_count_ = 0;
  std::vector<int32_t> walk_id_;
  std::vector<int32_t> edge_min_flag_, vertex_min_flag_, walk_min_flag_;
  std::vector<int32_t> vertex_degree_;
};

inline void Gem::validate_and_index() {
  const int32_t n = flag_count();
  auto check_perm = [&](const std::vector<int32_t>& p, const char* name, bool allow_fixed) {
    require(static_cast<int32_t>(p.size()) == n, ErrorCode::InvolutionViolation,
            std::string(name) + " has wrong length");
    for (int32_t f = 0; f < n; ++f) {
      require(p[f] >= 0 && p[f] < n, ErrorCode::InvolutionViolation,
              std::string(name) + " out of range at flag " + std::to_string(f));
      require(p[p[f]] == f, ErrorCode::InvolutionViolation,
              std::string(name) + " is not an involution at flag " + std::to_string(f));
      if (!allow_fixed)
        require(p[f] != f, ErrorCode::FixedPointViolation,
                std::string(name) + " has a fixed point at flag " + std::to_string(f));
    }
  };
  check_perm(iv_, "iv", false);
  check_perm(ie_, "ie", false);
  check_perm(ifl_, "if", true);

  require(static_cast<int32_t>(vertex_label_.size()) == n &&
              static_cast<int32_t>(edge_label_.size()) == n,
          ErrorCode::LabelInconsistent, "label arrays have wrong length");

  // Orbit computation.
  auto orbits = [&](auto next_flags, std::vector<int32_t>& id, std::vector<int32_t>& min_flag) {
    id.assign(n, -1);
    min_flag.clear();
    int32_t count = 0;
    std::vector<int32_t> stack;
    for (int32_t s = 0; s < n; ++s) {
      if (id[s] != -1) continue;
      id[s] = count;
      min_flag.push_back(s);
      stack.push_back(s);
      while (!stack.empty()) {
        int32_t f = stack.back();
        stack.pop_back();
        for (int32_t g : next_flags(f)) {
          if (id[g] == -1) {
            id[g] = count;
            stack.push_back(g);
          }
        }
      }
      ++count;
    }
    return count;
  };

  std::vector<int32_t> vertex_id, edge_id;
  num_vertices_ = orbits(
      [&](int32_t f) { return std::array<int32_t, 2>{ie_[f], ifl_[f]}; }, vertex_id,
      vertex_min_flag_);
  num_edges_ = orbits(
      [&](int32_t f) { return std::array<int32_t, 2>{iv_[f], ifl_[f]}; }, edge_id,
      edge_min_flag_);
  num_walks_ = orbits(
      [&](int32_t f) { return std::array<int32_t, 2>{iv_[f], ie_[f]}; }, walk_id_,
      walk_min_flag_);

  // Labels must be constant on orbits and in bijection with orbit ids.
  auto check_labels = [&](const std::vector<int32_t>& label, const std::vector<int32_t>& oid,
                          int32_t orbit_count, const char* what) {
    std::vector<int32_t> rep(orbit_count, -1);
    std::vector<int32_t> used;
    for (int32_t f = 0; f < n; ++f) {
      int32_t l = label[f];
      require(l >= 0 && l < orbit_count, ErrorCode::LabelInconsistent,
              std::string(what) + " label out of dense range at flag " + std::to_string(f));
      if (rep[oid[f]] == -1) {
        rep[oid[f]] = l;
      } else {
        require(rep[oid[f]] == l, ErrorCode::LabelInconsistent,
                std::string(what) + " label not constant on orbit of flag " + std::to_string(f));
      }
    }
    std::vector<char> taken(orbit_count, 0);
    for (int32_t o = 0; o < orbit_count; ++o) {
      require(!taken[rep[o]], ErrorCode::LabelInconsistent,
              std::string(what) + " label used by two distinct orbits");
      taken[rep[o]] = 1;
    }
  };
  check_labels(vertex_label_, vertex_id, num_vertices_, "vertex");
  check_labels(edge_label_, edge_id, num_edges_, "edge");

  // Re-key min-flag tables by label (so edge e's data sits at index e).
  {
    std::vector<int32_t> by_label(num_edges_, -1);
    for (int32_t o = 0; o < num_edges_; ++o) by_label[edge_label_[edge_min_flag_[o]]] = edge_min_flag_[o];
    edge_min_flag_ = std::move(by_label);
    std::vector<int32_t> vby(num_vertices_, -1);
    for (int32_t o = 0; o < num_vertices_; ++o) vby[vertex_label_[vertex_min_flag_[o]]] = vertex_min_flag_[o];
    vertex_min_flag_ = std::move(vby);
  }

  // Edge orbits: size 4 interior / size 2 on the boundary, quadrilateral
  // condition, and boundary uniformity.
  boundary_edge_count_ = 0;
  for (int32_t e = 0; e < num_edges_; ++e) {
    int32_t m = edge_min_flag_[e];
    require(ifl_[iv_[m]] == iv_[ifl_[m]], ErrorCode::InvolutionViolation,
            "iv and if do not commute on edge " + std::to_string(e));
    bool b0 = boundary(m), b1 = boundary(iv_[m]);
    require(b0 == b1, ErrorCode::InvolutionViolation,
            "edge " + std::to_string(e) + " has mixed boundary flags");
    if (b0) ++boundary_edge_count_;
    // orbit size check: {m, iv m} when boundary else 4 distinct flags
    if (!b0) {
      require(ifl_[m] != m && ifl_[m] != iv_[m], ErrorCode::InvolutionViolation,
              "degenerate interior edge orbit " + std::to_string(e));
    }
    require(vertex_label_[m] == vertex_label_[ifl_[m]] &&
                vertex_label_[iv_[m]] == vertex_label_[ifl_[iv_[m]]],
            ErrorCode::LabelInconsistent, "edge flags disagree on endpoint vertices");
  }

  // Vertex degrees = number of edge-ends (germ count).  Each germ carries one
  // or two flags; count flag pairs {f, ifl f} at the vertex.
  vertex_degree_.assign(num_vertices_, 0);
  for (int32_t f = 0; f < n; ++f) {
    if (f <= ifl_[f]) vertex_degree_[vertex_label_[f]] += 1;
  }
}

// ---- construction from rotation systems -----------------------------------
//
// Rotations list, per vertex, the counterclockwise cyclic order of incident
// darts.  Loops appear twice (once per direction).  Produces the gem with
// flags (dart, side): side L = left of the dart.  If an edge is marked as a
// boundary edge, the given boundary side's flags are omitted and the other
// side's flags become ifl fixed points; the rotation at an affected vertex
// must place the two boundary germs so the missing corner is between them.

struct RotationSystem {
  int32_t vertex_count = 0;
  std::vector<std::pair<int32_t, int32_t>> edges;  // tail, head
  std::vector<std::vector<Dart>> rotation;         // per vertex, CCW
  // For boundary edges: which side (0 = left of forward dart) is off-surface.
  // -1 for interior edges.
  std::vector<int8_t> boundary_side;
};

inline Gem gem_from_rotation(const RotationSystem& rs) {
  const int32_t E = static_cast<int32_t>(rs.edges.size());
  require(static_cast<int32_t>(rs.rotation.size()) == rs.vertex_count, ErrorCode::InvalidInput,
          "rotation list size mismatch");
  std::vector<int8_t> bside = rs.boundary_side;
  if (bside.empty()) bside.assign(E, -1);

  // provisional flag slots: 4 per edge: (fwd,L)=0 (fwd,R)=1 (bwd,L)=2 (bwd,R)=3
  // physical sides: left of fwd == right of bwd: {0,3} side A, {1,2} side B.
  auto slot = [&](int32_t e, bool fwd, int lr) { return 4 * e + (fwd ? 0 : 2) + lr; };
  std::vector<char> present(4 * E, 1);
  for (int32_t e = 0; e < E; ++e) {
    if (bside[e] == 0) {  // side A off-surface
      present[slot(e, true, 0)] = 0;
      present[slot(e, false, 1)] = 0;
    } else if (bside[e] == 1) {
      present[slot(e, true, 1)] = 0;
      present[slot(e, false, 0)] = 0;
    }
  }

  std::vector<int32_t> iv(4 * E, -1), ie(4 * E, -1), ifl(4 * E, -1);
  // iv: (fwd,L) <-> (bwd,R), (fwd,R) <-> (bwd,L)  (same physical side)
  // ifl: (d,L) <-> (d,R) when both present, else fixed
  for (int32_t e = 0; e < E; ++e) {
    for (bool fwd : {true, false}) {
      int32_t L = slot(e, fwd, 0), R = slot(e, fwd, 1);
      int32_t oL = slot(e, !fwd, 0), oR = slot(e, !fwd, 1);
      if (present[L]) iv[L] = oR;
      if (present[R]) iv[R] = oL;
      if (present[L] && present[R]) {
        ifl[L] = R;
        ifl[R] = L;
      } else {
        if (present[L]) ifl[L] = L;
        if (present[R]) ifl[R] = R;
      }
    }
  }

  // ie from rotations: corner between dart d and its CCW successor rho(d)
  // links (d, L) with (rho(d), R).
  std::vector<int32_t> germ_seen(E * 2, 0);
  for (int32_t v = 0; v < rs.vertex_count; ++v) {
    const auto& rot = rs.rotation[v];
    const int32_t k = static_cast<int32_t>(rot.size());
    for (int32_t i = 0; i < k; ++i) {
      Dart d = rot[i];
      Dart nd = rot[(i + 1) % k];
      require(d.edge >= 0 && d.edge < E, ErrorCode::InvalidInput, "rotation dart out of range");
      int32_t tail = d.forward ? rs.edges[d.edge].first : rs.edges[d.edge].second;
      require(tail == v, ErrorCode::InvalidInput, "rotation dart not incident to vertex");
      germ_seen[2 * d.edge + (d.forward ? 0 : 1)] += 1;
      int32_t a = slot(d.edge, d.forward, 0);        // (d, L)
      int32_t b = slot(nd.edge, nd.forward, 1);      // (rho d, R)
      if (!present[a] && !present[b]) continue;      // off-surface corner
      require(present[a] && present[b], ErrorCode::InvalidInput,
              "boundary sides inconsistent with rotation at vertex " + std::to_string(v));
      ie[a] = b;
      ie[b] = a;
    }
  }
  for (int32_t g = 0; g < 2 * E; ++g)
    require(germ_seen[g] == 1, ErrorCode::InvalidInput,
            "each dart must appear exactly once in the rotations");

  // compact
  std::vector<int32_t> newid(4 * E, -1);
  int32_t n = 0;
  for (int32_t s = 0; s < 4 * E; ++s)
    if (present[s]) newid[s] = n++;
  std::vector<int32_t> civ(n), cie(n), cifl(n), vlab(n), elab(n);
  for (int32_t s = 0; s < 4 * E; ++s) {
    if (!present[s]) continue;
    int32_t f = newid[s];
    require(iv[s] >= 0 && ie[s] >= 0 && ifl[s] >= 0, ErrorCode::InvalidInput,
            "unlinked flag in rotation construction");
    civ[f] = newid[iv[s]];
    cie[f] = newid[ie[s]];
    cifl[f] = newid[ifl[s]];
    int32_t e = s / 4;
    bool fwd = (s % 4) < 2;
    elab[f] = e;
    vlab[f] = fwd ? rs.edges[e].first : rs.edges[e].second;
  }
  return Gem(std::move(civ), std::move(cie), std::move(cifl), std::move(vlab), std::move(elab));
}

// build_gem: the spec-level constructor from raw permutation arrays.
inline Gem build_gem(int32_t flag_count, std::vector<int32_t> iv, std::vector<int32_t> ie,
                     std::vector<int32_t> ifl, std::vector<int32_t> vertex_label,
                     std::vector<int32_t> edge_label) {
  require(static_cast<int32_t>(iv.size()) == flag_count &&
              static_cast<int32_t>(ie.size()) == flag_count &&
              static_cast<int32_t>(ifl.size()) == flag_count,
          ErrorCode::InvolutionViolation, "permutation arrays must have the stated length");
  return Gem(std::move(iv), std::move(ie), std::move(ifl), std::move(vertex_label),
             std::move(edge_label));
}

// euler_and_class: surface classification of a cellular gem.
inline SurfaceClass euler_and_class(const Gem& g) { return g.surface_class(); }

}  // namespace isotopy
