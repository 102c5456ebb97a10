#pragma once

// Rotation-level surgeries on gems: extraction of the rotation system,
// edge subdivision, face chords.  Used by generators and refinement tests.

#include <cstdint>
#include <vector>

#include "isotopy/gem.hpp"

namespace isotopy {

// Extracts the rotation system of an orientable gem.  Interior vertices get
// their full CCW germ cycle; at boundary vertices the listing starts at one
// boundary germ so the off-surface corner falls between the ends.
inline RotationSystem to_rotation_system(const Gem& g) {
  RotationSystem rs;
  rs.vertex_count = g.vertex_count();
  rs.edges.resize(g.edge_count());
  rs.boundary_side.assign(g.edge_count(), -1);
  for (int32_t e = 0; e < g.edge_count(); ++e) rs.edges[e] = {g.tail_of(e), g.head_of(e)};

  // Convention: +1-colored flags play the role of (dart, Left); consecutive
  // CCW germs satisfy ie[+1 flag of germ i] = -1 flag of germ i+1.  At a
  // boundary vertex exactly one of the two boundary flags is +1 (the umbrella
  // path has an odd number of steps); the CCW listing starts there.
  auto colors = g.orient();
  rs.rotation.assign(g.vertex_count(), {});
  std::vector<int32_t> start_flag(g.vertex_count(), -1);
  std::vector<char> vertex_on_boundary(g.vertex_count(), 0);
  for (int32_t f = 0; f < g.flag_count(); ++f) {
    int32_t v = g.vertex_of(f);
    if (g.boundary(f)) vertex_on_boundary[v] = 1;
    if (g.boundary(f) && colors[f] > 0) start_flag[v] = f;
  }
  for (int32_t f = 0; f < g.flag_count(); ++f) {
    int32_t v = g.vertex_of(f);
    if (!vertex_on_boundary[v] && start_flag[v] == -1 && colors[f] > 0) start_flag[v] = f;
  }
  for (int32_t v = 0; v < g.vertex_count(); ++v) {
    int32_t start = start_flag[v];
    require(start >= 0, ErrorCode::Internal, "no umbrella start at vertex " + std::to_string(v));
    bool on_boundary = vertex_on_boundary[v];
    int32_t f = start;
    while (true) {
      rs.rotation[v].push_back(g.dart_of_flag(f));
      int32_t nf = g.ie(f);  // -1 flag of the next germ (CCW)
      if (on_boundary && g.boundary(nf)) {
        rs.rotation[v].push_back(g.dart_of_flag(nf));
        break;
      }
      f = g.ifl(nf);
      if (!on_boundary && f == start) break;
    }
    require(static_cast<int>(rs.rotation[v].size()) == g.degree(v), ErrorCode::Internal,
            "umbrella walk missed germs at vertex " + std::to_string(v));
  }
  // Boundary sides: with +1 == Left, a boundary edge whose surviving tail
  // flag is +1 keeps its left side; the off-surface side is the other one.
  for (int32_t e = 0; e < g.edge_count(); ++e) {
    if (!g.edge_on_boundary(e)) continue;
    int32_t m = g.edge_min_flag(e);
    rs.boundary_side[e] = colors[m] > 0 ? 1 : 0;
  }
  return rs;
}

// Splits edge e with a new degree-2 vertex; the tail half keeps id e, the
// head half gets a fresh edge id (returned).  Vertex ids are preserved; the
// new vertex id is the old vertex count.
inline Gem subdivide_edge(const Gem& g, int32_t e, RotationSystem* out_rs = nullptr) {
  RotationSystem rs = to_rotation_system(g);
  int32_t w = rs.vertex_count++;
  int32_t e2 = static_cast<int32_t>(rs.edges.size());
  int32_t head = rs.edges[e].second;
  rs.edges[e].second = w;
  rs.edges.push_back({w, head});
  rs.boundary_side.push_back(rs.boundary_side[e]);
  for (Dart& d : rs.rotation[head])
    if (d == Dart(e, false)) d = Dart(e2, false);
  rs.rotation.push_back({Dart(e, false), Dart(e2, true)});
  if (out_rs) *out_rs = rs;
  return gem_from_rotation(rs);
}

}  // namespace isotopy
