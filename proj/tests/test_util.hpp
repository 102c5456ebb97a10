#pragma once

// Shared fixtures: small reference maps and random rotation systems.

#include <random>
#include <vector>

#include "isotopy/extended_map.hpp"
#include "isotopy/gem.hpp"

namespace isotopy::testutil {

// One vertex, loops a, b with rotation a b a- b- (CCW): the square torus map.
inline Gem torus_one_vertex() {
  RotationSystem rs;
  rs.vertex_count = 1;
  rs.edges = {{0, 0}, {0, 0}};
  rs.rotation = {{Dart(0, true), Dart(1, true), Dart(0, false), Dart(1, false)}};
  return gem_from_rotation(rs);
}

// One vertex, loops a b a- b- c d c- d-: closed genus 2.
inline Gem genus2_one_vertex() {
  RotationSystem rs;
  rs.vertex_count = 1;
  rs.edges = {{0, 0}, {1, 1}, {2, 2}, {3, 3}};
  for (auto& e : rs.edges) e = {0, 0};
  rs.rotation = {{Dart(0, true), Dart(1, true), Dart(0, false), Dart(1, false), Dart(2, true),
                  Dart(3, true), Dart(2, false), Dart(3, false)}};
  return gem_from_rotation(rs);
}

inline Gem genus_g_one_vertex(int g) {
  RotationSystem rs;
  rs.vertex_count = 1;
  rs.edges.assign(2 * g, {0, 0});
  std::vector<Dart> rot;
  for (int i = 0; i < g; ++i) {
    rot.push_back(Dart(2 * i, true));
    rot.push_back(Dart(2 * i + 1, true));
    rot.push_back(Dart(2 * i, false));
    rot.push_back(Dart(2 * i + 1, false));
  }
  rs.rotation = {rot};
  return gem_from_rotation(rs);
}

// Circle bounding a disk: one vertex, one loop edge along the boundary.
inline Gem disk_circle() {
  RotationSystem rs;
  rs.vertex_count = 1;
  rs.edges = {{0, 0}};
  rs.rotation = {{Dart(0, true), Dart(0, false)}};
  rs.boundary_side = {1};  // right of the forward dart is off-surface
  return gem_from_rotation(rs);
}

// Random connected multigraph with min degree 2 and a random rotation system.
inline Gem random_gem(std::mt19937& rng, int vertices, int extra_edges) {
  RotationSystem rs;
  rs.vertex_count = vertices;
  std::uniform_int_distribution<int32_t> pick(0, vertices - 1);
  // spanning tree
  for (int32_t v = 1; v < vertices; ++v) {
    std::uniform_int_distribution<int32_t> anc(0, v - 1);
    rs.edges.push_back({anc(rng), v});
  }
  for (int i = 0; i < extra_edges; ++i) rs.edges.push_back({pick(rng), pick(rng)});
  // ensure min degree 2 by adding loops at low-degree vertices
  std::vector<int> deg(vertices, 0);
  for (auto [u, v] : rs.edges) {
    deg[u]++;
    deg[v]++;
  }
  for (int32_t v = 0; v < vertices; ++v)
    while (deg[v] < 2) {
      rs.edges.push_back({v, v});
      deg[v] += 2;
    }
  rs.rotation.assign(vertices, {});
  for (int32_t e = 0; e < static_cast<int32_t>(rs.edges.size()); ++e) {
    rs.rotation[rs.edges[e].first].push_back(Dart(e, true));
    rs.rotation[rs.edges[e].second].push_back(Dart(e, false));
  }
  for (auto& rot : rs.rotation) std::shuffle(rot.begin(), rot.end(), rng);
  return gem_from_rotation(rs);
}

}  // namespace isotopy::testutil
