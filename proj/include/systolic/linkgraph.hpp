#ifndef SYSTOLIC_LINKGRAPH_HPP
#define SYSTOLIC_LINKGRAPH_HPP

#include <optional>
#include <vector>

#include "systolic/angle.hpp"

namespace systolic {

// Weighted multigraph: the link of a vertex. Link vertices carry external ids
// (edge ids of the complex, or synthetic ids); link edges are corners.
struct LinkEdge {
  int a = 0, b = 0;  // positions into vertex_ids
  Angle weight;
  int source = -1;  // provenance: triangle id of the corner, or -1
};

struct LinkGraph {
  int base_vertex = -1;
  std::vector<int> vertex_ids;
  std::vector<LinkEdge> edges;

  int vertex_count() const { return static_cast<int>(vertex_ids.size()); }
  int position_of(int vertex_id) const;
  bool has_edge_between(int pos_a, int pos_b) const;
  // Smallest edge index joining the two positions, or -1.
  int find_edge(int pos_a, int pos_b) const;
};

// Closed simple cycle: vertices[i] -- edges[i] -- vertices[i+1], wrapping.
struct SimpleCycle {
  std::vector<int> vertices;  // positions into vertex_ids, pairwise distinct
  std::vector<int> edges;     // edge indices
  Angle angular_length;
};

// All 2-full simple cycles of length 4..max_len, one canonical representative
// per cycle (rotation and reflection deduplicated). With strict_neighbours the
// "common neighbour" pair test ranges over the whole link rather than over
// cycle-distance-2 pairs.
std::vector<SimpleCycle> two_full_cycles(const LinkGraph& L, int max_len,
                                         bool strict_neighbours = false);

// Enumerates all simple cycles of length min_len..max_len (no 2-fullness
// filter). Used by lemma-style checks.
std::vector<SimpleCycle> simple_cycles(const LinkGraph& L, int min_len, int max_len);

bool is_two_full(const LinkGraph& L, const SimpleCycle& cycle,
                 bool strict_neighbours = false);

struct ChordTriangulation {
  // Chords as (cycle position i, cycle position j, link edge index).
  std::vector<std::array<int, 3>> chords;
  // Faces as cycle position triples (i < j < k).
  std::vector<std::array<int, 3>> faces;
};

// Triangulation of the |cycle|-gon without interior vertices whose chords are
// edges of L, or nullopt. |cycle| = 3 yields the empty chord set.
std::optional<ChordTriangulation> link_disk_triangulation(const LinkGraph& L,
                                                          const SimpleCycle& cycle);

}  // namespace systolic

#endif
