#ifndef SYSTOLIC_TESTS_FIXTURES_HPP
#define SYSTOLIC_TESTS_FIXTURES_HPP

#include <cstdint>
#include <vector>

#include "systolic/angled_complex.hpp"
#include "systolic/diagrams.hpp"

namespace fixtures {

using systolic::AngledComplex;
using systolic::DiagramMap;
using systolic::Rational;

// Disk patch of the triangular tiling with interior degree 7: one or two
// rings around a center vertex. Interior links are chordless 7-cycles.
// Weighted: every corner 2pi/7 (strictly systolic); metric: every edge
// length 1 and no weights.
AngledComplex degree7_patch(int rings, bool weighted);

// Two tetrahedra glued along a face, all seven faces present, both solids
// recorded; corners pi/4. Strictly systolic, and vertex links contain a
// chorded 4-cycle, so cones over it admit vertex removals.
AngledComplex double_tetrahedron();

// Boundary of the octahedron, corners pi/4: weight-valid but the chordless
// 4-cycle links have angular length pi < 2pi.
AngledComplex octahedron();

// Hub with an n-cycle rim, hub corners `hub_weight` * pi, rim corners 0.
AngledComplex wheel(int n, Rational hub_weight);

// Square pyramid with right-isosceles sides (legs 1, base sqrt 2), no base
// face: the apex link is a 2-full square of total angle exactly 2pi.
AngledComplex flat_pyramid_metric();

// Two unit equilateral triangles and one 1-1-sqrt(3) triangle at a common
// vertex: the link triple satisfies the triangle inequality with equality.
AngledComplex flat_triple_metric();

// Random planar disk: triangulated polygon, occasional isolated vertex or
// dangling edge, random nonnegative rational corner weights.
AngledComplex random_disk_complex(std::uint64_t& state);

// Cone diagram over a closed fan at the given target vertex: the wheel whose
// hub maps to x_vertex and whose k faces map to the given fan triangles in
// cyclic order.
DiagramMap cone_diagram(const AngledComplex& X, int x_vertex,
                        const std::vector<int>& fan_triangles);

// Random nondegenerate diagram over the target: boundary gluings, corner
// fills and occasional mirrored gluings (which reduction must remove).
DiagramMap random_diagram(const AngledComplex& X, std::uint64_t& state, int ops);

std::uint64_t rand_next(std::uint64_t& state);

}  // namespace fixtures

#endif
