#ifndef SYSTOLIC_ANGLED_COMPLEX_HPP
#define SYSTOLIC_ANGLED_COMPLEX_HPP

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "systolic/angle.hpp"
#include "systolic/linkgraph.hpp"

namespace systolic {

// Quasi-simplicial angled 2-complex with tetrahedron records. Multiple edges
// between vertices are allowed; loops are not. Construction is lenient so
// that validate_complex can report violations instead of throwing; curvature
// and link queries require the touched cells to be well formed.
class AngledComplex {
 public:
  struct Edge {
    int id = 0;
    int u = 0, v = 0;
  };
  struct Triangle {
    int id = 0;
    std::array<int, 3> edges{};
    // Derived: empty when the edge triple does not close up.
    std::vector<int> vertices;
    bool well_formed = false;
  };

  void add_vertex(int id);
  void add_edge(int id, int u, int v);
  void add_triangle(int id, int e1, int e2, int e3);
  void add_tetrahedron(std::array<int, 4> triangle_ids);
  void set_corner_weight(int triangle_id, int vertex_id, Angle w);
  void set_edge_length(int edge_id, double length);

  bool has_vertex(int id) const;
  const Edge& edge(int id) const;
  const Triangle& triangle(int id) const;
  bool has_edge(int id) const;
  bool has_triangle(int id) const;

  const std::vector<int>& vertices() const { return vertex_ids_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }
  const std::vector<std::array<int, 4>>& tetrahedra() const { return tetrahedra_; }

  const Angle* corner_weight(int triangle_id, int vertex_id) const;
  const double* edge_length(int edge_id) const;
  const std::map<std::pair<int, int>, Angle>& corner_weights() const {
    return corner_weights_;
  }

  // Triangle with exactly this edge id set, or -1.
  int find_triangle_with_edges(std::array<int, 3> edge_ids) const;
  std::vector<int> edges_at(int vertex_id) const;
  std::vector<int> triangles_at(int vertex_id) const;

  // The two edges of a well-formed triangle incident to the given vertex.
  std::array<int, 2> corner_edges(int triangle_id, int vertex_id) const;
  // The edge of the triangle opposite to the vertex.
  int opposite_edge(int triangle_id, int vertex_id) const;

 private:
  std::vector<int> vertex_ids_;
  std::vector<Edge> edges_;
  std::vector<Triangle> triangles_;
  std::vector<std::array<int, 4>> tetrahedra_;
  std::map<std::pair<int, int>, Angle> corner_weights_;  // (triangle, vertex)
  std::map<int, double> edge_lengths_;
  std::map<int, int> edge_pos_, triangle_pos_;
};

struct ComplexViolation {
  std::string rule;
  std::vector<int> ids;
  std::string detail;
};

struct ValidationReport {
  bool valid = true;
  std::vector<ComplexViolation> violations;
};

// Quasi-simplicial structure: no loops, triangles close up with 3 distinct
// vertices, no triangle with two parallel edges, no two triangles sharing
// two or more edges, every corner weighted with a nonnegative weight.
ValidationReport validate_complex(const AngledComplex& X);

struct ThreeFlagReport {
  bool holds = true;
  // Witnesses: vertex 4-sets spanning >= 3 compatible faces of a tetrahedron
  // whose tetrahedron (4th face or solid record) is missing.
  std::vector<std::array<int, 4>> missing;
};

ThreeFlagReport check_3flag(const AngledComplex& X);

struct WeightReport {
  bool nonnegative = true;
  bool finite_value_set = true;
  bool triangle_inequality = true;  // weak, in every link
  bool sums_below_pi = true;        // strict, per triangle
  std::vector<ComplexViolation> violations;
  bool all_ok() const {
    return nonnegative && finite_value_set && triangle_inequality && sums_below_pi;
  }
};

WeightReport weight_validate(const AngledComplex& X);

// Link vertices are the edges at v (by increasing edge id); link edges are
// the corners at v.
LinkGraph link(const AngledComplex& X, int vertex_id);

enum class LinkVerdict { PASS_UP_TO_BOUND, FAIL, INCONCLUSIVE_LOCAL };

std::string link_verdict_str(LinkVerdict v);

struct TwoPiLargeReport {
  LinkVerdict verdict = LinkVerdict::PASS_UP_TO_BOUND;
  int bound = 0;
  bool exhaustive = false;  // bound covered every possible cycle length
  struct Violation {
    int vertex_id;
    SimpleCycle cycle;
  };
  std::vector<Violation> violations;
};

// Every 2-full cycle of length <= max_len in every vertex link has angular
// length >= 2*pi (exact comparison in exact mode).
TwoPiLargeReport is_locally_2pi_large(const AngledComplex& X, int max_len,
                                      bool strict_neighbours = false);

Angle vertex_curvature(const AngledComplex& X, int vertex_id);
Angle face_curvature(const AngledComplex& X, int triangle_id);

struct GaussBonnetResult {
  Angle lhs;  // sum of face and vertex curvatures
  Angle rhs;  // 2*pi*chi
  bool equal = false;
};

GaussBonnetResult gauss_bonnet_check(const AngledComplex& X);

// Angles opposite to sides a, b, c by the law of cosines.
std::array<double, 3> euclidean_angles(double a, double b, double c);

struct MetricResult {
  AngledComplex complex;  // float-mode corner weights
  double delta = 0.0;
};

// Builds corner weights angle - delta from a piecewise-Euclidean metric with
// strictly 2pi-large links. Throws NotStrictlyLarge / NoSlack /
// DegenerateTriangle when the hypotheses fail.
MetricResult metric_to_weights(const AngledComplex& X, int max_len,
                               bool strict_neighbours = false);

// Line-oriented fixture format:
//   v <id>
//   e <id> <v1> <v2>
//   t <id> <e1> <e2> <e3>
//   tet <t1> <t2> <t3> <t4>
//   w <t> <vertex> <p>/<q>     corner weight (p/q) * pi
//   len <e> <value>            edge length (metric mode)
// with '#' comments.
AngledComplex parse_complex(std::istream& in);
AngledComplex parse_complex_file(const std::string& path);
std::string serialize_complex(const AngledComplex& X);

}  // namespace systolic

#endif
