#ifndef SYSTOLIC_DIAGRAMS_HPP
#define SYSTOLIC_DIAGRAMS_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "systolic/angled_complex.hpp"
#include "systolic/rational.hpp"

namespace systolic {

// Planar singular disk encoded as a combinatorial map. Darts are directed
// edge sides; next is the counterclockwise rotation at the origin vertex;
// face is the face on the left of the dart (-1 for the outer face, whose
// orbit is the boundary cycle). Faces are triangles labeled into a target
// complex; incidence-compatibility of the labels is validated, planarity and
// simple connectivity amount to V - E + F = 1 with a single outer orbit.
class DiagramMap {
 public:
  struct Dart {
    int twin = -1;
    int next = -1;  // ccw rotation at origin
    int prev = -1;
    int origin = -1;
    int edge = -1;
    int face = -1;  // -1 = outer
    bool alive = false;
  };

  explicit DiagramMap(const AngledComplex* target) : target_(target) {}

  const AngledComplex& target() const { return *target_; }

  // -- construction ---------------------------------------------------------

  // One-face diagram mapped to the given target triangle.
  static DiagramMap singleton(const AngledComplex& X, int triangle_id);

  // Glues a fresh face onto a boundary dart (dart with outer face on its
  // left must be given as the *outer-side* dart). The new face maps to
  // target_triangle, which must contain the image of the dart's edge; the
  // triangle's other two edges and third vertex enter the diagram fresh.
  // Returns the new face id.
  int glue_on_boundary(int outer_dart, int target_triangle);

  // Fills the boundary corner at the head of outer_dart: the two boundary
  // edges around that vertex become two sides of a fresh face; a new edge
  // closes it. The face maps to target_triangle. Returns the new face id.
  int fill_corner(int outer_dart, int target_triangle);

  // -- structure queries ----------------------------------------------------

  const Dart& dart(int d) const { return darts_.at(d); }
  bool dart_alive(int d) const {
    return d >= 0 && d < static_cast<int>(darts_.size()) && darts_[d].alive;
  }
  std::vector<int> live_darts() const;
  std::vector<int> vertex_ids() const;
  std::vector<int> edge_ids() const;
  std::vector<int> face_ids() const;
  int face_count() const;

  std::vector<int> darts_at(int vertex_id) const;  // rotation order
  bool is_interior(int vertex_id) const;

  int vertex_label(int vertex_id) const;
  int edge_label(int edge_id) const;
  int face_label(int face_id) const;

  int next_in_face(int d) const;  // sigma^-1(twin(d))
  std::vector<int> boundary_darts() const;       // outer orbit, in order
  std::vector<int> boundary_edge_labels() const; // X-edge ids along the boundary

  int boundary_length() const;

  // -- validation -----------------------------------------------------------

  // Throws InvalidDiagram when the map is not a labeled singular disk.
  void validate() const;
  bool is_nondegenerate() const;

  struct WalkStep {
    int from_dart;
    int corner_face;  // D-face of the corner (from_dart, next(from_dart))
  };
  // Corner walks around a vertex: one closed walk for interior vertices,
  // open fans (possibly several at pinch points) for boundary vertices.
  std::vector<std::vector<WalkStep>> link_walks(int vertex_id) const;

  struct VertexReducedReport {
    bool reduced = true;
    struct Violation {
      int vertex_id;
      int corner_a, corner_b;  // D-face ids of the two mirrored corners
    };
    std::vector<Violation> violations;
  };
  // vr_consecutive restricts the test to consecutive opposite traversals.
  VertexReducedReport vertex_reduced_report(bool vr_consecutive = false) const;

  // -- moves ----------------------------------------------------------------

  // Figure-style bigon collapse at an interior degree-2 vertex whose two
  // corners map to the same target corner with opposite traversals. Face
  // count drops by 2.
  void edge_reduction(int vertex_id);

  // Splits the vertex between darts d1, d2 (same origin, distinct edges with
  // equal edge labels, distinct far endpoints); the far endpoints merge.
  // Face count unchanged. Returns (v1, v2): v1 keeps d1's side.
  std::pair<int, int> diamond_move(int d1, int d2);

  // Replaces the star of an interior vertex whose image link cycle is simple,
  // has angular length < 2pi and triangulates in the target link. Face count
  // drops by 2 (k faces -> k-2).
  void vertex_removal(int vertex_id);

  // Pull back corner weights along the labeling.
  AngledComplex to_angled_complex() const;

  std::string serialize() const;

 private:
  friend DiagramMap parse_diagram(std::istream&, const AngledComplex*);
  friend class DiagramBuilder;

  int new_dart(int origin, int edge, int face);
  int new_vertex(int xlabel);
  int new_edge(int xlabel);
  int new_face(int xlabel);
  void kill_dart(int d);
  void set_next(int d, int nxt);
  void check_dart(int d) const;
  void relabel_origin(int from_vertex, int to_vertex);

  const AngledComplex* target_;
  std::vector<Dart> darts_;
  std::map<int, int> vertex_labels_;  // D-vertex -> X-vertex
  std::map<int, int> edge_labels_;    // D-edge -> X-edge
  std::map<int, int> face_labels_;    // D-face -> X-triangle
  int next_vertex_ = 0, next_edge_ = 0, next_face_ = 0;
};

struct ReductionStep {
  enum Kind { EdgeReduction, DiamondMove, VertexRemoval } kind;
  int location;  // vertex id the move was applied at
  int faces_before;
  int faces_after;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
};

// Applies diamond moves, edge reductions and vertex removals until the
// diagram is vertex reduced and every interior link walk decomposes into
// simple cycles of angular length >= 2pi. Throws StuckDiagram when the
// target violates the strict systolicity assumptions.
ReductionTrace reduce(DiagramMap& dm, bool vr_consecutive = false);

// M = max face curvature (< 0 required), K = 2pi / (-M) as an exact rational.
struct IsoperimetricConstant {
  Angle M;
  Rational K;
};
IsoperimetricConstant isoperimetric_constant(const AngledComplex& X);

struct IsoperimetricReport {
  bool holds = true;
  int area = 0;
  int boundary = 0;
  Rational K;
  bool intermediate_holds = true;  // area <= (sum of boundary curvatures - 2pi)/(-M)
};
IsoperimetricReport check_linear_isoperimetric(const DiagramMap& dm,
                                               const AngledComplex& X);

// Interior link-walk decomposition check (the reduce postcondition).
bool interior_cycles_at_least_2pi(const DiagramMap& dm);

// Labeled-map isomorphism (for regression fixtures).
bool diagrams_isomorphic(const DiagramMap& a, const DiagramMap& b);

// Diagram fixture format: complex lines for the disk, plus
//   label v|e|t <diagram-id> <target-id>
//   boundary <e1> <e2> ...
DiagramMap parse_diagram(std::istream& in, const AngledComplex* target);
DiagramMap parse_diagram_file(const std::string& path, const AngledComplex* target);

}  // namespace systolic

#endif
