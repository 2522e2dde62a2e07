#ifndef SYSTOLIC_ONERELATOR_HPP
#define SYSTOLIC_ONERELATOR_HPP

#include <optional>
#include <string>
#include <vector>

#include "systolic/angled_complex.hpp"
#include "systolic/linkgraph.hpp"
#include "systolic/smallcancel.hpp"
#include "systolic/words.hpp"

namespace systolic {

// A maximal gluing of a relator copy along the boundary of the base cell.
// The partner placement is determined by (orientation, shift): the partner
// reads E = R (orientation +1) or R^-1 (-1) with E[(i + shift) mod r] over
// boundary position i. element/offset address the partner as the
// symmetrized-set rotation starting at the overlap start (offset 0).
struct Overlap {
  int start = 0;
  int length = 0;  // edges; 0 only for vertex contacts
  int orientation = +1;
  int shift = 0;
  int element_index = 0;
  int offset = 0;
};

// Link of a central vertex. Graph positions 0..r-1 are the type-(i) vertices
// (one per boundary vertex of the cell, in cyclic order); position r+j is the
// type-(ii) vertex of overlaps[j].
struct CentralLink {
  int r = 0;
  LinkGraph graph;
  std::vector<Overlap> overlaps;
  struct EdgeInfo {
    int kind = 0;  // 0: (i)-(i), 1: (ii)-(i), 2: (ii)-(ii)
    int o1 = -1, o2 = -1;
    int inter_start = 0, inter_len = 0;  // boundary intersection component
  };
  std::vector<EdgeInfo> edge_info;  // parallel to graph.edges

  bool is_type_i(int pos) const { return pos < r; }
};

struct TriangleWeightRecord {
  int kind = 1;  // 1, 2 or 3
  std::array<Rational, 3> corners{};  // coefficients of pi
  Rational sum{0};
  bool strict_ok = false;  // sum < pi
  int o1 = -1, o2 = -1;    // overlap indices for kinds 2 and 3
  int l23 = 0, l123 = 0;   // kind 3 data
};

// All maximal gluings with length >= 1 (the identity self-gluing excluded);
// with include_vertex_contacts also the non-extendable single-vertex
// contacts, deduplicated across the two reading orientations.
std::vector<Overlap> enumerate_overlaps(const CyclicWord& R,
                                        bool include_vertex_contacts = false);

CentralLink build_central_link(const CyclicWord& R,
                               bool include_vertex_contacts = false);

std::vector<TriangleWeightRecord> triangle_weights(const CyclicWord& R,
                                                   bool include_vertex_contacts = false);

struct CentralLinkReport {
  LinkVerdict verdict = LinkVerdict::PASS_UP_TO_BOUND;
  int bound = 0;
  // (a) bounded 2-full search
  std::size_t two_full_checked = 0;
  std::vector<SimpleCycle> violations;
  bool violations_only_through_contacts = false;
  // (b) type-(i) circle and structural case-2 cycles must be exactly 2pi
  bool type_i_circle_exact = false;
  std::size_t case2_checked = 0;
  std::vector<SimpleCycle> case2_violations;
  // (c) mixed segments satisfy the 2*l([v1,v2])/r lower bound
  std::size_t case3_checked = 0;
  std::vector<SimpleCycle> case3_violations;
};

CentralLinkReport check_central_link(const CentralLink& link, int max_len,
                                     bool strict_neighbours = false);

enum class Status { HYPERBOLIC, UNKNOWN };
enum class Branch { NONE, SHORT_RELATOR, TORSION, SMALL_CANCELLATION };

std::string status_str(Status s);
std::string branch_str(Branch b);

struct ComplexValidation {
  bool triangles_ok = false;
  LinkVerdict link_verdict = LinkVerdict::PASS_UP_TO_BOUND;
  int bound = 0;
};

struct Certificate {
  std::string presentation;  // echo of the input
  std::string relator;       // normalized relator
  int r = 0;
  Status status = Status::UNKNOWN;
  Branch branch = Branch::NONE;
  bool has_checks = false;
  ConditionReport c14, c16, t4, tprime;
  std::optional<ComplexValidation> complex_validation;
  std::string note;
};

struct CertifyOptions {
  bool validate_complex = false;
  int cycle_bound = 12;
  bool include_vertex_contacts = false;
  bool allow_empty_piece = false;
  bool two_full_strict = false;
  std::size_t max_witnesses = 64;
};

// cyclic reduction -> torsion branch -> short-relator branch -> C'(1/4) and
// Condition (T'). C'(1/6) and T(4) reports are attached for information.
Certificate certify(const Presentation& P, const CertifyOptions& options = {});
Certificate certify(const Alphabet& alphabet, const Word& relator,
                    const CertifyOptions& options = {});

}  // namespace systolic

#endif
