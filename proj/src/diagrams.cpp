#include "systolic/diagrams.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "systolic/errors.hpp"

namespace systolic {

namespace {

// Endpoints of an X-edge as a sorted pair.
std::pair<int, int> xedge_ends(const AngledComplex& X, int edge_id) {
  const auto& e = X.edge(edge_id);
  return std::minmax(e.u, e.v);
}

// The X-edge of triangle T joining vertices a and b, or -1.
int find_xedge_of(const AngledComplex& X, int triangle_id, int a, int b) {
  for (int e : X.triangle(triangle_id).edges)
    if (xedge_ends(X, e) == std::minmax(a, b)) return e;
  return -1;
}

int xedge_of(const AngledComplex& X, int triangle_id, int a, int b) {
  int e = find_xedge_of(X, triangle_id, a, b);
  if (e < 0)
    throw InvalidComplex("triangle " + std::to_string(triangle_id) +
                         " has no edge joining " + std::to_string(a) + "," +
                         std::to_string(b));
  return e;
}

}  // namespace

int DiagramMap::new_dart(int origin, int edge, int face) {
  Dart d;
  d.origin = origin;
  d.edge = edge;
  d.face = face;
  d.alive = true;
  darts_.push_back(d);
  return static_cast<int>(darts_.size()) - 1;
}

int DiagramMap::new_vertex(int xlabel) {
  int id = next_vertex_++;
  vertex_labels_[id] = xlabel;
  return id;
}

int DiagramMap::new_edge(int xlabel) {
  int id = next_edge_++;
  edge_labels_[id] = xlabel;
  return id;
}

int DiagramMap::new_face(int xlabel) {
  int id = next_face_++;
  face_labels_[id] = xlabel;
  return id;
}

void DiagramMap::kill_dart(int d) { darts_.at(d).alive = false; }

void DiagramMap::set_next(int d, int nxt) {
  darts_.at(d).next = nxt;
  darts_.at(nxt).prev = d;
}

void DiagramMap::check_dart(int d) const {
  if (!dart_alive(d)) throw InvalidDiagram("dead or unknown dart " + std::to_string(d));
}

void DiagramMap::relabel_origin(int from_vertex, int to_vertex) {
  for (auto& d : darts_)
    if (d.alive && d.origin == from_vertex) d.origin = to_vertex;
}

DiagramMap DiagramMap::singleton(const AngledComplex& X, int triangle_id) {
  const auto& t = X.triangle(triangle_id);
  if (!t.well_formed) throw InvalidComplex("target triangle is not well formed");
  DiagramMap dm(&X);
  std::array<int, 3> xv{t.vertices[0], t.vertices[1], t.vertices[2]};
  std::array<int, 3> dv{};
  for (int i = 0; i < 3; ++i) dv[i] = dm.new_vertex(xv[i]);
  std::array<int, 3> de{};
  for (int i = 0; i < 3; ++i)
    de[i] = dm.new_edge(xedge_of(X, triangle_id, xv[i], xv[(i + 1) % 3]));
  int F = dm.new_face(triangle_id);
  std::array<int, 3> fd{}, bd{};
  for (int i = 0; i < 3; ++i) {
    fd[i] = dm.new_dart(dv[i], de[i], F);
    bd[i] = dm.new_dart(dv[(i + 1) % 3], de[i], -1);
  }
  for (int i = 0; i < 3; ++i) {
    dm.darts_[fd[i]].twin = bd[i];
    dm.darts_[bd[i]].twin = fd[i];
    // rotation at dv[i]: (fd[i], bd[(i+2)%3])
    dm.set_next(fd[i], bd[(i + 2) % 3]);
    dm.set_next(bd[(i + 2) % 3], fd[i]);
  }
  return dm;
}

int DiagramMap::glue_on_boundary(int outer_dart, int target_triangle) {
  check_dart(outer_dart);
  const Dart& g = darts_[outer_dart];
  if (g.face != -1) throw NotApplicable("dart is not on the outer face");
  const auto& T = target_->triangle(target_triangle);
  if (!T.well_formed) throw InvalidComplex("target triangle is not well formed");
  int xe = edge_labels_.at(g.edge);
  bool has = false;
  for (int e : T.edges) has = has || e == xe;
  if (!has) throw NotApplicable("target triangle does not contain the edge image");

  int p = g.origin;
  int q = darts_[g.twin].origin;
  int fp = vertex_labels_.at(p), fq = vertex_labels_.at(q);
  int xw = -1;
  for (int v : T.vertices)
    if (v != fp && v != fq) xw = v;
  if (xw < 0) throw NotApplicable("edge image endpoints do not match the triangle");

  int nw = new_vertex(xw);
  int e2 = new_edge(xedge_of(*target_, target_triangle, fq, xw));
  int e3 = new_edge(xedge_of(*target_, target_triangle, xw, fp));
  int F = new_face(target_triangle);

  int d2 = new_dart(q, e2, F);
  int d2t = new_dart(nw, e2, -1);
  int d3 = new_dart(nw, e3, F);
  int d3t = new_dart(p, e3, -1);
  darts_[d2].twin = d2t;
  darts_[d2t].twin = d2;
  darts_[d3].twin = d3t;
  darts_[d3t].twin = d3;

  // at p: insert d3t where g's outer corner was
  int h = darts_[outer_dart].next;
  set_next(outer_dart, d3t);
  set_next(d3t, h);
  // at q: insert d2 before twin(g)
  int y = darts_[g.twin].prev;
  set_next(y, d2);
  set_next(d2, g.twin);
  // at nw: two darts
  set_next(d3, d2t);
  set_next(d2t, d3);

  darts_[outer_dart].face = F;
  return F;
}

int DiagramMap::fill_corner(int outer_dart, int target_triangle) {
  check_dart(outer_dart);
  const Dart& g = darts_[outer_dart];
  if (g.face != -1) throw NotApplicable("dart is not on the outer face");
  int g2 = next_in_face(outer_dart);
  if (g2 == outer_dart || g2 == g.twin)
    throw NotApplicable("boundary corner folds back on itself");
  if (darts_[g2].face != -1) throw NotApplicable("corner is not a boundary corner");

  int p = g.origin;
  int q = darts_[outer_dart].twin;
  q = darts_[q].origin;  // head of g
  int s = darts_[darts_[g2].twin].origin;
  if (s == p) throw NotApplicable("corner endpoints coincide in the diagram");

  const auto& T = target_->triangle(target_triangle);
  if (!T.well_formed) throw InvalidComplex("target triangle is not well formed");
  int fp = vertex_labels_.at(p), fq = vertex_labels_.at(q), fs = vertex_labels_.at(s);
  int xe_g = edge_labels_.at(g.edge);
  int xe_g2 = edge_labels_.at(darts_[g2].edge);
  if (find_xedge_of(*target_, target_triangle, fp, fq) != xe_g ||
      find_xedge_of(*target_, target_triangle, fq, fs) != xe_g2)
    throw NotApplicable("corner edge images do not match the triangle");
  int e3x = find_xedge_of(*target_, target_triangle, fs, fp);
  if (e3x < 0) throw NotApplicable("triangle lacks the closing edge");

  int e3 = new_edge(e3x);
  int F = new_face(target_triangle);
  int d3 = new_dart(s, e3, F);
  int d3t = new_dart(p, e3, -1);
  darts_[d3].twin = d3t;
  darts_[d3t].twin = d3;

  // at p: insert d3t where g's outer corner was
  int h = darts_[outer_dart].next;
  set_next(outer_dart, d3t);
  set_next(d3t, h);
  // at s: insert d3 before twin(g2)
  int y = darts_[darts_[g2].twin].prev;
  set_next(y, d3);
  set_next(d3, darts_[g2].twin);

  darts_[outer_dart].face = F;
  darts_[g2].face = F;
  return F;
}

std::vector<int> DiagramMap::live_darts() const {
  std::vector<int> out;
  for (int d = 0; d < static_cast<int>(darts_.size()); ++d)
    if (darts_[d].alive) out.push_back(d);
  return out;
}

std::vector<int> DiagramMap::vertex_ids() const {
  std::set<int> s;
  for (const auto& d : darts_)
    if (d.alive) s.insert(d.origin);
  return {s.begin(), s.end()};
}

std::vector<int> DiagramMap::edge_ids() const {
  std::set<int> s;
  for (const auto& d : darts_)
    if (d.alive) s.insert(d.edge);
  return {s.begin(), s.end()};
}

std::vector<int> DiagramMap::face_ids() const {
  std::set<int> s;
  for (const auto& d : darts_)
    if (d.alive && d.face != -1) s.insert(d.face);
  return {s.begin(), s.end()};
}

int DiagramMap::face_count() const { return static_cast<int>(face_ids().size()); }

std::vector<int> DiagramMap::darts_at(int vertex_id) const {
  int start = -1;
  for (int d = 0; d < static_cast<int>(darts_.size()); ++d)
    if (darts_[d].alive && darts_[d].origin == vertex_id) {
      start = d;
      break;
    }
  if (start < 0) throw UnknownVertex(vertex_id);
  std::vector<int> out;
  int d = start;
  do {
    out.push_back(d);
    d = darts_[d].next;
  } while (d != start);
  return out;
}

bool DiagramMap::is_interior(int vertex_id) const {
  for (int d : darts_at(vertex_id))
    if (darts_[d].face == -1) return false;
  return true;
}

int DiagramMap::vertex_label(int vertex_id) const { return vertex_labels_.at(vertex_id); }
int DiagramMap::edge_label(int edge_id) const { return edge_labels_.at(edge_id); }
int DiagramMap::face_label(int face_id) const { return face_labels_.at(face_id); }

int DiagramMap::next_in_face(int d) const {
  check_dart(d);
  return darts_[darts_[d].twin].prev;
}

std::vector<int> DiagramMap::boundary_darts() const {
  int start = -1;
  for (int d = 0; d < static_cast<int>(darts_.size()); ++d)
    if (darts_[d].alive && darts_[d].face == -1) {
      start = d;
      break;
    }
  if (start < 0) return {};
  std::vector<int> out;
  int d = start;
  do {
    out.push_back(d);
    d = next_in_face(d);
    if (out.size() > darts_.size()) throw InvalidDiagram("outer orbit does not close");
  } while (d != start);
  return out;
}

std::vector<int> DiagramMap::boundary_edge_labels() const {
  std::vector<int> out;
  for (int d : boundary_darts()) out.push_back(edge_labels_.at(darts_[d].edge));
  return out;
}

int DiagramMap::boundary_length() const {
  return static_cast<int>(boundary_darts().size());
}

void DiagramMap::validate() const {
  std::vector<int> live = live_darts();
  if (live.empty()) throw InvalidDiagram("empty diagram");

  for (int d : live) {
    const Dart& D = darts_[d];
    if (!dart_alive(D.twin) || darts_[D.twin].twin != d || D.twin == d)
      throw InvalidDiagram("twin involution broken at dart " + std::to_string(d));
    if (darts_[D.twin].edge != D.edge) throw InvalidDiagram("twin edge mismatch");
    if (darts_[D.twin].origin == D.origin) throw InvalidDiagram("loop edge");
    if (!dart_alive(D.next) || !dart_alive(D.prev))
      throw InvalidDiagram("rotation pointer dead");
    if (darts_[D.next].prev != d || darts_[D.prev].next != d)
      throw InvalidDiagram("rotation pointers inconsistent");
    if (darts_[D.next].origin != D.origin)
      throw InvalidDiagram("rotation leaves the vertex");
  }

  // every vertex is a single rotation orbit
  std::map<int, int> vertex_dart_count;
  for (int d : live) vertex_dart_count[darts_[d].origin]++;
  std::set<int> seen;
  for (int d : live) {
    if (seen.count(d)) continue;
    int n = 0;
    int x = d;
    do {
      seen.insert(x);
      ++n;
      x = darts_[x].next;
    } while (x != d);
    if (n != vertex_dart_count[darts_[d].origin])
      throw InvalidDiagram("vertex " + std::to_string(darts_[d].origin) +
                           " splits into several rotation orbits");
  }

  // edges have exactly two darts
  std::map<int, int> edge_dart_count;
  for (int d : live) edge_dart_count[darts_[d].edge]++;
  for (auto& [e, c] : edge_dart_count)
    if (c != 2) throw InvalidDiagram("edge " + std::to_string(e) + " has " +
                                     std::to_string(c) + " darts");

  // faces: one orbit of length 3 per id; one outer orbit
  std::map<int, std::vector<int>> by_face;
  for (int d : live) by_face[darts_[d].face].push_back(d);
  for (auto& [f, ds] : by_face) {
    int d0 = ds.front();
    int len = 0;
    int x = d0;
    std::set<int> orbit;
    do {
      if (darts_[x].face != f) throw InvalidDiagram("face orbit changes face id");
      orbit.insert(x);
      ++len;
      x = next_in_face(x);
      if (len > static_cast<int>(live.size())) throw InvalidDiagram("face orbit open");
    } while (x != d0);
    if (static_cast<int>(ds.size()) != len)
      throw InvalidDiagram("face " + std::to_string(f) + " has several orbits");
    if (f != -1 && len != 3)
      throw InvalidDiagram("face " + std::to_string(f) + " is not a triangle");
  }

  // connectivity over next/twin
  std::set<int> reach;
  std::vector<int> stack{live.front()};
  while (!stack.empty()) {
    int d = stack.back();
    stack.pop_back();
    if (!reach.insert(d).second) continue;
    stack.push_back(darts_[d].next);
    stack.push_back(darts_[d].twin);
  }
  if (reach.size() != live.size()) throw InvalidDiagram("diagram is disconnected");

  // Euler characteristic of the disk
  int V = static_cast<int>(vertex_ids().size());
  int E = static_cast<int>(edge_ids().size());
  int F = face_count();
  if (V - E + F != 1)
    throw InvalidDiagram("V - E + F = " + std::to_string(V - E + F) + ", expected 1");
  if (by_face.find(-1) == by_face.end())
    throw InvalidDiagram("no outer face");

  // labels commute with incidence
  for (int d : live) {
    const Dart& D = darts_[d];
    int xe = edge_labels_.at(D.edge);
    auto ends = xedge_ends(*target_, xe);
    int fv = vertex_labels_.at(D.origin);
    int fw = vertex_labels_.at(darts_[D.twin].origin);
    if (std::minmax(fv, fw) != ends)
      throw InvalidDiagram("edge label endpoints mismatch at dart " + std::to_string(d));
    if (D.face != -1) {
      int T = face_labels_.at(D.face);
      const auto& tri = target_->triangle(T);
      bool has = false;
      for (int e : tri.edges) has = has || e == xe;
      if (!has) throw InvalidDiagram("face label does not contain an edge image");
    }
  }
}

bool DiagramMap::is_nondegenerate() const {
  for (int f : face_ids()) {
    std::set<int> vl;
    for (int d : live_darts())
      if (darts_[d].face == f) vl.insert(vertex_labels_.at(darts_[d].origin));
    if (vl.size() != 3) return false;
  }
  for (int d : live_darts()) {
    int a = vertex_labels_.at(darts_[d].origin);
    int b = vertex_labels_.at(darts_[darts_[d].twin].origin);
    if (a == b) return false;
  }
  return true;
}

std::vector<std::vector<DiagramMap::WalkStep>> DiagramMap::link_walks(
    int vertex_id) const {
  std::vector<int> ds = darts_at(vertex_id);
  const int n = static_cast<int>(ds.size());
  auto corner_face = [&](int i) { return darts_[ds[i]].face; };

  std::vector<std::vector<WalkStep>> walks;
  bool interior = true;
  for (int i = 0; i < n; ++i)
    if (corner_face(i) == -1) interior = false;

  if (interior) {
    std::vector<WalkStep> w;
    for (int i = 0; i < n; ++i) w.push_back({ds[i], corner_face(i)});
    walks.push_back(std::move(w));
    return walks;
  }
  // fans: maximal runs of present corners
  for (int start = 0; start < n; ++start) {
    if (corner_face(start) == -1) continue;
    if (corner_face((start + n - 1) % n) != -1) continue;  // not a run head
    std::vector<WalkStep> w;
    int i = start;
    while (corner_face(i) != -1) {
      w.push_back({ds[i], corner_face(i)});
      i = (i + 1) % n;
    }
    walks.push_back(std::move(w));
  }
  return walks;
}

namespace {

struct CornerStep {
  int from_dart;
  int corner_face;   // D-face
  int xcorner;       // X-triangle id: the corner at f(v) of that triangle
  int from_edge_x;   // X-edge image of from link vertex
  int to_edge_x;
  bool closed_walk;
  int walk_index;
  int pos_in_walk;
};

std::vector<CornerStep> corner_steps(const DiagramMap& dm, int v) {
  std::vector<CornerStep> out;
  auto walks = dm.link_walks(v);
  for (std::size_t wi = 0; wi < walks.size(); ++wi) {
    const auto& w = walks[wi];
    bool closed = dm.is_interior(v);
    for (std::size_t i = 0; i < w.size(); ++i) {
      CornerStep s;
      s.from_dart = w[i].from_dart;
      s.corner_face = w[i].corner_face;
      s.xcorner = dm.face_label(w[i].corner_face);
      s.from_edge_x = dm.edge_label(dm.dart(s.from_dart).edge);
      int to_dart = dm.dart(s.from_dart).next;
      s.to_edge_x = dm.edge_label(dm.dart(to_dart).edge);
      s.closed_walk = closed;
      s.walk_index = static_cast<int>(wi);
      s.pos_in_walk = static_cast<int>(i);
      out.push_back(s);
    }
  }
  return out;
}

// First mirrored corner pair at v: same X-corner traversed in both
// directions. With consecutive_only, the traversals must be adjacent in the
// walk.
std::optional<std::pair<CornerStep, CornerStep>> find_mirrored_pair(
    const DiagramMap& dm, int v, bool consecutive_only) {
  auto steps = corner_steps(dm, v);
  if (!consecutive_only) {
    for (std::size_t i = 0; i < steps.size(); ++i)
      for (std::size_t j = i + 1; j < steps.size(); ++j) {
        if (steps[i].xcorner != steps[j].xcorner) continue;
        if (steps[i].from_edge_x == steps[j].to_edge_x &&
            steps[i].to_edge_x == steps[j].from_edge_x)
          return std::make_pair(steps[i], steps[j]);
      }
    return std::nullopt;
  }
  std::map<int, std::vector<CornerStep>> by_walk;
  for (const auto& s : steps) by_walk[s.walk_index].push_back(s);
  for (auto& [wi, w] : by_walk) {
    const std::size_t n = w.size();
    std::size_t pairs = w.empty() ? 0 : (w.front().closed_walk ? n : n - 1);
    for (std::size_t i = 0; i < pairs; ++i) {
      const auto& a = w[i];
      const auto& b = w[(i + 1) % n];
      if (a.xcorner == b.xcorner && a.from_edge_x == b.to_edge_x &&
          a.to_edge_x == b.from_edge_x)
        return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

}  // namespace

DiagramMap::VertexReducedReport DiagramMap::vertex_reduced_report(
    bool vr_consecutive) const {
  VertexReducedReport rep;
  for (int v : vertex_ids()) {
    auto pair = find_mirrored_pair(*this, v, vr_consecutive);
    if (pair) {
      rep.reduced = false;
      rep.violations.push_back({v, pair->first.corner_face, pair->second.corner_face});
    }
  }
  return rep;
}

void DiagramMap::edge_reduction(int vertex_id) {
  std::vector<int> ds = darts_at(vertex_id);
  if (ds.size() != 2) throw NotApplicable("vertex degree is not 2");
  int g1 = ds[0], g2 = ds[1];
  int F1 = darts_[g1].face, F2 = darts_[g2].face;
  if (F1 == -1 || F2 == -1) throw NotApplicable("vertex is on the boundary");
  if (F1 == F2) throw NotApplicable("corners belong to one face");
  if (face_labels_.at(F1) != face_labels_.at(F2))
    throw NotApplicable("faces are not mapped to the same triangle");
  if (edge_labels_.at(darts_[g1].edge) == edge_labels_.at(darts_[g2].edge))
    throw NotApplicable("corner edges have equal labels");

  int z1 = next_in_face(g1);
  int z2 = next_in_face(g2);
  int h1 = darts_[z1].edge, h2 = darts_[z2].edge;
  if (h1 == h2) throw InvalidDiagram("faces share all three edges");
  if (edge_labels_.at(h1) != edge_labels_.at(h2))
    throw NotApplicable("opposite edges have different labels");

  int tg1 = darts_[g1].twin, tg2 = darts_[g2].twin;
  int tz1 = darts_[z1].twin, tz2 = darts_[z2].twin;
  // rotations: at t consecutive (z1, tg1, tz2); at b consecutive (z2, tg2, tz1)
  if (darts_[z1].next != tg1 || darts_[tg1].next != tz2 || darts_[z2].next != tg2 ||
      darts_[tg2].next != tz1)
    throw InvalidDiagram("unexpected rotation around the bigon");

  // at t: remove tg1, tz2; at b: remove z2, tg2
  int y = darts_[z2].prev;
  set_next(z1, darts_[tz2].next);
  set_next(y, tz1);

  darts_[z1].face = darts_[tz2].face;

  int e_g1 = darts_[g1].edge, e_g2 = darts_[g2].edge;
  kill_dart(g1);
  kill_dart(tg1);
  kill_dart(g2);
  kill_dart(tg2);
  kill_dart(z2);
  kill_dart(tz2);
  face_labels_.erase(F1);
  face_labels_.erase(F2);
  edge_labels_.erase(e_g1);
  edge_labels_.erase(e_g2);
  edge_labels_.erase(h2);
  vertex_labels_.erase(vertex_id);
}

std::pair<int, int> DiagramMap::diamond_move(int d1, int d2) {
  check_dart(d1);
  check_dart(d2);
  if (d1 == d2) throw NotApplicable("darts coincide");
  int v = darts_[d1].origin;
  if (darts_[d2].origin != v) throw NotApplicable("darts have different origins");
  if (darts_[d1].edge == darts_[d2].edge) throw NotApplicable("darts share an edge");
  if (edge_labels_.at(darts_[d1].edge) != edge_labels_.at(darts_[d2].edge))
    throw NotApplicable("edge labels differ");
  int t1 = darts_[d1].twin, t2 = darts_[d2].twin;
  int x1 = darts_[t1].origin, x2 = darts_[t2].origin;
  if (x1 == x2) throw NotApplicable("far endpoints coincide");
  if (darts_[d1].next == d2 || darts_[d2].next == d1)
    throw NotApplicable("rotation arc between the darts is empty");
  if (vertex_labels_.at(x1) != vertex_labels_.at(x2))
    throw InvalidDiagram("far endpoint labels differ");

  int a_s = darts_[d2].prev;
  int b_t = darts_[d1].prev;
  int p_u = darts_[t1].prev;
  int q_w = darts_[t2].prev;

  // split v
  set_next(a_s, d1);
  set_next(b_t, d2);
  // merge x1, x2
  set_next(p_u, t2);
  set_next(q_w, t1);
  // crosswise twin re-pairing: edges (d1, t2), (d2, t1)
  darts_[d1].twin = t2;
  darts_[t2].twin = d1;
  darts_[d2].twin = t1;
  darts_[t1].twin = d2;
  int e1 = darts_[d1].edge, e2 = darts_[d2].edge;
  darts_[t2].edge = e1;
  darts_[t1].edge = e2;

  int v2 = new_vertex(vertex_labels_.at(v));
  {
    int x = d2;
    do {
      darts_[x].origin = v2;
      x = darts_[x].next;
    } while (x != d2);
  }
  relabel_origin(x2, x1);
  vertex_labels_.erase(x2);
  return {v, v2};
}

void DiagramMap::vertex_removal(int vertex_id) {
  if (!is_interior(vertex_id)) throw NotApplicable("vertex is on the boundary");
  std::vector<int> spokes = darts_at(vertex_id);
  const int k = static_cast<int>(spokes.size());
  if (k < 3) throw NotApplicable("vertex degree below 3");

  const AngledComplex& X = *target_;
  int fv = vertex_labels_.at(vertex_id);
  LinkGraph L = link(X, fv);

  // image cycle must be simple
  SimpleCycle cyc;
  for (int i = 0; i < k; ++i) {
    int pos = L.position_of(edge_labels_.at(darts_[spokes[i]].edge));
    if (pos < 0) throw InvalidDiagram("spoke image is not an edge at f(v)");
    cyc.vertices.push_back(pos);
  }
  {
    std::set<int> distinct(cyc.vertices.begin(), cyc.vertices.end());
    if (static_cast<int>(distinct.size()) != k)
      throw NotApplicable("link walk is not a single simple cycle");
  }
  Angle total = Angle::exact(0);
  bool first = true;
  for (int i = 0; i < k; ++i) {
    int T = face_labels_.at(darts_[spokes[i]].face);
    int le = -1;
    for (std::size_t j = 0; j < L.edges.size(); ++j)
      if (L.edges[j].source == T) le = static_cast<int>(j);
    if (le < 0) throw InvalidDiagram("corner image missing from the target link");
    cyc.edges.push_back(le);
    total = first ? L.edges[le].weight : total + L.edges[le].weight;
    first = false;
  }
  cyc.angular_length = total;
  if (total.compare_pi(Rational(2)) >= 0)
    throw NotApplicable("image cycle has angular length >= 2pi");

  auto tri = link_disk_triangulation(L, cyc);
  if (!tri) throw NotApplicable("image cycle does not bound a triangulated disk");

  // resolve everything against the target before mutating
  std::vector<int> b(k), z(k);
  for (int i = 0; i < k; ++i) {
    b[i] = darts_[darts_[spokes[i]].twin].origin;
    z[i] = next_in_face(spokes[i]);
  }
  std::map<std::pair<int, int>, int> chord_xedge;  // (i,j) -> X-edge id
  for (const auto& ch : tri->chords) {
    int le = ch[2];
    int T = L.edges[le].source;
    chord_xedge[{ch[0], ch[1]}] = X.opposite_edge(T, fv);
    if (b[ch[0]] == b[ch[1]])
      throw NotApplicable("chord endpoints coincide in the diagram");
  }
  auto side_xedge = [&](int i, int j) {  // j = i+1 mod k or chord
    if (j == (i + 1) % k) return edge_labels_.at(darts_[z[i]].edge);
    auto it = chord_xedge.find(std::minmax(i, j));
    if (it == chord_xedge.end()) throw InvalidDiagram("missing chord");
    return it->second;
  };
  std::vector<int> new_face_xtri;
  for (const auto& f : tri->faces) {
    int t = X.find_triangle_with_edges({side_xedge(f[0], f[1]), side_xedge(f[1], f[2]),
                                        side_xedge(f[0] == 0 && f[2] == k - 1 ? f[2] : f[0],
                                                   f[0] == 0 && f[2] == k - 1 ? f[0] : f[2])});
    if (t < 0)
      throw Target3FlagViolation("no face on the triangulated link triangle");
    new_face_xtri.push_back(t);
  }

  // build chord darts
  struct ChordDarts {
    int fwd, bwd;  // i->j and j->i
  };
  std::map<std::pair<int, int>, ChordDarts> cd;
  for (const auto& ch : tri->chords) {
    int e = new_edge(chord_xedge[{ch[0], ch[1]}]);
    int fwd = new_dart(b[ch[0]], e, -2);
    int bwd = new_dart(b[ch[1]], e, -2);
    darts_[fwd].twin = bwd;
    darts_[bwd].twin = fwd;
    cd[{ch[0], ch[1]}] = {fwd, bwd};
  }
  // face ids and dart->face assignment
  auto dart_for = [&](int from, int to) {
    if (to == (from + 1) % k) return z[from];
    auto it = cd.find(std::minmax(from, to));
    if (it == cd.end()) throw InvalidDiagram("missing chord dart");
    return from < to ? it->second.fwd : it->second.bwd;
  };
  for (std::size_t fi = 0; fi < tri->faces.size(); ++fi) {
    const auto& f = tri->faces[fi];
    int F = new_face(new_face_xtri[fi]);
    darts_[dart_for(f[0], f[1])].face = F;
    darts_[dart_for(f[1], f[2])].face = F;
    darts_[dart_for(f[2], f[0])].face = F;
  }

  // rotations at each b[i]: z[i], chords ascending by cyclic distance, twin(z[i-1])
  for (int i = 0; i < k; ++i) {
    std::vector<std::pair<int, int>> at;  // (cyclic distance, dart)
    for (const auto& [key, darts2] : cd) {
      if (key.first == i) at.push_back({(key.second - i + k) % k, darts2.fwd});
      if (key.second == i) at.push_back({(key.first - i + k) % k, darts2.bwd});
    }
    std::sort(at.begin(), at.end());
    int prev_dart = z[i];
    for (const auto& [dist, d] : at) {
      set_next(prev_dart, d);
      prev_dart = d;
    }
    int iz = (i + k - 1) % k;
    set_next(prev_dart, darts_[z[iz]].twin);
  }

  // delete star
  for (int i = 0; i < k; ++i) {
    face_labels_.erase(darts_[spokes[i]].face);
    edge_labels_.erase(darts_[spokes[i]].edge);
    kill_dart(darts_[spokes[i]].twin);
    kill_dart(spokes[i]);
  }
  vertex_labels_.erase(vertex_id);
}

namespace {

Angle corner_weight_at(const DiagramMap& dm, const CornerStep& s, int fv) {
  const Angle* w = dm.target().corner_weight(s.xcorner, fv);
  return w ? *w : Angle::exact(0);
}

struct WalkCycle {
  std::vector<int> step_indices;
  Angle angular;
  bool contiguous = false;
  int start = 0, end = 0;  // [start, end) when contiguous
};

// Stack decomposition of the closed interior walk into simple cycles. Every
// popped cycle is a contiguous step range; the final cycle may not be.
std::vector<WalkCycle> decompose_walk(const DiagramMap& dm, int v,
                                      const std::vector<CornerStep>& steps) {
  int fv = dm.vertex_label(v);
  std::vector<WalkCycle> out;
  std::vector<std::pair<int, int>> stack;  // (link vertex = X-edge id, step index)
  for (int i = 0; i < static_cast<int>(steps.size()); ++i) {
    int vert = steps[i].from_edge_x;
    int p = -1;
    for (int j = static_cast<int>(stack.size()) - 1; j >= 0; --j)
      if (stack[j].first == vert) {
        p = j;
        break;
      }
    if (p >= 0) {
      WalkCycle c;
      c.contiguous = true;
      c.start = stack[p].second;
      c.end = i;
      Angle sum = Angle::exact(0);
      for (int k = c.start; k < c.end; ++k) {
        c.step_indices.push_back(k);
        sum += corner_weight_at(dm, steps[k], fv);
      }
      c.angular = sum;
      out.push_back(std::move(c));
      stack.resize(p);
    }
    stack.push_back({vert, i});
  }
  WalkCycle last;
  Angle sum = Angle::exact(0);
  for (auto& [vert, idx] : stack) {
    last.step_indices.push_back(idx);
    sum += corner_weight_at(dm, steps[idx], fv);
  }
  last.angular = sum;
  last.contiguous = stack.size() == steps.size();
  if (last.contiguous) {
    last.start = 0;
    last.end = static_cast<int>(steps.size());
  }
  if (!last.step_indices.empty()) out.push_back(std::move(last));
  return out;
}

bool below_2pi(const Angle& a) { return a.compare_pi(Rational(2)) < 0; }

}  // namespace

bool interior_cycles_at_least_2pi(const DiagramMap& dm) {
  for (int v : dm.vertex_ids()) {
    if (!dm.is_interior(v)) continue;
    auto steps = corner_steps(dm, v);
    for (const auto& c : decompose_walk(dm, v, steps))
      if (below_2pi(c.angular)) return false;
  }
  return true;
}

namespace {

void record(ReductionTrace& trace, ReductionStep::Kind k, int loc, int before,
            int after) {
  trace.steps.push_back({k, loc, before, after});
}

// Diamond moves bring the mirrored pair together, then an edge reduction
// removes it. Face count drops by exactly 2.
void resolve_mirrored_pair(DiagramMap& dm, int v, bool vr_consecutive,
                           ReductionTrace& trace) {
  int guard = static_cast<int>(dm.darts_at(v).size()) + 4;
  while (guard-- > 0) {
    auto pair = find_mirrored_pair(dm, v, vr_consecutive);
    if (!pair) throw StuckDiagram("mirrored pair vanished before reduction");
    int gi = pair->first.from_dart;
    int gj = pair->second.from_dart;
    int si = dm.dart(gi).next;
    int sj = dm.dart(gj).next;
    int before = dm.face_count();
    if (si == gj && sj == gi) {
      dm.edge_reduction(v);
      record(trace, ReductionStep::EdgeReduction, v, before, dm.face_count());
      return;
    }
    std::pair<int, int> split;
    try {
      split = dm.diamond_move(gi, sj);
    } catch (const NotApplicable&) {
      try {
        split = dm.diamond_move(gj, si);
      } catch (const NotApplicable& e) {
        throw StuckDiagram(std::string("diamond move blocked: ") + e.what());
      }
    }
    record(trace, ReductionStep::DiamondMove, v, before, dm.face_count());
    v = split.first;
  }
  throw StuckDiagram("mirrored pair resolution did not terminate");
}

// Splits off popped simple cycles until the vertex carries a single cycle of
// angular length < 2pi, then removes it.
void isolate_and_remove(DiagramMap& dm, int v, ReductionTrace& trace) {
  int guard = static_cast<int>(dm.darts_at(v).size()) + 4;
  while (guard-- > 0) {
    auto steps = corner_steps(dm, v);
    auto cycles = decompose_walk(dm, v, steps);
    if (cycles.size() == 1) {
      if (!below_2pi(cycles[0].angular))
        throw StuckDiagram("tracked cycle is no longer below 2pi");
      int before = dm.face_count();
      try {
        dm.vertex_removal(v);
      } catch (const NotApplicable& e) {
        throw StuckDiagram(std::string("vertex removal blocked: ") + e.what());
      }
      record(trace, ReductionStep::VertexRemoval, v, before, dm.face_count());
      return;
    }
    const WalkCycle& first_popped = cycles.front();
    if (!first_popped.contiguous) throw StuckDiagram("no contiguous cycle to split");
    int dp = steps[first_popped.start].from_dart;
    int di = steps[first_popped.end].from_dart;
    int before = dm.face_count();
    std::pair<int, int> split;
    try {
      split = dm.diamond_move(dp, di);
    } catch (const NotApplicable& e) {
      throw StuckDiagram(std::string("isolating diamond blocked: ") + e.what());
    }
    record(trace, ReductionStep::DiamondMove, v, before, dm.face_count());
    v = below_2pi(first_popped.angular) ? split.first : split.second;
  }
  throw StuckDiagram("cycle isolation did not terminate");
}

}  // namespace

ReductionTrace reduce(DiagramMap& dm, bool vr_consecutive) {
  dm.validate();
  if (!dm.is_nondegenerate())
    throw InvalidDiagram("reduce requires a nondegenerate diagram");
  ReductionTrace trace;
  int guard = dm.face_count() / 2 + 8;
  while (guard-- > 0) {
    // (1) vertex-reduction violations
    bool acted = false;
    for (int v : dm.vertex_ids()) {
      if (find_mirrored_pair(dm, v, vr_consecutive)) {
        resolve_mirrored_pair(dm, v, vr_consecutive, trace);
        dm.validate();
        acted = true;
        break;
      }
    }
    if (acted) continue;
    // (2) interior link cycles below 2pi
    for (int v : dm.vertex_ids()) {
      if (!dm.is_interior(v)) continue;
      auto steps = corner_steps(dm, v);
      auto cycles = decompose_walk(dm, v, steps);
      bool bad = false;
      for (const auto& c : cycles) bad = bad || below_2pi(c.angular);
      if (bad) {
        isolate_and_remove(dm, v, trace);
        dm.validate();
        acted = true;
        break;
      }
    }
    if (!acted) return trace;
  }
  throw StuckDiagram("reduction loop exceeded the face-count bound");
}

IsoperimetricConstant isoperimetric_constant(const AngledComplex& X) {
  bool have = false;
  Rational worst(0);
  int worst_id = -1;
  for (const auto& t : X.triangles()) {
    if (!t.well_formed) continue;
    Angle k = face_curvature(X, t.id);
    if (!k.is_exact()) throw Error("isoperimetric constant requires exact weights");
    if (!have || k.pi_coeff() > worst) {
      worst = k.pi_coeff();
      worst_id = t.id;
      have = true;
    }
  }
  if (!have) throw Error("complex has no triangles");
  if (worst >= Rational(0)) throw NotStrictlySystolicWeights(worst_id);
  IsoperimetricConstant out;
  out.M = Angle::exact(worst);
  out.K = Rational(2) / (-worst);
  return out;
}

IsoperimetricReport check_linear_isoperimetric(const DiagramMap& dm,
                                               const AngledComplex& X) {
  IsoperimetricReport rep;
  auto iso = isoperimetric_constant(X);
  rep.K = iso.K;
  rep.area = dm.face_count();
  rep.boundary = dm.boundary_length();
  rep.holds = Rational(rep.area) <= iso.K * Rational(rep.boundary);

  if (rep.area > 0) {
    AngledComplex D = dm.to_angled_complex();
    Angle sum = Angle::exact(0);
    for (int v : dm.vertex_ids())
      if (!dm.is_interior(v)) sum += vertex_curvature(D, v);
    // area <= (sum - 2pi) / (-M)
    Rational rhs = (sum.pi_coeff() - Rational(2)) / (-iso.M.pi_coeff());
    rep.intermediate_holds = Rational(rep.area) <= rhs;
  }
  return rep;
}

bool diagrams_isomorphic(const DiagramMap& a, const DiagramMap& b) {
  auto la = a.live_darts();
  auto lb = b.live_darts();
  if (la.size() != lb.size()) return false;
  if (la.empty()) return true;

  auto try_map = [&](int root_b, bool mirror) {
    std::map<int, int> phi;  // a-dart -> b-dart
    std::vector<int> stack{la.front()};
    phi[la.front()] = root_b;
    while (!stack.empty()) {
      int d = stack.back();
      stack.pop_back();
      int e = phi.at(d);
      const auto& da = a.dart(d);
      const auto& db = b.dart(e);
      if ((da.face == -1) != (db.face == -1)) return false;
      if (da.face != -1 && a.face_label(da.face) != b.face_label(db.face)) return false;
      if (a.edge_label(da.edge) != b.edge_label(db.edge)) return false;
      if (a.vertex_label(da.origin) != b.vertex_label(db.origin)) return false;
      struct Pair {
        int na, nb;
      } nbrs[2] = {{da.next, mirror ? db.prev : db.next}, {da.twin, db.twin}};
      for (auto [na, nb] : nbrs) {
        auto it = phi.find(na);
        if (it != phi.end()) {
          if (it->second != nb) return false;
        } else {
          phi[na] = nb;
          stack.push_back(na);
        }
      }
    }
    return phi.size() == la.size();
  };

  for (int root : lb)
    if (try_map(root, false) || try_map(root, true)) return true;
  return false;
}

AngledComplex DiagramMap::to_angled_complex() const {
  AngledComplex D;
  for (int v : vertex_ids()) D.add_vertex(v);
  std::map<int, std::pair<int, int>> ends;
  for (int d : live_darts()) {
    const Dart& dd = darts_[d];
    ends[dd.edge] = std::minmax(dd.origin, darts_[dd.twin].origin);
  }
  for (auto& [e, uv] : ends) D.add_edge(e, uv.first, uv.second);
  std::map<int, std::vector<int>> face_edges;
  for (int d : live_darts())
    if (darts_[d].face != -1) face_edges[darts_[d].face].push_back(darts_[d].edge);
  for (auto& [f, es] : face_edges) {
    if (es.size() != 3) throw InvalidDiagram("non-triangular face");
    D.add_triangle(f, es[0], es[1], es[2]);
  }
  // pull back corner weights: corner of face F at origin(d)
  for (int d : live_darts()) {
    const Dart& dd = darts_[d];
    if (dd.face == -1) continue;
    int T = face_labels_.at(dd.face);
    int xv = vertex_labels_.at(dd.origin);
    const Angle* w = target_->corner_weight(T, xv);
    D.set_corner_weight(dd.face, dd.origin, w ? *w : Angle::exact(0));
  }
  return D;
}

std::string DiagramMap::serialize() const {
  std::ostringstream os;
  for (int v : vertex_ids()) os << "v " << v << "\n";
  std::map<int, std::pair<int, int>> ends;
  for (int d : live_darts())
    ends[darts_[d].edge] = std::minmax(darts_[d].origin, darts_[darts_[d].twin].origin);
  for (auto& [e, uv] : ends) os << "e " << e << " " << uv.first << " " << uv.second << "\n";
  std::map<int, std::vector<int>> face_edges;
  for (int d : live_darts())
    if (darts_[d].face != -1) face_edges[darts_[d].face].push_back(darts_[d].edge);
  for (auto& [f, es] : face_edges)
    os << "t " << f << " " << es[0] << " " << es[1] << " " << es[2] << "\n";
  for (int v : vertex_ids()) os << "label v " << v << " " << vertex_labels_.at(v) << "\n";
  for (auto& [e, uv] : ends) os << "label e " << e << " " << edge_labels_.at(e) << "\n";
  for (auto& [f, es] : face_edges)
    os << "label t " << f << " " << face_labels_.at(f) << "\n";
  os << "boundary";
  for (int d : boundary_darts()) os << " " << darts_[d].edge;
  os << "\n";
  return os.str();
}

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) {
    if (tok[0] == '#') break;
    out.push_back(tok);
  }
  return out;
}

}  // namespace

DiagramMap parse_diagram(std::istream& in, const AngledComplex* target) {
  std::set<int> vertices;
  std::map<int, std::pair<int, int>> edges;
  std::map<int, std::array<int, 3>> tris;
  std::map<int, int> vlab, elab, tlab;
  std::vector<int> boundary;

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tok = split_tokens(line);
    if (tok.empty()) continue;
    try {
      if (tok[0] == "v" && tok.size() == 2) {
        vertices.insert(std::stoi(tok[1]));
      } else if (tok[0] == "e" && tok.size() == 4) {
        edges[std::stoi(tok[1])] = {std::stoi(tok[2]), std::stoi(tok[3])};
      } else if (tok[0] == "t" && tok.size() == 5) {
        tris[std::stoi(tok[1])] = {std::stoi(tok[2]), std::stoi(tok[3]),
                                   std::stoi(tok[4])};
      } else if (tok[0] == "label" && tok.size() == 4) {
        int id = std::stoi(tok[2]), x = std::stoi(tok[3]);
        if (tok[1] == "v")
          vlab[id] = x;
        else if (tok[1] == "e")
          elab[id] = x;
        else if (tok[1] == "t")
          tlab[id] = x;
        else
          throw ParseError("unknown label kind " + tok[1], lineno, 1);
      } else if (tok[0] == "boundary") {
        for (std::size_t i = 1; i < tok.size(); ++i)
          boundary.push_back(std::stoi(tok[i]));
      } else {
        throw ParseError("unrecognized diagram line: " + line, lineno, 1);
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(std::string(e.what()), lineno, 1);
    }
  }

  // derive the vertex cycle of each triangle
  std::map<int, std::array<int, 3>> tri_cycle;  // t -> (a, b, c): edges (ab, bc, ca)
  for (auto& [t, es] : tris) {
    std::map<int, int> deg;
    for (int e : es) {
      if (!edges.count(e)) throw InvalidDiagram("triangle uses unknown edge");
      deg[edges[e].first]++;
      deg[edges[e].second]++;
    }
    if (deg.size() != 3) throw InvalidDiagram("triangle does not close");
    auto joins = [&](int e, int x, int y) {
      return std::minmax(edges[e].first, edges[e].second) == std::minmax(x, y);
    };
    int a = deg.begin()->first;
    int b = -1, c = -1;
    for (auto& [v, d] : deg)
      if (v != a) (b < 0 ? b : c) = v;
    // order edges as (ab, bc, ca)
    std::array<int, 3> cyc{a, b, c};
    std::array<int, 3> ordered{-1, -1, -1};
    for (int e : es) {
      if (joins(e, a, b)) ordered[0] = e;
      if (joins(e, b, c)) ordered[1] = e;
      if (joins(e, c, a)) ordered[2] = e;
    }
    if (ordered[0] < 0 || ordered[1] < 0 || ordered[2] < 0)
      throw InvalidDiagram("triangle edges do not match its vertices");
    tris[t] = ordered;
    tri_cycle[t] = cyc;
  }

  // consistent orientation: faces sharing an edge traverse it oppositely
  std::map<int, std::vector<int>> faces_on_edge;
  for (auto& [t, es] : tris)
    for (int e : es) faces_on_edge[e].push_back(t);
  for (auto& [e, fs] : faces_on_edge)
    if (fs.size() > 2) throw InvalidDiagram("edge lies on more than two faces");

  std::map<int, bool> flipped;
  for (auto& [t, es] : tris) {
    if (flipped.count(t)) continue;
    flipped[t] = false;
    std::vector<int> stack{t};
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      auto cyc = tri_cycle[cur];
      if (flipped[cur]) std::swap(cyc[1], cyc[2]);
      for (int e : tris[cur]) {
        for (int other : faces_on_edge[e]) {
          if (other == cur) continue;
          // direction of e in cur
          int x = edges[e].first, y = edges[e].second;
          auto dir_in = [&](std::array<int, 3> c) {
            for (int i = 0; i < 3; ++i)
              if (c[i] == x && c[(i + 1) % 3] == y) return true;
            return false;
          };
          bool cur_fwd = dir_in(cyc);
          auto ocyc = tri_cycle[other];
          bool other_fwd_raw = dir_in(ocyc);
          bool need_flip = (cur_fwd == other_fwd_raw);
          if (flipped.count(other)) {
            if (flipped[other] != need_flip)
              throw InvalidDiagram("faces cannot be coherently oriented");
          } else {
            flipped[other] = need_flip;
            stack.push_back(other);
          }
        }
      }
    }
  }

  DiagramMap dm(target);
  // allocate ids 1:1 with the file
  for (int v : vertices) {
    if (!vlab.count(v)) throw InvalidDiagram("missing vertex label");
    dm.vertex_labels_[v] = vlab[v];
    dm.next_vertex_ = std::max(dm.next_vertex_, v + 1);
  }
  for (auto& [e, uv] : edges) {
    if (!elab.count(e)) throw InvalidDiagram("missing edge label");
    dm.edge_labels_[e] = elab[e];
    dm.next_edge_ = std::max(dm.next_edge_, e + 1);
  }
  for (auto& [t, es] : tris) {
    if (!tlab.count(t)) throw InvalidDiagram("missing face label");
    dm.face_labels_[t] = tlab[t];
    dm.next_face_ = std::max(dm.next_face_, t + 1);
  }

  // face darts
  std::map<std::pair<int, int>, int> dart_on;  // (edge, face) -> dart
  for (auto& [t, es] : tris) {
    auto cyc = tri_cycle[t];
    if (flipped[t]) std::swap(cyc[1], cyc[2]);
    for (int i = 0; i < 3; ++i) {
      int x = cyc[i];
      int e = -1;
      for (int cand : es) {
        auto uv = std::minmax(edges[cand].first, edges[cand].second);
        if (uv == std::minmax(x, cyc[(i + 1) % 3])) e = cand;
      }
      dart_on[{e, t}] = dm.new_dart(x, e, t);
    }
  }
  // twins and bare darts
  for (auto& [e, uv] : edges) {
    auto& fs = faces_on_edge[e];
    if (fs.size() == 2) {
      int d1 = dart_on[{e, fs[0]}], d2 = dart_on[{e, fs[1]}];
      dm.darts_[d1].twin = d2;
      dm.darts_[d2].twin = d1;
    } else if (fs.size() == 1) {
      int d1 = dart_on[{e, fs[0]}];
      int other = dm.darts_[d1].origin == uv.first ? uv.second : uv.first;
      int d2 = dm.new_dart(other, e, -1);
      dm.darts_[d1].twin = d2;
      dm.darts_[d2].twin = d1;
    } else {
      int d1 = dm.new_dart(uv.first, e, -1);
      int d2 = dm.new_dart(uv.second, e, -1);
      dm.darts_[d1].twin = d2;
      dm.darts_[d2].twin = d1;
    }
  }

  // rotations: sigma(next_in_face(d)) = twin(d) for consecutive face darts
  std::map<int, int> sigma;
  for (auto& [t, es] : tris) {
    auto cyc = tri_cycle[t];
    if (flipped[t]) std::swap(cyc[1], cyc[2]);
    std::array<int, 3> ds{};
    for (int i = 0; i < 3; ++i) {
      for (int cand : es) {
        auto uv = std::minmax(edges[cand].first, edges[cand].second);
        if (uv == std::minmax(cyc[i], cyc[(i + 1) % 3]) &&
            dm.darts_[dart_on[{cand, t}]].origin == cyc[i])
          ds[i] = dart_on[{cand, t}];
      }
    }
    for (int i = 0; i < 3; ++i) {
      int d = ds[i], dd = ds[(i + 1) % 3];
      sigma[dd] = dm.darts_[d].twin;
    }
  }
  // assemble rotation chains per vertex
  std::map<int, std::vector<int>> at_vertex;
  for (int d = 0; d < static_cast<int>(dm.darts_.size()); ++d)
    if (dm.darts_[d].alive) at_vertex[dm.darts_[d].origin].push_back(d);
  for (auto& [v, ds] : at_vertex) {
    std::set<int> has_pred;
    for (int d : ds) {
      auto it = sigma.find(d);
      if (it != sigma.end()) has_pred.insert(it->second);
    }
    std::vector<std::vector<int>> chains;
    std::set<int> used;
    for (int d : ds) {
      if (has_pred.count(d) || used.count(d)) continue;
      std::vector<int> chain{d};
      used.insert(d);
      int cur = d;
      while (sigma.count(cur)) {
        cur = sigma[cur];
        if (used.count(cur)) throw InvalidDiagram("rotation chain loops");
        chain.push_back(cur);
        used.insert(cur);
      }
      chains.push_back(std::move(chain));
    }
    if (chains.empty()) {
      // all darts constrained: must already be one cycle
      int start = ds.front();
      std::vector<int> cycle{start};
      int cur = start;
      while (true) {
        auto it = sigma.find(cur);
        if (it == sigma.end()) throw InvalidDiagram("broken rotation cycle");
        cur = it->second;
        if (cur == start) break;
        if (cycle.size() > ds.size()) throw InvalidDiagram("vertex rotation splits");
        cycle.push_back(cur);
      }
      if (cycle.size() != ds.size()) throw InvalidDiagram("vertex rotation splits");
      for (std::size_t i = 0; i < cycle.size(); ++i)
        dm.set_next(cycle[i], cycle[(i + 1) % cycle.size()]);
    } else {
      std::sort(chains.begin(), chains.end());
      std::size_t total = 0;
      for (auto& c : chains) total += c.size();
      if (total != ds.size()) throw InvalidDiagram("rotation chains do not cover");
      std::vector<int> cycle;
      for (auto& c : chains) cycle.insert(cycle.end(), c.begin(), c.end());
      for (std::size_t i = 0; i < cycle.size(); ++i)
        dm.set_next(cycle[i], cycle[(i + 1) % cycle.size()]);
    }
  }

  dm.validate();

  // the declared boundary must match the outer orbit up to rotation/direction
  if (!boundary.empty()) {
    std::vector<int> actual;
    for (int d : dm.boundary_darts()) actual.push_back(dm.darts_[d].edge);
    auto matches = [&](std::vector<int> cand) {
      if (cand.size() != actual.size()) return false;
      for (std::size_t s = 0; s < cand.size(); ++s) {
        bool ok = true;
        for (std::size_t i = 0; i < cand.size(); ++i)
          if (cand[(s + i) % cand.size()] != actual[i]) ok = false;
        if (ok) return true;
      }
      return false;
    };
    std::vector<int> rev(boundary.rbegin(), boundary.rend());
    if (!matches(boundary) && !matches(rev))
      throw InvalidDiagram("declared boundary does not match the outer face");
  }
  return dm;
}

DiagramMap parse_diagram_file(const std::string& path, const AngledComplex* target) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_diagram(in, target);
}

}  // namespace systolic
