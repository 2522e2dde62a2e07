#include "support/fixtures.hpp"

#include <cmath>
#include <functional>
#include <map>

#include "systolic/errors.hpp"

namespace fixtures {

using systolic::Angle;

std::uint64_t rand_next(std::uint64_t& state) {
  state ^= state >> 12;
  state ^= state << 25;
  state ^= state >> 27;
  return state * 0x2545F4914F6CDD1DULL;
}

namespace {

struct Builder {
  AngledComplex X;
  std::map<std::pair<int, int>, int> edge_of;  // (min,max) -> id, first edge only
  int next_edge = 0;
  int next_tri = 0;

  void vertex(int id) { X.add_vertex(id); }

  int edge(int u, int v) {
    auto key = std::minmax(u, v);
    auto it = edge_of.find(key);
    if (it != edge_of.end()) return it->second;
    int id = next_edge++;
    X.add_edge(id, u, v);
    edge_of[key] = id;
    return id;
  }

  int tri(int a, int b, int c) {
    int id = next_tri++;
    X.add_triangle(id, edge(a, b), edge(b, c), edge(a, c));
    return id;
  }

  void weight_all(const Rational& w) {
    for (const auto& t : X.triangles())
      for (int v : t.vertices) X.set_corner_weight(t.id, v, Angle::exact(w));
  }

  void length_all(double len) {
    for (const auto& e : X.edges()) X.set_edge_length(e.id, len);
  }
};

}  // namespace

AngledComplex degree7_patch(int rings, bool weighted) {
  if (rings < 1 || rings > 2) throw systolic::Error("rings must be 1 or 2");
  Builder b;
  b.vertex(0);
  for (int i = 1; i <= 7; ++i) b.vertex(i);
  auto v1 = [](int i) { return 1 + ((i % 7) + 7) % 7; };
  for (int i = 0; i < 7; ++i) b.tri(0, v1(i), v1(i + 1));
  if (rings == 2) {
    for (int j = 0; j < 21; ++j) b.vertex(8 + j);
    auto w2 = [](int j) { return 8 + ((j % 21) + 21) % 21; };
    for (int i = 0; i < 7; ++i) {
      for (int j = 0; j < 3; ++j) b.tri(v1(i), w2(3 * i + j), w2(3 * i + j + 1));
      b.tri(v1(i), v1(i + 1), w2(3 * i + 3));
    }
  }
  if (weighted)
    b.weight_all(Rational(2, 7));
  else
    b.length_all(1.0);
  return b.X;
}

AngledComplex double_tetrahedron() {
  Builder b;
  for (int v = 0; v < 5; ++v) b.vertex(v);  // P Q A B C
  const int P = 0, Q = 1, A = 2, B = 3, C = 4;
  int PQA = b.tri(P, Q, A);
  int PQB = b.tri(P, Q, B);
  int PAB = b.tri(P, A, B);
  int QAB = b.tri(Q, A, B);
  int PQC = b.tri(P, Q, C);
  int PAC = b.tri(P, A, C);
  int QAC = b.tri(Q, A, C);
  b.X.add_tetrahedron({PQA, PQB, PAB, QAB});
  b.X.add_tetrahedron({PQA, PQC, PAC, QAC});
  b.weight_all(Rational(1, 4));
  return b.X;
}

AngledComplex octahedron() {
  Builder b;
  for (int v = 0; v < 6; ++v) b.vertex(v);  // 0 north, 5 south, 1..4 equator
  auto eq = [](int i) { return 1 + ((i % 4) + 4) % 4; };
  for (int i = 0; i < 4; ++i) {
    b.tri(0, eq(i), eq(i + 1));
    b.tri(5, eq(i), eq(i + 1));
  }
  b.weight_all(Rational(1, 4));
  return b.X;
}

AngledComplex wheel(int n, Rational hub_weight) {
  Builder b;
  b.vertex(0);
  for (int i = 1; i <= n; ++i) b.vertex(i);
  auto rim = [n](int i) { return 1 + ((i % n) + n) % n; };
  for (int i = 0; i < n; ++i) {
    int t = b.tri(0, rim(i), rim(i + 1));
    b.X.set_corner_weight(t, 0, Angle::exact(hub_weight));
    b.X.set_corner_weight(t, rim(i), Angle::exact(Rational(0)));
    b.X.set_corner_weight(t, rim(i + 1), Angle::exact(Rational(0)));
  }
  return b.X;
}

AngledComplex flat_pyramid_metric() {
  Builder b;
  for (int v = 0; v < 5; ++v) b.vertex(v);  // 0 apex
  auto base = [](int i) { return 1 + ((i % 4) + 4) % 4; };
  for (int i = 0; i < 4; ++i) b.tri(0, base(i), base(i + 1));
  for (const auto& e : b.X.edges()) {
    bool spoke = e.u == 0 || e.v == 0;
    b.X.set_edge_length(e.id, spoke ? 1.0 : std::sqrt(2.0));
  }
  return b.X;
}

AngledComplex flat_triple_metric() {
  Builder b;
  for (int v = 0; v < 4; ++v) b.vertex(v);  // 0 center
  int t1 = b.tri(0, 1, 2);
  int t2 = b.tri(0, 2, 3);
  int t3 = b.tri(0, 1, 3);
  int base = b.tri(1, 2, 3);
  b.X.add_tetrahedron({t1, t2, t3, base});
  for (const auto& e : b.X.edges()) {
    bool long_edge = (e.u == 1 && e.v == 3) || (e.u == 3 && e.v == 1);
    b.X.set_edge_length(e.id, long_edge ? std::sqrt(3.0) : 1.0);
  }
  return b.X;
}

AngledComplex random_disk_complex(std::uint64_t& state) {
  const int n = 4 + static_cast<int>(rand_next(state) % 8);
  Builder b;
  for (int v = 0; v < n; ++v) b.vertex(v);
  // random triangulation of the n-gon
  std::function<void(int, int)> split = [&](int i, int j) {
    if (j - i < 2) return;
    int m = i + 1 + static_cast<int>(rand_next(state) % (j - i - 1));
    b.tri(i, m, j);
    split(i, m);
    split(m, j);
  };
  split(0, n - 1);
  if (rand_next(state) % 3 == 0) b.vertex(100);  // isolated vertex
  if (rand_next(state) % 4 == 0) {
    b.vertex(101);
    b.edge(static_cast<int>(rand_next(state) % n), 101);  // dangling edge
  }
  for (const auto& t : b.X.triangles())
    for (int v : t.vertices) {
      std::int64_t p = static_cast<std::int64_t>(rand_next(state) % 5);
      std::int64_t q = 1 + static_cast<std::int64_t>(rand_next(state) % 5);
      b.X.set_corner_weight(t.id, v, Angle::exact(Rational(p, q)));
    }
  return b.X;
}

DiagramMap cone_diagram(const AngledComplex& X, int x_vertex,
                        const std::vector<int>& fan_triangles) {
  if (fan_triangles.size() < 3) throw systolic::Error("fan needs >= 3 triangles");
  const int k = static_cast<int>(fan_triangles.size());

  auto shared_spoke = [&](int t1, int t2) {
    for (int e1 : X.triangle(t1).edges)
      for (int e2 : X.triangle(t2).edges)
        if (e1 == e2) {
          const auto& e = X.edge(e1);
          if (e.u == x_vertex || e.v == x_vertex) return e1;
        }
    throw systolic::Error("fan triangles do not share a spoke");
  };

  DiagramMap dm = DiagramMap::singleton(X, fan_triangles[0]);
  for (int i = 1; i + 1 <= k - 1; ++i) {
    int spoke = shared_spoke(fan_triangles[i - 1], fan_triangles[i]);
    int glue_dart = -1;
    for (int d : dm.boundary_darts())
      if (dm.edge_label(dm.dart(d).edge) == spoke) glue_dart = d;
    if (glue_dart < 0) throw systolic::Error("spoke not on the boundary");
    dm.glue_on_boundary(glue_dart, fan_triangles[i]);
  }
  // close with the last face at the hub corner
  int hub_dart = -1;
  for (int d : dm.boundary_darts()) {
    int head = dm.dart(dm.dart(d).twin).origin;
    if (dm.vertex_label(head) == x_vertex) hub_dart = d;
  }
  if (hub_dart < 0) throw systolic::Error("hub not on the boundary");
  dm.fill_corner(hub_dart, fan_triangles[k - 1]);
  dm.validate();
  return dm;
}

DiagramMap random_diagram(const AngledComplex& X, std::uint64_t& state, int ops) {
  std::vector<int> tri_ids;
  for (const auto& t : X.triangles())
    if (t.well_formed) tri_ids.push_back(t.id);
  if (tri_ids.empty()) throw systolic::Error("target has no triangles");

  DiagramMap dm =
      DiagramMap::singleton(X, tri_ids[rand_next(state) % tri_ids.size()]);
  for (int op = 0; op < ops; ++op) {
    auto boundary = dm.boundary_darts();
    if (boundary.empty()) break;
    int g = boundary[rand_next(state) % boundary.size()];
    int kind = static_cast<int>(rand_next(state) % 8);
    try {
      if (kind < 4) {
        int xe = dm.edge_label(dm.dart(g).edge);
        std::vector<int> cands;
        for (int t : tri_ids)
          for (int e : X.triangle(t).edges)
            if (e == xe) cands.push_back(t);
        if (cands.empty()) continue;
        dm.glue_on_boundary(g, cands[rand_next(state) % cands.size()]);
      } else if (kind < 6) {
        int g2 = dm.next_in_face(g);
        int e1 = dm.edge_label(dm.dart(g).edge);
        int e2 = dm.edge_label(dm.dart(g2).edge);
        for (int t : tri_ids) {
          bool h1 = false, h2 = false;
          for (int e : X.triangle(t).edges) {
            h1 = h1 || e == e1;
            h2 = h2 || e == e2;
          }
          if (!h1 || !h2) continue;
          try {
            dm.fill_corner(g, t);
            break;
          } catch (const systolic::NotApplicable&) {
          }
        }
      } else {
        // mirrored gluing: reuse the face on the inner side of the edge
        int inner = dm.dart(dm.dart(g).twin).face;
        if (inner == -1) continue;
        dm.glue_on_boundary(g, dm.face_label(inner));
      }
    } catch (const systolic::NotApplicable&) {
    }
  }
  dm.validate();
  return dm;
}

}  // namespace fixtures
