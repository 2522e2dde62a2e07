#include <doctest.h>

#include <cmath>
#include <sstream>

#include "support/fixtures.hpp"
#include "systolic/angled_complex.hpp"

using namespace systolic;

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

AngledComplex single_triangle(Rational corner) {
  AngledComplex X;
  for (int v = 0; v < 3; ++v) X.add_vertex(v);
  X.add_edge(0, 0, 1);
  X.add_edge(1, 1, 2);
  X.add_edge(2, 0, 2);
  X.add_triangle(0, 0, 1, 2);
  for (int v = 0; v < 3; ++v) X.set_corner_weight(0, v, Angle::exact(corner));
  return X;
}

AngledComplex tetrahedron_complex(bool all_faces, bool record) {
  AngledComplex X;
  for (int v = 0; v < 4; ++v) X.add_vertex(v);
  int eid = 0;
  std::map<std::pair<int, int>, int> e;
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) {
      e[{u, v}] = eid;
      X.add_edge(eid++, u, v);
    }
  auto tri = [&](int id, int a, int b, int c) {
    X.add_triangle(id, e[{a, b}], e[{b, c}], e[{a, c}]);
    X.set_corner_weight(id, a, Angle::exact(1, 4));
    X.set_corner_weight(id, b, Angle::exact(1, 4));
    X.set_corner_weight(id, c, Angle::exact(1, 4));
  };
  tri(0, 0, 1, 2);
  tri(1, 0, 1, 3);
  tri(2, 0, 2, 3);
  if (all_faces) tri(3, 1, 2, 3);
  if (record) X.add_tetrahedron({0, 1, 2, 3});
  return X;
}

}  // namespace

TEST_CASE("validate_complex") {
  auto ok = single_triangle(Rational(1, 3));
  CHECK(validate_complex(ok).valid);

  AngledComplex loop;
  loop.add_vertex(0);
  loop.add_vertex(1);
  loop.add_edge(0, 0, 0);
  auto rep = validate_complex(loop);
  CHECK_FALSE(rep.valid);
  CHECK(rep.violations.front().rule == "no-loops");

  // two triangles sharing two edges
  AngledComplex shared;
  for (int v = 0; v < 3; ++v) shared.add_vertex(v);
  shared.add_edge(0, 0, 1);
  shared.add_edge(1, 1, 2);
  shared.add_edge(2, 0, 2);
  shared.add_edge(3, 0, 2);  // parallel to edge 2
  shared.add_triangle(0, 0, 1, 2);
  shared.add_triangle(1, 0, 1, 3);
  for (int t : {0, 1})
    for (int v = 0; v < 3; ++v) shared.set_corner_weight(t, v, Angle::exact(0));
  auto rep2 = validate_complex(shared);
  CHECK_FALSE(rep2.valid);
  bool found = false;
  for (const auto& v : rep2.violations)
    found = found || v.rule == "two-simplices-share-two-edges";
  CHECK(found);
}

TEST_CASE("check_3flag") {
  CHECK(check_3flag(tetrahedron_complex(true, true)).holds);

  auto missing = check_3flag(tetrahedron_complex(false, false));
  CHECK_FALSE(missing.holds);
  REQUIRE(missing.missing.size() == 1);
  CHECK(missing.missing.front() == std::array<int, 4>{0, 1, 2, 3});

  // all four faces but no solid record
  CHECK_FALSE(check_3flag(tetrahedron_complex(true, false)).holds);

  // two triangles sharing one edge force nothing
  auto dt = fixtures::double_tetrahedron();
  CHECK(check_3flag(dt).holds);
}

TEST_CASE("weight_validate") {
  auto ok = single_triangle(Rational(1, 4));
  CHECK(weight_validate(ok).all_ok());

  auto flat = single_triangle(Rational(0));
  flat.set_corner_weight(0, 0, Angle::exact(1, 2));
  flat.set_corner_weight(0, 1, Angle::exact(1, 2));
  auto rep = weight_validate(flat);
  CHECK_FALSE(rep.sums_below_pi);

  // link triple violating the weak triangle inequality: corners at the hub
  // of three pairwise adjacent link vertices weigh 1/2, 1/8, 1/8
  auto tet = tetrahedron_complex(true, true);
  tet.set_corner_weight(0, 0, Angle::exact(1, 8));  // corner of {0,1,2} at 0
  tet.set_corner_weight(1, 0, Angle::exact(1, 8));  // corner of {0,1,3} at 0
  tet.set_corner_weight(2, 0, Angle::exact(1, 2));  // corner of {0,2,3} at 0
  auto rep2 = weight_validate(tet);
  CHECK_FALSE(rep2.triangle_inequality);
}

TEST_CASE("link shapes") {
  auto w4 = fixtures::wheel(4, Rational(1, 2));
  LinkGraph apex = link(w4, 0);
  CHECK(apex.vertex_count() == 4);
  CHECK(apex.edges.size() == 4);

  auto one = single_triangle(Rational(1, 3));
  LinkGraph l0 = link(one, 0);
  CHECK(l0.vertex_count() == 2);
  CHECK(l0.edges.size() == 1);

  // two triangles sharing an edge: the link of a shared endpoint is a path
  auto dt = fixtures::double_tetrahedron();
  LinkGraph lb = link(dt, 3);  // B lies in 3 faces
  CHECK(lb.vertex_count() == 3);
  CHECK(lb.edges.size() == 3);

  CHECK_THROWS_AS(link(one, 99), UnknownVertex);
}

TEST_CASE("two_full_cycles") {
  auto w4 = fixtures::wheel(4, Rational(1, 2));
  auto c4 = two_full_cycles(link(w4, 0), 12);
  REQUIRE(c4.size() == 1);
  CHECK(c4.front().vertices.size() == 4);
  CHECK(c4.front().angular_length.pi_coeff() == Rational(2));

  auto w6 = fixtures::wheel(6, Rational(1, 3));
  auto c6 = two_full_cycles(link(w6, 0), 12);
  REQUIRE(c6.size() == 1);
  CHECK(c6.front().vertices.size() == 6);

  // 4-cycle with a chord: nothing 2-full
  auto dt = fixtures::double_tetrahedron();
  CHECK(two_full_cycles(link(dt, 0), 12).empty());
}

TEST_CASE("is_locally_2pi_large") {
  auto w4 = fixtures::wheel(4, Rational(1, 2));
  CHECK(is_locally_2pi_large(w4, 12).verdict == LinkVerdict::PASS_UP_TO_BOUND);

  auto bad = fixtures::wheel(4, Rational(1, 2));
  bad.set_corner_weight(0, 0, Angle::exact(1, 4));
  auto rep = is_locally_2pi_large(bad, 12);
  CHECK(rep.verdict == LinkVerdict::FAIL);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations.front().cycle.angular_length.pi_coeff() == Rational(7, 4));

  // subdivided cell, r = 15: the hub link is a 15-cycle of weight 2pi/15
  auto cell = fixtures::wheel(15, Rational(2, 15));
  CHECK(is_locally_2pi_large(cell, 16).verdict == LinkVerdict::PASS_UP_TO_BOUND);
  auto cycles = two_full_cycles(link(cell, 0), 16);
  REQUIRE(cycles.size() == 1);
  CHECK(cycles.front().angular_length.pi_coeff() == Rational(2));
}

TEST_CASE("link_disk_triangulation") {
  auto dt = fixtures::double_tetrahedron();
  LinkGraph lp = link(dt, 0);
  // 4-cycle (PB, PQ, PC, PA) with chord (PQ, PA)
  SimpleCycle cyc;
  cyc.vertices = {lp.position_of(2), lp.position_of(0), lp.position_of(3),
                  lp.position_of(1)};
  auto tri = link_disk_triangulation(lp, cyc);
  REQUIRE(tri.has_value());
  CHECK(tri->chords.size() == 1);
  CHECK(tri->faces.size() == 2);

  // length 3: trivially a triangle, no chords
  SimpleCycle tri3;
  tri3.vertices = {0, 1, 2};
  auto t3 = link_disk_triangulation(link(fixtures::wheel(3, Rational(1, 4)), 0), tri3);
  REQUIRE(t3.has_value());
  CHECK(t3->chords.empty());

  // chordless 5-cycle has no triangulation
  auto w5 = fixtures::wheel(5, Rational(2, 5));
  LinkGraph l5 = link(w5, 0);
  auto cycles = two_full_cycles(l5, 12);
  REQUIRE(cycles.size() == 1);
  CHECK_FALSE(link_disk_triangulation(l5, cycles.front()).has_value());
}

TEST_CASE("curvatures") {
  auto one = single_triangle(Rational(1, 3));
  CHECK(vertex_curvature(one, 0).pi_coeff() == Rational(2, 3));
  CHECK(face_curvature(one, 0).pi_coeff() == Rational(0));

  auto w6 = fixtures::wheel(6, Rational(1, 3));
  CHECK(vertex_curvature(w6, 0).pi_coeff() == Rational(0));
  CHECK(vertex_curvature(w6, 1).pi_coeff() == Rational(1));  // two zero corners

  auto cell = fixtures::wheel(15, Rational(2, 15));
  CHECK(face_curvature(cell, 0).pi_coeff() == Rational(2, 15) - Rational(1));

  auto zero = single_triangle(Rational(0));
  CHECK(face_curvature(zero, 0).pi_coeff() == Rational(-1));
}

TEST_CASE("gauss_bonnet") {
  auto one = single_triangle(Rational(1, 3));
  auto gb = gauss_bonnet_check(one);
  CHECK(gb.equal);
  CHECK(gb.lhs.pi_coeff() == Rational(2));

  auto cell = fixtures::wheel(15, Rational(2, 15));
  auto gb2 = gauss_bonnet_check(cell);
  CHECK(gb2.equal);
  CHECK(gb2.lhs.pi_coeff() == Rational(2));

  std::uint64_t state = 31337;
  for (int i = 0; i < 100; ++i) {
    auto X = fixtures::random_disk_complex(state);
    CHECK(gauss_bonnet_check(X).equal);
  }
}

TEST_CASE("euclidean_angles") {
  auto eq = euclidean_angles(1, 1, 1);
  for (double a : eq) CHECK(std::fabs(a - kPi / 3) < 1e-12);
  CHECK(std::fabs(eq[0] + eq[1] + eq[2] - kPi) < 1e-12);

  auto right = euclidean_angles(3, 4, 5);
  CHECK(std::fabs(right[0] - 0.6435011087932844) < 1e-9);
  CHECK(std::fabs(right[1] - 0.9272952180016122) < 1e-9);
  CHECK(std::fabs(right[2] - kPi / 2) < 1e-9);

  auto swapped = euclidean_angles(4, 3, 5);
  CHECK(swapped[0] == right[1]);
  CHECK(swapped[1] == right[0]);

  CHECK_THROWS_AS(euclidean_angles(1, 1, 2), DegenerateTriangle);
  CHECK_THROWS_AS(euclidean_angles(0, 1, 1), DegenerateTriangle);
}

TEST_CASE("metric_to_weights on the degree-7 patch") {
  for (int rings : {1, 2}) {
    auto X = fixtures::degree7_patch(rings, false);
    auto res = metric_to_weights(X, 12);
    CHECK(std::fabs(res.delta - kPi / 42) < 1e-12);
    CHECK(weight_validate(res.complex).all_ok());
    CHECK(is_locally_2pi_large(res.complex, 12).verdict ==
          LinkVerdict::PASS_UP_TO_BOUND);
    // triangle sums pi - 3 delta
    for (const auto& t : res.complex.triangles()) {
      double sum = 0;
      for (int v : t.vertices) sum += res.complex.corner_weight(t.id, v)->to_radians();
      CHECK(std::fabs(sum - (kPi - 3 * res.delta)) < 1e-9);
    }
  }
}

TEST_CASE("metric_to_weights rejections") {
  CHECK_THROWS_AS(metric_to_weights(fixtures::flat_pyramid_metric(), 12),
                  NotStrictlyLarge);
  CHECK_THROWS_AS(metric_to_weights(fixtures::flat_triple_metric(), 12), NoSlack);
}

TEST_CASE("complex fixture round trip") {
  auto X = fixtures::double_tetrahedron();
  std::string text = serialize_complex(X);
  std::istringstream in(text);
  AngledComplex Y = parse_complex(in);
  CHECK(Y.vertices() == X.vertices());
  CHECK(Y.edges().size() == X.edges().size());
  CHECK(Y.triangles().size() == X.triangles().size());
  CHECK(Y.tetrahedra() == X.tetrahedra());
  CHECK(serialize_complex(Y) == text);
  CHECK(validate_complex(Y).valid);
}

TEST_CASE("two_full_cycles output is invariant under relabeling") {
  auto w6 = fixtures::wheel(6, Rational(1, 3));
  LinkGraph L = link(w6, 0);
  // permuted copy: relabel link positions by a rotation
  LinkGraph P = L;
  const int n = L.vertex_count();
  auto perm = [n](int a) { return (a + 2) % n; };
  for (auto& e : P.edges) {
    e.a = perm(e.a);
    e.b = perm(e.b);
  }
  auto ca = two_full_cycles(L, 12);
  auto cb = two_full_cycles(P, 12);
  REQUIRE(ca.size() == cb.size());
  for (std::size_t i = 0; i < ca.size(); ++i)
    CHECK(ca[i].angular_length == cb[i].angular_length);
}
