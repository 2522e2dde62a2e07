#include <doctest.h>

#include <set>

#include "support/oracles.hpp"
#include "systolic/cli.hpp"
#include "systolic/onerelator.hpp"

using namespace systolic;

namespace {

const Alphabet ab2({"a", "b"});
const Alphabet ab4({"a", "b", "c", "d"});

Word w(const std::string& text, const Alphabet& ab) {
  Word out;
  for (char c : text) {
    bool upper = std::isupper(static_cast<unsigned char>(c));
    std::string name(1, static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    int gen = ab.index_of(name);
    REQUIRE(gen >= 0);
    out.push_back(Letter(gen, upper ? -1 : 1));
  }
  return out;
}

CyclicWord example1() {
  auto [ab, r] = parse_presentation_text("< a, b | a^4 b a b a b^-1 a^-1 b^3 a^-1 b >");
  return cyclic_reduce(r);
}

}  // namespace

TEST_CASE("no overlaps without repeated subwords") {
  CyclicWord R = cyclic_reduce(w("abcd", ab4));
  CHECK(enumerate_overlaps(R).empty());
}

TEST_CASE("overlaps of aabb") {
  CyclicWord R = cyclic_reduce(w("aabb", ab2));
  auto os = enumerate_overlaps(R);
  REQUIRE(os.size() == 4);
  for (const auto& o : os) CHECK(o.length == 1);
  std::set<int> starts;
  for (const auto& o : os) starts.insert(o.start);
  CHECK(starts == std::set<int>{0, 1, 2, 3});
}

TEST_CASE("overlap inputs are guarded") {
  CHECK_THROWS_AS(enumerate_overlaps(cyclic_reduce(w("abab", ab2))), ProperPowerInput);
  CHECK_THROWS_AS(enumerate_overlaps(cyclic_reduce(w("ab", ab2))), ShortRelator);
}

TEST_CASE("overlap subwords are pieces") {
  CyclicWord R = example1();
  auto pieces = enumerate_pieces(R);
  std::set<Word> piece_words;
  for (const auto& p : pieces) piece_words.insert(p.word);
  auto os = enumerate_overlaps(R);
  CHECK_FALSE(os.empty());
  int max_len = 0;
  for (const auto& o : os) {
    max_len = std::max(max_len, o.length);
    Word sub;
    for (int i = 0; i < o.length; ++i) sub.push_back(R.at(o.start + i));
    CHECK(piece_words.count(sub) == 1);
  }
  CHECK(max_len == 3);  // forced by the maximal piece length
}

TEST_CASE("central link of aabb") {
  CyclicWord R = cyclic_reduce(w("aabb", ab2));
  auto link = build_central_link(R);
  CHECK(link.r == 4);
  CHECK(link.graph.vertex_count() == 8);  // 4 type-(i) + 4 type-(ii)
  int kind0 = 0, kind1 = 0, kind2 = 0;
  for (const auto& info : link.edge_info) {
    if (info.kind == 0) ++kind0;
    if (info.kind == 1) ++kind1;
    if (info.kind == 2) ++kind2;
  }
  CHECK(kind0 == 4);
  CHECK(kind1 == 8);  // each length-1 overlap spans two boundary vertices
  CHECK(kind2 == 4);  // pairs meeting at a single vertex
  for (std::size_t i = 0; i < link.graph.edges.size(); ++i) {
    const auto& e = link.graph.edges[i];
    if (link.edge_info[i].kind == 0) CHECK(e.weight.pi_coeff() == Rational(1, 2));
    if (link.edge_info[i].kind == 1) CHECK(e.weight.pi_coeff() == Rational(1, 4));
    if (link.edge_info[i].kind == 2) CHECK(e.weight.pi_coeff() == Rational(1, 2));
  }
}

TEST_CASE("central link of the paper example") {
  CyclicWord R = example1();
  auto link = build_central_link(R);
  CHECK(link.r == 15);
  // type-(i) circle of weight 2pi/15 edges
  Rational circle(0);
  int ring = 0;
  for (std::size_t i = 0; i < link.graph.edges.size(); ++i)
    if (link.edge_info[i].kind == 0) {
      ++ring;
      circle += link.graph.edges[i].weight.pi_coeff();
      CHECK(link.graph.edges[i].weight.pi_coeff() == Rational(2, 15));
    }
  CHECK(ring == 15);
  CHECK(circle == Rational(2));
  // (ii)-(i) weights come from overlap lengths 1..3
  std::set<Rational> weights;
  for (std::size_t i = 0; i < link.graph.edges.size(); ++i)
    if (link.edge_info[i].kind == 1)
      weights.insert(link.graph.edges[i].weight.pi_coeff());
  CHECK(weights ==
        std::set<Rational>{Rational(1, 15), Rational(2, 15), Rational(3, 15)});
  // every (ii)-(ii) edge weight matches (l1 + l2 - 2*l123)/r
  for (std::size_t i = 0; i < link.graph.edges.size(); ++i) {
    if (link.edge_info[i].kind != 2) continue;
    const auto& info = link.edge_info[i];
    const auto& a = link.overlaps[info.o1];
    const auto& b = link.overlaps[info.o2];
    CHECK(link.graph.edges[i].weight.pi_coeff() ==
          Rational(a.length + b.length - 2 * info.inter_len, 15));
  }
}

TEST_CASE("triangle weight records") {
  CyclicWord R = example1();
  auto records = triangle_weights(R);
  int k1 = 0, k2 = 0, k3 = 0;
  for (const auto& rec : records) {
    CHECK(rec.strict_ok);
    for (const auto& c : rec.corners) CHECK(c >= Rational(0));
    if (rec.kind == 1) {
      ++k1;
      CHECK(rec.sum == Rational(2, 15));
    }
    if (rec.kind == 2) ++k2;
    if (rec.kind == 3) {
      ++k3;
      // sum identity (2 l12 + 2 l13 + 2 l23 - 6 l123)/r
      CHECK(rec.sum == rec.corners[0] + rec.corners[1] + rec.corners[2]);
    }
  }
  CHECK(k1 == 15);
  CHECK(k2 == static_cast<int>(enumerate_overlaps(R).size()));
  CHECK(k3 > 0);
}

TEST_CASE("synthetic case-2 identity") {
  // two overlaps of lengths 7 and 8 on r = 15 covering the circle and
  // meeting in single vertices at both ends: (7+8-0 + 8+7-0)/15 = 2
  const int r = 15;
  CentralLink link;
  link.r = r;
  Overlap a, b;
  a.start = 0;
  a.length = 7;
  a.orientation = 1;
  a.shift = 1;
  b.start = 7;
  b.length = 8;
  b.orientation = -1;
  b.shift = 0;
  link.overlaps = {a, b};
  link.graph.base_vertex = -1;
  for (int v = 0; v < r; ++v) link.graph.vertex_ids.push_back(v);
  link.graph.vertex_ids.push_back(r);
  link.graph.vertex_ids.push_back(r + 1);
  for (int v = 0; v < r; ++v) {
    LinkEdge e;
    e.a = v;
    e.b = (v + 1) % r;
    e.weight = Angle::exact(2, r);
    link.graph.edges.push_back(e);
    link.edge_info.push_back({0, -1, -1, 0, 0});
  }
  auto rep = check_central_link(link, 6);
  CHECK(rep.type_i_circle_exact);
  CHECK(rep.case2_checked == 1);
  CHECK(rep.case2_violations.empty());
}

TEST_CASE("check_central_link on the paper example") {
  CyclicWord R = example1();
  auto link = build_central_link(R);
  auto rep = check_central_link(link, 8);
  CHECK(rep.verdict == LinkVerdict::PASS_UP_TO_BOUND);
  CHECK(rep.type_i_circle_exact);
  CHECK(rep.violations.empty());
  CHECK(rep.case2_violations.empty());
  CHECK(rep.case3_violations.empty());
}

TEST_CASE("certify branches") {
  CertifyOptions opts;

  auto torsion = certify(ab2, w("abab", ab2), opts);
  CHECK(torsion.status == Status::HYPERBOLIC);
  CHECK(torsion.branch == Branch::TORSION);

  Alphabet a1({"a"});
  auto short1 = certify(a1, w("a", a1), opts);
  CHECK(short1.status == Status::HYPERBOLIC);
  CHECK(short1.branch == Branch::SHORT_RELATOR);

  auto short2 = certify(ab2, w("ab", ab2), opts);
  CHECK(short2.status == Status::HYPERBOLIC);
  CHECK(short2.branch == Branch::SHORT_RELATOR);

  auto comm = certify(ab2, w("abAB", ab2), opts);
  CHECK(comm.status == Status::UNKNOWN);
  CHECK(comm.branch == Branch::NONE);
  CHECK_FALSE(comm.c14.holds);
  REQUIRE_FALSE(comm.c14.piece_witnesses.empty());
  CHECK(comm.c14.piece_witnesses.front().word.size() == 1);

  auto trivial = certify(ab2, w("aA", ab2), opts);
  CHECK(trivial.status == Status::UNKNOWN);
  CHECK_FALSE(trivial.note.empty());
}

TEST_CASE("certify the paper examples") {
  auto [ab, r1] = parse_presentation_text("< a, b | a^4 b a b a b^-1 a^-1 b^3 a^-1 b >");
  auto cert = certify(ab, r1, {});
  CHECK(cert.status == Status::HYPERBOLIC);
  CHECK(cert.branch == Branch::SMALL_CANCELLATION);
  CHECK(cert.c14.holds);
  CHECK_FALSE(cert.c16.holds);
  CHECK_FALSE(cert.t4.holds);
  CHECK(cert.tprime.holds);

  auto [at, r2] = parse_presentation_text("< a, t | a t^-1 a t a^2 t^-2 a^-1 t^2 >");
  auto cert2 = certify(at, r2, {});
  CHECK(cert2.status == Status::UNKNOWN);
  CHECK(cert2.branch == Branch::NONE);
}

TEST_CASE("certify with complex validation evidence") {
  auto [ab, r1] = parse_presentation_text("< a, b | a^4 b a b a b^-1 a^-1 b^3 a^-1 b >");
  CertifyOptions opts;
  opts.validate_complex = true;
  opts.cycle_bound = 6;
  auto cert = certify(ab, r1, opts);
  REQUIRE(cert.complex_validation.has_value());
  CHECK(cert.complex_validation->triangles_ok);
  CHECK(cert.complex_validation->link_verdict == LinkVerdict::PASS_UP_TO_BOUND);
  CHECK(cert.complex_validation->bound == 6);
}

TEST_CASE("certify is invariant under relabeling, rotation and inversion") {
  auto [ab, r1] = parse_presentation_text("< a, b | a^4 b a b a b^-1 a^-1 b^3 a^-1 b >");
  auto base = certify(ab, r1, {});

  CyclicWord R = cyclic_reduce(r1);
  for (int s = 0; s < R.length(); s += 3) {
    auto rot = certify(ab, R.rotation(s), {});
    CHECK(rot.status == base.status);
    CHECK(rot.branch == base.branch);
  }
  auto inv = certify(ab, invert_word(r1), {});
  CHECK(inv.status == base.status);
  CHECK(inv.branch == base.branch);

  // swap the roles of a and b
  Word swapped;
  for (const Letter& l : r1) swapped.push_back(Letter(1 - l.gen, l.sign));
  auto sw = certify(ab, swapped, {});
  CHECK(sw.status == base.status);
  CHECK(sw.branch == base.branch);
}

TEST_CASE("vertex contacts add zero-weight link edges") {
  CyclicWord R = cyclic_reduce(w("aabb", ab2));
  auto with = enumerate_overlaps(R, true);
  auto without = enumerate_overlaps(R, false);
  CHECK(with.size() > without.size());
  for (const auto& o : with)
    if (o.length == 0) {
      auto link = build_central_link(R, true);
      bool zero_edge = false;
      for (std::size_t i = 0; i < link.graph.edges.size(); ++i)
        if (link.edge_info[i].kind == 1 &&
            link.graph.edges[i].weight.pi_coeff() == Rational(0))
          zero_edge = true;
      CHECK(zero_edge);
      break;
    }
}
