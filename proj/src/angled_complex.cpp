#include "systolic/angled_complex.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "systolic/errors.hpp"

namespace systolic {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kEps = 1e-9;
}  // namespace

void AngledComplex::add_vertex(int id) {
  if (has_vertex(id)) throw InvalidComplex("duplicate vertex id " + std::to_string(id));
  vertex_ids_.push_back(id);
  std::sort(vertex_ids_.begin(), vertex_ids_.end());
}

void AngledComplex::add_edge(int id, int u, int v) {
  if (edge_pos_.count(id)) throw InvalidComplex("duplicate edge id " + std::to_string(id));
  if (!has_vertex(u) || !has_vertex(v))
    throw InvalidComplex("edge " + std::to_string(id) + " uses unknown vertex");
  edge_pos_[id] = static_cast<int>(edges_.size());
  edges_.push_back(Edge{id, u, v});
}

void AngledComplex::add_triangle(int id, int e1, int e2, int e3) {
  if (triangle_pos_.count(id))
    throw InvalidComplex("duplicate triangle id " + std::to_string(id));
  for (int e : {e1, e2, e3})
    if (!edge_pos_.count(e))
      throw InvalidComplex("triangle " + std::to_string(id) + " uses unknown edge");
  Triangle t;
  t.id = id;
  t.edges = {e1, e2, e3};
  std::map<int, int> deg;
  for (int e : t.edges) {
    deg[edge(e).u]++;
    deg[edge(e).v]++;
  }
  t.well_formed = deg.size() == 3 && e1 != e2 && e1 != e3 && e2 != e3;
  if (t.well_formed)
    for (auto& [v, d] : deg)
      if (d != 2) t.well_formed = false;
  if (t.well_formed)
    for (auto& [v, d] : deg) t.vertices.push_back(v);
  triangle_pos_[id] = static_cast<int>(triangles_.size());
  triangles_.push_back(std::move(t));
}

void AngledComplex::add_tetrahedron(std::array<int, 4> triangle_ids) {
  for (int t : triangle_ids)
    if (!triangle_pos_.count(t))
      throw InvalidComplex("tetrahedron uses unknown triangle " + std::to_string(t));
  std::sort(triangle_ids.begin(), triangle_ids.end());
  tetrahedra_.push_back(triangle_ids);
}

void AngledComplex::set_corner_weight(int triangle_id, int vertex_id, Angle w) {
  const Triangle& t = triangle(triangle_id);
  if (!t.well_formed ||
      std::find(t.vertices.begin(), t.vertices.end(), vertex_id) == t.vertices.end())
    throw InvalidComplex("corner (" + std::to_string(triangle_id) + ", " +
                         std::to_string(vertex_id) + ") does not exist");
  corner_weights_.insert_or_assign({triangle_id, vertex_id}, w);
}

void AngledComplex::set_edge_length(int edge_id, double length) {
  if (!edge_pos_.count(edge_id))
    throw InvalidComplex("unknown edge " + std::to_string(edge_id));
  if (!(length > 0.0)) throw InvalidComplex("edge length must be positive");
  edge_lengths_[edge_id] = length;
}

bool AngledComplex::has_vertex(int id) const {
  return std::binary_search(vertex_ids_.begin(), vertex_ids_.end(), id);
}

const AngledComplex::Edge& AngledComplex::edge(int id) const {
  auto it = edge_pos_.find(id);
  if (it == edge_pos_.end()) throw InvalidComplex("unknown edge " + std::to_string(id));
  return edges_[it->second];
}

const AngledComplex::Triangle& AngledComplex::triangle(int id) const {
  auto it = triangle_pos_.find(id);
  if (it == triangle_pos_.end()) throw UnknownFace(id);
  return triangles_[it->second];
}

bool AngledComplex::has_edge(int id) const { return edge_pos_.count(id) > 0; }
bool AngledComplex::has_triangle(int id) const { return triangle_pos_.count(id) > 0; }

const Angle* AngledComplex::corner_weight(int triangle_id, int vertex_id) const {
  auto it = corner_weights_.find({triangle_id, vertex_id});
  return it == corner_weights_.end() ? nullptr : &it->second;
}

const double* AngledComplex::edge_length(int edge_id) const {
  auto it = edge_lengths_.find(edge_id);
  return it == edge_lengths_.end() ? nullptr : &it->second;
}

int AngledComplex::find_triangle_with_edges(std::array<int, 3> edge_ids) const {
  std::sort(edge_ids.begin(), edge_ids.end());
  for (const Triangle& t : triangles_) {
    std::array<int, 3> e = t.edges;
    std::sort(e.begin(), e.end());
    if (e == edge_ids) return t.id;
  }
  return -1;
}

std::vector<int> AngledComplex::edges_at(int vertex_id) const {
  std::vector<int> out;
  for (const Edge& e : edges_)
    if (e.u == vertex_id || e.v == vertex_id) out.push_back(e.id);
  return out;
}

std::vector<int> AngledComplex::triangles_at(int vertex_id) const {
  std::vector<int> out;
  for (const Triangle& t : triangles_)
    if (t.well_formed &&
        std::find(t.vertices.begin(), t.vertices.end(), vertex_id) != t.vertices.end())
      out.push_back(t.id);
  return out;
}

std::array<int, 2> AngledComplex::corner_edges(int triangle_id, int vertex_id) const {
  const Triangle& t = triangle(triangle_id);
  if (!t.well_formed) throw InvalidComplex("triangle is not well formed");
  std::array<int, 2> out{-1, -1};
  int n = 0;
  for (int e : t.edges) {
    const Edge& ed = edge(e);
    if (ed.u == vertex_id || ed.v == vertex_id) {
      if (n == 2) throw InvalidComplex("corner has more than two edges");
      out[n++] = e;
    }
  }
  if (n != 2)
    throw InvalidComplex("vertex " + std::to_string(vertex_id) + " not in triangle " +
                         std::to_string(triangle_id));
  return out;
}

int AngledComplex::opposite_edge(int triangle_id, int vertex_id) const {
  const Triangle& t = triangle(triangle_id);
  if (!t.well_formed) throw InvalidComplex("triangle is not well formed");
  for (int e : t.edges) {
    const Edge& ed = edge(e);
    if (ed.u != vertex_id && ed.v != vertex_id) return e;
  }
  throw InvalidComplex("no opposite edge");
}

ValidationReport validate_complex(const AngledComplex& X) {
  ValidationReport rep;
  auto flag = [&](std::string rule, std::vector<int> ids, std::string detail) {
    rep.valid = false;
    rep.violations.push_back({std::move(rule), std::move(ids), std::move(detail)});
  };

  for (const auto& e : X.edges())
    if (e.u == e.v) flag("no-loops", {e.id}, "edge endpoints coincide");

  for (const auto& t : X.triangles()) {
    if (!t.well_formed) {
      flag("triangle-closed", {t.id}, "edges do not form a closed triple on 3 vertices");
      continue;
    }
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        const auto& a = X.edge(t.edges[i]);
        const auto& b = X.edge(t.edges[j]);
        if (std::minmax(a.u, a.v) == std::minmax(b.u, b.v))
          flag("no-parallel-edges-in-triangle", {t.id, a.id, b.id},
               "triangle uses two parallel edges");
      }
  }

  const auto& ts = X.triangles();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (std::size_t j = i + 1; j < ts.size(); ++j) {
      int shared = 0;
      for (int a : ts[i].edges)
        for (int b : ts[j].edges)
          if (a == b) ++shared;
      if (shared >= 2)
        flag("two-simplices-share-two-edges", {ts[i].id, ts[j].id},
             "triangles share " + std::to_string(shared) + " edges");
    }
  }

  for (const auto& t : X.triangles()) {
    if (!t.well_formed) continue;
    for (int v : t.vertices) {
      const Angle* w = X.corner_weight(t.id, v);
      if (!w)
        flag("corner-weight-missing", {t.id, v}, "no weight assigned");
      else if (w->negative())
        flag("corner-weight-negative", {t.id, v}, w->str());
    }
  }
  return rep;
}

ThreeFlagReport check_3flag(const AngledComplex& X) {
  ThreeFlagReport rep;
  const auto& ts = X.triangles();

  std::set<std::array<int, 4>> tet_records(X.tetrahedra().begin(), X.tetrahedra().end());
  std::set<std::array<int, 4>> reported;

  // Pairs of triangles sharing one edge span a potential tetrahedron wedge;
  // a compatible third face forces the whole tetrahedron.
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (!ts[i].well_formed) continue;
    for (std::size_t j = i + 1; j < ts.size(); ++j) {
      if (!ts[j].well_formed) continue;
      std::vector<int> shared;
      for (int a : ts[i].edges)
        for (int b : ts[j].edges)
          if (a == b) shared.push_back(a);
      if (shared.size() != 1) continue;
      const auto& e = X.edge(shared[0]);
      // apex vertices opposite the shared edge
      int c = -1, d = -1;
      for (int v : ts[i].vertices)
        if (v != e.u && v != e.v) c = v;
      for (int v : ts[j].vertices)
        if (v != e.u && v != e.v) d = v;
      if (c == d) continue;
      // Remaining faces would use edges (c,d) together with the i/j side
      // edges at u and v respectively.
      int eu_i = -1, ev_i = -1, eu_j = -1, ev_j = -1;
      for (int eid : ts[i].edges) {
        if (eid == shared[0]) continue;
        const auto& ed = X.edge(eid);
        if (ed.u == e.u || ed.v == e.u) eu_i = eid;
        if (ed.u == e.v || ed.v == e.v) ev_i = eid;
      }
      for (int eid : ts[j].edges) {
        if (eid == shared[0]) continue;
        const auto& ed = X.edge(eid);
        if (ed.u == e.u || ed.v == e.u) eu_j = eid;
        if (ed.u == e.v || ed.v == e.v) ev_j = eid;
      }
      // Candidate third faces: {eu_i, eu_j, cd} at u and {ev_i, ev_j, cd} at v.
      for (const auto& cd : X.edges()) {
        if (std::minmax(cd.u, cd.v) != std::minmax(c, d)) continue;
        int face_u = X.find_triangle_with_edges({eu_i, eu_j, cd.id});
        int face_v = X.find_triangle_with_edges({ev_i, ev_j, cd.id});
        int present = 2 + (face_u >= 0 ? 1 : 0) + (face_v >= 0 ? 1 : 0);
        if (present < 3) continue;
        std::array<int, 4> span{e.u, e.v, c, d};
        std::sort(span.begin(), span.end());
        bool complete = face_u >= 0 && face_v >= 0;
        bool recorded = false;
        if (complete) {
          std::array<int, 4> key{ts[i].id, ts[j].id, face_u, face_v};
          std::sort(key.begin(), key.end());
          recorded = tet_records.count(key) > 0;
        }
        if (!(complete && recorded) && reported.insert(span).second) {
          rep.holds = false;
          rep.missing.push_back(span);
        }
      }
    }
  }
  std::sort(rep.missing.begin(), rep.missing.end());
  return rep;
}

WeightReport weight_validate(const AngledComplex& X) {
  WeightReport rep;
  auto flag = [&](std::string rule, std::vector<int> ids, std::string detail) {
    rep.violations.push_back({std::move(rule), std::move(ids), std::move(detail)});
  };

  std::set<std::string> values;
  for (const auto& t : X.triangles()) {
    if (!t.well_formed) continue;
    Angle sum = Angle::exact(0);
    bool have_all = true;
    bool mixed = false;
    for (std::size_t i = 0; i < t.vertices.size(); ++i) {
      const Angle* w = X.corner_weight(t.id, t.vertices[i]);
      if (!w) {
        have_all = false;
        continue;
      }
      values.insert(w->str());
      if (w->negative()) {
        rep.nonnegative = false;
        flag("nonnegative", {t.id, t.vertices[i]}, w->str());
      }
      if (i == 0)
        sum = *w;
      else if (w->is_exact() != sum.is_exact())
        mixed = true;
      else
        sum += *w;
    }
    if (have_all && !mixed && sum.compare_pi(Rational(1)) >= 0) {
      rep.sums_below_pi = false;
      flag("triangle-sum-below-pi", {t.id}, sum.str());
    }
  }
  // Finite image is automatic on a finite complex; reported for completeness.
  rep.finite_value_set = values.size() < std::numeric_limits<int>::max();

  for (int v : X.vertices()) {
    LinkGraph L = link(X, v);
    const int n = L.vertex_count();
    std::map<std::pair<int, int>, std::vector<Angle>> by_pair;
    for (const auto& e : L.edges)
      by_pair[std::minmax(e.a, e.b)].push_back(e.weight);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c) {
          auto ab = by_pair.find({a, b});
          auto bc = by_pair.find({b, c});
          auto ac = by_pair.find({a, c});
          if (ab == by_pair.end() || bc == by_pair.end() || ac == by_pair.end())
            continue;
          for (const Angle& wab : ab->second)
            for (const Angle& wbc : bc->second)
              for (const Angle& wac : ac->second) {
                if (wab.is_exact() != wbc.is_exact() || wab.is_exact() != wac.is_exact())
                  continue;
                struct Role {
                  const Angle *lhs, *r1, *r2;
                } roles[3] = {{&wac, &wab, &wbc}, {&wab, &wac, &wbc}, {&wbc, &wab, &wac}};
                for (const auto& role : roles) {
                  if (*role.lhs > *role.r1 + *role.r2) {
                    rep.triangle_inequality = false;
                    flag("link-triangle-inequality",
                         {v, L.vertex_ids[a], L.vertex_ids[b], L.vertex_ids[c]},
                         role.lhs->str() + " > " + role.r1->str() + " + " +
                             role.r2->str());
                  }
                }
              }
        }
  }
  return rep;
}

LinkGraph link(const AngledComplex& X, int vertex_id) {
  if (!X.has_vertex(vertex_id)) throw UnknownVertex(vertex_id);
  LinkGraph L;
  L.base_vertex = vertex_id;
  L.vertex_ids = X.edges_at(vertex_id);
  std::sort(L.vertex_ids.begin(), L.vertex_ids.end());
  for (int t : X.triangles_at(vertex_id)) {
    auto ce = X.corner_edges(t, vertex_id);
    LinkEdge le;
    le.a = L.position_of(ce[0]);
    le.b = L.position_of(ce[1]);
    le.source = t;
    const Angle* w = X.corner_weight(t, vertex_id);
    le.weight = w ? *w : Angle::exact(0);
    L.edges.push_back(le);
  }
  std::sort(L.edges.begin(), L.edges.end(), [](const LinkEdge& x, const LinkEdge& y) {
    return x.source < y.source;
  });
  return L;
}

std::string link_verdict_str(LinkVerdict v) {
  switch (v) {
    case LinkVerdict::PASS_UP_TO_BOUND:
      return "PASS_UP_TO_BOUND";
    case LinkVerdict::FAIL:
      return "FAIL";
    case LinkVerdict::INCONCLUSIVE_LOCAL:
      return "INCONCLUSIVE_LOCAL";
  }
  return "?";
}

TwoPiLargeReport is_locally_2pi_large(const AngledComplex& X, int max_len,
                                      bool strict_neighbours) {
  TwoPiLargeReport rep;
  rep.bound = max_len;
  rep.exhaustive = true;
  for (int v : X.vertices()) {
    LinkGraph L = link(X, v);
    if (L.vertex_count() > max_len) rep.exhaustive = false;
    for (auto& c : two_full_cycles(L, max_len, strict_neighbours)) {
      if (c.angular_length.compare_pi(Rational(2)) < 0) {
        rep.verdict = LinkVerdict::FAIL;
        rep.violations.push_back({v, std::move(c)});
      }
    }
  }
  return rep;
}

namespace {

// chi of the link graph: incident edges minus corners.
int link_euler_characteristic(const AngledComplex& X, int vertex_id) {
  int verts = static_cast<int>(X.edges_at(vertex_id).size());
  int edges = static_cast<int>(X.triangles_at(vertex_id).size());
  return verts - edges;
}

}  // namespace

Angle vertex_curvature(const AngledComplex& X, int vertex_id) {
  if (!X.has_vertex(vertex_id)) throw UnknownVertex(vertex_id);
  int chi = link_euler_characteristic(X, vertex_id);
  bool exact = true;
  for (int t : X.triangles_at(vertex_id)) {
    const Angle* w = X.corner_weight(t, vertex_id);
    if (w && !w->is_exact()) exact = false;
  }
  if (exact) {
    Angle out = Angle::exact(Rational(2 - chi));
    for (int t : X.triangles_at(vertex_id)) {
      const Angle* w = X.corner_weight(t, vertex_id);
      out = out - (w ? *w : Angle::exact(0));
    }
    return out;
  }
  double out = (2.0 - chi) * kPi;
  for (int t : X.triangles_at(vertex_id)) {
    const Angle* w = X.corner_weight(t, vertex_id);
    if (w) out -= w->to_radians();
  }
  return Angle::radians(out);
}

Angle face_curvature(const AngledComplex& X, int triangle_id) {
  const auto& t = X.triangle(triangle_id);
  if (!t.well_formed) throw InvalidComplex("triangle is not well formed");
  bool exact = true;
  for (int v : t.vertices) {
    const Angle* w = X.corner_weight(triangle_id, v);
    if (w && !w->is_exact()) exact = false;
  }
  if (exact) {
    Angle out = Angle::exact(-1);
    for (int v : t.vertices) {
      const Angle* w = X.corner_weight(triangle_id, v);
      out += w ? *w : Angle::exact(0);
    }
    return out;
  }
  double out = -kPi;
  for (int v : t.vertices) {
    const Angle* w = X.corner_weight(triangle_id, v);
    if (w) out += w->to_radians();
  }
  return Angle::radians(out);
}

GaussBonnetResult gauss_bonnet_check(const AngledComplex& X) {
  GaussBonnetResult res;
  bool exact = true;
  for (const auto& [key, w] : X.corner_weights())
    if (!w.is_exact()) exact = false;

  int chi = static_cast<int>(X.vertices().size()) -
            static_cast<int>(X.edges().size()) +
            static_cast<int>(X.triangles().size());
  if (exact) {
    Angle lhs = Angle::exact(0);
    for (const auto& t : X.triangles()) lhs += face_curvature(X, t.id);
    for (int v : X.vertices()) lhs += vertex_curvature(X, v);
    res.lhs = lhs;
    res.rhs = Angle::exact(Rational(2 * chi));
    res.equal = lhs.pi_coeff() == Rational(2 * chi);
  } else {
    double lhs = 0;
    for (const auto& t : X.triangles()) lhs += face_curvature(X, t.id).to_radians();
    for (int v : X.vertices()) lhs += vertex_curvature(X, v).to_radians();
    res.lhs = Angle::radians(lhs);
    res.rhs = Angle::radians(2 * chi * kPi);
    res.equal = std::fabs(lhs - 2 * chi * kPi) <= kEps;
  }
  return res;
}

std::array<double, 3> euclidean_angles(double a, double b, double c) {
  if (!(a > 0) || !(b > 0) || !(c > 0)) throw DegenerateTriangle();
  if (!(a + b > c) || !(b + c > a) || !(a + c > b)) throw DegenerateTriangle();
  auto ang = [](double opp, double s1, double s2) {
    double cosv = (s1 * s1 + s2 * s2 - opp * opp) / (2.0 * s1 * s2);
    cosv = std::clamp(cosv, -1.0, 1.0);
    return std::acos(cosv);
  };
  return {ang(a, b, c), ang(b, a, c), ang(c, a, b)};
}

MetricResult metric_to_weights(const AngledComplex& X, int max_len,
                               bool strict_neighbours) {
  // Corner angles from the Euclidean shapes.
  std::map<std::pair<int, int>, double> angles;
  bool any = false;
  for (const auto& t : X.triangles()) {
    if (!t.well_formed) throw InvalidComplex("triangle is not well formed");
    std::array<double, 3> sides{};
    for (int i = 0; i < 3; ++i) {
      const double* len = X.edge_length(X.opposite_edge(t.id, t.vertices[i]));
      if (!len)
        throw InvalidComplex("edge length missing for triangle " + std::to_string(t.id));
      sides[i] = *len;
    }
    auto a = euclidean_angles(sides[0], sides[1], sides[2]);
    for (int i = 0; i < 3; ++i) angles[{t.id, t.vertices[i]}] = a[i];
    any = true;
  }
  if (!any) throw InvalidComplex("complex has no triangles");

  AngledComplex raw = X;
  for (const auto& [key, val] : angles)
    raw.set_corner_weight(key.first, key.second, Angle::radians(val));

  double min_cycle_term = std::numeric_limits<double>::infinity();
  for (int v : raw.vertices()) {
    LinkGraph L = link(raw, v);
    for (const auto& c : two_full_cycles(L, max_len, strict_neighbours)) {
      double len = c.angular_length.to_radians();
      if (len <= 2 * kPi + kEps) {
        std::ostringstream os;
        os << "vertex " << v << ", cycle length " << len;
        throw NotStrictlyLarge(os.str());
      }
      min_cycle_term =
          std::min(min_cycle_term, (len - 2 * kPi) / static_cast<double>(c.vertices.size()));
    }
  }

  double min_slack = std::numeric_limits<double>::infinity();
  for (int v : raw.vertices()) {
    LinkGraph L = link(raw, v);
    const int n = L.vertex_count();
    std::vector<std::vector<std::vector<double>>> w(
        n, std::vector<std::vector<double>>(n));
    for (const auto& e : L.edges) {
      w[e.a][e.b].push_back(e.weight.to_radians());
      w[e.b][e.a].push_back(e.weight.to_radians());
    }
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c) {
          if (w[a][b].empty() || w[b][c].empty() || w[a][c].empty()) continue;
          for (double ab : w[a][b])
            for (double bc : w[b][c])
              for (double ac : w[a][c])
                for (double slack : {ab + bc - ac, ab + ac - bc, bc + ac - ab}) {
                  if (slack <= kEps) {
                    std::ostringstream os;
                    os << "vertex " << v << " link triple (" << L.vertex_ids[a] << ","
                       << L.vertex_ids[b] << "," << L.vertex_ids[c] << ")";
                    throw NoSlack(os.str());
                  }
                  min_slack = std::min(min_slack, slack);
                }
        }
  }

  double min_angle = std::numeric_limits<double>::infinity();
  for (const auto& [key, val] : angles) min_angle = std::min(min_angle, val);

  double delta = min_angle;
  if (std::isfinite(min_cycle_term)) delta = std::min(delta, min_cycle_term);
  if (std::isfinite(min_slack)) delta = std::min(delta, min_slack);
  delta /= 2.0;

  MetricResult out;
  out.delta = delta;
  out.complex = X;
  for (const auto& [key, val] : angles)
    out.complex.set_corner_weight(key.first, key.second, Angle::radians(val - delta));
  return out;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
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

AngledComplex parse_complex(std::istream& in) {
  AngledComplex X;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tok = tokenize(line);
    if (tok.empty()) continue;
    try {
      if (tok[0] == "v" && tok.size() == 2) {
        X.add_vertex(std::stoi(tok[1]));
      } else if (tok[0] == "e" && tok.size() == 4) {
        X.add_edge(std::stoi(tok[1]), std::stoi(tok[2]), std::stoi(tok[3]));
      } else if (tok[0] == "t" && tok.size() == 5) {
        X.add_triangle(std::stoi(tok[1]), std::stoi(tok[2]), std::stoi(tok[3]),
                       std::stoi(tok[4]));
      } else if (tok[0] == "tet" && tok.size() == 5) {
        X.add_tetrahedron({std::stoi(tok[1]), std::stoi(tok[2]), std::stoi(tok[3]),
                           std::stoi(tok[4])});
      } else if (tok[0] == "w" && tok.size() == 4) {
        X.set_corner_weight(std::stoi(tok[1]), std::stoi(tok[2]),
                            Angle::exact(parse_rational(tok[3])));
      } else if (tok[0] == "len" && tok.size() == 3) {
        X.set_edge_length(std::stoi(tok[1]), std::stod(tok[2]));
      } else {
        throw ParseError("unrecognized fixture line: " + line, lineno, 1);
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(std::string(e.what()), lineno, 1);
    }
  }
  return X;
}

AngledComplex parse_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_complex(in);
}

std::string serialize_complex(const AngledComplex& X) {
  std::ostringstream os;
  for (int v : X.vertices()) os << "v " << v << "\n";
  for (const auto& e : X.edges()) os << "e " << e.id << " " << e.u << " " << e.v << "\n";
  for (const auto& t : X.triangles())
    os << "t " << t.id << " " << t.edges[0] << " " << t.edges[1] << " " << t.edges[2]
       << "\n";
  for (const auto& tet : X.tetrahedra())
    os << "tet " << tet[0] << " " << tet[1] << " " << tet[2] << " " << tet[3] << "\n";
  for (const auto& [key, w] : X.corner_weights()) {
    if (!w.is_exact()) continue;
    const Rational& q = w.pi_coeff();
    os << "w " << key.first << " " << key.second << " " << q.numerator() << "/"
       << q.denominator() << "\n";
  }
  for (const auto& e : X.edges())
    if (const double* len = X.edge_length(e.id)) {
      std::ostringstream v;
      v.precision(17);
      v << *len;
      os << "len " << e.id << " " << v.str() << "\n";
    }
  return os.str();
}

}  // namespace systolic
