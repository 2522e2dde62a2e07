#include "systolic/onerelator.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace systolic {

namespace {

void require_overlap_input(const CyclicWord& R) {
  if (R.empty()) throw Error("relator must be non-empty");
  if (is_proper_power(R).is_power) throw ProperPowerInput();
  if (R.length() <= 3) throw ShortRelator(R.length());
}

}  // namespace

std::vector<Overlap> enumerate_overlaps(const CyclicWord& R,
                                        bool include_vertex_contacts) {
  require_overlap_input(R);
  const int r = R.length();
  SymmetrizedIndex idx(R);
  CyclicWord Rinv = R.inverse();

  std::vector<Overlap> out;
  std::set<std::pair<int, int>> contact_seen;  // (boundary vertex, partner vertex in R)

  for (int orientation : {+1, -1}) {
    const CyclicWord& E = orientation > 0 ? R : Rinv;
    for (int shift = 0; shift < r; ++shift) {
      if (orientation > 0 && shift == 0) continue;
      std::vector<bool> match(r);
      bool all = true, none = true;
      for (int i = 0; i < r; ++i) {
        match[i] = R.at(i) == E.at(i + shift);
        all = all && match[i];
        none = none && !match[i];
      }
      if (all) continue;  // coincident placement; no maximal run below r

      if (!none) {
        // maximal cyclic runs of matches
        for (int i = 0; i < r; ++i) {
          if (!match[i] || match[(i + r - 1) % r]) continue;
          int len = 0;
          while (match[(i + len) % r]) ++len;
          Overlap o;
          o.start = i;
          o.length = len;
          o.orientation = orientation;
          o.shift = shift;
          o.element_index = idx.element_of_rotation(orientation, i + shift);
          o.offset = 0;
          out.push_back(o);
        }
      }
      if (include_vertex_contacts) {
        for (int i = 0; i < r; ++i) {
          if (match[i] || match[(i + r - 1) % r]) continue;
          int p = (i + shift) % r;
          int jr = orientation > 0 ? p : (r - p) % r;
          if (!contact_seen.insert({i, jr}).second) continue;
          Overlap o;
          o.start = i;
          o.length = 0;
          o.orientation = orientation;
          o.shift = shift;
          o.element_index = idx.element_of_rotation(orientation, i + shift);
          o.offset = 0;
          out.push_back(o);
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Overlap& a, const Overlap& b) {
    if (a.start != b.start) return a.start < b.start;
    if (a.length != b.length) return a.length < b.length;
    if (a.orientation != b.orientation) return a.orientation > b.orientation;
    return a.shift < b.shift;
  });
  return out;
}

namespace {

// Letter the partner places over boundary edge i, read along the boundary
// direction.
Letter partner_letter(const CyclicWord& R, const CyclicWord& Rinv, const Overlap& o,
                      int i) {
  const CyclicWord& E = o.orientation > 0 ? R : Rinv;
  return E.at(i + o.shift);
}

struct Component {
  int start = 0;  // first vertex
  int len = 0;    // edges
};

// Components of the intersection of the two overlap paths on the boundary
// circle: maximal runs of common vertices chained by common edges.
std::vector<Component> path_intersection(int r, const Overlap& a, const Overlap& b) {
  auto vertex_in = [&](const Overlap& o, int v) {
    int d = ((v - o.start) % r + r) % r;
    return d <= o.length;
  };
  auto edge_in = [&](const Overlap& o, int e) {
    int d = ((e - o.start) % r + r) % r;
    return d < o.length;
  };
  std::vector<bool> cv(r), ce(r);
  for (int v = 0; v < r; ++v) cv[v] = vertex_in(a, v) && vertex_in(b, v);
  for (int e = 0; e < r; ++e) ce[e] = edge_in(a, e) && edge_in(b, e);

  std::vector<Component> out;
  for (int v = 0; v < r; ++v) {
    if (!cv[v]) continue;
    // component head: previous edge not common (or previous vertex not common)
    int pe = (v + r - 1) % r;
    if (ce[pe] && cv[(v + r - 1) % r]) continue;
    Component c;
    c.start = v;
    c.len = 0;
    while (ce[(v + c.len) % r] && cv[(v + c.len + 1) % r]) ++c.len;
    out.push_back(c);
  }
  return out;
}

// Mutual overlap length of the two partner placements, extended maximally
// from the given common component.
int partner_mutual_length(const CyclicWord& R, const CyclicWord& Rinv, const Overlap& a,
                          const Overlap& b, const Component& comp) {
  const int r = R.length();
  auto match = [&](int e) {
    return partner_letter(R, Rinv, a, ((e % r) + r) % r) ==
           partner_letter(R, Rinv, b, ((e % r) + r) % r);
  };
  int len = comp.len;
  int fwd = comp.start + comp.len;
  while (len < r && match(fwd)) {
    ++len;
    ++fwd;
  }
  int bwd = comp.start - 1;
  while (len < r && match(bwd)) {
    ++len;
    --bwd;
  }
  return len;  // == r only for coincident placements
}

}  // namespace

CentralLink build_central_link(const CyclicWord& R, bool include_vertex_contacts) {
  require_overlap_input(R);
  const int r = R.length();
  CentralLink link;
  link.r = r;
  link.overlaps = enumerate_overlaps(R, include_vertex_contacts);
  link.graph.base_vertex = -1;
  for (int v = 0; v < r; ++v) link.graph.vertex_ids.push_back(v);
  for (std::size_t j = 0; j < link.overlaps.size(); ++j)
    link.graph.vertex_ids.push_back(r + static_cast<int>(j));

  auto add_edge = [&](int pa, int pb, Rational w, CentralLink::EdgeInfo info) {
    LinkEdge e;
    e.a = pa;
    e.b = pb;
    e.weight = Angle::exact(w);
    e.source = -1;
    link.graph.edges.push_back(e);
    link.edge_info.push_back(info);
  };

  for (int v = 0; v < r; ++v)
    add_edge(v, (v + 1) % r, Rational(2, r), {0, -1, -1, 0, 0});

  for (std::size_t j = 0; j < link.overlaps.size(); ++j) {
    const Overlap& o = link.overlaps[j];
    for (int m = 0; m <= o.length; ++m)
      add_edge(r + static_cast<int>(j), (o.start + m) % r, Rational(o.length, r),
               {1, static_cast<int>(j), -1, 0, 0});
  }

  CyclicWord Rinv = R.inverse();
  for (std::size_t j = 0; j < link.overlaps.size(); ++j) {
    for (std::size_t k = j + 1; k < link.overlaps.size(); ++k) {
      const Overlap& a = link.overlaps[j];
      const Overlap& b = link.overlaps[k];
      if (a.orientation == b.orientation && a.shift == b.shift) continue;  // same cell
      for (const Component& comp : path_intersection(r, a, b)) {
        add_edge(r + static_cast<int>(j), r + static_cast<int>(k),
                 Rational(a.length + b.length - 2 * comp.len, r),
                 {2, static_cast<int>(j), static_cast<int>(k), comp.start, comp.len});
      }
    }
  }
  return link;
}

std::vector<TriangleWeightRecord> triangle_weights(const CyclicWord& R,
                                                   bool include_vertex_contacts) {
  require_overlap_input(R);
  const int r = R.length();
  CyclicWord Rinv = R.inverse();
  auto overlaps = enumerate_overlaps(R, include_vertex_contacts);

  std::vector<TriangleWeightRecord> out;
  for (int e = 0; e < r; ++e) {
    TriangleWeightRecord rec;
    rec.kind = 1;
    rec.corners = {Rational(2, r), Rational(0), Rational(0)};
    rec.sum = Rational(2, r);
    rec.strict_ok = rec.sum < Rational(1);
    out.push_back(rec);
  }
  for (std::size_t j = 0; j < overlaps.size(); ++j) {
    if (overlaps[j].length < 1) continue;
    TriangleWeightRecord rec;
    rec.kind = 2;
    rec.o1 = static_cast<int>(j);
    Rational w(overlaps[j].length, r);
    rec.corners = {w, w, Rational(0)};
    rec.sum = w + w;
    rec.strict_ok = rec.sum < Rational(1);
    out.push_back(rec);
  }
  for (std::size_t j = 0; j < overlaps.size(); ++j) {
    for (std::size_t k = j + 1; k < overlaps.size(); ++k) {
      const Overlap& a = overlaps[j];
      const Overlap& b = overlaps[k];
      if (a.orientation == b.orientation && a.shift == b.shift) continue;
      for (const Component& comp : path_intersection(r, a, b)) {
        int l23 = partner_mutual_length(R, Rinv, a, b, comp);
        TriangleWeightRecord rec;
        rec.kind = 3;
        rec.o1 = static_cast<int>(j);
        rec.o2 = static_cast<int>(k);
        rec.l123 = comp.len;
        rec.l23 = l23;
        int l12 = a.length, l13 = b.length;
        rec.corners = {Rational(l12 + l13 - 2 * comp.len, r),
                       Rational(l12 + l23 - 2 * comp.len, r),
                       Rational(l13 + l23 - 2 * comp.len, r)};
        rec.sum = rec.corners[0] + rec.corners[1] + rec.corners[2];
        rec.strict_ok = rec.sum < Rational(1);
        out.push_back(rec);
      }
    }
  }
  return out;
}

namespace {

// Covered arc of consecutive overlapping arcs, as (start, edge length), or
// nullopt when the union wraps the whole circle.
std::optional<std::pair<int, int>> arc_union(int r, const std::vector<Overlap>& os) {
  std::vector<bool> ce(r, false);
  for (const Overlap& o : os)
    for (int m = 0; m < o.length; ++m) ce[(o.start + m) % r] = true;
  int missing = -1;
  for (int e = 0; e < r; ++e)
    if (!ce[e]) missing = e;
  if (missing < 0) return std::nullopt;
  // walk forward from the gap
  int s = (missing + 1) % r;
  while (!ce[s]) {
    if (s == missing) return std::nullopt;  // nothing covered
    s = (s + 1) % r;
  }
  int len = 0;
  while (ce[(s + len) % r]) ++len;
  // contiguity: nothing covered after the run
  for (int e = len; e < r; ++e)
    if (ce[(s + e) % r]) return std::nullopt;
  return std::make_pair(s, len);
}

}  // namespace

CentralLinkReport check_central_link(const CentralLink& link, int max_len,
                                     bool strict_neighbours) {
  CentralLinkReport rep;
  rep.bound = max_len;
  const int r = link.r;

  // type-(i) circle (case 1)
  Rational circle(0);
  for (std::size_t i = 0; i < link.graph.edges.size(); ++i)
    if (link.edge_info[i].kind == 0) circle += link.graph.edges[i].weight.pi_coeff();
  rep.type_i_circle_exact = circle == Rational(2);

  // (a) bounded 2-full enumeration
  auto cycles = two_full_cycles(link.graph, max_len, strict_neighbours);
  rep.two_full_checked = cycles.size();
  bool all_contacts = true;
  for (const auto& c : cycles) {
    if (c.angular_length.compare_pi(Rational(2)) >= 0) continue;
    bool via_contact = false;
    for (int e : c.edges) {
      const auto& info = link.edge_info[e];
      if (info.kind == 1 && link.overlaps[info.o1].length == 0) via_contact = true;
    }
    if (!via_contact) all_contacts = false;
    rep.violations.push_back(c);
  }
  rep.violations_only_through_contacts = !rep.violations.empty() && all_contacts;

  // (b) structural case-2 cycles: chains of type-(ii) arcs in which
  // consecutive arcs intersect in one component, non-consecutive arcs are
  // disjoint, and the union covers the boundary circle. Searched directly
  // over the overlaps with coverage-based pruning.
  {
    const auto& os = link.overlaps;
    const int n = static_cast<int>(os.size());
    const int chain_cap = std::max(max_len, r + 2);
    std::vector<int> chain;
    std::vector<int> cover(r, 0);
    auto add_cover = [&](const Overlap& o, int delta) {
      for (int m = 0; m <= o.length; ++m) cover[(o.start + m) % r] += delta;
    };
    auto one_component = [&](int i, int j) {
      auto comps = path_intersection(r, os[i], os[j]);
      return comps.size() == 1 ? static_cast<int>(comps[0].len) : -1;
    };
    auto disjoint = [&](int i, int j) {
      return path_intersection(r, os[i], os[j]).empty();
    };
    auto distinct_cells = [&](int i, int j) {
      return os[i].orientation != os[j].orientation || os[i].shift != os[j].shift;
    };
    auto try_close = [&]() {
      const int k = static_cast<int>(chain.size());
      if (k < 3 || chain[1] >= chain.back()) return;  // direction canonical
      for (int v = 0; v < r; ++v)
        if (cover[v] < 1) return;
      Rational total(0);
      for (int i = 0; i < k; ++i) {
        int a = chain[i], b = chain[(i + 1) % k];
        if (!distinct_cells(a, b)) return;
        int m = one_component(a, b);
        if (m < 0) return;
        total += Rational(os[a].length + os[b].length - 2 * m, r);
        for (int j2 = i + 2; j2 < k; ++j2) {
          if (i == 0 && j2 == k - 1) continue;
          if (!disjoint(chain[i], chain[j2])) return;
        }
      }
      ++rep.case2_checked;
      if (total != Rational(2)) {
        SimpleCycle c;
        for (int idx : chain) c.vertices.push_back(r + idx);
        c.angular_length = Angle::exact(total);
        rep.case2_violations.push_back(c);
      }
    };
    std::function<void()> grow = [&]() {
      if (static_cast<int>(chain.size()) > chain_cap) return;
      try_close();
      int start = chain[0], last = chain.back();
      for (int k = start + 1; k < n; ++k) {
        if (std::find(chain.begin(), chain.end(), k) != chain.end()) continue;
        if (!distinct_cells(last, k)) continue;
        if (one_component(last, k) < 0) continue;
        bool over = false;
        for (int m = 0; m <= os[k].length && !over; ++m)
          if (cover[(os[k].start + m) % r] >= 2) over = true;
        if (over) continue;
        chain.push_back(k);
        add_cover(os[k], +1);
        grow();
        add_cover(os[k], -1);
        chain.pop_back();
      }
    };
    for (int j = 0; j < n; ++j) {
      chain = {j};
      std::fill(cover.begin(), cover.end(), 0);
      add_cover(os[j], +1);
      grow();
      add_cover(os[j], -1);
    }
    // two arcs meeting in two components (a 2-cycle through parallel edges)
    for (int j = 0; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        if (!distinct_cells(j, k)) continue;
        auto comps = path_intersection(r, os[j], os[k]);
        if (comps.size() != 2) continue;
        std::fill(cover.begin(), cover.end(), 0);
        add_cover(os[j], +1);
        add_cover(os[k], +1);
        bool covers = true, at_most_two = true;
        for (int v = 0; v < r; ++v) {
          covers = covers && cover[v] >= 1;
          at_most_two = at_most_two && cover[v] <= 2;
        }
        if (!covers || !at_most_two) continue;
        Rational total(0);
        for (const auto& comp : comps)
          total += Rational(os[j].length + os[k].length - 2 * comp.len, r);
        ++rep.case2_checked;
        if (total != Rational(2)) {
          SimpleCycle c;
          c.vertices = {r + j, r + k};
          c.angular_length = Angle::exact(total);
          rep.case2_violations.push_back(c);
        }
      }
    }
  }

  // (c) mixed 2-full cycles: per-segment lower bound
  for (const auto& c : cycles) {
    const int k = static_cast<int>(c.vertices.size());
    bool has_i = false, has_ii = false;
    for (int v : c.vertices) (link.is_type_i(v) ? has_i : has_ii) = true;
    if (!has_i || !has_ii) continue;
    for (int s = 0; s < k; ++s) {
      if (!link.is_type_i(c.vertices[s])) continue;
      // segment: v1 = position s, then type-(ii) vertices, then v2
      int t = (s + 1) % k;
      if (link.is_type_i(c.vertices[t])) continue;
      std::vector<Overlap> seg;
      Angle seg_sum = link.graph.edges[c.edges[s]].weight;
      int u = t;
      while (!link.is_type_i(c.vertices[u])) {
        seg.push_back(link.overlaps[c.vertices[u] - r]);
        seg_sum += link.graph.edges[c.edges[u]].weight;
        u = (u + 1) % k;
      }
      int v1 = c.vertices[s], v2 = c.vertices[u];
      auto arc = arc_union(r, seg);
      if (!arc) continue;  // union wraps; no well-defined interval
      auto [astart, alen] = *arc;
      auto inside = [&](int v) {
        int d = ((v - astart) % r + r) % r;
        return d <= alen;
      };
      if (!inside(v1) || !inside(v2)) continue;
      int p1 = ((v1 - astart) % r + r) % r;
      int p2 = ((v2 - astart) % r + r) % r;
      int lseg = std::abs(p2 - p1);
      ++rep.case3_checked;
      if (seg_sum.pi_coeff() < Rational(2 * lseg, r)) rep.case3_violations.push_back(c);
    }
  }

  if (!rep.violations.empty()) {
    rep.verdict = rep.violations_only_through_contacts ? LinkVerdict::INCONCLUSIVE_LOCAL
                                                       : LinkVerdict::FAIL;
  } else if (!rep.type_i_circle_exact || !rep.case2_violations.empty() ||
             !rep.case3_violations.empty()) {
    rep.verdict = LinkVerdict::FAIL;
  }
  return rep;
}

std::string status_str(Status s) {
  return s == Status::HYPERBOLIC ? "HYPERBOLIC" : "UNKNOWN";
}

std::string branch_str(Branch b) {
  switch (b) {
    case Branch::NONE:
      return "none";
    case Branch::SHORT_RELATOR:
      return "SHORT_RELATOR";
    case Branch::TORSION:
      return "TORSION";
    case Branch::SMALL_CANCELLATION:
      return "SMALL_CANCELLATION";
  }
  return "?";
}

Certificate certify(const Presentation& P, const CertifyOptions& options) {
  return certify(P.alphabet(), P.relator().letters(), options);
}

Certificate certify(const Alphabet& alphabet, const Word& relator,
                    const CertifyOptions& options) {
  Certificate cert;
  CyclicWord R = cyclic_reduce(relator);
  if (R.empty()) {
    cert.status = Status::UNKNOWN;
    cert.branch = Branch::NONE;
    cert.note = "relator is trivial in the free group";
    cert.r = 0;
    return cert;
  }
  cert.relator = cyclic_word_str(R, alphabet);
  cert.r = R.length();

  auto pp = is_proper_power(R);
  if (pp.is_power) {
    cert.status = Status::HYPERBOLIC;
    cert.branch = Branch::TORSION;
    cert.note = "relator is a proper power (exponent " + std::to_string(pp.exponent) +
                "); one-relator groups with torsion are hyperbolic";
    return cert;
  }

  TripleOptions topts;
  topts.allow_empty_piece = options.allow_empty_piece;
  topts.max_witnesses = options.max_witnesses;
  SymmetrizedIndex idx(R);
  cert.c14 = check_metric(idx, Rational(1, 4));
  cert.c16 = check_metric(idx, Rational(1, 6));
  cert.t4 = check_T4(idx, topts);
  cert.tprime = check_Tprime(idx, topts);
  cert.has_checks = true;

  if (cert.r <= 3) {
    cert.status = Status::HYPERBOLIC;
    cert.branch = Branch::SHORT_RELATOR;
    return cert;
  }

  if (cert.c14.holds && cert.tprime.holds) {
    cert.status = Status::HYPERBOLIC;
    cert.branch = Branch::SMALL_CANCELLATION;
  } else {
    cert.status = Status::UNKNOWN;
    cert.branch = Branch::NONE;
  }

  if (options.validate_complex) {
    ComplexValidation cv;
    cv.bound = options.cycle_bound;
    auto records = triangle_weights(R, options.include_vertex_contacts);
    cv.triangles_ok = true;
    for (const auto& rec : records) cv.triangles_ok = cv.triangles_ok && rec.strict_ok;
    auto link = build_central_link(R, options.include_vertex_contacts);
    cv.link_verdict =
        check_central_link(link, options.cycle_bound, options.two_full_strict).verdict;
    cert.complex_validation = cv;
  }
  return cert;
}

}  // namespace systolic
