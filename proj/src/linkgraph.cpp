#include "systolic/linkgraph.hpp"

#include <algorithm>
#include <array>

#include "systolic/errors.hpp"

namespace systolic {

int LinkGraph::position_of(int vertex_id) const {
  for (int i = 0; i < vertex_count(); ++i)
    if (vertex_ids[i] == vertex_id) return i;
  return -1;
}

bool LinkGraph::has_edge_between(int pos_a, int pos_b) const {
  return find_edge(pos_a, pos_b) >= 0;
}

int LinkGraph::find_edge(int pos_a, int pos_b) const {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const LinkEdge& e = edges[i];
    if ((e.a == pos_a && e.b == pos_b) || (e.a == pos_b && e.b == pos_a))
      return static_cast<int>(i);
  }
  return -1;
}

namespace {

struct Adjacency {
  // per vertex: (edge index, other endpoint), sorted
  std::vector<std::vector<std::pair<int, int>>> at;
  std::vector<std::vector<bool>> connected;

  explicit Adjacency(const LinkGraph& L) {
    const int n = L.vertex_count();
    at.resize(n);
    connected.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < L.edges.size(); ++i) {
      const LinkEdge& e = L.edges[i];
      if (e.a == e.b) throw Error("link graph has a loop");
      at[e.a].push_back({static_cast<int>(i), e.b});
      at[e.b].push_back({static_cast<int>(i), e.a});
      connected[e.a][e.b] = connected[e.b][e.a] = true;
    }
    for (auto& v : at)
      std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
        if (x.second != y.second) return x.second < y.second;
        return x.first < y.first;
      });
  }
};

struct CycleSearch {
  const LinkGraph& L;
  const Adjacency adj;
  int min_len, max_len;
  bool prune_chords;  // skip paths whose distance-2 pairs are joined in L
  std::vector<SimpleCycle>* out;

  std::vector<int> path_v;
  std::vector<int> path_e;
  std::vector<bool> on_path;

  CycleSearch(const LinkGraph& l, int mn, int mx, bool prune,
              std::vector<SimpleCycle>* o)
      : L(l), adj(l), min_len(mn), max_len(mx), prune_chords(prune), out(o) {
    on_path.assign(L.vertex_count(), false);
  }

  void run() {
    for (int s = 0; s < L.vertex_count(); ++s) {
      path_v = {s};
      path_e.clear();
      on_path.assign(L.vertex_count(), false);
      on_path[s] = true;
      dfs(s, s);
    }
  }

  void emit(int closing_edge) {
    SimpleCycle c;
    c.vertices = path_v;
    c.edges = path_e;
    c.edges.push_back(closing_edge);
    Angle total = L.edges[c.edges[0]].weight;
    for (std::size_t i = 1; i < c.edges.size(); ++i)
      total += L.edges[c.edges[i]].weight;
    c.angular_length = total;
    out->push_back(std::move(c));
  }

  void dfs(int s, int v) {
    const int len = static_cast<int>(path_v.size());
    for (const auto& [e, w] : adj.at[v]) {
      if (w == s) {
        // Each cycle appears twice (two directions); keep second < last.
        if (len >= min_len && len >= 3 && path_v[1] < path_v[len - 1]) emit(e);
        continue;
      }
      if (w < s || on_path[w]) continue;
      if (len + 1 > max_len) continue;
      // A cycle whose consecutive triple (x, y, w) has a chord x--w is never
      // 2-full; wrap-around triples are re-checked at emission.
      if (prune_chords && len >= 2 && adj.connected[path_v[len - 2]][w]) continue;
      path_v.push_back(w);
      path_e.push_back(e);
      on_path[w] = true;
      dfs(s, w);
      on_path[w] = false;
      path_v.pop_back();
      path_e.pop_back();
    }
  }
};

}  // namespace

bool is_two_full(const LinkGraph& L, const SimpleCycle& cycle, bool strict_neighbours) {
  const int k = static_cast<int>(cycle.vertices.size());
  if (k <= 3) return false;
  if (!strict_neighbours) {
    for (int i = 0; i < k; ++i) {
      int a = cycle.vertices[(i + k - 1) % k];
      int c = cycle.vertices[(i + 1) % k];
      if (L.has_edge_between(a, c)) return false;
    }
    return true;
  }
  // strict reading: any pair of cycle vertices with a common neighbour
  // anywhere in the link must not be joined by an edge.
  const int n = L.vertex_count();
  std::vector<std::vector<bool>> connected(n, std::vector<bool>(n, false));
  for (const LinkEdge& e : L.edges) connected[e.a][e.b] = connected[e.b][e.a] = true;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      int x = cycle.vertices[i], y = cycle.vertices[j];
      if (!connected[x][y]) continue;
      for (int b = 0; b < n; ++b) {
        if (b == x || b == y) continue;
        if (connected[x][b] && connected[y][b]) return false;
      }
    }
  }
  return true;
}

std::vector<SimpleCycle> simple_cycles(const LinkGraph& L, int min_len, int max_len) {
  std::vector<SimpleCycle> out;
  CycleSearch search(L, std::max(3, min_len), max_len, false, &out);
  search.run();
  return out;
}

std::vector<SimpleCycle> two_full_cycles(const LinkGraph& L, int max_len,
                                         bool strict_neighbours) {
  if (max_len < 4) throw Error("max_len must be >= 4");
  std::vector<SimpleCycle> all;
  // The distance-2 chord prune is sound for both readings: a chorded
  // consecutive triple defeats 2-fullness under either one.
  CycleSearch search(L, 4, max_len, true, &all);
  search.run();
  std::vector<SimpleCycle> out;
  for (auto& c : all)
    if (is_two_full(L, c, strict_neighbours)) out.push_back(std::move(c));
  return out;
}

std::optional<ChordTriangulation> link_disk_triangulation(const LinkGraph& L,
                                                          const SimpleCycle& cycle) {
  const int k = static_cast<int>(cycle.vertices.size());
  if (k < 3) throw Error("cycle must have length >= 3");
  if (k == 3) return ChordTriangulation{{}, {{{0, 1, 2}}}};

  // chord[i][j]: link edge joining cycle positions i and j, or -1.
  std::vector<std::vector<int>> chord(k, std::vector<int>(k, -1));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      chord[i][j] = L.find_edge(cycle.vertices[i], cycle.vertices[j]);
    }
  }
  auto edge_ok = [&](int i, int j) {
    if (j == i + 1 || (i == 0 && j == k - 1)) return true;  // polygon side
    return chord[i][j] >= 0;
  };

  std::vector<std::vector<char>> can(k, std::vector<char>(k, 0));
  std::vector<std::vector<int>> pick(k, std::vector<int>(k, -1));
  for (int i = 0; i + 1 < k; ++i) can[i][i + 1] = 1;
  for (int span = 2; span < k; ++span) {
    for (int i = 0; i + span < k; ++i) {
      int j = i + span;
      for (int m = i + 1; m < j; ++m) {
        if (can[i][m] && can[m][j] && edge_ok(i, m) && edge_ok(m, j)) {
          can[i][j] = 1;
          pick[i][j] = m;
          break;
        }
      }
    }
  }
  if (!can[0][k - 1]) return std::nullopt;

  ChordTriangulation tri;
  std::vector<std::pair<int, int>> stack{{0, k - 1}};
  while (!stack.empty()) {
    auto [i, j] = stack.back();
    stack.pop_back();
    if (j - i < 2) continue;
    int m = pick[i][j];
    tri.faces.push_back({i, m, j});
    if (m - i >= 2) tri.chords.push_back({i, m, chord[i][m]});
    if (j - m >= 2) tri.chords.push_back({m, j, chord[m][j]});
    stack.push_back({i, m});
    stack.push_back({m, j});
  }
  std::sort(tri.faces.begin(), tri.faces.end());
  std::sort(tri.chords.begin(), tri.chords.end());
  return tri;
}

}  // namespace systolic
