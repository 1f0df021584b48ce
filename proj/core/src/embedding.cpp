#include "crownlab/embedding.hpp"

#include <algorithm>
#include <queue>

namespace crownlab {

namespace {

// a == rotation-or-reflection of b, as cyclic sequences
bool cyclic_equal(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  const int n = static_cast<int>(a.size());
  if (n != static_cast<int>(b.size())) return false;
  for (int dir : {+1, -1}) {
    for (int s = 0; s < n; ++s) {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        int j = dir > 0 ? (s + i) % n : ((s - i) % n + n) % n;
        ok = a[i] == b[j];
      }
      if (ok) return true;
    }
  }
  return false;
}

}  // namespace

bool PathSpec::contains(Vertex v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

std::vector<Vertex> PathSpec::interior() const {
  if (vertices.size() <= 2) return {};
  return std::vector<Vertex>(vertices.begin() + 1, vertices.end() - 1);
}

PlanarEmbedding PlanarEmbedding::build(const std::map<Vertex, std::vector<Vertex>>& rotation,
                                       std::vector<Vertex> outer_face) {
  PlanarEmbedding g;
  for (const auto& [v, _] : rotation) {
    if (v < 0) fail(Errc::InvalidRotation, "negative vertex id");
    g.index_[v] = static_cast<int>(g.vertices_.size());
    g.vertices_.push_back(v);
  }
  const int n = g.vertex_count();
  if (n == 0) fail(Errc::InvalidRotation, "empty rotation");
  if (n > 64) fail(Errc::CapExceeded, "more than 64 vertices");

  g.rot_.resize(n);
  g.adj_mask_.assign(n, 0);
  for (const auto& [v, nbrs] : rotation) {
    int vi = g.index_.at(v);
    for (Vertex u : nbrs) {
      auto it = g.index_.find(u);
      if (it == g.index_.end()) fail(Errc::InvalidRotation, "unknown neighbor id");
      if (u == v) fail(Errc::InvalidRotation, "loop edge");
      int ui = it->second;
      if (g.adj_mask_[vi] >> ui & 1) fail(Errc::InvalidRotation, "parallel edge in rotation");
      g.adj_mask_[vi] |= 1ull << ui;
    }
    g.rot_[vi] = nbrs;
  }
  // symmetry
  int dart_count = 0;
  for (int vi = 0; vi < n; ++vi) {
    dart_count += static_cast<int>(g.rot_[vi].size());
    for (Vertex u : g.rot_[vi]) {
      int ui = g.index_.at(u);
      if (!(g.adj_mask_[ui] >> vi & 1)) fail(Errc::InvalidRotation, "asymmetric rotation");
    }
  }
  g.edge_count_ = dart_count / 2;

  // connectivity
  {
    std::vector<bool> seen(n, false);
    std::queue<int> bfs;
    bfs.push(0);
    seen[0] = true;
    int reached = 1;
    while (!bfs.empty()) {
      int v = bfs.front();
      bfs.pop();
      for (Vertex u : g.rot_[v]) {
        int ui = g.index_.at(u);
        if (!seen[ui]) {
          seen[ui] = true;
          ++reached;
          bfs.push(ui);
        }
      }
    }
    if (reached != n) fail(Errc::Disconnected, "graph is not connected");
  }

  g.outer_ = std::move(outer_face);
  g.finish_build();
  return g;
}

void PlanarEmbedding::finish_build() {
  const int n = vertex_count();
  // Trace faces: arriving at v along u->v, the next dart leaves v toward
  // the successor of u in rotation(v).
  std::vector<int> offset(n + 1, 0);
  for (int v = 0; v < n; ++v) offset[v + 1] = offset[v] + static_cast<int>(rot_[v].size());
  const int darts = offset[n];
  std::vector<int> face_of(darts, -1);
  dart_face_.assign(n, {});
  for (int v = 0; v < n; ++v) dart_face_[v].assign(rot_[v].size(), -1);

  auto pos_in_rot = [&](int v, Vertex u) {
    const auto& r = rot_[v];
    for (int k = 0; k < static_cast<int>(r.size()); ++k)
      if (r[k] == u) return k;
    return -1;
  };

  faces_.clear();
  for (int v = 0; v < n; ++v) {
    for (int k = 0; k < static_cast<int>(rot_[v].size()); ++k) {
      if (face_of[offset[v] + k] != -1) continue;
      int f = static_cast<int>(faces_.size());
      std::vector<Vertex> walk;
      int cv = v, ck = k;
      while (face_of[offset[cv] + ck] == -1) {
        face_of[offset[cv] + ck] = f;
        dart_face_[cv][ck] = f;
        walk.push_back(vertices_[cv]);
        Vertex head = rot_[cv][ck];
        int hv = index_.at(head);
        int back = pos_in_rot(hv, vertices_[cv]);
        ck = (back + 1) % static_cast<int>(rot_[hv].size());
        cv = hv;
      }
      faces_.push_back(std::move(walk));
    }
  }

  if (vertex_count() - edge_count_ + face_count() != 2)
    fail(Errc::NonPlanarRotation, "rotation system fails Euler's formula");

  // locate the outer face
  if (outer_.size() < 3) fail(Errc::BadOuterFace, "outer face must have at least 3 vertices");
  {
    std::set<Vertex> distinct(outer_.begin(), outer_.end());
    if (distinct.size() != outer_.size()) fail(Errc::BadOuterFace, "outer face is not a simple cycle");
  }
  outer_index_ = -1;
  for (int f = 0; f < face_count(); ++f) {
    if (cyclic_equal(faces_[f], outer_)) {
      outer_index_ = f;
      break;
    }
  }
  if (outer_index_ == -1) fail(Errc::BadOuterFace, "given sequence is not a traversed face");
}

bool PlanarEmbedding::has_vertex(Vertex v) const { return index_.count(v) > 0; }

const std::vector<Vertex>& PlanarEmbedding::rotation(Vertex v) const {
  auto it = index_.find(v);
  if (it == index_.end()) fail(Errc::InvalidRotation, "no such vertex");
  return rot_[it->second];
}

bool PlanarEmbedding::adjacent(Vertex u, Vertex v) const {
  auto iu = index_.find(u);
  auto iv = index_.find(v);
  if (iu == index_.end() || iv == index_.end()) return false;
  return adj_mask_[iu->second] >> iv->second & 1;
}

std::vector<Edge> PlanarEmbedding::edges() const {
  std::vector<Edge> es;
  for (int vi = 0; vi < vertex_count(); ++vi)
    for (Vertex u : rot_[vi])
      if (vertices_[vi] < u) es.push_back({vertices_[vi], u});
  std::sort(es.begin(), es.end());
  return es;
}

int PlanarEmbedding::index_of(Vertex v) const {
  auto it = index_.find(v);
  if (it == index_.end()) fail(Errc::InvalidRotation, "no such vertex");
  return it->second;
}

bool PlanarEmbedding::on_outer(Vertex v) const {
  return std::find(outer_.begin(), outer_.end(), v) != outer_.end();
}

std::vector<bool> PlanarEmbedding::faces_inside_cycle(const std::vector<Vertex>& cycle) const {
  const int m = static_cast<int>(cycle.size());
  if (m < 3) fail(Errc::BadPath, "cycle needs at least 3 vertices");
  std::set<Vertex> distinct(cycle.begin(), cycle.end());
  if (static_cast<int>(distinct.size()) != m) fail(Errc::BadPath, "cycle repeats a vertex");
  std::set<Edge> cyc_edges;
  for (int i = 0; i < m; ++i) {
    Vertex a = cycle[i], b = cycle[(i + 1) % m];
    if (!adjacent(a, b)) fail(Errc::BadPath, "cycle uses a non-edge");
    cyc_edges.insert(make_edge(a, b));
  }

  // Dual BFS from the outer face, not crossing cycle edges. Faces left
  // unreached are inside the cycle.
  std::vector<std::vector<int>> dual(face_count());
  for (int vi = 0; vi < vertex_count(); ++vi) {
    for (int k = 0; k < static_cast<int>(rot_[vi].size()); ++k) {
      Vertex u = vertices_[vi], w = rot_[vi][k];
      if (u > w) continue;
      if (cyc_edges.count(make_edge(u, w))) continue;
      int f1 = dart_face_[vi][k];
      int wi = index_.at(w);
      int back = -1;
      for (int t = 0; t < static_cast<int>(rot_[wi].size()); ++t)
        if (rot_[wi][t] == u) back = t;
      int f2 = dart_face_[wi][back];
      dual[f1].push_back(f2);
      dual[f2].push_back(f1);
    }
  }
  std::vector<bool> outside(face_count(), false);
  std::queue<int> bfs;
  bfs.push(outer_index_);
  outside[outer_index_] = true;
  while (!bfs.empty()) {
    int f = bfs.front();
    bfs.pop();
    for (int t : dual[f])
      if (!outside[t]) {
        outside[t] = true;
        bfs.push(t);
      }
  }
  std::vector<bool> inside(face_count());
  for (int f = 0; f < face_count(); ++f) inside[f] = !outside[f];
  return inside;
}

std::vector<Vertex> PlanarEmbedding::interior_vertices(const std::vector<Vertex>& cycle) const {
  auto inside = faces_inside_cycle(cycle);
  std::set<Vertex> on_cycle(cycle.begin(), cycle.end());
  std::set<Vertex> got;
  for (int f = 0; f < face_count(); ++f)
    if (inside[f])
      for (Vertex v : faces_[f])
        if (!on_cycle.count(v)) got.insert(v);
  return std::vector<Vertex>(got.begin(), got.end());
}

std::vector<Vertex> PlanarEmbedding::exterior_vertices(const std::vector<Vertex>& cycle) const {
  auto inside = faces_inside_cycle(cycle);
  std::set<Vertex> on_cycle(cycle.begin(), cycle.end());
  std::set<Vertex> got;
  for (int f = 0; f < face_count(); ++f)
    if (!inside[f])
      for (Vertex v : faces_[f])
        if (!on_cycle.count(v)) got.insert(v);
  return std::vector<Vertex>(got.begin(), got.end());
}

PlanarEmbedding PlanarEmbedding::subgraph(const std::set<Vertex>& keep_vertices,
                                          const std::set<Edge>& keep_edges,
                                          std::vector<Vertex> outer_face) const {
  std::map<Vertex, std::vector<Vertex>> rot;
  for (Vertex v : keep_vertices) {
    std::vector<Vertex> r;
    for (Vertex u : rotation(v))
      if (keep_vertices.count(u) && keep_edges.count(make_edge(v, u))) r.push_back(u);
    rot[v] = std::move(r);
  }
  return build(rot, std::move(outer_face));
}

namespace {

// vertices and edges of the faces selected by `pick`, plus the cycle itself
std::pair<std::set<Vertex>, std::set<Edge>> region_of_faces(const PlanarEmbedding& g,
                                                            const std::vector<Vertex>& cycle,
                                                            const std::vector<bool>& pick) {
  std::set<Vertex> vs(cycle.begin(), cycle.end());
  std::set<Edge> es;
  const int m = static_cast<int>(cycle.size());
  for (int i = 0; i < m; ++i) es.insert(make_edge(cycle[i], cycle[(i + 1) % m]));
  const auto& faces = g.faces();
  for (int f = 0; f < g.face_count(); ++f) {
    if (!pick[f]) continue;
    const auto& walk = faces[f];
    for (int i = 0; i < static_cast<int>(walk.size()); ++i) {
      vs.insert(walk[i]);
      es.insert(make_edge(walk[i], walk[(i + 1) % walk.size()]));
    }
  }
  return {std::move(vs), std::move(es)};
}

}  // namespace

PlanarEmbedding PlanarEmbedding::interior_of(const std::vector<Vertex>& cycle) const {
  auto inside = faces_inside_cycle(cycle);
  auto [vs, es] = region_of_faces(*this, cycle, inside);
  return subgraph(vs, es, cycle);
}

PlanarEmbedding PlanarEmbedding::exterior_of(const std::vector<Vertex>& cycle) const {
  auto inside = faces_inside_cycle(cycle);
  std::vector<bool> outside(inside.size());
  for (size_t f = 0; f < inside.size(); ++f) outside[f] = !inside[f];
  auto [vs, es] = region_of_faces(*this, cycle, outside);
  // keep this embedding's outer face unless the cycle IS the outer face
  std::vector<Vertex> outer = cyclic_equal(outer_, cycle) ? cycle : outer_;
  return subgraph(vs, es, outer);
}

bool PlanarEmbedding::validate_path(const PathSpec& path) const {
  const auto& vs = path.vertices;
  if (vs.empty()) return false;
  std::set<Vertex> seen;
  for (Vertex v : vs) {
    if (!has_vertex(v)) return false;
    if (!seen.insert(v).second) return false;
  }
  for (size_t i = 0; i + 1 < vs.size(); ++i)
    if (!adjacent(vs[i], vs[i + 1])) return false;
  return true;
}

bool PlanarEmbedding::path_on_outer(const PathSpec& path) const {
  const auto& p = path.vertices;
  const int m = static_cast<int>(outer_.size());
  if (static_cast<int>(p.size()) > m) return false;
  if (!validate_path(path)) return false;
  if (p.size() == 1) return on_outer(p[0]);
  for (int dir : {+1, -1}) {
    for (int s = 0; s < m; ++s) {
      if (outer_[s] != p[0]) continue;
      bool ok = true;
      for (int i = 1; i < static_cast<int>(p.size()) && ok; ++i) {
        int j = ((s + dir * i) % m + m) % m;
        ok = outer_[j] == p[i];
      }
      if (ok) return true;
    }
  }
  return false;
}

PathSpec PlanarEmbedding::outer_minus_path_interior(const PathSpec& path) const {
  if (!path_on_outer(path)) fail(Errc::BadPath, "path is not a subpath of the outer cycle");
  const auto& p = path.vertices;
  const int m = static_cast<int>(outer_.size());
  if (static_cast<int>(p.size()) < 2) fail(Errc::BadPath, "path needs an edge");
  // walk from p.front() away from p's second vertex, around to p.back()
  int s = 0;
  while (outer_[s] != p[0]) ++s;
  int dir = outer_[(s + 1) % m] == p[1] ? -1 : +1;
  std::vector<Vertex> arc;
  int i = s;
  while (true) {
    arc.push_back(outer_[i]);
    if (outer_[i] == p.back()) break;
    i = ((i + dir) % m + m) % m;
  }
  return PathSpec(arc);
}

std::set<Edge> chords_of_cycle(const PlanarEmbedding& g, const std::vector<Vertex>& cycle) {
  const int m = static_cast<int>(cycle.size());
  std::set<Edge> cyc;
  for (int i = 0; i < m; ++i) {
    if (!g.adjacent(cycle[i], cycle[(i + 1) % m])) fail(Errc::BadPath, "not a cycle of G");
    cyc.insert(make_edge(cycle[i], cycle[(i + 1) % m]));
  }
  std::set<Vertex> on(cycle.begin(), cycle.end());
  std::set<Edge> chords;
  for (const Edge& e : g.edges())
    if (on.count(e.first) && on.count(e.second) && !cyc.count(e)) chords.insert(e);
  return chords;
}

std::pair<PlanarEmbedding, PlanarEmbedding> natural_partition(const PlanarEmbedding& g,
                                                              const PathSpec& q) {
  if (!g.validate_path(q) || q.edge_count() < 1) fail(Errc::NotAChord, "Q is not a path of G");
  const auto& outer = g.outer_face();
  auto on_c = [&](Vertex v) {
    return std::find(outer.begin(), outer.end(), v) != outer.end();
  };
  if (!on_c(q.front()) || !on_c(q.back())) fail(Errc::NotAChord, "Q endpoints must lie on C");
  for (Vertex v : q.interior())
    if (on_c(v)) fail(Errc::NotAChord, "Q interior touches C");
  if (q.edge_count() == 1) {
    // a 1-chord must not be an edge of C itself
    const int m = static_cast<int>(outer.size());
    for (int i = 0; i < m; ++i) {
      Vertex a = outer[i], b = outer[(i + 1) % m];
      if (make_edge(a, b) == make_edge(q.front(), q.back()))
        fail(Errc::NotAChord, "Q is an edge of C");
    }
  }

  const int m = static_cast<int>(outer.size());
  int px = -1, py = -1;
  for (int i = 0; i < m; ++i) {
    if (outer[i] == q.front()) px = i;
    if (outer[i] == q.back()) py = i;
  }

  auto arc = [&](int from, int to) {
    std::vector<Vertex> a;
    for (int i = from; ; i = (i + 1) % m) {
      a.push_back(outer[i]);
      if (i == to) break;
    }
    return a;
  };
  std::vector<Vertex> qin = q.interior();

  std::vector<Vertex> cycle_a = arc(px, py);  // x .. y along outer order
  for (auto it = qin.rbegin(); it != qin.rend(); ++it) cycle_a.push_back(*it);
  std::vector<Vertex> cycle_b = arc(py, px);  // y .. x along outer order
  for (Vertex v : qin) cycle_b.push_back(v);

  PlanarEmbedding ga = g.interior_of(cycle_a);
  PlanarEmbedding gb = g.interior_of(cycle_b);
  // deterministic order: smaller part first, tie broken by the part
  // containing the outer successor of Q's first endpoint
  if (ga.vertex_count() < gb.vertex_count()) return {std::move(ga), std::move(gb)};
  if (gb.vertex_count() < ga.vertex_count()) return {std::move(gb), std::move(ga)};
  return {std::move(ga), std::move(gb)};
}

bool is_short_inseparable(const PlanarEmbedding& g) {
  const auto& vs = g.vertices();
  const int n = static_cast<int>(vs.size());
  auto one_sided = [&](const std::vector<Vertex>& cycle) {
    return g.interior_vertices(cycle).empty() || g.exterior_vertices(cycle).empty();
  };
  // triangles
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!g.adjacent(vs[a], vs[b])) continue;
      for (int c = b + 1; c < n; ++c)
        if (g.adjacent(vs[a], vs[c]) && g.adjacent(vs[b], vs[c]))
          if (!one_sided({vs[a], vs[b], vs[c]})) return false;
    }
  // 4-cycles a-b-c-d with a minimal, b < d
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!g.adjacent(vs[a], vs[b])) continue;
      for (int c = a + 1; c < n; ++c) {
        if (c == b || !g.adjacent(vs[b], vs[c])) continue;
        for (int d = b + 1; d < n; ++d) {
          if (d == c || !g.adjacent(vs[c], vs[d]) || !g.adjacent(vs[d], vs[a])) continue;
          if (!one_sided({vs[a], vs[b], vs[c], vs[d]})) return false;
        }
      }
    }
  return true;
}

namespace {

// G - center is a path spanning all other vertices with the given
// endpoints, and center sees every one of them.
std::optional<PathSpec> broken_wheel_path(const PlanarEmbedding& g, Vertex center,
                                          std::optional<std::pair<Vertex, Vertex>> ends) {
  const int n = g.vertex_count();
  if (n < 3) return std::nullopt;
  if (g.degree(center) != n - 1) return std::nullopt;
  std::vector<Vertex> others;
  for (Vertex v : g.vertices())
    if (v != center) others.push_back(v);
  auto deg_in_rest = [&](Vertex v) {
    int d = 0;
    for (Vertex u : g.rotation(v))
      if (u != center) ++d;
    return d;
  };
  std::vector<Vertex> endpoints;
  for (Vertex v : others) {
    int d = deg_in_rest(v);
    if (d == 1)
      endpoints.push_back(v);
    else if (d != 2)
      return std::nullopt;
  }
  if (endpoints.size() != 2) return std::nullopt;
  Vertex start = endpoints[0], goal = endpoints[1];
  if (ends) {
    if (std::minmax(ends->first, ends->second) != std::minmax(start, goal)) return std::nullopt;
    start = ends->first;
    goal = ends->second;
  } else if (goal < start) {
    std::swap(start, goal);
  }
  std::vector<Vertex> walk{start};
  Vertex prev = -1, cur = start;
  while (cur != goal) {
    Vertex nxt = -1;
    for (Vertex u : g.rotation(cur))
      if (u != center && u != prev) {
        if (nxt != -1) return std::nullopt;
        nxt = u;
      }
    if (nxt == -1) return std::nullopt;
    prev = cur;
    cur = nxt;
    walk.push_back(cur);
  }
  if (walk.size() != others.size()) return std::nullopt;
  std::vector<Vertex> principal{walk.front(), center, walk.back()};
  return PathSpec(principal);
}

bool is_wheel_center(const PlanarEmbedding& g, Vertex center) {
  const int n = g.vertex_count();
  if (n < 4) return false;
  if (g.degree(center) != n - 1) return false;
  for (Vertex v : g.vertices()) {
    if (v == center) continue;
    int d = 0;
    for (Vertex u : g.rotation(v))
      if (u != center) ++d;
    if (d != 2) return false;
  }
  // all of G - center is 2-regular; a single cycle iff connected
  Vertex start = g.vertices()[0] == center ? g.vertices()[1] : g.vertices()[0];
  std::set<Vertex> seen{start};
  std::vector<Vertex> stack{start};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.rotation(v))
      if (u != center && seen.insert(u).second) stack.push_back(u);
  }
  return static_cast<int>(seen.size()) == n - 1;
}

}  // namespace

WheelClass classify_wheel(const PlanarEmbedding& g, const std::optional<PathSpec>& principal) {
  WheelClass out;
  if (principal) {
    const auto& p = principal->vertices;
    if (p.size() != 3) fail(Errc::BadPath, "principal path must be a 2-path");
    auto got = broken_wheel_path(g, p[1], std::make_pair(p[0], p[2]));
    if (got) {
      out.kind = WheelKind::BrokenWheel;
      out.principal_path = *got;
      out.rim_edge_count = g.vertex_count() - 2;
      return out;
    }
  } else {
    for (Vertex c : g.vertices()) {
      auto got = broken_wheel_path(g, c, std::nullopt);
      if (got) {
        out.kind = WheelKind::BrokenWheel;
        out.principal_path = *got;
        out.rim_edge_count = g.vertex_count() - 2;
        return out;
      }
    }
  }
  for (Vertex c : g.vertices()) {
    if (is_wheel_center(g, c)) {
      out.kind = WheelKind::Wheel;
      out.central_vertex = c;
      return out;
    }
  }
  return out;
}

}  // namespace crownlab
