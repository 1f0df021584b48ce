#include "crownlab/rainbow.hpp"

#include <algorithm>
#include <set>

namespace crownlab {

Rainbow Rainbow::make_unchecked(PlanarEmbedding g, PathSpec p, ListAssignment l) {
  if (p.edge_count() < 1) fail(Errc::BadPath, "P needs at least one edge");
  if (!g.path_on_outer(p)) fail(Errc::BadPath, "P must be a subpath of the outer cycle");
  for (Vertex v : g.vertices())
    if (!l.has(v)) fail(Errc::HypothesisViolation, "every vertex needs a list");
  return Rainbow(std::move(g), std::move(p), std::move(l));
}

Rainbow Rainbow::make(PlanarEmbedding g, PathSpec p, ListAssignment l) {
  Rainbow r = make_unchecked(std::move(g), std::move(p), std::move(l));
  if (!r.floors_ok()) fail(Errc::HypothesisViolation, "rainbow list floors violated");
  return r;
}

bool Rainbow::floors_ok() const {
  if (lists_.size(p0()) < 1 || lists_.size(p1()) < 1) return false;
  for (Vertex v : c_minus_p())
    if (lists_.size(v) < 3) return false;
  for (Vertex v : off_c())
    if (lists_.size(v) < 5) return false;
  return true;
}

bool Rainbow::end_linked() const { return lists_.size(p0()) + lists_.size(p1()) >= 4; }

std::vector<Vertex> Rainbow::c_minus_p() const {
  std::set<Vertex> on_p(path_.vertices.begin(), path_.vertices.end());
  std::vector<Vertex> out;
  for (Vertex v : outer())
    if (!on_p.count(v)) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> Rainbow::off_c() const {
  std::set<Vertex> on_c(outer().begin(), outer().end());
  std::vector<Vertex> out;
  for (Vertex v : g_.vertices())
    if (!on_c.count(v)) out.push_back(v);
  return out;
}

PathSpec Rainbow::c_minus_p_interior() const { return g_.outer_minus_path_interior(path_); }

GQResult subgraph_gq(const Rainbow& r, const PathSpec& q, bool q_is_cycle) {
  const PlanarEmbedding& g = r.g();
  if (!g.validate_path(q)) fail(Errc::BadPath, "Q is not a path of G");
  if (q_is_cycle && (q.vertices.size() < 3 || !g.adjacent(q.front(), q.back())))
    fail(Errc::BadPath, "Q does not close into a cycle");

  PathSpec cmp = r.c_minus_p_interior();
  std::set<Vertex> cmp_set(cmp.vertices.begin(), cmp.vertices.end());
  std::vector<Vertex> hits;
  for (Vertex v : q.vertices)
    if (cmp_set.count(v)) hits.push_back(v);

  GQResult out;
  if (hits.size() == 2) {
    if (q_is_cycle || !((q.front() == hits[0] && q.back() == hits[1]) ||
                        (q.front() == hits[1] && q.back() == hits[0])))
      fail(Errc::BadIntersection, "Q must meet C minus interior(P) exactly at its endpoints");
    // C^Q = v(C\P°)v' + Q
    const auto& walk = cmp.vertices;
    int a = -1, b = -1;
    for (int i = 0; i < static_cast<int>(walk.size()); ++i) {
      if (walk[i] == q.front()) a = i;
      if (walk[i] == q.back()) b = i;
    }
    std::vector<Vertex> cycle;
    if (a < b)
      for (int i = a; i <= b; ++i) cycle.push_back(walk[i]);
    else
      for (int i = a; i >= b; --i) cycle.push_back(walk[i]);
    // append Q's interior walking back from q.back() to q.front()
    for (int i = static_cast<int>(q.vertices.size()) - 2; i >= 1; --i)
      cycle.push_back(q.vertices[i]);

    if (cycle.size() == 2) {
      // Q is itself an edge of C \ P°; nothing is bounded
      out.vertices = {std::min(q.front(), q.back()), std::max(q.front(), q.back())};
      out.edges = {make_edge(q.front(), q.back())};
      out.outer = q.vertices;
      return out;
    }
    PlanarEmbedding sub = g.interior_of(cycle);
    std::map<Vertex, std::vector<Color>> lists;
    for (Vertex v : sub.vertices()) lists[v] = r.lists().at(v);
    out.vertices = sub.vertices();
    out.edges = sub.edges();
    out.outer = cycle;
    out.rainbow = Rainbow::make_unchecked(std::move(sub), q, ListAssignment(std::move(lists)));
    return out;
  }
  if (hits.size() == 1) {
    if (q_is_cycle) {
      std::vector<Vertex> cycle = q.vertices;
      PlanarEmbedding sub = g.interior_of(cycle);
      out.vertices = sub.vertices();
      out.edges = sub.edges();
      out.outer = cycle;
      return out;
    }
    out.vertices = q.vertices;
    for (size_t i = 0; i + 1 < q.vertices.size(); ++i)
      out.edges.push_back(make_edge(q.vertices[i], q.vertices[i + 1]));
    std::sort(out.edges.begin(), out.edges.end());
    std::sort(out.vertices.begin(), out.vertices.end());
    out.outer = q.vertices;
    return out;
  }
  fail(Errc::BadIntersection, "Q must meet C minus interior(P) in one or two vertices");
}

}  // namespace crownlab
