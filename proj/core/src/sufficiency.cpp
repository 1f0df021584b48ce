#include "crownlab/sufficiency.hpp"

#include <algorithm>
#include <set>

namespace crownlab {

bool is_sufficient(const PlanarEmbedding& g, const ListAssignment& l,
                   const std::vector<Vertex>& h_vertices, const PartialColoring& phi) {
  std::set<Vertex> dom_set(h_vertices.begin(), h_vertices.end());
  for (Vertex v : phi.domain()) dom_set.insert(v);
  std::vector<Vertex> ext_domain(dom_set.begin(), dom_set.end());
  bool ok = true;
  enumerate_extensions(g, l, phi, ext_domain, [&](const PartialColoring& ext) {
    if (!extend_coloring(g, l, ext, g.vertices())) {
      ok = false;
      return false;
    }
    return true;
  });
  return ok;
}

std::vector<PartialColoring> end_set(const Rainbow& r) {
  const auto& g = r.g();
  const auto& l = r.lists();
  Vertex p0 = r.p0(), p1 = r.p1();
  bool adj = g.adjacent(p0, p1);
  std::vector<PartialColoring> out;
  for (Color a : l.at(p0))
    for (Color b : l.at(p1)) {
      if (adj && a == b) continue;
      PartialColoring phi;
      phi.assign(p0, a);
      phi.assign(p1, b);
      if (is_sufficient(g, l, r.path().vertices, phi)) out.push_back(phi);
    }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// q, q' of Def 1.3: the neighbors of P's endpoints along P (equal for a
// 2-path).
std::pair<Vertex, Vertex> terminal_inner(const PathSpec& p) {
  return {p.vertices[1], p.vertices[p.vertices.size() - 2]};
}

}  // namespace

CrownMembershipReport crown_membership(const Rainbow& r, const PartialColoring& phi) {
  const auto& p = r.path();
  if (p.edge_count() < 2) fail(Errc::BadPath, "Crown needs |E(P)| >= 2");
  auto [q, q2] = terminal_inner(p);

  CrownMembershipReport rep;
  rep.coloring = phi;

  // domain must lie inside V(C) \ {q, q'}
  std::set<Vertex> allowed(r.outer().begin(), r.outer().end());
  allowed.erase(q);
  allowed.erase(q2);
  for (Vertex v : phi.domain())
    if (!allowed.count(v)) return rep;  // all three conditions false

  rep.condition_a = phi.colored(p.front()) && phi.colored(p.back());
  if (p.edge_count() > 3) {
    bool mid = false;
    for (Vertex v : p.interior())
      if (v != q && v != q2 && phi.colored(v)) mid = true;
    rep.condition_a = rep.condition_a && mid;
  }

  ListAssignment residual = residual_lists(r.g(), r.lists(), phi);
  rep.condition_b = true;
  for (Vertex v : p.vertices) {
    if (phi.colored(v)) continue;
    int sz = residual.size(v);
    rep.residual_sizes[v] = sz;
    if (sz < 3) rep.condition_b = false;
  }

  rep.sufficient = is_sufficient(r.g(), r.lists(), p.vertices, phi);
  return rep;
}

namespace {

// Enumerates partial colorings of `base` (each vertex skipped or given a
// list color, ascending), proper, honoring pinned colors and required
// domain; calls sink at each leaf. sink returns false to stop.
struct CrownSearch {
  const Rainbow& r;
  std::vector<Vertex> base;
  const PartialColoring& pinned;
  std::set<Vertex> require_dom;
  std::function<bool(const PartialColoring&)> sink;

  PartialColoring current;

  bool run() {
    for (Vertex v : pinned.domain())
      if (std::find(base.begin(), base.end(), v) == base.end()) return true;  // unsatisfiable pin
    return walk(0);
  }

  bool walk(size_t i) {
    if (i == base.size()) {
      for (Vertex v : require_dom)
        if (!current.colored(v)) return true;
      return sink(current);
    }
    Vertex v = base[i];
    bool may_skip = !pinned.colored(v) && !require_dom.count(v);
    if (may_skip) {
      if (!walk(i + 1)) return false;
    }
    const auto& colors =
        pinned.colored(v) ? std::vector<Color>{pinned.at(v)} : r.lists().at(v);
    for (Color c : colors) {
      bool clash = false;
      for (Vertex u : r.g().rotation(v))
        if (current.colored(u) && current.at(u) == c) {
          clash = true;
          break;
        }
      if (clash) continue;
      current.assign(v, c);
      bool keep = walk(i + 1);
      current.erase(v);
      if (!keep) return false;
    }
    return true;
  }
};

std::vector<Vertex> crown_base(const Rainbow& r) {
  auto [q, q2] = terminal_inner(r.path());
  std::vector<Vertex> base;
  for (Vertex v : r.outer())
    if (v != q && v != q2) base.push_back(v);
  std::sort(base.begin(), base.end());
  return base;
}

}  // namespace

std::vector<PartialColoring> crown_set(const Rainbow& r) {
  if (r.path().edge_count() < 2) fail(Errc::BadPath, "Crown needs |E(P)| >= 2");
  std::vector<PartialColoring> members;
  CrownSearch search{r, crown_base(r), PartialColoring(), {},
                     [&](const PartialColoring& phi) {
                       if (crown_membership(r, phi).member()) members.push_back(phi);
                       return true;
                     }};
  search.run();
  std::sort(members.begin(), members.end());
  return members;
}

std::optional<PartialColoring> crown_find(const Rainbow& r,
                                          const std::vector<Vertex>& require_dom,
                                          const PartialColoring& pinned) {
  if (r.path().edge_count() < 2) fail(Errc::BadPath, "Crown needs |E(P)| >= 2");
  std::optional<PartialColoring> found;
  std::set<Vertex> req(require_dom.begin(), require_dom.end());
  req.insert(r.p0());
  req.insert(r.p1());
  // condition a's mid-vertex clause: when forced, requiring it up front
  // prunes; otherwise membership still checks it.
  CrownSearch search{r, crown_base(r), pinned, req,
                     [&](const PartialColoring& phi) {
                       if (crown_membership(r, phi).member()) {
                         found = phi;
                         return false;
                       }
                       return true;
                     }};
  search.run();
  return found;
}

std::vector<Color> universal_colors(const PlanarEmbedding& g, const ListAssignment& l,
                                    const PathSpec& p, UniversalMode mode) {
  if (p.vertices.size() != 3 || !g.validate_path(p)) fail(Errc::BadPath, "P must be a 2-path");
  Vertex p0 = p.vertices[0], q = p.vertices[1], p1 = p.vertices[2];
  std::vector<Color> out;
  for (Color a : l.at(p0)) {
    bool good = true;
    for (Color b : l.at(q)) {
      if (b == a) continue;
      if (mode == UniversalMode::Universal) {
        for (Color c : l.at(p1)) {
          if (c == b) continue;
          PartialColoring phi;
          phi.assign(p0, a);
          phi.assign(q, b);
          phi.assign(p1, c);
          if (!phi.proper_on(g) || !extend_coloring(g, l, phi, g.vertices())) {
            good = false;
            break;
          }
        }
      } else {
        int distinct = static_cast<int>(lambda_set(g, l, p, 2, a, b).size());
        if (distinct < l.size(p1) - 1) good = false;
      }
      if (!good) break;
    }
    if (good) out.push_back(a);
  }
  return out;
}

namespace {

// induced subgraph of G on `vs` is a path with the given edge count
bool induced_path_of_length(const PlanarEmbedding& g, const std::vector<Vertex>& vs,
                            int edges_wanted) {
  const int k = static_cast<int>(vs.size());
  if (k != edges_wanted + 1) return false;
  int total = 0;
  std::vector<int> deg(k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.adjacent(vs[i], vs[j])) {
        ++total;
        ++deg[i];
        ++deg[j];
      }
  if (total != edges_wanted) return false;
  int ones = 0;
  for (int d : deg) {
    if (d == 1) ++ones;
    else if (d != 2) return false;
  }
  return ones == 2 || (k == 2 && total == 1);
}

}  // namespace

BohmeClassification bohme_classify(const PlanarEmbedding& g, const ListAssignment& l,
                                   const PartialColoring& phi) {
  const auto& outer = g.outer_face();
  const int csize = static_cast<int>(outer.size());
  if (csize != 5 && csize != 6) fail(Errc::HypothesisViolation, "|C| must be 5 or 6");
  if (!is_short_inseparable(g)) fail(Errc::HypothesisViolation, "G must be short-inseparable");

  std::set<Vertex> on_c(outer.begin(), outer.end());
  BohmeClassification out;
  for (Vertex v : g.vertices())
    if (!on_c.count(v)) {
      out.interior.push_back(v);
      if (l.size(v) < 5) fail(Errc::HypothesisViolation, "interior lists must have size 5");
    }
  if (static_cast<int>(phi.size()) != csize) fail(Errc::HypothesisViolation, "phi must color V(C)");
  for (Vertex v : outer)
    if (!phi.colored(v)) fail(Errc::HypothesisViolation, "phi must color V(C)");
  if (!phi.proper_on(g) || !phi.within_lists(l))
    fail(Errc::HypothesisViolation, "phi must be a proper L-coloring of C");

  out.solver_extendable = extend_coloring(g, l, phi, g.vertices()).has_value();
  if (out.solver_extendable) {
    out.kind = BohmeKind::Extendable;
    return out;
  }

  ListAssignment residual = residual_lists(g, l, phi);
  auto c_neighbors = [&](Vertex v) {
    std::vector<Vertex> ns;
    for (Vertex u : g.rotation(v))
      if (on_c.count(u)) ns.push_back(u);
    return ns;
  };

  if (csize == 5) {
    if (out.interior.size() == 1) {
      Vertex v = out.interior[0];
      if (static_cast<int>(c_neighbors(v).size()) == 5 && residual.size(v) == 0) {
        out.kind = BohmeKind::Hub5;
        return out;
      }
    }
    out.kind = BohmeKind::Unclassified;
    return out;
  }

  // |C| = 6
  if (out.interior.size() == 1) {
    Vertex v = out.interior[0];
    if (static_cast<int>(c_neighbors(v).size()) >= 5 && residual.size(v) == 0) {
      out.kind = BohmeKind::LoneVertex6;
      return out;
    }
  } else if (out.interior.size() == 2 && g.adjacent(out.interior[0], out.interior[1])) {
    bool ok = true;
    std::vector<Color> shared;
    for (Vertex v : out.interior) {
      if (residual.size(v) != 1) ok = false;
      if (!induced_path_of_length(g, c_neighbors(v), 3)) ok = false;
      if (ok) {
        if (shared.empty())
          shared = residual.at(v);
        else if (shared != residual.at(v))
          ok = false;
      }
    }
    if (ok) {
      out.kind = BohmeKind::Edge6;
      return out;
    }
  } else if (out.interior.size() == 3 && g.adjacent(out.interior[0], out.interior[1]) &&
             g.adjacent(out.interior[1], out.interior[2]) &&
             g.adjacent(out.interior[0], out.interior[2])) {
    bool ok = true;
    std::vector<Color> shared;
    for (Vertex v : out.interior) {
      if (residual.size(v) != 2) ok = false;
      if (!induced_path_of_length(g, c_neighbors(v), 2)) ok = false;
      if (ok) {
        if (shared.empty())
          shared = residual.at(v);
        else if (shared != residual.at(v))
          ok = false;
      }
    }
    if (ok) {
      out.kind = BohmeKind::Triangle6;
      return out;
    }
  }
  out.kind = BohmeKind::Unclassified;
  return out;
}

}  // namespace crownlab
