#include "crownlab/solver.hpp"

#include <algorithm>

namespace crownlab {

DenseSolver::DenseSolver(const PlanarEmbedding& g, const ListAssignment& l) {
  n_ = g.vertex_count();
  palette_.clear();
  for (Vertex v : g.vertices()) {
    const auto& colors = l.at(v);
    palette_.insert(palette_.end(), colors.begin(), colors.end());
  }
  std::sort(palette_.begin(), palette_.end());
  palette_.erase(std::unique(palette_.begin(), palette_.end()), palette_.end());
  if (palette_.size() > 64) fail(Errc::CapExceeded, "more than 64 distinct colors");

  adj_.resize(n_);
  base_.assign(n_, 0);
  for (int vi = 0; vi < n_; ++vi) {
    adj_[vi] = g.adjacency_mask(vi);
    for (Color c : l.at(g.vertex_at(vi))) base_[vi] |= 1ull << color_index(c);
  }
}

int DenseSolver::color_index(Color c) const {
  auto it = std::lower_bound(palette_.begin(), palette_.end(), c);
  if (it == palette_.end() || *it != c) return -1;
  return static_cast<int>(it - palette_.begin());
}

bool DenseSolver::restrict(const std::vector<int>& dense_colors, std::uint64_t todo,
                           std::vector<ColorMask>& avail) const {
  avail.assign(n_, 0);
  bool ok = true;
  for (int vi = 0; vi < n_; ++vi) {
    if (!(todo >> vi & 1)) continue;
    ColorMask m = base_[vi];
    std::uint64_t nb = adj_[vi] & ~todo;
    while (nb) {
      int u = lowest_bit(nb);
      nb &= nb - 1;
      if (dense_colors[u] >= 0) m &= ~(1ull << dense_colors[u]);
    }
    avail[vi] = m;
    if (m == 0) ok = false;
  }
  return ok;
}

bool DenseSolver::solve(std::vector<ColorMask>& avail, std::uint64_t todo,
                        std::vector<int>* witness) const {
  if (todo == 0) return true;
  // most-constrained vertex, lowest index on ties
  int best = -1, best_cnt = 65;
  std::uint64_t scan = todo;
  while (scan) {
    int v = lowest_bit(scan);
    scan &= scan - 1;
    int cnt = popcount(avail[v]);
    if (cnt == 0) return false;
    if (cnt < best_cnt) {
      best_cnt = cnt;
      best = v;
      if (cnt == 1) break;
    }
  }
  std::uint64_t rest = todo & ~(1ull << best);
  ColorMask options = avail[best];
  while (options) {
    int c = lowest_bit(options);
    options &= options - 1;
    ColorMask bit = 1ull << c;
    // forward check with undo
    std::uint64_t touched = 0;
    bool dead = false;
    std::uint64_t nb = adj_[best] & rest;
    while (nb) {
      int u = lowest_bit(nb);
      nb &= nb - 1;
      if (avail[u] & bit) {
        avail[u] &= ~bit;
        touched |= 1ull << u;
        if (avail[u] == 0) {
          dead = true;
          break;
        }
      }
    }
    if (!dead && solve(avail, rest, witness)) {
      if (witness) (*witness)[best] = c;
      return true;
    }
    while (touched) {
      int u = lowest_bit(touched);
      touched &= touched - 1;
      avail[u] |= bit;
    }
  }
  return false;
}

bool DenseSolver::enumerate(std::vector<ColorMask>& avail, std::uint64_t todo,
                            std::vector<int>& assign,
                            const std::function<bool(const std::vector<int>&)>& cb) const {
  if (todo == 0) return cb(assign);
  int v = lowest_bit(todo);
  std::uint64_t rest = todo & ~(1ull << v);
  ColorMask options = avail[v];
  while (options) {
    int c = lowest_bit(options);
    options &= options - 1;
    ColorMask bit = 1ull << c;
    std::uint64_t touched = 0;
    bool dead = false;
    std::uint64_t nb = adj_[v] & rest;
    while (nb) {
      int u = lowest_bit(nb);
      nb &= nb - 1;
      if (avail[u] & bit) {
        avail[u] &= ~bit;
        touched |= 1ull << u;
        if (avail[u] == 0) dead = true;
      }
    }
    assign[v] = c;
    bool keep_going = dead ? true : enumerate(avail, rest, assign, cb);
    assign[v] = -1;
    while (touched) {
      int u = lowest_bit(touched);
      touched &= touched - 1;
      avail[u] |= bit;
    }
    if (!keep_going) return false;
  }
  return true;
}

namespace {

struct Prepared {
  DenseSolver solver;
  std::vector<int> colors;  // dense color index per vertex, -1 uncolored
  std::uint64_t todo = 0;

  Prepared(const PlanarEmbedding& g, const ListAssignment& l, const PartialColoring& phi,
           const std::vector<Vertex>& region)
      : solver(g, l), colors(g.vertex_count(), -1) {
    if (!phi.proper_on(g) || !phi.within_lists(l))
      fail(Errc::ImproperColoring, "phi is not a proper partial L-coloring");
    for (const auto& [v, c] : phi.map()) colors[g.index_of(v)] = solver.color_index(c);
    for (Vertex v : region) {
      int vi = g.index_of(v);
      if (colors[vi] < 0) todo |= 1ull << vi;
    }
  }
};

}  // namespace

std::optional<PartialColoring> extend_coloring(const PlanarEmbedding& g, const ListAssignment& l,
                                               const PartialColoring& phi,
                                               const std::vector<Vertex>& targets) {
  for (Vertex v : phi.domain())
    if (std::find(targets.begin(), targets.end(), v) == targets.end())
      fail(Errc::ImproperColoring, "targets must contain dom(phi)");
  Prepared p(g, l, phi, targets);
  std::vector<ColorMask> avail;
  if (!p.solver.restrict(p.colors, p.todo, avail)) return std::nullopt;
  std::vector<int> witness(g.vertex_count(), -1);
  if (!p.solver.solve(avail, p.todo, &witness)) return std::nullopt;
  PartialColoring out = phi;
  for (int vi = 0; vi < g.vertex_count(); ++vi)
    if (p.todo >> vi & 1) out.assign(g.vertex_at(vi), p.solver.color_at(witness[vi]));
  return out;
}

void enumerate_extensions(const PlanarEmbedding& g, const ListAssignment& l,
                          const PartialColoring& phi, const std::vector<Vertex>& domain,
                          const std::function<bool(const PartialColoring&)>& cb) {
  Prepared p(g, l, phi, domain);
  std::vector<ColorMask> avail;
  if (!p.solver.restrict(p.colors, p.todo, avail)) return;
  std::vector<int> assign(g.vertex_count(), -1);
  p.solver.enumerate(avail, p.todo, assign, [&](const std::vector<int>& dense) {
    PartialColoring ext = phi;
    for (int vi = 0; vi < g.vertex_count(); ++vi)
      if (p.todo >> vi & 1) ext.assign(g.vertex_at(vi), p.solver.color_at(dense[vi]));
    return cb(ext);
  });
}

long long count_extensions(const PlanarEmbedding& g, const ListAssignment& l,
                           const PartialColoring& phi, const std::vector<Vertex>& domain) {
  Prepared p(g, l, phi, domain);
  std::vector<ColorMask> avail;
  if (!p.solver.restrict(p.colors, p.todo, avail)) return 0;
  long long count = 0;
  std::vector<int> assign(g.vertex_count(), -1);
  p.solver.enumerate(avail, p.todo, assign, [&](const std::vector<int>&) {
    ++count;
    return true;
  });
  return count;
}

std::vector<Color> lambda_set(const PlanarEmbedding& g, const ListAssignment& l,
                              const PathSpec& p, int free_position, Color fixed_a,
                              Color fixed_b) {
  if (p.vertices.size() != 3 || !g.validate_path(p)) fail(Errc::BadPath, "P must be a 2-path");
  if (free_position < 0 || free_position > 2) fail(Errc::BadPath, "free position out of range");
  std::vector<int> fixed_pos;
  for (int i = 0; i < 3; ++i)
    if (i != free_position) fixed_pos.push_back(i);
  Color fixed[2] = {fixed_a, fixed_b};
  for (int k = 0; k < 2; ++k)
    if (!l.contains(p.vertices[fixed_pos[k]], fixed[k]))
      fail(Errc::ColorNotInList, "fixed color not in its list");

  Vertex free_v = p.vertices[free_position];
  std::vector<Color> out;
  for (Color d : l.at(free_v)) {
    PartialColoring phi;
    phi.assign(p.vertices[fixed_pos[0]], fixed[0]);
    phi.assign(p.vertices[fixed_pos[1]], fixed[1]);
    phi.assign(free_v, d);
    if (!phi.proper_on(g)) continue;
    if (extend_coloring(g, l, phi, g.vertices())) out.push_back(d);
  }
  return out;
}

}  // namespace crownlab
