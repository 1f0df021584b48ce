#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "crownlab/coloring.hpp"
#include "crownlab/embedding.hpp"

namespace crownlab {

// Dense (index-based) solving core shared by the public operations and
// the verifiers' hot paths. Build once per (G, L) and reuse.
class DenseSolver {
 public:
  DenseSolver(const PlanarEmbedding& g, const ListAssignment& l);

  int n() const { return n_; }
  int palette_size() const { return static_cast<int>(palette_.size()); }
  const std::vector<Color>& palette() const { return palette_; }
  Color color_at(int ci) const { return palette_[ci]; }
  int color_index(Color c) const;
  std::uint64_t adj(int vi) const { return adj_[vi]; }
  ColorMask list_mask(int vi) const { return base_[vi]; }

  // Availability masks for solving `todo` under a fixed partial
  // assignment on the other vertices. dense_colors[vi] = color index or
  // -1. Returns false if some todo vertex already has an empty mask.
  bool restrict(const std::vector<int>& dense_colors, std::uint64_t todo,
                std::vector<ColorMask>& avail) const;

  // Chronological backtracking, most-constrained-vertex first (ties to
  // the lowest index), colors tried ascending. Complete. avail is
  // clobbered. witness, if given, receives color indices for todo.
  bool solve(std::vector<ColorMask>& avail, std::uint64_t todo,
             std::vector<int>* witness = nullptr) const;

  // Emits every proper completion exactly once, vertices filled in
  // ascending index order, colors ascending: lexicographic emission.
  // Callback returns false to stop; enumerate returns false if stopped.
  bool enumerate(std::vector<ColorMask>& avail, std::uint64_t todo,
                 std::vector<int>& scratch_assign,
                 const std::function<bool(const std::vector<int>&)>& cb) const;

 private:
  int n_;
  std::vector<std::uint64_t> adj_;
  std::vector<ColorMask> base_;
  std::vector<Color> palette_;
};

// Returns a proper L-coloring of `targets` extending phi, or nullopt iff
// none exists. targets must contain dom(phi).
std::optional<PartialColoring> extend_coloring(const PlanarEmbedding& g, const ListAssignment& l,
                                               const PartialColoring& phi,
                                               const std::vector<Vertex>& targets);

// All proper extensions of phi to `domain`, each emitted once, ascending
// lexicographic by (vertex id, color id). Callback returns false to stop.
void enumerate_extensions(const PlanarEmbedding& g, const ListAssignment& l,
                          const PartialColoring& phi, const std::vector<Vertex>& domain,
                          const std::function<bool(const PartialColoring&)>& cb);

long long count_extensions(const PlanarEmbedding& g, const ListAssignment& l,
                           const PartialColoring& phi, const std::vector<Vertex>& domain);

// Lambda set for a 2-path p1 p2 p3: the colors of the free position such
// that the completed coloring of P extends to L-color all of G.
// free_position is 0, 1, or 2; fixed_a/fixed_b are the colors of the two
// fixed positions in path order. Throws ColorNotInList if a fixed color
// is not in its list.
std::vector<Color> lambda_set(const PlanarEmbedding& g, const ListAssignment& l,
                              const PathSpec& p, int free_position, Color fixed_a, Color fixed_b);

}  // namespace crownlab
