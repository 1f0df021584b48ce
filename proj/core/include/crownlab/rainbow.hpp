#pragma once

#include <optional>

#include "crownlab/coloring.hpp"
#include "crownlab/embedding.hpp"

namespace crownlab {

// The paper's central object: a plane graph with outer cycle C, a path
// P on C with at least one edge, and list floors 3 on C \ P and 5 off C,
// with nonempty endpoint lists.
class Rainbow {
 public:
  // Validates the bundle (throws HypothesisViolation / BadPath).
  static Rainbow make(PlanarEmbedding g, PathSpec p, ListAssignment l);
  // Skips the list-floor checks; structure (P on C, every vertex listed)
  // is still required. Used for sub-rainbows carved out of a valid one.
  static Rainbow make_unchecked(PlanarEmbedding g, PathSpec p, ListAssignment l);

  const PlanarEmbedding& g() const { return g_; }
  const std::vector<Vertex>& outer() const { return g_.outer_face(); }
  const PathSpec& path() const { return path_; }
  const ListAssignment& lists() const { return lists_; }

  Vertex p0() const { return path_.front(); }
  Vertex p1() const { return path_.back(); }
  bool end_linked() const;
  // true iff all the rainbow list floors hold
  bool floors_ok() const;

  // V(C) \ V(P)
  std::vector<Vertex> c_minus_p() const;
  // V(G) \ V(C)
  std::vector<Vertex> off_c() const;
  // The path C \ interior(P), running from p0 to p1.
  PathSpec c_minus_p_interior() const;

 private:
  Rainbow(PlanarEmbedding g, PathSpec p, ListAssignment l)
      : g_(std::move(g)), path_(std::move(p)), lists_(std::move(l)) {}

  PlanarEmbedding g_;
  PathSpec path_;
  ListAssignment lists_;
};

// Result of the G^Q construction. In the two-vertex case the full
// sub-rainbow (G^Q, C^Q, Q, L) is available; in the one-vertex case only
// the subgraph is defined (a bare path, or Int of a cycle).
struct GQResult {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<Vertex> outer;  // C^Q as a walk (cycle) or path sequence
  std::optional<Rainbow> rainbow;
};

// q_is_cycle: interpret q.vertices as a cycle (closing edge implied).
GQResult subgraph_gq(const Rainbow& r, const PathSpec& q, bool q_is_cycle = false);

}  // namespace crownlab
