#pragma once

#include <map>
#include <optional>
#include <vector>

#include "crownlab/rainbow.hpp"
#include "crownlab/solver.hpp"

namespace crownlab {

// phi is (H,G)-sufficient: every proper extension of phi to an
// L-coloring of dom(phi) ∪ h_vertices extends to L-color all of G.
// Decided by full double enumeration.
bool is_sufficient(const PlanarEmbedding& g, const ListAssignment& l,
                   const std::vector<Vertex>& h_vertices, const PartialColoring& phi);

// End_L(P, G): the (P,G)-sufficient L-colorings of P's endpoint pair,
// sorted lexicographically.
std::vector<PartialColoring> end_set(const Rainbow& r);

struct CrownMembershipReport {
  PartialColoring coloring;
  bool sufficient = false;
  bool condition_a = false;  // Def 1.3 a): endpoints colored (+ mid clause)
  bool condition_b = false;  // Def 1.3 b): uncolored P vertices keep 3 colors
  std::map<Vertex, int> residual_sizes;  // uncolored P vertices
  bool member() const { return sufficient && condition_a && condition_b; }
};

CrownMembershipReport crown_membership(const Rainbow& r, const PartialColoring& phi);

// Crown_L(P, G): all members, sorted lexicographically. Requires
// |E(P)| >= 2.
std::vector<PartialColoring> crown_set(const Rainbow& r);

// First crown member satisfying the extra constraints, or nullopt.
// require_dom: vertices that must be in the domain; pinned: colors the
// member must use. Searches domains smallest-first, colorings in
// ascending order, so the witness is deterministic.
std::optional<PartialColoring> crown_find(const Rainbow& r,
                                          const std::vector<Vertex>& require_dom,
                                          const PartialColoring& pinned);

enum class UniversalMode { Universal, Almost };

// The (P,G)-universal (or almost universal) colors of L(p0) for a 2-path
// P = p0 q p1.
std::vector<Color> universal_colors(const PlanarEmbedding& g, const ListAssignment& l,
                                    const PathSpec& p, UniversalMode mode);

enum class BohmeKind {
  Extendable,
  Hub5,           // |C|=5: lone interior vertex adjacent to all of C, empty residual
  LoneVertex6,    // |C|=6 case i
  Edge6,          // |C|=6 case ii
  Triangle6,      // |C|=6 case iii
  Unclassified,   // non-extendable but matching no listed structure
};

struct BohmeClassification {
  BohmeKind kind = BohmeKind::Unclassified;
  std::vector<Vertex> interior;  // V(G \ C)
  bool solver_extendable = false;
};

// Classifies a full L-coloring of the outer cycle of a short-inseparable
// embedding with |C| in {5,6} and 5-lists inside, per the obstruction
// catalogue. Cross-checked against the solver. Throws
// HypothesisViolation when the preconditions fail.
BohmeClassification bohme_classify(const PlanarEmbedding& g, const ListAssignment& l,
                                   const PartialColoring& phi);

}  // namespace crownlab
