#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "crownlab/types.hpp"

namespace crownlab {

using Edge = std::pair<Vertex, Vertex>;  // normalized: first < second

inline Edge make_edge(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// A path given by its vertex sequence. Consecutive vertices must be
// adjacent in the host graph and no vertex repeats.
struct PathSpec {
  std::vector<Vertex> vertices;

  PathSpec() = default;
  explicit PathSpec(std::vector<Vertex> vs) : vertices(std::move(vs)) {}

  int edge_count() const { return static_cast<int>(vertices.size()) - 1; }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  bool contains(Vertex v) const;
  // The path minus its endpoints (Q ring). Empty when |E| <= 1.
  std::vector<Vertex> interior() const;
  bool operator==(const PathSpec&) const = default;
};

// Plane graph as a rotation system with a designated outer face.
// Immutable after construction; all queries are pure.
class PlanarEmbedding {
 public:
  // Validates: symmetric adjacency, no loops or parallel edges, connected,
  // Euler formula from face tracing, and that outer_face is a traversed
  // face and a simple cycle. Throws Error on violation.
  static PlanarEmbedding build(const std::map<Vertex, std::vector<Vertex>>& rotation,
                               std::vector<Vertex> outer_face);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return edge_count_; }
  int face_count() const { return static_cast<int>(faces_.size()); }
  bool has_vertex(Vertex v) const;
  const std::vector<Vertex>& rotation(Vertex v) const;
  const std::vector<Vertex>& outer_face() const { return outer_; }
  // All face walks from the rotation system; faces()[outer_face_index()]
  // is the outer face.
  const std::vector<std::vector<Vertex>>& faces() const { return faces_; }
  int outer_face_index() const { return outer_index_; }

  bool adjacent(Vertex u, Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(rotation(v).size()); }
  std::vector<Edge> edges() const;

  // Dense index helpers for solver hot paths.
  int index_of(Vertex v) const;
  Vertex vertex_at(int idx) const { return vertices_[idx]; }
  std::uint64_t adjacency_mask(int idx) const { return adj_mask_[idx]; }

  bool on_outer(Vertex v) const;

  // Vertices strictly inside / strictly outside the simple cycle F,
  // relative to the designated outer face (Ext contains the outer face).
  std::vector<Vertex> interior_vertices(const std::vector<Vertex>& cycle) const;
  std::vector<Vertex> exterior_vertices(const std::vector<Vertex>& cycle) const;

  // Int_G(F) / Ext_G(F) as embeddings. Int's outer face is F; Ext keeps
  // this embedding's outer face.
  PlanarEmbedding interior_of(const std::vector<Vertex>& cycle) const;
  PlanarEmbedding exterior_of(const std::vector<Vertex>& cycle) const;

  // Subgraph of the given vertices keeping only the listed edges, with
  // rotation order inherited. outer_face must be a face of the result.
  PlanarEmbedding subgraph(const std::set<Vertex>& keep_vertices,
                           const std::set<Edge>& keep_edges,
                           std::vector<Vertex> outer_face) const;

  bool validate_path(const PathSpec& path) const;
  // True if `path` is a subpath of the outer cycle (consecutive there).
  bool path_on_outer(const PathSpec& path) const;
  // The path C \ interior(P) for a subpath P of the outer cycle: runs
  // from one endpoint of P around C to the other.
  PathSpec outer_minus_path_interior(const PathSpec& path) const;

 private:
  PlanarEmbedding() = default;
  void finish_build();

  std::vector<Vertex> vertices_;
  std::map<Vertex, int> index_;
  std::vector<std::vector<Vertex>> rot_;  // by dense index
  std::vector<std::uint64_t> adj_mask_;
  std::vector<Vertex> outer_;
  std::vector<std::vector<Vertex>> faces_;
  int outer_index_ = -1;
  int edge_count_ = 0;

  // face index of the darts; dart = (u_idx, position in rot_[u_idx])
  std::vector<std::vector<int>> dart_face_;

  std::vector<bool> faces_inside_cycle(const std::vector<Vertex>& cycle) const;
};

// All edges of G with both endpoints on the cycle that are not edges of
// the cycle itself.
std::set<Edge> chords_of_cycle(const PlanarEmbedding& g, const std::vector<Vertex>& cycle);

// Natural Q-partition for a k-chord Q of the outer cycle: G = G0 ∪ G1
// with G0 ∩ G1 = Q. G0 is the side whose outer arc starts at Q's first
// endpoint's predecessor... (deterministically: the side containing the
// outer-cycle successor arc of Q.front()). Throws NotAChord.
std::pair<PlanarEmbedding, PlanarEmbedding> natural_partition(const PlanarEmbedding& g,
                                                              const PathSpec& q);

// Every cycle on <= 4 vertices has all of G on one side.
bool is_short_inseparable(const PlanarEmbedding& g);

enum class WheelKind { BrokenWheel, Wheel, Neither };

struct WheelClass {
  WheelKind kind = WheelKind::Neither;
  std::optional<PathSpec> principal_path;  // BrokenWheel
  std::optional<Vertex> central_vertex;    // Wheel
  int rim_edge_count = 0;                  // |E(G - center)| for broken wheels
};

// Classifies G as a broken wheel with the given principal path, a wheel,
// or neither. For |V(G)| <= 4 the principal path is ambiguous, so the
// caller should supply the candidate; without one the classifier picks
// the least-id center that works.
WheelClass classify_wheel(const PlanarEmbedding& g,
                          const std::optional<PathSpec>& principal = std::nullopt);

}  // namespace crownlab
