#pragma once

#include <map>
#include <vector>

#include "crownlab/embedding.hpp"
#include "crownlab/types.hpp"

namespace crownlab {

// Per-vertex finite color sets. Lists are kept sorted ascending.
class ListAssignment {
 public:
  ListAssignment() = default;
  explicit ListAssignment(std::map<Vertex, std::vector<Color>> lists);

  const std::vector<Color>& at(Vertex v) const;
  bool has(Vertex v) const { return lists_.count(v) > 0; }
  bool contains(Vertex v, Color c) const;
  void set(Vertex v, std::vector<Color> colors);
  int size(Vertex v) const { return static_cast<int>(at(v).size()); }
  const std::map<Vertex, std::vector<Color>>& lists() const { return lists_; }

  // Union of all lists, sorted.
  std::vector<Color> palette() const;

 private:
  std::map<Vertex, std::vector<Color>> lists_;
};

// Partial map vertex -> color, kept sorted by vertex id.
class PartialColoring {
 public:
  PartialColoring() = default;
  explicit PartialColoring(std::map<Vertex, Color> assignment)
      : assignment_(std::move(assignment)) {}

  bool colored(Vertex v) const { return assignment_.count(v) > 0; }
  Color at(Vertex v) const { return assignment_.at(v); }
  void assign(Vertex v, Color c) { assignment_[v] = c; }
  void erase(Vertex v) { assignment_.erase(v); }
  int size() const { return static_cast<int>(assignment_.size()); }
  bool empty() const { return assignment_.empty(); }
  const std::map<Vertex, Color>& map() const { return assignment_; }
  std::vector<Vertex> domain() const;

  bool proper_on(const PlanarEmbedding& g) const;
  bool within_lists(const ListAssignment& l) const;

  auto operator<=>(const PartialColoring&) const = default;

 private:
  std::map<Vertex, Color> assignment_;
};

// L_phi: residual lists on the uncolored vertices. Throws
// ImproperColoring when phi clashes on an edge or leaves its lists.
ListAssignment residual_lists(const PlanarEmbedding& g, const ListAssignment& l,
                              const PartialColoring& phi);

}  // namespace crownlab
