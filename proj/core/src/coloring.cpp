#include "crownlab/coloring.hpp"

#include <algorithm>

namespace crownlab {

ListAssignment::ListAssignment(std::map<Vertex, std::vector<Color>> lists)
    : lists_(std::move(lists)) {
  for (auto& [v, colors] : lists_) {
    std::sort(colors.begin(), colors.end());
    colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
    for (Color c : colors)
      if (c < 0) fail(Errc::ColorNotInList, "negative color id");
  }
}

const std::vector<Color>& ListAssignment::at(Vertex v) const {
  auto it = lists_.find(v);
  if (it == lists_.end()) fail(Errc::ColorNotInList, "vertex has no list");
  return it->second;
}

bool ListAssignment::contains(Vertex v, Color c) const {
  auto it = lists_.find(v);
  if (it == lists_.end()) return false;
  return std::binary_search(it->second.begin(), it->second.end(), c);
}

void ListAssignment::set(Vertex v, std::vector<Color> colors) {
  std::sort(colors.begin(), colors.end());
  colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
  lists_[v] = std::move(colors);
}

std::vector<Color> ListAssignment::palette() const {
  std::vector<Color> all;
  for (const auto& [v, colors] : lists_)
    all.insert(all.end(), colors.begin(), colors.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

std::vector<Vertex> PartialColoring::domain() const {
  std::vector<Vertex> d;
  d.reserve(assignment_.size());
  for (const auto& [v, _] : assignment_) d.push_back(v);
  return d;
}

bool PartialColoring::proper_on(const PlanarEmbedding& g) const {
  for (const auto& [v, c] : assignment_) {
    if (!g.has_vertex(v)) return false;
    for (Vertex u : g.rotation(v)) {
      auto it = assignment_.find(u);
      if (it != assignment_.end() && it->second == c) return false;
    }
  }
  return true;
}

bool PartialColoring::within_lists(const ListAssignment& l) const {
  for (const auto& [v, c] : assignment_)
    if (!l.contains(v, c)) return false;
  return true;
}

ListAssignment residual_lists(const PlanarEmbedding& g, const ListAssignment& l,
                              const PartialColoring& phi) {
  if (!phi.proper_on(g) || !phi.within_lists(l))
    fail(Errc::ImproperColoring, "phi is not a proper partial L-coloring");
  std::map<Vertex, std::vector<Color>> out;
  for (Vertex v : g.vertices()) {
    if (phi.colored(v)) continue;
    std::vector<Color> keep;
    for (Color c : l.at(v)) {
      bool blocked = false;
      for (Vertex u : g.rotation(v))
        if (phi.colored(u) && phi.at(u) == c) {
          blocked = true;
          break;
        }
      if (!blocked) keep.push_back(c);
    }
    out[v] = std::move(keep);
  }
  return ListAssignment(std::move(out));
}

}  // namespace crownlab
