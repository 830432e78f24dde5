#pragma once

#include <optional>
#include <vector>

#include "primegraph/graph.hpp"

namespace primegraph {

struct OrientationOptions {
  // Graphs with more edges are declined with GuardExceeded unless force is set.
  std::size_t max_edges = 64;
  bool force = false;
  // Stop after this many orientations; 0 enumerates all of them.
  std::size_t limit = 0;
};

struct OrientationSet {
  Graph graph;
  // Distinct transitive orientations, in branch order (each edge u < v is
  // first tried as u < v).
  std::vector<Poset> orientations;
};

OrientationSet transitive_orientations(const Graph& g, const OrientationOptions& options = {});
std::optional<Poset> transitive_orientation(const Graph& g, const OrientationOptions& options = {});
bool is_comparability(const Graph& g, const OrientationOptions& options = {});

// Transitive orientations of the incomparability graph.
std::vector<Poset> order_complements(const Poset& p, const OrientationOptions& options = {});

struct DimensionOptions {
  std::size_t k_max = 4;
  std::size_t max_n = 14;
};

struct DimensionResult {
  // Empty when the dimension exceeds k_max.
  std::optional<std::size_t> dimension;
  // Linear extensions (least element first) whose intersection is the poset.
  std::vector<std::vector<Vertex>> realizer;
};

// Exact search: critical pairs are distributed over k linear extensions for
// k = 1, 2, ..., k_max. Throws GuardExceeded when p.size() > max_n and
// std::invalid_argument when k_max is 0 or above 4.
DimensionResult order_dimension(const Poset& p, const DimensionOptions& options = {});

// Whether the listed linear orders intersect to p.
bool is_realizer(const Poset& p, const std::vector<std::vector<Vertex>>& extensions);

}  // namespace primegraph
