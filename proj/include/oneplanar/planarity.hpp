#pragma once

#include <optional>
#include <span>
#include <vector>

#include "oneplanar/graph.hpp"

namespace oneplanar {

/// Per-vertex cyclic order of incident edge ids. A dart is an edge seen from
/// one endpoint; faces are traced by leaving v along e and continuing with
/// the successor of e in the rotation of the far endpoint.
struct RotationSystem {
  std::vector<std::vector<EdgeId>> order;

  friend bool operator==(const RotationSystem&, const RotationSystem&) = default;
};

struct PlanarityVerdict {
  bool planar = false;
  std::optional<RotationSystem> embedding;
};

PlanarityVerdict test_planarity(const Graph& g);

/// Boolean-only fast path used in the search loop; `edges` must form a simple graph on n vertices.
bool is_planar(int n, std::span<const Edge> edges);
std::optional<RotationSystem> planar_embedding(int n, std::span<const Edge> edges);

/// Number of faces traced by the rotation (isolated vertices contribute none).
/// Throws Error{InconsistentRotation} when the rotation does not list every
/// incident edge of a vertex exactly once.
int count_faces(const Graph& g, const RotationSystem& rs);

/// True iff V - E + F = 2 holds for every connected component with at least one edge.
bool euler_check(const Graph& g, const RotationSystem& rs);

}  // namespace oneplanar
