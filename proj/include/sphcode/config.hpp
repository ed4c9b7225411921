#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "sphcode/linalg.hpp"

namespace sphcode {

/// Finite set of unit vectors on the sphere S^{dim-1}. Points must be unit
/// length to 1e-12 and pairwise distinct (angular separation above 1e-9).
struct SphericalConfig {
  SphericalConfig(int dim, Matrix points, std::string label = {});

  int dim;
  Matrix points;
  std::string label;

  int size() const { return static_cast<int>(points.size()); }
};

/// Angle arccos(<a, b>) with the inner product clamped to [-1, 1].
double angular_distance(const Vec& a, const Vec& b);

/// Minimum pairwise angular distance; needs at least two points.
double psi(const SphericalConfig& cfg);

/// Exact classical configurations from integer, half-integer or golden-ratio
/// coordinates, normalized once. Labels: triangle, tetrahedron, octahedron,
/// cube, icosahedron, 24cell, 600cell, e8roots.
SphericalConfig named_config(const std::string& label);
const std::vector<std::string>& named_config_labels();

/// True iff every pairwise angular distance is at least phi - 1e-12, which
/// certifies the lower bound A(dim, phi) >= size.
bool verify_code(const SphericalConfig& cfg, double phi);

/// Edges at the minimum distance: pairs within tol of psi(cfg).
struct ContactGraph {
  SphericalConfig config;
  double psi = 0.0;
  double tol = 0.0;
  std::vector<std::pair<int, int>> edges;
};

ContactGraph contact_graph(const SphericalConfig& cfg, double tol);

/// Canonical file format: {"dim": n, "points": [[...], ...]}.
nlohmann::json config_json(const SphericalConfig& cfg);
SphericalConfig config_from_json(const nlohmann::json& j);

}  // namespace sphcode
