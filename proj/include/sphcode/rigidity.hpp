#pragma once

#include <optional>
#include <utility>

#include "sphcode/config.hpp"

namespace sphcode {

/// Verdict of the single-vertex rigidity test. When reducible, the reported
/// direction is a unit tangent at the movable vertex whose directional
/// derivative of angular distance is at least 1e-8 toward every contact.
struct RigidityReport {
  bool irreducible = true;
  std::optional<int> movable_vertex;
  std::optional<Vec> improving_direction;
  double directional_gain = 0.0;
};

/// A configuration is locally rigid (its contact graph irreducible) when no
/// single vertex admits a tangent direction that strictly lengthens all of
/// its contact edges to first order. Decided per vertex by a small LP in the
/// tangent space; contacts at distance pi have zero gradient and pin the
/// vertex unconditionally.
RigidityReport is_irreducible(const SphericalConfig& cfg, double tol = 1e-9);

struct AscentTrace {
  std::vector<double> accepted_psi;
};

/// Maximizes the minimum pairwise angle by smoothed ascent with a doubling
/// beta schedule (2^4 .. 2^14) followed by per-vertex line-search polishing.
/// Accepted steps never decrease the minimum angle; the best restart wins,
/// ties broken by the lexicographically smallest canonical orientation.
/// Restart r perturbs the initial points with noise seeded by seed + r
/// (restart 0 starts from init unchanged).
SphericalConfig maximize_min_angle(const SphericalConfig& init, int restarts,
                                   unsigned long long seed, int iters = 150,
                                   AscentTrace* trace = nullptr);

/// Best minimum angle over `trials` random starts, compared against the
/// closed-form optimum for 3, 4, 6 or 12 points (match within 1e-5 rad).
std::pair<double, bool> tammes_check(int n_points, int trials,
                                     unsigned long long seed, int jobs = 1);

/// Uniform random configuration, deterministic in the seed.
SphericalConfig random_config(int dim, int n_points, unsigned long long seed);

}  // namespace sphcode
