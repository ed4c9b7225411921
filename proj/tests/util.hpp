#pragma once

// Test-only oracles, kept independent of the library code paths they check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

#include "sphcode/config.hpp"
#include "sphcode/graphs.hpp"
#include "sphcode/linalg.hpp"

namespace testutil {

// Isomorphism class count via Burnside: average 2^(pair cycles) over S_n.
inline long long burnside_graph_count(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const int pairs = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> pair_list;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pair_list.emplace_back(i, j);
  auto pair_index = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    int idx = 0;
    for (const auto& [x, y] : pair_list) {
      if (x == a && y == b) return idx;
      ++idx;
    }
    return -1;
  };

  unsigned long long total = 0;
  unsigned long long perm_count = 0;
  do {
    std::vector<int> image(pairs);
    for (int p = 0; p < pairs; ++p)
      image[p] = pair_index(perm[pair_list[p].first], perm[pair_list[p].second]);
    std::vector<bool> seen(pairs, false);
    int cycles = 0;
    for (int p = 0; p < pairs; ++p) {
      if (seen[p]) continue;
      ++cycles;
      for (int q = p; !seen[q]; q = image[q]) seen[q] = true;
    }
    total += 1ULL << cycles;
    ++perm_count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return static_cast<long long>(total / perm_count);
}

// Minimum packed form over every permutation, the slow way.
inline std::uint64_t brute_canonical(const sphcode::SimpleGraph& g) {
  std::vector<int> perm(g.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~0ULL;
  do {
    sphcode::SimpleGraph h = sphcode::SimpleGraph::empty(g.n);
    for (int u = 0; u < g.n; ++u)
      for (int v = u + 1; v < g.n; ++v)
        if (g.edge(u, v)) h.set_edge(perm[u], perm[v], true);
    best = std::min(best, h.pack());
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Partition count by direct enumeration with bounded largest part.
inline long long brute_partitions(int n, int max_part = -1) {
  if (max_part < 0) max_part = n;
  if (n == 0) return 1;
  long long total = 0;
  for (int part = std::min(n, max_part); part >= 1; --part)
    total += brute_partitions(n - part, part);
  return total;
}

// Spherical excess (angle sum minus pi) of the triangle a, b, c on S^2.
inline double spherical_excess(const sphcode::Vec& a, const sphcode::Vec& b,
                               const sphcode::Vec& c) {
  auto corner = [](const sphcode::Vec& apex, const sphcode::Vec& p,
                   const sphcode::Vec& q) {
    auto tangent = [&](const sphcode::Vec& to) {
      sphcode::Vec t(3);
      const double d = sphcode::dot(apex, to);
      for (int k = 0; k < 3; ++k) t[k] = to[k] - d * apex[k];
      return sphcode::normalized(t);
    };
    const sphcode::Vec tp = tangent(p), tq = tangent(q);
    return std::acos(std::clamp(sphcode::dot(tp, tq), -1.0, 1.0));
  };
  return corner(a, b, c) + corner(b, c, a) + corner(c, a, b) -
         std::numbers::pi;
}

// Haar-ish random orthogonal matrix by Gram-Schmidt of a Gaussian matrix.
inline sphcode::Matrix random_orthogonal(int n, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  sphcode::Matrix q;
  while (static_cast<int>(q.size()) < n) {
    sphcode::Vec v(n);
    for (double& x : v) x = gauss(rng);
    for (const sphcode::Vec& u : q) {
      const double d = sphcode::dot(v, u);
      for (int k = 0; k < n; ++k) v[k] -= d * u[k];
    }
    if (sphcode::norm(v) > 1e-6) q.push_back(sphcode::normalized(v));
  }
  return q;
}

inline sphcode::SphericalConfig rotated(const sphcode::SphericalConfig& cfg,
                                        const sphcode::Matrix& q) {
  sphcode::Matrix pts;
  for (const sphcode::Vec& p : cfg.points) {
    sphcode::Vec y(cfg.dim, 0.0);
    for (int i = 0; i < cfg.dim; ++i)
      for (int j = 0; j < cfg.dim; ++j) y[i] += q[i][j] * p[j];
    pts.push_back(sphcode::normalized(y));
  }
  return sphcode::SphericalConfig(cfg.dim, pts, cfg.label);
}

}  // namespace testutil
