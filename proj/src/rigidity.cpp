#include "sphcode/rigidity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "sphcode/geom_bounds.hpp"
#include "sphcode/parallel.hpp"
#include "sphcode/simplex.hpp"

namespace sphcode {

namespace {

constexpr double kMoveEps = 1e-8;

double ang(const Vec& a, const Vec& b) { return angular_distance(a, b); }

double psi_points(const Matrix& pts) {
  double best = std::numbers::pi;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      best = std::min(best, ang(pts[i], pts[j]));
  return best;
}

// Orthonormal basis of the tangent space at a unit vector x.
Matrix tangent_basis(const Vec& x) {
  const int n = static_cast<int>(x.size());
  Matrix basis;
  for (int axis = 0; axis < n && static_cast<int>(basis.size()) < n - 1; ++axis) {
    Vec v(n, 0.0);
    v[axis] = 1.0;
    const double cx = dot(v, x);
    for (int k = 0; k < n; ++k) v[k] -= cx * x[k];
    for (const Vec& b : basis) {
      const double cb = dot(v, b);
      for (int k = 0; k < n; ++k) v[k] -= cb * b[k];
    }
    const double nv = norm(v);
    if (nv > 1e-10) {
      for (double& t : v) t /= nv;
      basis.push_back(std::move(v));
    }
  }
  if (static_cast<int>(basis.size()) != n - 1)
    throw std::logic_error("tangent_basis: degenerate frame");
  return basis;
}

// Unit tangent at pts[i] pointing away from pts[j]; the zero vector when the
// pair is antipodal (the distance gradient vanishes there).
Vec away_gradient(const Matrix& pts, int i, int j) {
  const int n = static_cast<int>(pts[i].size());
  const double c = std::clamp(dot(pts[i], pts[j]), -1.0, 1.0);
  Vec t(n);
  for (int k = 0; k < n; ++k) t[k] = -pts[j][k] + c * pts[i][k];
  const double nt = norm(t);
  if (nt > 1e-12) {
    for (double& v : t) v /= nt;
  } else {
    std::fill(t.begin(), t.end(), 0.0);
  }
  return t;
}

struct MoveCheck {
  double lp_value = 0.0;
  double gain = -std::numeric_limits<double>::infinity();
  std::optional<Vec> direction;  // ambient unit tangent, set when gain >= eps
};

// Maximizes s over unit-box tangent moves w with <w, g> >= s for the away
// gradient g of every contact. The vertex can be shifted iff some direction
// lengthens all its contact edges at rate eps or better.
MoveCheck vertex_move(const Matrix& pts, int i, const std::vector<int>& contacts,
                      double eps) {
  const int n = static_cast<int>(pts[i].size());
  const Matrix basis = tangent_basis(pts[i]);
  const int nb = static_cast<int>(basis.size());

  MoveCheck out;
  if (contacts.empty()) {
    out.lp_value = 1.0;
    out.gain = std::numeric_limits<double>::infinity();
    out.direction = basis[0];
    return out;
  }

  Matrix grads;
  grads.reserve(contacts.size());
  for (int j : contacts) grads.push_back(away_gradient(pts, i, j));

  const int nv = 2 * nb + 1;  // w+, w-, s
  Matrix a;
  Vec b;
  for (const Vec& g : grads) {
    Vec row(nv, 0.0);
    for (int k = 0; k < nb; ++k) {
      const double gb = dot(g, basis[k]);
      row[k] = -gb;
      row[nb + k] = gb;
    }
    row[2 * nb] = 1.0;  // s - <w, g> <= 0
    a.push_back(std::move(row));
    b.push_back(0.0);
  }
  for (int v = 0; v < 2 * nb; ++v) {
    Vec row(nv, 0.0);
    row[v] = 1.0;
    a.push_back(std::move(row));
    b.push_back(1.0);
  }
  {
    Vec row(nv, 0.0);
    row[2 * nb] = 1.0;
    a.push_back(std::move(row));
    b.push_back(2.0);
  }
  Vec c(nv, 0.0);
  c[2 * nb] = 1.0;

  const LpSolution sol = simplex_max(a, b, c);
  if (sol.status != LpStatus::optimal) return out;
  out.lp_value = sol.x[2 * nb];
  if (out.lp_value < 1e-12) return out;

  Vec w(n, 0.0);
  for (int k = 0; k < nb; ++k) {
    const double coef = sol.x[k] - sol.x[nb + k];
    for (int d = 0; d < n; ++d) w[d] += coef * basis[k][d];
  }
  const double nw = norm(w);
  if (nw < 1e-14) return out;
  for (double& v : w) v /= nw;

  double gain = std::numeric_limits<double>::infinity();
  for (const Vec& g : grads) gain = std::min(gain, dot(w, g));
  out.gain = gain;
  if (gain >= eps) out.direction = std::move(w);
  return out;
}

Vec projected_step(const Vec& p, const Vec& dir, double step) {
  Vec q(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) q[k] = p[k] + step * dir[k];
  return normalized(q);
}

struct SoftMin {
  double value = 0.0;
  Matrix grad;
};

double softmin_value(const Matrix& pts, double beta) {
  double dmin = std::numeric_limits<double>::infinity();
  std::vector<double> dists;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const double d = ang(pts[i], pts[j]);
      dists.push_back(d);
      dmin = std::min(dmin, d);
    }
  double s = 0.0;
  for (double d : dists) s += std::exp(-beta * (d - dmin));
  return dmin - std::log(s) / beta;
}

SoftMin softmin(const Matrix& pts, double beta) {
  const int count = static_cast<int>(pts.size());
  const int n = static_cast<int>(pts[0].size());
  SoftMin sm;
  sm.grad.assign(count, Vec(n, 0.0));

  double dmin = std::numeric_limits<double>::infinity();
  Matrix dist(count, Vec(count, 0.0));
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j) {
      dist[i][j] = dist[j][i] = ang(pts[i], pts[j]);
      dmin = std::min(dmin, dist[i][j]);
    }
  double s = 0.0;
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j) s += std::exp(-beta * (dist[i][j] - dmin));
  sm.value = dmin - std::log(s) / beta;

  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j) {
      if (j == i) continue;
      const double w = std::exp(-beta * (dist[i][j] - dmin)) / s;
      if (w < 1e-300) continue;
      Vec g = away_gradient(pts, i, j);
      if (norm(g) < 0.5 && dist[i][j] < 1e-7) {
        // coincident pair: push along a fixed tangent axis
        g = tangent_basis(pts[i])[static_cast<std::size_t>(i + j) %
                                  (pts[i].size() - 1)];
      }
      for (int k = 0; k < n; ++k) sm.grad[i][k] += w * g[k];
    }
  return sm;
}

void record(AscentTrace* trace, const Matrix& pts) {
  if (trace) trace->accepted_psi.push_back(psi_points(pts));
}

// Smoothed max-min ascent; a candidate step is accepted only when it improves
// the smoothed objective and does not lower the true minimum angle.
void ascent_stages(Matrix& pts, int iters, AscentTrace* trace) {
  for (double beta = 16.0; beta <= 16384.0; beta *= 2.0) {
    double eta = 0.25;
    for (int accepted = 0; accepted < iters;) {
      const SoftMin sm = softmin(pts, beta);
      const double cur_psi = psi_points(pts);
      bool ok = false;
      for (double step = eta; step > 1e-10; step *= 0.5) {
        Matrix cand(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i)
          cand[i] = projected_step(pts[i], sm.grad[i], step);
        if (psi_points(cand) >= cur_psi &&
            softmin_value(cand, beta) > sm.value + 1e-15) {
          pts = std::move(cand);
          eta = std::min(step * 2.0, 1.0);
          ok = true;
          break;
        }
      }
      if (!ok) break;
      ++accepted;
      record(trace, pts);
    }
  }
}

// Gauss-Seidel sharpening: move one vertex at a time along its LP direction,
// accepting only steps that raise the vertex's own minimum distance. The
// slack that selects the critical neighbor set shrinks as sweeps stall.
void polish(Matrix& pts, AscentTrace* trace) {
  const int count = static_cast<int>(pts.size());
  double slack = 1e-2;
  for (int sweep = 0; sweep < 160; ++sweep) {
    bool improved = false;
    const double ps = psi_points(pts);
    for (int i = 0; i < count; ++i) {
      std::vector<int> crit;
      double local_min = std::numeric_limits<double>::infinity();
      for (int j = 0; j < count; ++j) {
        if (j == i) continue;
        const double d = ang(pts[i], pts[j]);
        local_min = std::min(local_min, d);
        if (d <= ps + slack) crit.push_back(j);
      }
      if (crit.empty()) continue;
      const MoveCheck mc = vertex_move(pts, i, crit, 1e-12);
      if (!mc.direction) continue;
      for (double step = 0.25; step > 1e-12; step *= 0.5) {
        const Vec cand = projected_step(pts[i], *mc.direction, step);
        double cand_min = std::numeric_limits<double>::infinity();
        for (int j = 0; j < count; ++j)
          if (j != i) cand_min = std::min(cand_min, ang(cand, pts[j]));
        if (cand_min > local_min + 1e-15) {
          pts[i] = cand;
          improved = true;
          record(trace, pts);
          break;
        }
      }
    }
    if (!improved) {
      slack *= 0.5;
      if (slack < 1e-9) break;
    }
  }
}

// Reflect the first point to the pole and the second onto the e_0 meridian,
// then sort; used only to break ties between equally good restarts.
Matrix canonical_orientation(Matrix pts) {
  const int n = static_cast<int>(pts[0].size());
  auto reflect_all = [&](const Vec& from, const Vec& to, int dims) {
    Vec w(dims);
    double nw2 = 0.0;
    for (int k = 0; k < dims; ++k) {
      w[k] = from[k] - to[k];
      nw2 += w[k] * w[k];
    }
    if (nw2 < 1e-24) return;
    for (Vec& p : pts) {
      double c = 0.0;
      for (int k = 0; k < dims; ++k) c += p[k] * w[k];
      c = 2.0 * c / nw2;
      for (int k = 0; k < dims; ++k) p[k] -= c * w[k];
    }
  };

  Vec pole(n, 0.0);
  pole[n - 1] = 1.0;
  reflect_all(pts[0], pole, n);

  if (pts.size() >= 2) {
    Vec proj(pts[1].begin(), pts[1].end() - 1);
    const double r = norm(proj);
    if (r > 1e-9) {
      Vec target(n - 1, 0.0);
      target[0] = r;
      reflect_all(proj, target, n - 1);
    }
  }
  for (Vec& p : pts) p = normalized(p);
  std::sort(pts.begin(), pts.end());
  return pts;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

void perturb(Matrix& pts, std::uint64_t seed) {
  std::mt19937_64 rng(mix_seed(seed, 0xA5A5A5A5ULL));
  std::normal_distribution<double> gauss(0.0, 0.35);
  for (Vec& p : pts) {
    for (double& v : p) v += gauss(rng);
    p = normalized(p);
  }
  // resolve collisions left by the jitter
  for (int rounds = 0; rounds < 64; ++rounds) {
    bool clean = true;
    for (std::size_t i = 0; i < pts.size() && clean; ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        if (ang(pts[i], pts[j]) < 1e-6) {
          for (double& v : pts[j]) v += gauss(rng);
          pts[j] = normalized(pts[j]);
          clean = false;
          break;
        }
    if (clean) break;
  }
}

}  // namespace

RigidityReport is_irreducible(const SphericalConfig& cfg, double tol) {
  const ContactGraph cg = contact_graph(cfg, tol);
  if (cg.edges.empty())
    throw std::invalid_argument("is_irreducible: empty contact graph");

  std::vector<std::vector<int>> nbrs(cfg.size());
  for (const auto& [u, v] : cg.edges) {
    nbrs[u].push_back(v);
    nbrs[v].push_back(u);
  }

  for (int i = 0; i < cfg.size(); ++i) {
    const MoveCheck mc = vertex_move(cfg.points, i, nbrs[i], kMoveEps);
    if (mc.direction) {
      RigidityReport report;
      report.irreducible = false;
      report.movable_vertex = i;
      report.improving_direction = mc.direction;
      report.directional_gain = mc.gain;
      return report;
    }
  }
  return RigidityReport{};
}

SphericalConfig maximize_min_angle(const SphericalConfig& init, int restarts,
                                   unsigned long long seed, int iters,
                                   AscentTrace* trace) {
  if (init.size() < 2)
    throw std::invalid_argument("maximize_min_angle: need at least two points");
  if (iters < 1) throw std::invalid_argument("maximize_min_angle: iters must be >= 1");
  if (restarts < 1) restarts = 1;

  Matrix best_canon;
  double best_psi = -1.0;
  for (int r = 0; r < restarts; ++r) {
    Matrix pts = init.points;
    if (r > 0) perturb(pts, seed + static_cast<std::uint64_t>(r));
    ascent_stages(pts, iters, trace);
    polish(pts, trace);
    const double ps = psi_points(pts);
    Matrix canon = canonical_orientation(pts);
    if (ps > best_psi + 1e-9 ||
        (ps > best_psi - 1e-9 && (best_canon.empty() || canon < best_canon))) {
      best_psi = ps;
      best_canon = std::move(canon);
    }
  }
  return SphericalConfig(init.dim, best_canon, init.label);
}

std::pair<double, bool> tammes_check(int n_points, int trials,
                                     unsigned long long seed, int jobs) {
  const double target = tammes_angle(n_points);
  if (trials < 1) trials = 1;

  std::vector<double> results(trials, 0.0);
  parallel_for(jobs, trials, [&](int t) {
    const SphericalConfig start =
        random_config(3, n_points, mix_seed(seed, static_cast<std::uint64_t>(t)));
    const SphericalConfig opt = maximize_min_angle(start, 1, seed, 150);
    results[t] = psi(opt);
  });
  const double best = *std::max_element(results.begin(), results.end());
  return {best, std::fabs(best - target) <= 1e-5};
}

SphericalConfig random_config(int dim, int n_points, unsigned long long seed) {
  if (dim < 2) throw std::invalid_argument("random_config: dimension must be >= 2");
  if (n_points < 1) throw std::invalid_argument("random_config: need at least one point");
  std::mt19937_64 rng(mix_seed(seed, 0x5EEDULL));
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix pts;
  while (static_cast<int>(pts.size()) < n_points) {
    Vec p(dim);
    for (double& v : p) v = gauss(rng);
    const double np = norm(p);
    if (np < 1e-6) continue;
    for (double& v : p) v /= np;
    bool clash = false;
    for (const Vec& q : pts)
      if (ang(p, q) < 1e-6) {
        clash = true;
        break;
      }
    if (!clash) pts.push_back(std::move(p));
  }
  return SphericalConfig(dim, std::move(pts));
}

}  // namespace sphcode
