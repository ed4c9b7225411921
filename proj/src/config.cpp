#include "sphcode/config.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sphcode {

namespace {

constexpr double kGolden = 1.6180339887498948482;

Matrix normalized_rows(Matrix pts) {
  for (Vec& p : pts) p = normalized(p);
  return pts;
}

Matrix cube_points() {
  Matrix pts;
  for (int sx : {1, -1})
    for (int sy : {1, -1})
      for (int sz : {1, -1}) pts.push_back({double(sx), double(sy), double(sz)});
  return normalized_rows(std::move(pts));
}

Matrix icosahedron_points() {
  Matrix pts;
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) {
      pts.push_back({0.0, s1 * 1.0, s2 * kGolden});
      pts.push_back({s1 * 1.0, s2 * kGolden, 0.0});
      pts.push_back({s2 * kGolden, 0.0, s1 * 1.0});
    }
  return normalized_rows(std::move(pts));
}

Matrix cell24_points() {
  Matrix pts;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          Vec p(4, 0.0);
          p[i] = si;
          p[j] = sj;
          pts.push_back(std::move(p));
        }
  return normalized_rows(std::move(pts));
}

// Unit quaternions of the binary icosahedral group: 8 axis vectors, 16
// half-integer vectors, and 96 even permutations of (phi, 1, 1/phi, 0)/2.
Matrix cell600_points() {
  Matrix pts;
  for (int i = 0; i < 4; ++i)
    for (int s : {1, -1}) {
      Vec p(4, 0.0);
      p[i] = s;
      pts.push_back(std::move(p));
    }
  for (int mask = 0; mask < 16; ++mask) {
    Vec p(4);
    for (int i = 0; i < 4; ++i) p[i] = (mask >> i & 1) ? -0.5 : 0.5;
    pts.push_back(std::move(p));
  }

  std::vector<std::array<int, 4>> even;
  std::array<int, 4> perm{0, 1, 2, 3};
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (perm[i] > perm[j]) ++inversions;
    if (inversions % 2 == 0) even.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  const double base[4] = {kGolden / 2.0, 0.5, 1.0 / (2.0 * kGolden), 0.0};
  for (const auto& pm : even)
    for (int mask = 0; mask < 8; ++mask) {
      Vec p(4);
      int bit = 0;
      for (int i = 0; i < 4; ++i) {
        double v = base[pm[i]];
        if (v != 0.0) {
          if (mask >> bit & 1) v = -v;
          ++bit;
        }
        p[i] = v;
      }
      pts.push_back(std::move(p));
    }
  return normalized_rows(std::move(pts));
}

Matrix e8_points() {
  Matrix pts;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          Vec p(8, 0.0);
          p[i] = si;
          p[j] = sj;
          pts.push_back(std::move(p));
        }
  for (int mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;  // even number of minus signs
    Vec p(8);
    for (int i = 0; i < 8; ++i) p[i] = (mask >> i & 1) ? -0.5 : 0.5;
    pts.push_back(std::move(p));
  }
  return normalized_rows(std::move(pts));
}

Matrix triangle_points() {
  Matrix pts;
  for (int k = 0; k < 3; ++k) {
    const double a = 2.0 * std::numbers::pi * k / 3.0;
    pts.push_back({std::cos(a), std::sin(a), 0.0});
  }
  return pts;
}

Matrix tetrahedron_points() {
  Matrix pts{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  return normalized_rows(std::move(pts));
}

Matrix octahedron_points() {
  Matrix pts;
  for (int i = 0; i < 3; ++i)
    for (int s : {1, -1}) {
      Vec p(3, 0.0);
      p[i] = s;
      pts.push_back(std::move(p));
    }
  return pts;
}

}  // namespace

SphericalConfig::SphericalConfig(int dim_in, Matrix points_in, std::string label_in)
    : dim(dim_in), points(std::move(points_in)), label(std::move(label_in)) {
  if (dim < 2) throw std::invalid_argument("SphericalConfig: dimension must be >= 2");
  if (points.empty()) throw std::invalid_argument("SphericalConfig: no points");
  for (const Vec& p : points) {
    if (static_cast<int>(p.size()) != dim)
      throw std::invalid_argument("SphericalConfig: point dimension mismatch");
    if (std::fabs(norm(p) - 1.0) > 1e-12)
      throw std::invalid_argument("SphericalConfig: point not on the unit sphere");
  }
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (angular_distance(points[i], points[j]) <= 1e-9)
        throw std::invalid_argument("SphericalConfig: coincident points");
}

double angular_distance(const Vec& a, const Vec& b) {
  return std::acos(std::clamp(dot(a, b), -1.0, 1.0));
}

double psi(const SphericalConfig& cfg) {
  if (cfg.size() < 2)
    throw std::invalid_argument("psi: need at least two points");
  double best = std::numbers::pi;
  for (int i = 0; i < cfg.size(); ++i)
    for (int j = i + 1; j < cfg.size(); ++j)
      best = std::min(best, angular_distance(cfg.points[i], cfg.points[j]));
  return best;
}

SphericalConfig named_config(const std::string& label) {
  if (label == "triangle") return {3, triangle_points(), label};
  if (label == "tetrahedron") return {3, tetrahedron_points(), label};
  if (label == "octahedron") return {3, octahedron_points(), label};
  if (label == "cube") return {3, cube_points(), label};
  if (label == "icosahedron") return {3, icosahedron_points(), label};
  if (label == "24cell") return {4, cell24_points(), label};
  if (label == "600cell") return {4, cell600_points(), label};
  if (label == "e8roots") return {8, e8_points(), label};
  throw std::invalid_argument("named_config: unknown label '" + label + "'");
}

const std::vector<std::string>& named_config_labels() {
  static const std::vector<std::string> labels{
      "triangle", "tetrahedron", "octahedron", "cube",
      "icosahedron", "24cell", "600cell", "e8roots"};
  return labels;
}

bool verify_code(const SphericalConfig& cfg, double phi) {
  if (cfg.size() < 2) return true;
  return psi(cfg) >= phi - 1e-12;
}

ContactGraph contact_graph(const SphericalConfig& cfg, double tol) {
  if (tol < 0.0) throw std::invalid_argument("contact_graph: negative tolerance");
  if (cfg.size() < 2)
    throw std::invalid_argument("contact_graph: need at least two points");
  ContactGraph g{cfg, psi(cfg), tol, {}};
  for (int i = 0; i < cfg.size(); ++i)
    for (int j = i + 1; j < cfg.size(); ++j)
      if (std::fabs(angular_distance(cfg.points[i], cfg.points[j]) - g.psi) <= tol)
        g.edges.emplace_back(i, j);
  return g;
}

nlohmann::json config_json(const SphericalConfig& cfg) {
  return nlohmann::json{{"dim", cfg.dim}, {"points", cfg.points}};
}

SphericalConfig config_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("points"))
    throw std::invalid_argument("config: expected {\"dim\": n, \"points\": [[...], ...]}");
  const int dim = j.at("dim").get<int>();
  const Matrix points = j.at("points").get<Matrix>();
  return SphericalConfig(dim, points);
}

}  // namespace sphcode
