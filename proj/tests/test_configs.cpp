#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <set>

#include "sphcode/config.hpp"
#include "util.hpp"

using namespace sphcode;

namespace {

constexpr double kPi = std::numbers::pi;

SphericalConfig antipodal_pair() {
  return SphericalConfig(3, {{0, 0, 1}, {0, 0, -1}}, "pair");
}

bool same_point_set(const Matrix& a, const Matrix& b, double tol) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const Vec& p : a) {
    bool found = false;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      double dist2 = 0.0;
      for (std::size_t k = 0; k < p.size(); ++k)
        dist2 += (p[k] - b[j][k]) * (p[k] - b[j][k]);
      if (std::sqrt(dist2) <= tol) {
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

// Apply a signed permutation: out[i] = sign[i] * in[perm[i]].
Matrix signed_permute(const Matrix& pts, const std::vector<int>& perm,
                      const std::vector<int>& sign) {
  Matrix out;
  for (const Vec& p : pts) {
    Vec q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[i] = sign[i] * p[perm[i]];
    out.push_back(std::move(q));
  }
  return out;
}

}  // namespace

TEST_CASE("minimum separation of the named configurations") {
  CHECK(psi(antipodal_pair()) == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(std::fabs(psi(named_config("24cell")) - kPi / 3) <= 1e-12);
  CHECK(std::fabs(psi(named_config("600cell")) - kPi / 5) <= 1e-12);
  CHECK(std::fabs(psi(named_config("e8roots")) - kPi / 3) <= 1e-12);
  CHECK(std::fabs(psi(named_config("icosahedron")) - std::acos(1 / std::sqrt(5.0))) <= 1e-12);
  CHECK(std::fabs(psi(named_config("cube")) - std::acos(1.0 / 3)) <= 1e-12);
  CHECK(std::fabs(psi(named_config("tetrahedron")) - std::acos(-1.0 / 3)) <= 1e-12);
  CHECK(std::fabs(psi(named_config("octahedron")) - kPi / 2) <= 1e-15);
  CHECK(std::fabs(psi(named_config("triangle")) - 2 * kPi / 3) <= 1e-12);
}

TEST_CASE("point counts") {
  CHECK(named_config("triangle").size() == 3);
  CHECK(named_config("tetrahedron").size() == 4);
  CHECK(named_config("octahedron").size() == 6);
  CHECK(named_config("cube").size() == 8);
  CHECK(named_config("icosahedron").size() == 12);
  CHECK(named_config("24cell").size() == 24);
  CHECK(named_config("600cell").size() == 120);
  CHECK(named_config("e8roots").size() == 240);
  CHECK_THROWS_AS(named_config("dodecahedron"), std::invalid_argument);
}

TEST_CASE("contact graph of the octahedron is 4-regular with 12 edges") {
  const SphericalConfig octa = named_config("octahedron");
  const ContactGraph cg = contact_graph(octa, 1e-9);
  CHECK(cg.edges.size() == 12);
  std::vector<int> deg(octa.size(), 0);
  for (const auto& [u, v] : cg.edges) {
    ++deg[u];
    ++deg[v];
  }
  for (int d : deg) CHECK(d == 4);
  // oracle: recount from the raw distance table
  int direct = 0;
  for (int i = 0; i < octa.size(); ++i)
    for (int j = i + 1; j < octa.size(); ++j)
      if (std::fabs(angular_distance(octa.points[i], octa.points[j]) - kPi / 2) < 1e-9)
        ++direct;
  CHECK(direct == 12);
}

TEST_CASE("contact graph of the 24-cell is 8-regular with 96 edges") {
  const SphericalConfig cell = named_config("24cell");
  const ContactGraph cg = contact_graph(cell, 1e-9);
  CHECK(cg.edges.size() == 96);
  std::vector<int> deg(cell.size(), 0);
  for (const auto& [u, v] : cg.edges) {
    ++deg[u];
    ++deg[v];
  }
  for (int d : deg) CHECK(d == 8);
}

TEST_CASE("two antipodal points form one contact edge") {
  const ContactGraph cg = contact_graph(antipodal_pair(), 1e-9);
  CHECK(cg.edges.size() == 1);
  CHECK(cg.psi == doctest::Approx(kPi));
}

TEST_CASE("separation certificates") {
  CHECK(verify_code(named_config("600cell"), kPi / 5));
  CHECK_FALSE(verify_code(named_config("24cell"), kPi / 3 + 0.01));
  CHECK(verify_code(named_config("tetrahedron"), std::acos(-1.0 / 3)));
  CHECK(verify_code(named_config("e8roots"), kPi / 3));
}

TEST_CASE("24-cell inner products take only the root-system values") {
  const SphericalConfig cell = named_config("24cell");
  for (int i = 0; i < cell.size(); ++i)
    for (int j = i + 1; j < cell.size(); ++j) {
      const double ip = dot(cell.points[i], cell.points[j]);
      const bool known = std::fabs(ip) <= 1e-12 ||
                         std::fabs(std::fabs(ip) - 0.5) <= 1e-12 ||
                         std::fabs(ip + 1.0) <= 1e-12;
      CHECK(known);
      CHECK(ip < 1.0 - 1e-9);  // pairwise distinct
    }
}

TEST_CASE("each named configuration has a nontrivial signed-permutation symmetry") {
  for (const std::string& label : named_config_labels()) {
    const SphericalConfig cfg = named_config(label);
    const int n = cfg.dim;
    bool found = false;

    std::vector<std::pair<std::vector<int>, std::vector<int>>> candidates;
    {
      // swap of the first two axes
      std::vector<int> perm(n), sign(n, 1);
      for (int i = 0; i < n; ++i) perm[i] = i;
      std::swap(perm[0], perm[1]);
      candidates.emplace_back(perm, sign);
    }
    {
      // cyclic shift
      std::vector<int> perm(n), sign(n, 1);
      for (int i = 0; i < n; ++i) perm[i] = (i + 1) % n;
      candidates.emplace_back(perm, sign);
    }
    {
      // double sign flip
      std::vector<int> perm(n), sign(n, 1);
      for (int i = 0; i < n; ++i) perm[i] = i;
      sign[n - 1] = -1;
      sign[n - 2] = -1;
      candidates.emplace_back(perm, sign);
    }
    {
      // single reflection of the second axis
      std::vector<int> perm(n), sign(n, 1);
      for (int i = 0; i < n; ++i) perm[i] = i;
      sign[1] = -1;
      candidates.emplace_back(perm, sign);
    }
    {
      // double transposition
      if (n >= 4) {
        std::vector<int> perm(n), sign(n, 1);
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::swap(perm[0], perm[1]);
        std::swap(perm[2], perm[3]);
        candidates.emplace_back(perm, sign);
      }
    }

    for (const auto& [perm, sign] : candidates) {
      if (same_point_set(signed_permute(cfg.points, perm, sign), cfg.points, 1e-12)) {
        found = true;
        break;
      }
    }
    CHECK_MESSAGE(found, "no symmetry found for ", label);
  }
}

TEST_CASE("validation rejects malformed configurations") {
  CHECK_THROWS_AS(SphericalConfig(3, {}), std::invalid_argument);
  CHECK_THROWS_AS(SphericalConfig(3, {{1, 0, 0}, {1, 0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(SphericalConfig(3, {{2, 0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(SphericalConfig(3, {{1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(SphericalConfig(1, {{1}}), std::invalid_argument);
  CHECK_THROWS_AS(psi(SphericalConfig(3, {{1, 0, 0}})), std::invalid_argument);
}

TEST_CASE("config JSON round trip") {
  const SphericalConfig cell = named_config("24cell");
  const nlohmann::json j = config_json(cell);
  CHECK(j.size() == 2);
  CHECK(j["dim"] == 4);
  CHECK(j["points"].size() == 24);
  const SphericalConfig back = config_from_json(j);
  CHECK(back.dim == cell.dim);
  CHECK(same_point_set(back.points, cell.points, 1e-15));

  CHECK_THROWS(config_from_json(nlohmann::json{{"dim", 3}}));
  CHECK_THROWS(config_from_json(nlohmann::json{{"dim", 3}, {"points", {{2.0, 0.0, 0.0}}}}));
}

TEST_CASE("rotation invariance of the separation") {
  const SphericalConfig ico = named_config("icosahedron");
  for (int rep = 0; rep < 5; ++rep) {
    const Matrix q = testutil::random_orthogonal(3, 100 + rep);
    const SphericalConfig rot = testutil::rotated(ico, q);
    CHECK(psi(rot) == doctest::Approx(psi(ico)).epsilon(1e-12));
  }
}
