#pragma once

#include <vector>

namespace sphcode {

using Vec = std::vector<double>;
using Matrix = std::vector<Vec>;

double dot(const Vec& a, const Vec& b);
double norm(const Vec& a);
Vec normalized(const Vec& a);

/// Eigen-decomposition of a dense symmetric matrix (cyclic Jacobi).
/// values are ascending; vectors[j] is the unit eigenvector for values[j].
struct SymEigen {
  Vec values;
  Matrix vectors;
};

SymEigen eigen_symmetric(Matrix a);

}  // namespace sphcode
