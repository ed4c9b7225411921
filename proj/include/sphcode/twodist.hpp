#pragma once

#include "sphcode/graphs.hpp"
#include "sphcode/linalg.hpp"

namespace sphcode {

/// Two-distance realization of a graph: edges carry the short distance a = 1,
/// non-edges the long distance b = sqrt(ratio_c) >= a. Complete and empty
/// graphs are one-distance sets, reported as the regular simplex in n - 1
/// dimensions with ratio_c = 1.
struct Dim2Result {
  SimpleGraph graph;
  int dim2 = 0;
  double ratio_c = 1.0;
  Matrix witness;  // points in R^dim2
};

/// Smallest dimension admitting a two-distance realization of g, found by
/// sweeping the squared ratio c over [1, 10] (step 1e-3), double-centering
/// the squared-distance matrix and reading the rank where it stays positive
/// semidefinite. The PSD boundary is sharpened by bisection on the smallest
/// eigenvalue; ranks use a 1e-8 relative eigenvalue cutoff. Rank drops hiding
/// past the sweep cap are probed at 20 logarithmic ratios up to 1e3 and abort
/// loudly instead of returning a wrong dimension.
Dim2Result dim2(const SimpleGraph& g);

}  // namespace sphcode
