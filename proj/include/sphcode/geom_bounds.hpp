#pragma once

#include <map>

namespace sphcode {

/// Area of the spherical equilateral triangle with side phi,
/// 3 arccos(cos phi / (1 + cos phi)) - pi. Real only for phi in (0, 2*pi/3];
/// beyond that the arccos argument leaves [-1, 1].
double delta_area(double phi);

/// Upper bound 2*pi / delta_area(phi) + 2 on the size of any phi-code on S^2.
/// Tight exactly for the optima with 3, 4, 6 and 12 points.
double fejes_toth_bound(double phi);

/// Angle at which the bound above equals n_points, for n_points in {3,4,6,12}.
/// Solved by bisection of the monotone triangle area to 1e-14; equals the
/// best attainable minimum separation of n_points points on S^2.
double tammes_angle(int n_points);

/// Maximum contact count of n non-overlapping unit circles in the plane,
/// floor(3n - sqrt(12n - 3)), evaluated with integer square-root logic so
/// perfect squares never misfloor.
long long harborth(long long n);

/// Strict upper bound k(dim) * n / 2 on contact counts of n unit spheres.
double trivial_contact_bound(long long n, int dim);

/// The six known kissing numbers, keyed by dimension.
const std::map<int, long long>& kissing_numbers();

}  // namespace sphcode
