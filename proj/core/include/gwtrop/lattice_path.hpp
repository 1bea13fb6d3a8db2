#pragma once

#include "gwtrop/gw_ring.hpp"
#include "gwtrop/lattice_geometry.hpp"
#include "gwtrop/multiplicities.hpp"

#include <vector>

namespace gwtrop {

// Generic linear functional x - eps*y (Standard) or x + eps*y (Flipped).
enum class LambdaOrder { Standard, Flipped };

enum class PathSide { Positive, Negative };

// -1, 0, 1 like a three-way comparison.
int lambda_order(const LatticePoint& p, const LatticePoint& q, LambdaOrder order = LambdaOrder::Standard);

struct LatticePath {
    std::vector<LatticePoint> points;
};

GWElement path_mult(const LatticePath& path, const LatticePolygon& polygon, PathSide side,
                    LambdaOrder order = LambdaOrder::Standard);

// Admissible genera are 2 - #boundary points (a single step) up to the
// number of interior points; negative values count reducible curves.
std::int64_t min_path_genus(const LatticePolygon& polygon);
std::int64_t max_path_genus(const LatticePolygon& polygon);

GWElement count_lattice_path(const LatticePolygon& polygon, std::int64_t g,
                             LambdaOrder order = LambdaOrder::Standard);
BigInt count_lattice_path_complex(const LatticePolygon& polygon, std::int64_t g,
                                  LambdaOrder order = LambdaOrder::Standard);
BigInt count_lattice_path_real(const LatticePolygon& polygon, std::int64_t g,
                               LambdaOrder order = LambdaOrder::Standard);

// Explicit curves (dual subdivisions) produced by the lattice path
// recursion. Exponential; meant for small polygons.
std::vector<SimpleCurveData> enumerate_lattice_path_curves(const LatticePolygon& polygon, std::int64_t g,
                                                           LambdaOrder order = LambdaOrder::Standard);

} // namespace gwtrop
