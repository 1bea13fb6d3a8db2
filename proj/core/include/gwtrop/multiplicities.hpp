#pragma once

#include "gwtrop/gw_ring.hpp"
#include "gwtrop/lattice_geometry.hpp"

#include <array>
#include <vector>

namespace gwtrop {

struct SimpleCurveData {
    DualSubdivision subdivision;
    std::vector<std::int64_t> end_weights;
};

BigInt complex_mult(const SimpleCurveData& c);
BigInt real_mult(const SimpleCurveData& c);
GWElement arith_mult(const SimpleCurveData& c);

// Arithmetic multiplicity of a single triangle whose three sides are ends of
// the given weights; with no weights given, the side lengths are used.
GWElement triangle_mult(const LatticeTriangle& t);
GWElement triangle_mult(const LatticeTriangle& t, std::int64_t area, std::int64_t interior,
                        const std::vector<std::int64_t>& end_weights);

struct VertexStar {
    std::vector<FanEnd> edges;

    // Each vector is split into primitive direction and weight.
    static VertexStar from_vectors(const std::vector<LatticePoint>& weighted);
    static VertexStar from_weighted(const std::vector<std::pair<LatticePoint, std::int64_t>>& edges);
    bool balanced() const;
};

GWElement vertex_mult(const VertexStar& v);
BigInt vertex_complex_mult(const VertexStar& v);

struct WallResolution {
    GWElement left;
    GWElement right_sum;
    // pairings {01|23}, {02|13}, {03|12}
    std::array<BigInt, 3> complex_values;
    std::array<GWElement, 3> pairing_mults;
    int distinguished = -1;
};

WallResolution resolve_wall(const VertexStar& v);

} // namespace gwtrop
