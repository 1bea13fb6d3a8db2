#pragma once

#include "gwtrop/bigint.hpp"

#include <json.hpp>

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

namespace gwtrop {

struct LatticePoint {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;

    LatticePoint operator+(const LatticePoint& o) const { return {x + o.x, y + o.y}; }
    LatticePoint operator-(const LatticePoint& o) const { return {x - o.x, y - o.y}; }
    LatticePoint operator-() const { return {-x, -y}; }
    LatticePoint operator*(std::int64_t s) const { return {x * s, y * s}; }
};

inline std::int64_t cross(const LatticePoint& a, const LatticePoint& b) { return a.x * b.y - a.y * b.x; }

std::int64_t gcd_abs(std::int64_t a, std::int64_t b);

// Lattice length of the segment pq.
std::int64_t lattice_length(const LatticePoint& p, const LatticePoint& q);

class LatticeTriangle {
public:
    LatticeTriangle(LatticePoint a, LatticePoint b, LatticePoint c);

    const std::array<LatticePoint, 3>& corners() const { return c_; }
    std::int64_t normalized_area() const;
    std::int64_t boundary_points() const;
    std::int64_t interior_points() const;
    // Lattice lengths of the sides opposite to corners 0, 1, 2.
    std::array<std::int64_t, 3> side_lengths() const;

private:
    std::array<LatticePoint, 3> c_;
};

std::int64_t normalized_area(const LatticeTriangle& t);
std::int64_t interior_points(const LatticeTriangle& t);

// Parallelogram with corner a and neighbours b, c; the fourth corner is b + c - a.
struct LatticeParallelogram {
    LatticePoint a, b, c;

    LatticeParallelogram(LatticePoint a_, LatticePoint b_, LatticePoint c_);
    LatticePoint fourth() const { return b + c - a; }
    std::array<std::int64_t, 2> side_lengths() const;
};

struct DualSubdivision {
    std::vector<LatticeTriangle> triangles;
    std::vector<LatticeParallelogram> parallelograms;

    // Lattice lengths of all piece edges, with multiplicity.
    std::vector<std::int64_t> edge_weights() const;
    std::int64_t total_area() const;
};

nlohmann::json subdivision_to_json(const DualSubdivision& s);

// Convex lattice polygon, vertices in counter-clockwise order.
class LatticePolygon {
public:
    LatticePolygon() = default;
    explicit LatticePolygon(std::vector<LatticePoint> vertices);

    const std::vector<LatticePoint>& vertices() const { return v_; }
    bool contains(const LatticePoint& p) const;
    bool on_boundary(const LatticePoint& p) const;
    std::vector<LatticePoint> lattice_points() const;
    std::int64_t boundary_count() const;
    std::int64_t interior_count() const;
    std::int64_t normalized_area() const;

    friend bool operator==(const LatticePolygon&, const LatticePolygon&) = default;

private:
    std::vector<LatticePoint> v_;
};

LatticePolygon degree_polygon(std::int64_t d);

struct FanEnd {
    LatticePoint direction; // primitive
    std::int64_t weight = 1;
};

struct NewtonFan {
    std::vector<FanEnd> ends;

    // Accepts arbitrary nonzero vectors and splits them into primitive direction and weight.
    static NewtonFan from_vectors(const std::vector<LatticePoint>& vectors);
    bool balanced() const;
};

LatticePolygon dual_polygon(const NewtonFan& f);

// Fan of Delta_k(a, b): a ends (0,-1), a ends (k,1), left ends (-1,0) and
// right ends (1,0) with the given weights.
NewtonFan build_hirzebruch_fan(std::int64_t k, std::int64_t a, const std::vector<std::int64_t>& w_left,
                               const std::vector<std::int64_t>& w_right);

NewtonFan degree_fan(std::int64_t d);

} // namespace gwtrop
