#include "gwtrop/lattice_geometry.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace gwtrop;

namespace {

std::int64_t brute_interior(const LatticeTriangle& t)
{
    const auto& c = t.corners();
    std::int64_t x0 = std::min({c[0].x, c[1].x, c[2].x}), x1 = std::max({c[0].x, c[1].x, c[2].x});
    std::int64_t y0 = std::min({c[0].y, c[1].y, c[2].y}), y1 = std::max({c[0].y, c[1].y, c[2].y});
    std::int64_t n = 0;
    for (std::int64_t x = x0; x <= x1; ++x) {
        for (std::int64_t y = y0; y <= y1; ++y) {
            LatticePoint p{x, y};
            std::int64_t s0 = cross(c[1] - c[0], p - c[0]);
            std::int64_t s1 = cross(c[2] - c[1], p - c[1]);
            std::int64_t s2 = cross(c[0] - c[2], p - c[2]);
            if ((s0 > 0 && s1 > 0 && s2 > 0) || (s0 < 0 && s1 < 0 && s2 < 0))
                ++n;
        }
    }
    return n;
}

} // namespace

TEST(Triangle, Examples)
{
    LatticeTriangle unit({0, 0}, {1, 0}, {0, 1});
    EXPECT_EQ(normalized_area(unit), 1);
    EXPECT_EQ(interior_points(unit), 0);
    EXPECT_EQ(normalized_area(LatticeTriangle({0, 0}, {2, 0}, {0, 2})), 4);
    EXPECT_EQ(normalized_area(LatticeTriangle({0, 0}, {1, 0}, {0, 3})), 3);
    EXPECT_EQ(interior_points(LatticeTriangle({0, 0}, {3, 0}, {0, 3})), 1);
    EXPECT_EQ(interior_points(LatticeTriangle({0, 0}, {1, 0}, {0, 3})), 0);
    EXPECT_THROW(LatticeTriangle({0, 0}, {1, 1}, {2, 2}), DegeneracyError);
    auto sides = LatticeTriangle({0, 0}, {2, 0}, {0, 4}).side_lengths();
    EXPECT_EQ(sides[0], 2); // (2,0)-(0,4)
    EXPECT_EQ(sides[1], 4);
    EXPECT_EQ(sides[2], 2);
}

TEST(Triangle, PickPropertyRandom)
{
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::int64_t> c(-20, 20);
    int checked = 0;
    while (checked < 3000) {
        LatticePoint a{c(rng), c(rng)}, b{c(rng), c(rng)}, d{c(rng), c(rng)};
        if (cross(b - a, d - a) == 0)
            continue;
        LatticeTriangle t(a, b, d);
        const std::int64_t i = t.interior_points(), bd = t.boundary_points();
        ASSERT_EQ(t.normalized_area(), 2 * i + bd - 2);
        ASSERT_EQ(t.normalized_area(), std::abs(cross(b - a, d - a)));
        ASSERT_EQ(i, brute_interior(t));
        ++checked;
    }
}

TEST(LatticeLength, Examples)
{
    EXPECT_EQ(lattice_length({0, 0}, {2, 0}), 2);
    EXPECT_EQ(lattice_length({0, 0}, {1, 1}), 1);
    EXPECT_EQ(lattice_length({0, 0}, {4, 6}), 2);
    EXPECT_THROW(lattice_length({3, 3}, {3, 3}), DegeneracyError);
}

TEST(LatticeLength, UnimodularInvariance)
{
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<std::int64_t> c(-30, 30), m(-3, 3);
    int checked = 0;
    while (checked < 2000) {
        std::int64_t a = m(rng), b = m(rng), cc = m(rng), d = m(rng);
        if (a * d - b * cc != 1 && a * d - b * cc != -1)
            continue;
        LatticePoint p{c(rng), c(rng)}, q{c(rng), c(rng)};
        if (p == q)
            continue;
        auto act = [&](const LatticePoint& v) { return LatticePoint{a * v.x + b * v.y, cc * v.x + d * v.y}; };
        ASSERT_EQ(lattice_length(p, q), lattice_length(act(p), act(q)));
        ++checked;
    }
}

TEST(Polygon, DegreePolygonCounts)
{
    for (std::int64_t d = 1; d <= 12; ++d) {
        LatticePolygon p = dual_polygon(degree_fan(d));
        EXPECT_EQ(p, degree_polygon(d));
        EXPECT_EQ(static_cast<std::int64_t>(p.lattice_points().size()), (d + 1) * (d + 2) / 2);
        EXPECT_EQ(p.boundary_count(), 3 * d);
        EXPECT_EQ(p.interior_count(), (d - 1) * (d - 2) / 2);
        EXPECT_EQ(p.normalized_area(), d * d);
    }
}

TEST(Polygon, RejectsNonConvex)
{
    EXPECT_THROW(LatticePolygon({{0, 0}, {2, 0}, {1, 1}, {2, 2}, {0, 2}}), InvalidArgument);
}

TEST(DualPolygon, Examples)
{
    auto d3 = dual_polygon(NewtonFan::from_vectors({{-1, 0}, {-1, 0}, {-1, 0}, {0, -1}, {0, -1}, {0, -1}, {1, 1},
                                                    {1, 1}, {1, 1}}));
    EXPECT_EQ(d3, LatticePolygon({{0, 0}, {3, 0}, {0, 3}}));
    EXPECT_EQ(dual_polygon(NewtonFan::from_vectors({{-1, 0}, {0, -1}, {1, 1}})), LatticePolygon({{0, 0}, {1, 0}, {0, 1}}));
    // Delta_1(1,1): quadrilateral
    auto q = dual_polygon(build_hirzebruch_fan(1, 1, {2}, {1}));
    EXPECT_EQ(q.vertices().size(), 4u);
    EXPECT_EQ(q.boundary_count(), 5);
    auto square = dual_polygon(build_hirzebruch_fan(0, 1, {1}, {1}));
    EXPECT_EQ(square, LatticePolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
    EXPECT_THROW(dual_polygon(NewtonFan::from_vectors({{1, 0}, {0, 1}})), InvalidArgument);
}

TEST(HirzebruchFan, Balanced)
{
    auto f = build_hirzebruch_fan(2, 1, {3}, {1});
    EXPECT_TRUE(f.balanced());
    LatticePoint sum{0, 0};
    for (const auto& e : f.ends)
        sum = sum + e.direction * e.weight;
    EXPECT_EQ(sum, (LatticePoint{0, 0}));
    EXPECT_THROW(build_hirzebruch_fan(1, 2, {1}, {}), InvalidArgument);
    EXPECT_THROW(build_hirzebruch_fan(1, 1, {0, 1}, {}), InvalidArgument);
    // the plane degree fan is the k = 1 special case
    auto df = build_hirzebruch_fan(1, 3, {1, 1, 1}, {});
    EXPECT_EQ(dual_polygon(df), degree_polygon(3));
}

TEST(Subdivision, EdgeWeightsAndJson)
{
    DualSubdivision s;
    s.triangles.emplace_back(LatticePoint{0, 0}, LatticePoint{2, 0}, LatticePoint{0, 2});
    s.parallelograms.emplace_back(LatticePoint{2, 0}, LatticePoint{3, 0}, LatticePoint{2, 1});
    EXPECT_EQ(s.total_area(), 4 + 2);
    auto w = s.edge_weights();
    EXPECT_EQ(std::count(w.begin(), w.end(), 2), 3);
    auto j = subdivision_to_json(s);
    EXPECT_EQ(j["triangles"].size(), 1u);
    EXPECT_EQ(j["parallelograms"].size(), 1u);
}
