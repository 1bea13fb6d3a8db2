#include "gwtrop/multiplicities.hpp"

#include <string>

namespace gwtrop {

namespace {

GWElement def_mult(const BigInt& m, std::int64_t interior, const std::vector<std::int64_t>& end_weights)
{
    if (m % 2 == 0)
        return GWElement::hyperbolic(m / 2);
    SquareClass s{interior % 2 == 0 ? 1 : -1};
    for (auto w : end_weights) {
        if (w < 1)
            throw InvalidArgument("end weights must be positive");
        s = square_class_product(s, square_free_reduce(w));
    }
    return GWElement::hyperbolic((m - 1) / 2) + GWElement::form(s.rep);
}

LatticePoint rotate(const LatticePoint& v) { return {-v.y, v.x}; }

LatticePoint weighted(const FanEnd& e) { return e.direction * e.weight; }

} // namespace

BigInt complex_mult(const SimpleCurveData& c)
{
    BigInt m = 1;
    for (const auto& t : c.subdivision.triangles)
        m *= big(t.normalized_area());
    return m;
}

BigInt real_mult(const SimpleCurveData& c)
{
    for (auto w : c.subdivision.edge_weights()) {
        if (w % 2 == 0)
            return 0;
    }
    std::int64_t i = 0;
    for (const auto& t : c.subdivision.triangles)
        i += t.interior_points();
    return i % 2 == 0 ? 1 : -1;
}

GWElement arith_mult(const SimpleCurveData& c)
{
    std::int64_t i = 0;
    for (const auto& t : c.subdivision.triangles)
        i += t.interior_points();
    return def_mult(complex_mult(c), i, c.end_weights);
}

GWElement triangle_mult(const LatticeTriangle& t)
{
    auto s = t.side_lengths();
    return triangle_mult(t, t.normalized_area(), t.interior_points(), {s[0], s[1], s[2]});
}

GWElement triangle_mult(const LatticeTriangle&, std::int64_t area, std::int64_t interior,
                        const std::vector<std::int64_t>& end_weights)
{
    return def_mult(big(area), interior, end_weights);
}

VertexStar VertexStar::from_vectors(const std::vector<LatticePoint>& weighted)
{
    return {NewtonFan::from_vectors(weighted).ends};
}

VertexStar VertexStar::from_weighted(const std::vector<std::pair<LatticePoint, std::int64_t>>& edges)
{
    VertexStar s;
    for (const auto& [v, w] : edges) {
        if (w < 1)
            throw InvalidArgument("star weights must be positive");
        if (v.x == 0 && v.y == 0)
            throw InvalidArgument("star directions must be nonzero");
        std::int64_t g = gcd_abs(v.x, v.y);
        s.edges.push_back({{v.x / g, v.y / g}, w * g});
    }
    return s;
}

bool VertexStar::balanced() const { return NewtonFan{edges}.balanced(); }

BigInt vertex_complex_mult(const VertexStar& v)
{
    if (v.edges.size() != 3)
        throw InvalidArgument("vertex_complex_mult needs a 3-valent star");
    std::int64_t a = cross(weighted(v.edges[0]), weighted(v.edges[1]));
    return big(a < 0 ? -a : a);
}

GWElement vertex_mult(const VertexStar& v)
{
    if (v.edges.size() == 4)
        throw InvalidArgument("vertex_mult: 4-valent star, use resolve_wall");
    if (v.edges.size() != 3)
        throw InvalidArgument("vertex_mult needs a 3-valent star, got " + std::to_string(v.edges.size()) +
                              " edges");
    if (!v.balanced())
        throw InvalidArgument("vertex_mult: star is not balanced");
    LatticePoint p0{0, 0};
    LatticePoint p1 = rotate(weighted(v.edges[0]));
    LatticePoint p2 = p1 + rotate(weighted(v.edges[1]));
    LatticeTriangle t(p0, p1, p2);
    std::int64_t area = t.normalized_area();
    std::int64_t b = v.edges[0].weight + v.edges[1].weight + v.edges[2].weight;
    std::int64_t interior = (area - b + 2) / 2;
    return triangle_mult(t, area, interior, {v.edges[0].weight, v.edges[1].weight, v.edges[2].weight});
}

WallResolution resolve_wall(const VertexStar& v)
{
    if (v.edges.size() != 4)
        throw InvalidArgument("resolve_wall needs a 4-valent star");
    if (!v.balanced())
        throw InvalidArgument("resolve_wall: star is not balanced");
    static constexpr int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    WallResolution r;
    for (int p = 0; p < 3; ++p) {
        const auto& e = v.edges;
        LatticePoint a = weighted(e[pairings[p][0]]), b = weighted(e[pairings[p][1]]);
        LatticePoint c = weighted(e[pairings[p][2]]), d = weighted(e[pairings[p][3]]);
        LatticePoint u = a + b;
        if (u == LatticePoint{})
            throw DegeneracyError("resolve_wall: pairing produces a bounded edge of direction 0");
        if (cross(a, b) == 0 || cross(c, d) == 0)
            throw DegeneracyError("resolve_wall: pairing produces a degenerate vertex");
        VertexStar A = VertexStar::from_vectors({a, b, -u});
        VertexStar B = VertexStar::from_vectors({c, d, u});
        r.complex_values[p] = vertex_complex_mult(A) * vertex_complex_mult(B);
        r.pairing_mults[p] = vertex_mult(A) * vertex_mult(B);
    }
    for (int p = 0; p < 3; ++p) {
        if (r.complex_values[p] == r.complex_values[(p + 1) % 3] + r.complex_values[(p + 2) % 3]) {
            r.distinguished = p;
            break;
        }
    }
    if (r.distinguished < 0)
        throw DegeneracyError("resolve_wall: no pairing satisfies the complex identity");
    r.left = r.pairing_mults[r.distinguished];
    r.right_sum = r.pairing_mults[(r.distinguished + 1) % 3] + r.pairing_mults[(r.distinguished + 2) % 3];
    return r;
}

} // namespace gwtrop
