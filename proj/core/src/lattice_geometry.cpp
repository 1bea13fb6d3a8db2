#include "gwtrop/lattice_geometry.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace gwtrop {

namespace {

int half_plane(const LatticePoint& v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; }

bool angle_less(const LatticePoint& a, const LatticePoint& b)
{
    int ha = half_plane(a), hb = half_plane(b);
    if (ha != hb)
        return ha < hb;
    return cross(a, b) > 0;
}

std::int64_t sum_of(const std::vector<std::int64_t>& w)
{
    return std::accumulate(w.begin(), w.end(), std::int64_t{0});
}

} // namespace

std::int64_t gcd_abs(std::int64_t a, std::int64_t b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

std::int64_t lattice_length(const LatticePoint& p, const LatticePoint& q)
{
    if (p == q)
        throw DegeneracyError("lattice_length: endpoints coincide");
    return gcd_abs(q.x - p.x, q.y - p.y);
}

LatticeTriangle::LatticeTriangle(LatticePoint a, LatticePoint b, LatticePoint c) : c_{a, b, c}
{
    if (cross(b - a, c - a) == 0)
        throw DegeneracyError("triangle corners are collinear");
}

std::int64_t LatticeTriangle::normalized_area() const
{
    std::int64_t d = cross(c_[1] - c_[0], c_[2] - c_[0]);
    return d < 0 ? -d : d;
}

std::array<std::int64_t, 3> LatticeTriangle::side_lengths() const
{
    return {lattice_length(c_[1], c_[2]), lattice_length(c_[0], c_[2]), lattice_length(c_[0], c_[1])};
}

std::int64_t LatticeTriangle::boundary_points() const
{
    auto s = side_lengths();
    return s[0] + s[1] + s[2];
}

std::int64_t LatticeTriangle::interior_points() const
{
    std::int64_t xmin = std::min({c_[0].x, c_[1].x, c_[2].x}), xmax = std::max({c_[0].x, c_[1].x, c_[2].x});
    std::int64_t ymin = std::min({c_[0].y, c_[1].y, c_[2].y}), ymax = std::max({c_[0].y, c_[1].y, c_[2].y});
    std::int64_t orient = cross(c_[1] - c_[0], c_[2] - c_[0]) > 0 ? 1 : -1;
    std::int64_t count = 0;
    for (std::int64_t x = xmin + 1; x < xmax; ++x) {
        for (std::int64_t y = ymin + 1; y < ymax; ++y) {
            LatticePoint p{x, y};
            bool inside = true;
            for (int i = 0; i < 3 && inside; ++i) {
                const auto& u = c_[i];
                const auto& v = c_[(i + 1) % 3];
                inside = orient * cross(v - u, p - u) > 0;
            }
            if (inside)
                ++count;
        }
    }
    return count;
}

std::int64_t normalized_area(const LatticeTriangle& t) { return t.normalized_area(); }
std::int64_t interior_points(const LatticeTriangle& t) { return t.interior_points(); }

LatticeParallelogram::LatticeParallelogram(LatticePoint a_, LatticePoint b_, LatticePoint c_) : a(a_), b(b_), c(c_)
{
    if (cross(b - a, c - a) == 0)
        throw DegeneracyError("parallelogram corners are collinear");
}

std::array<std::int64_t, 2> LatticeParallelogram::side_lengths() const
{
    return {lattice_length(a, b), lattice_length(a, c)};
}

std::vector<std::int64_t> DualSubdivision::edge_weights() const
{
    std::vector<std::int64_t> out;
    for (const auto& t : triangles) {
        for (auto s : t.side_lengths())
            out.push_back(s);
    }
    for (const auto& p : parallelograms) {
        for (auto s : p.side_lengths()) {
            out.push_back(s);
            out.push_back(s);
        }
    }
    return out;
}

std::int64_t DualSubdivision::total_area() const
{
    std::int64_t a = 0;
    for (const auto& t : triangles)
        a += t.normalized_area();
    for (const auto& p : parallelograms) {
        std::int64_t d = cross(p.b - p.a, p.c - p.a);
        a += 2 * (d < 0 ? -d : d);
    }
    return a;
}

nlohmann::json subdivision_to_json(const DualSubdivision& s)
{
    auto pt = [](const LatticePoint& p) { return nlohmann::json::array({p.x, p.y}); };
    nlohmann::json tris = nlohmann::json::array(), pars = nlohmann::json::array();
    for (const auto& t : s.triangles)
        tris.push_back({pt(t.corners()[0]), pt(t.corners()[1]), pt(t.corners()[2])});
    for (const auto& p : s.parallelograms)
        pars.push_back({pt(p.a), pt(p.b), pt(p.fourth()), pt(p.c)});
    return {{"triangles", tris}, {"parallelograms", pars}};
}

LatticePolygon::LatticePolygon(std::vector<LatticePoint> vertices)
{
    // drop repeated and collinear vertices
    std::vector<LatticePoint> v;
    for (const auto& p : vertices) {
        if (v.empty() || v.back() != p)
            v.push_back(p);
    }
    while (v.size() > 1 && v.front() == v.back())
        v.pop_back();
    bool changed = true;
    while (changed && v.size() >= 3) {
        changed = false;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const auto& prev = v[(i + v.size() - 1) % v.size()];
            const auto& next = v[(i + 1) % v.size()];
            if (cross(v[i] - prev, next - v[i]) == 0) {
                v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    for (std::size_t i = 0; i < v.size() && v.size() >= 3; ++i) {
        const auto& prev = v[(i + v.size() - 1) % v.size()];
        const auto& next = v[(i + 1) % v.size()];
        if (cross(v[i] - prev, next - v[i]) < 0)
            throw InvalidArgument("polygon vertices must be convex and counter-clockwise");
    }
    v_ = std::move(v);
}

bool LatticePolygon::contains(const LatticePoint& p) const
{
    if (v_.size() < 3)
        return false;
    for (std::size_t i = 0; i < v_.size(); ++i) {
        const auto& u = v_[i];
        const auto& w = v_[(i + 1) % v_.size()];
        if (cross(w - u, p - u) < 0)
            return false;
    }
    return true;
}

bool LatticePolygon::on_boundary(const LatticePoint& p) const
{
    if (!contains(p))
        return false;
    for (std::size_t i = 0; i < v_.size(); ++i) {
        const auto& u = v_[i];
        const auto& w = v_[(i + 1) % v_.size()];
        if (cross(w - u, p - u) == 0)
            return true;
    }
    return false;
}

std::vector<LatticePoint> LatticePolygon::lattice_points() const
{
    std::vector<LatticePoint> out;
    if (v_.empty())
        return out;
    std::int64_t xmin = v_[0].x, xmax = v_[0].x, ymin = v_[0].y, ymax = v_[0].y;
    for (const auto& p : v_) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    for (std::int64_t x = xmin; x <= xmax; ++x) {
        for (std::int64_t y = ymin; y <= ymax; ++y) {
            if (contains({x, y}))
                out.push_back({x, y});
        }
    }
    return out;
}

std::int64_t LatticePolygon::boundary_count() const
{
    std::int64_t b = 0;
    for (std::size_t i = 0; i < v_.size(); ++i)
        b += lattice_length(v_[i], v_[(i + 1) % v_.size()]);
    return b;
}

std::int64_t LatticePolygon::normalized_area() const
{
    std::int64_t a = 0;
    for (std::size_t i = 0; i < v_.size(); ++i)
        a += cross(v_[i], v_[(i + 1) % v_.size()]);
    return a;
}

std::int64_t LatticePolygon::interior_count() const { return (normalized_area() - boundary_count() + 2) / 2; }

LatticePolygon degree_polygon(std::int64_t d)
{
    if (d < 1)
        throw InvalidArgument("degree must be positive");
    return LatticePolygon({{0, 0}, {d, 0}, {0, d}});
}

NewtonFan NewtonFan::from_vectors(const std::vector<LatticePoint>& vectors)
{
    NewtonFan f;
    for (const auto& v : vectors) {
        if (v.x == 0 && v.y == 0)
            throw InvalidArgument("fan vectors must be nonzero");
        std::int64_t w = gcd_abs(v.x, v.y);
        f.ends.push_back({{v.x / w, v.y / w}, w});
    }
    return f;
}

bool NewtonFan::balanced() const
{
    LatticePoint s;
    for (const auto& e : ends)
        s = s + e.direction * e.weight;
    return s == LatticePoint{};
}

LatticePolygon dual_polygon(const NewtonFan& f)
{
    if (!f.balanced())
        throw InvalidArgument("dual_polygon: fan is not balanced");
    std::map<LatticePoint, std::int64_t> agg;
    for (const auto& e : f.ends) {
        if (e.weight < 1)
            throw InvalidArgument("fan weights must be positive");
        std::int64_t g = gcd_abs(e.direction.x, e.direction.y);
        if (g == 0)
            throw InvalidArgument("fan directions must be nonzero");
        LatticePoint prim{e.direction.x / g, e.direction.y / g};
        agg[prim] += e.weight * g;
    }
    std::vector<LatticePoint> edges;
    for (const auto& [dir, w] : agg)
        edges.push_back(LatticePoint{-dir.y, dir.x} * w);
    std::sort(edges.begin(), edges.end(), angle_less);
    std::vector<LatticePoint> verts;
    LatticePoint cur;
    for (const auto& e : edges) {
        verts.push_back(cur);
        cur = cur + e;
    }
    auto least = *std::min_element(verts.begin(), verts.end());
    for (auto& v : verts)
        v = v - least;
    auto it = std::min_element(verts.begin(), verts.end());
    std::rotate(verts.begin(), it, verts.end());
    return LatticePolygon(verts);
}

NewtonFan build_hirzebruch_fan(std::int64_t k, std::int64_t a, const std::vector<std::int64_t>& w_left,
                               const std::vector<std::int64_t>& w_right)
{
    if (k < 0 || a < 1)
        throw InvalidArgument("Hirzebruch data needs k >= 0 and a >= 1");
    for (auto w : w_left) {
        if (w < 1)
            throw InvalidArgument("weights must be positive");
    }
    for (auto w : w_right) {
        if (w < 1)
            throw InvalidArgument("weights must be positive");
    }
    if (sum_of(w_left) != a * k + sum_of(w_right))
        throw InvalidArgument("unbalanced weight data: sum(w_left) must equal a*k + sum(w_right)");
    NewtonFan f;
    for (std::int64_t i = 0; i < a; ++i) {
        f.ends.push_back({{0, -1}, 1});
        f.ends.push_back({{k, 1}, 1});
    }
    for (auto w : w_left)
        f.ends.push_back({{-1, 0}, w});
    for (auto w : w_right)
        f.ends.push_back({{1, 0}, w});
    return f;
}

NewtonFan degree_fan(std::int64_t d)
{
    return build_hirzebruch_fan(1, d, std::vector<std::int64_t>(static_cast<std::size_t>(d), 1), {});
}

} // namespace gwtrop
