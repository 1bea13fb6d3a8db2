#include "gwtrop/lattice_path.hpp"

#include "gwtrop/weights.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace gwtrop {

namespace {

__extension__ using Mask = unsigned __int128;

struct MaskHash {
    std::size_t operator()(const Mask& m) const
    {
        auto lo = static_cast<std::uint64_t>(m);
        auto hi = static_cast<std::uint64_t>(m >> 64);
        return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9e3779b97f4a7c15ULL));
    }
};

Mask bit(int i) { return Mask{1} << i; }

struct Piece {
    bool triangle;
    LatticePoint a, b, c; // triangle corners, or parallelogram corner a with neighbours b, c
};

class PathGeometry {
public:
    PathGeometry(const LatticePolygon& polygon, LambdaOrder order) : polygon_(polygon), order_(order)
    {
        if (polygon.vertices().size() < 3)
            throw InvalidArgument("lattice path: polygon must be two-dimensional");
        pts_ = polygon.lattice_points();
        if (pts_.size() > 128)
            throw InvalidArgument("lattice path: polygon has more than 128 lattice points");
        std::sort(pts_.begin(), pts_.end(),
                  [&](const LatticePoint& a, const LatticePoint& b) { return lambda_order(a, b, order_) < 0; });
        for (std::size_t i = 0; i < pts_.size(); ++i)
            index_[pts_[i]] = static_cast<int>(i);
        build_chains();
    }

    int size() const { return static_cast<int>(pts_.size()); }
    const LatticePoint& point(int i) const { return pts_[static_cast<std::size_t>(i)]; }
    Mask chain(PathSide s) const { return s == PathSide::Positive ? upper_ : lower_; }
    int boundary_count() const { return boundary_; }

    int index_of(const LatticePoint& p) const
    {
        auto it = index_.find(p);
        return it == index_.end() ? -1 : it->second;
    }

    std::vector<int> indices(Mask m) const
    {
        std::vector<int> out;
        for (int i = 0; i < size(); ++i) {
            if (m & bit(i))
                out.push_back(i);
        }
        return out;
    }

    Mask mask_of(const LatticePath& path) const
    {
        if (path.points.size() < 2)
            throw InvalidArgument("lattice path needs at least two points");
        Mask m = 0;
        for (std::size_t i = 0; i < path.points.size(); ++i) {
            int idx = index_of(path.points[i]);
            if (idx < 0)
                throw InvalidArgument("lattice path leaves the polygon");
            if (i > 0 && lambda_order(path.points[i - 1], path.points[i], order_) >= 0)
                throw InvalidArgument("lattice path is not lambda-increasing");
            m |= bit(idx);
        }
        if (index_of(path.points.front()) != 0 || index_of(path.points.back()) != size() - 1)
            throw InvalidArgument("lattice path must run from the lambda-minimal to the lambda-maximal vertex");
        return m;
    }

    // First corner turning towards the given side, or -1.
    int first_turn(const std::vector<int>& idx, PathSide side) const
    {
        for (std::size_t j = 1; j + 1 < idx.size(); ++j) {
            const auto& a = point(idx[j - 1]);
            const auto& b = point(idx[j]);
            const auto& c = point(idx[j + 1]);
            std::int64_t t = cross(b - a, c - b);
            if ((side == PathSide::Positive && t > 0) || (side == PathSide::Negative && t < 0))
                return static_cast<int>(j);
        }
        return -1;
    }

private:
    void build_chains()
    {
        std::vector<LatticePoint> ring;
        const auto& v = polygon_.vertices();
        for (std::size_t i = 0; i < v.size(); ++i) {
            const auto& a = v[i];
            const auto& b = v[(i + 1) % v.size()];
            std::int64_t g = lattice_length(a, b);
            LatticePoint step{(b.x - a.x) / g, (b.y - a.y) / g};
            for (std::int64_t s = 0; s < g; ++s)
                ring.push_back(a + step * s);
        }
        boundary_ = static_cast<int>(ring.size());
        const std::size_t n = ring.size();
        std::size_t ip = 0, iq = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (ring[i] == pts_.front())
                ip = i;
            if (ring[i] == pts_.back())
                iq = i;
        }
        lower_ = 0;
        for (std::size_t i = ip;; i = (i + 1) % n) {
            lower_ |= bit(index_.at(ring[i]));
            if (i == iq)
                break;
        }
        upper_ = 0;
        for (std::size_t i = ip;; i = (i + n - 1) % n) {
            upper_ |= bit(index_.at(ring[i]));
            if (i == iq)
                break;
        }
    }

    const LatticePolygon& polygon_;
    LambdaOrder order_;
    std::vector<LatticePoint> pts_;
    std::map<LatticePoint, int> index_;
    Mask upper_ = 0, lower_ = 0;
    int boundary_ = 0;
};

template <class W>
class PathEngine {
public:
    using V = typename W::value_type;

    explicit PathEngine(const PathGeometry& geo) : geo_(geo) {}

    V mult(Mask m, PathSide side)
    {
        auto& memo = side == PathSide::Positive ? memo_pos_ : memo_neg_;
        auto it = memo.find(m);
        if (it != memo.end())
            return it->second;
        V result = compute(m, side);
        memo.emplace(m, result);
        return result;
    }

private:
    V compute(Mask m, PathSide side)
    {
        if (m == geo_.chain(side))
            return W::one();
        auto idx = geo_.indices(m);
        int j = geo_.first_turn(idx, side);
        if (j < 0)
            return W::zero();
        const auto& a = geo_.point(idx[static_cast<std::size_t>(j) - 1]);
        const auto& b = geo_.point(idx[static_cast<std::size_t>(j)]);
        const auto& c = geo_.point(idx[static_cast<std::size_t>(j) + 1]);
        Mask without = m & ~bit(idx[static_cast<std::size_t>(j)]);
        V result = W::zero();
        V rest = mult(without, side);
        if (!value_is_zero(rest))
            result = W::triangle(LatticeTriangle(a, b, c)) * rest;
        int r = geo_.index_of(a + c - b);
        if (r >= 0)
            result += mult(without | bit(r), side);
        return result;
    }

    const PathGeometry& geo_;
    std::unordered_map<Mask, V, MaskHash> memo_pos_, memo_neg_;
};

void check_genus(const LatticePolygon& polygon, std::int64_t g)
{
    if (g < min_path_genus(polygon) || g > max_path_genus(polygon))
        throw InvalidArgument("lattice path: genus " + std::to_string(g) + " outside [" +
                              std::to_string(min_path_genus(polygon)) + ", " +
                              std::to_string(max_path_genus(polygon)) + "]");
}

// Calls f(mask) for every lambda-increasing path with the given number of steps.
template <class F>
void for_each_path(const PathGeometry& geo, std::int64_t steps, F&& f)
{
    const int n = geo.size();
    const int inner = static_cast<int>(steps) - 1;
    auto rec = [&](auto&& self, int start, int left, Mask m) -> void {
        if (left == 0) {
            f(m | bit(n - 1));
            return;
        }
        for (int i = start; i <= n - 1 - left; ++i)
            self(self, i + 1, left - 1, m | bit(i));
    };
    rec(rec, 1, inner, bit(0));
}

template <class W>
typename W::value_type count_with(const LatticePolygon& polygon, std::int64_t g, LambdaOrder order)
{
    PathGeometry geo(polygon, order);
    check_genus(polygon, g);
    PathEngine<W> engine(geo);
    typename W::value_type total = W::zero();
    const std::int64_t steps = geo.boundary_count() + g - 1;
    for_each_path(geo, steps, [&](Mask m) {
        auto plus = engine.mult(m, PathSide::Positive);
        if (value_is_zero(plus))
            return;
        auto minus = engine.mult(m, PathSide::Negative);
        if (value_is_zero(minus))
            return;
        total += plus * minus;
    });
    return total;
}

using PieceList = std::vector<Piece>;

std::vector<PieceList> expand(const PathGeometry& geo, Mask m, PathSide side)
{
    if (m == geo.chain(side))
        return {PieceList{}};
    auto idx = geo.indices(m);
    int j = geo.first_turn(idx, side);
    if (j < 0)
        return {};
    const auto& a = geo.point(idx[static_cast<std::size_t>(j) - 1]);
    const auto& b = geo.point(idx[static_cast<std::size_t>(j)]);
    const auto& c = geo.point(idx[static_cast<std::size_t>(j) + 1]);
    Mask without = m & ~bit(idx[static_cast<std::size_t>(j)]);
    std::vector<PieceList> out;
    for (auto& pl : expand(geo, without, side)) {
        pl.push_back({true, a, b, c});
        out.push_back(std::move(pl));
    }
    int r = geo.index_of(a + c - b);
    if (r >= 0) {
        for (auto& pl : expand(geo, without | bit(r), side)) {
            pl.push_back({false, b, a, c});
            out.push_back(std::move(pl));
        }
    }
    return out;
}

} // namespace

int lambda_order(const LatticePoint& p, const LatticePoint& q, LambdaOrder order)
{
    if (p.x != q.x)
        return p.x < q.x ? -1 : 1;
    if (p.y == q.y)
        return 0;
    if (order == LambdaOrder::Standard)
        return p.y > q.y ? -1 : 1;
    return p.y < q.y ? -1 : 1;
}

std::int64_t min_path_genus(const LatticePolygon& polygon) { return 2 - polygon.boundary_count(); }

std::int64_t max_path_genus(const LatticePolygon& polygon) { return polygon.interior_count(); }

GWElement path_mult(const LatticePath& path, const LatticePolygon& polygon, PathSide side, LambdaOrder order)
{
    PathGeometry geo(polygon, order);
    PathEngine<ArithmeticWeights> engine(geo);
    return engine.mult(geo.mask_of(path), side);
}

GWElement count_lattice_path(const LatticePolygon& polygon, std::int64_t g, LambdaOrder order)
{
    return count_with<ArithmeticWeights>(polygon, g, order);
}

BigInt count_lattice_path_complex(const LatticePolygon& polygon, std::int64_t g, LambdaOrder order)
{
    return count_with<ComplexWeights>(polygon, g, order);
}

BigInt count_lattice_path_real(const LatticePolygon& polygon, std::int64_t g, LambdaOrder order)
{
    return count_with<RealWeights>(polygon, g, order);
}

std::vector<SimpleCurveData> enumerate_lattice_path_curves(const LatticePolygon& polygon, std::int64_t g,
                                                           LambdaOrder order)
{
    PathGeometry geo(polygon, order);
    check_genus(polygon, g);
    std::vector<SimpleCurveData> curves;
    const std::int64_t steps = geo.boundary_count() + g - 1;
    const std::vector<std::int64_t> ends(static_cast<std::size_t>(geo.boundary_count()), 1);
    for_each_path(geo, steps, [&](Mask m) {
        auto plus = expand(geo, m, PathSide::Positive);
        if (plus.empty())
            return;
        auto minus = expand(geo, m, PathSide::Negative);
        for (const auto& p : plus) {
            for (const auto& q : minus) {
                SimpleCurveData c;
                c.end_weights = ends;
                for (const auto* list : {&p, &q}) {
                    for (const auto& piece : *list) {
                        if (piece.triangle)
                            c.subdivision.triangles.emplace_back(piece.a, piece.b, piece.c);
                        else
                            c.subdivision.parallelograms.emplace_back(piece.a, piece.b, piece.c);
                    }
                }
                curves.push_back(std::move(c));
            }
        }
    });
    return curves;
}

} // namespace gwtrop
