#include "gwtrop/floor_diagrams.hpp"

#include "gwtrop/linear_extensions.hpp"
#include "gwtrop/weights.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace gwtrop {

namespace {

using WeightBag = std::map<std::int64_t, std::int64_t>; // weight -> count

WeightBag bag_of(const std::vector<std::int64_t>& w)
{
    WeightBag b;
    for (auto x : w) {
        if (x < 1)
            throw InvalidArgument("end weights must be positive");
        ++b[x];
    }
    return b;
}

std::int64_t sum_of(const std::vector<std::int64_t>& w) { return std::accumulate(w.begin(), w.end(), std::int64_t{0}); }

void check_weight_data(std::int64_t k, std::int64_t a, const std::vector<std::int64_t>& w_left,
                       const std::vector<std::int64_t>& w_right)
{
    if (k < 0 || a < 1)
        throw InvalidArgument("floor data needs k >= 0 and a >= 1");
    bag_of(w_left);
    bag_of(w_right);
    if (sum_of(w_left) != a * k + sum_of(w_right))
        throw InvalidArgument("inconsistent weight data: sum(w_left) must equal a*k + sum(w_right)");
}

// Calls f(chosen) for every sub-multiset of the bag; `chosen` is sorted.
template <class F>
void for_each_sub_bag(const WeightBag& bag, F&& f)
{
    std::vector<std::pair<std::int64_t, std::int64_t>> items(bag.begin(), bag.end());
    std::vector<std::int64_t> chosen;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == items.size()) {
            f(chosen);
            return;
        }
        const auto [w, c] = items[i];
        for (std::int64_t n = 0; n <= c; ++n) {
            self(self, i + 1);
            chosen.push_back(w);
        }
        chosen.resize(chosen.size() - static_cast<std::size_t>(c) - 1);
    };
    rec(rec, 0);
}

void remove_from(WeightBag& bag, const std::vector<std::int64_t>& w)
{
    for (auto x : w) {
        if (--bag[x] == 0)
            bag.erase(x);
    }
}

void add_to(WeightBag& bag, const std::vector<std::int64_t>& w)
{
    for (auto x : w)
        ++bag[x];
}

std::int64_t components_of(std::int64_t a, const std::vector<FloorEdge>& edges)
{
    std::vector<std::int64_t> parent(static_cast<std::size_t>(a) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::int64_t x) {
        while (parent[static_cast<std::size_t>(x)] != x)
            x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    std::int64_t comps = a;
    for (const auto& e : edges) {
        auto x = find(e.source), y = find(e.target);
        if (x != y) {
            parent[static_cast<std::size_t>(x)] = y;
            --comps;
        }
    }
    return comps;
}

// Enumerates diagrams together with their end attachments, floor by floor.
class AttachedEnumerator {
public:
    AttachedEnumerator(std::int64_t k, std::int64_t a, const std::vector<std::int64_t>& w_left,
                       const std::vector<std::int64_t>& w_right, std::int64_t g, bool connected)
        : k_(k), a_(a), connected_(connected), left_(bag_of(w_left)), right_(bag_of(w_right))
    {
        edges_max_ = a - 1 + g;
        std::int64_t wl = sum_of(w_left);
        std::int64_t span = 0;
        for (std::int64_t i = 0; i <= a; ++i)
            span += wl - k * i;
        budget_ = span - edges_max_ - static_cast<std::int64_t>(w_left.size() + w_right.size());
        in_.assign(static_cast<std::size_t>(a) + 2, 0);
        att_.left.assign(static_cast<std::size_t>(a), {});
        att_.right.assign(static_cast<std::size_t>(a), {});
    }

    std::vector<AttachedDiagram> run()
    {
        if (edges_max_ >= 0 && budget_ >= 0)
            floor(1, 0);
        return std::move(out_);
    }

private:
    std::int64_t pending_lower_bound(std::int64_t v) const
    {
        // cheapest cost for ends not yet attached, given floors > v remain
        std::int64_t lb = 0;
        for (const auto& [w, c] : left_)
            lb += c * ((v + 1) * w - 1);
        for (const auto& [w, c] : right_)
            lb += c * (w - 1);
        return lb;
    }

    void floor(std::int64_t v, std::int64_t cost)
    {
        const WeightBag left_here = left_;
        for_each_sub_bag(left_here, [&](const std::vector<std::int64_t>& L) {
            std::int64_t cl = cost, sl = 0;
            for (auto w : L) {
                cl += v * w - 1;
                sl += w;
            }
            if (cl > budget_)
                return;
            remove_from(left_, L);
            const WeightBag right_here = right_;
            for_each_sub_bag(right_here, [&](const std::vector<std::int64_t>& R) {
                std::int64_t cr = cl, sr = 0;
                for (auto w : R) {
                    cr += (a_ + 1 - v) * w - 1;
                    sr += w;
                }
                if (cr > budget_)
                    return;
                const std::int64_t out = in_[static_cast<std::size_t>(v)] + sl - sr - k_;
                if (out < 0)
                    return;
                remove_from(right_, R);
                if (cr + pending_lower_bound(v) <= budget_) {
                    att_.left[static_cast<std::size_t>(v - 1)] = L;
                    att_.right[static_cast<std::size_t>(v - 1)] = R;
                    if (v == a_) {
                        if (out == 0)
                            emit();
                    } else {
                        distribute(v, out, cr);
                    }
                    att_.left[static_cast<std::size_t>(v - 1)].clear();
                    att_.right[static_cast<std::size_t>(v - 1)].clear();
                }
                add_to(right_, R);
            });
            add_to(left_, L);
        });
    }

    void distribute(std::int64_t v, std::int64_t out, std::int64_t cost)
    {
        std::vector<FloorEdge> types;
        for (std::int64_t t = v + 1; t <= a_; ++t) {
            for (std::int64_t w = 1; w <= out; ++w) {
                if ((t - v) * w - 1 + cost > budget_)
                    break;
                types.push_back({v, t, w});
            }
        }
        auto rec = [&](auto&& self, std::size_t i, std::int64_t left, std::int64_t c) -> void {
            if (left == 0) {
                if (c + pending_lower_bound(v) <= budget_)
                    floor(v + 1, c);
                return;
            }
            if (i == types.size())
                return;
            const FloorEdge& e = types[i];
            const std::int64_t unit = (e.target - e.source) * e.weight - 1;
            std::size_t pushed = 0;
            std::int64_t n = 0;
            for (;;) {
                self(self, i + 1, left - n * e.weight, c + n * unit);
                ++n;
                if (n * e.weight > left || c + n * unit > budget_ ||
                    static_cast<std::int64_t>(edges_.size()) + 1 > edges_max_)
                    break;
                edges_.push_back(e);
                in_[static_cast<std::size_t>(e.target)] += e.weight;
                ++pushed;
            }
            for (std::size_t p = 0; p < pushed; ++p) {
                edges_.pop_back();
                in_[static_cast<std::size_t>(e.target)] -= e.weight;
            }
        };
        rec(rec, 0, out, cost);
    }

    void emit()
    {
        if (!left_.empty() || !right_.empty())
            return;
        if (static_cast<std::int64_t>(edges_.size()) != edges_max_)
            return;
        AttachedDiagram m;
        m.diagram.k = k_;
        m.diagram.a = a_;
        m.diagram.edges = edges_;
        std::sort(m.diagram.edges.begin(), m.diagram.edges.end());
        if (connected_ && !m.diagram.connected())
            return;
        m.ends = att_;
        out_.push_back(std::move(m));
    }

    std::int64_t k_, a_;
    bool connected_;
    WeightBag left_, right_;
    std::int64_t edges_max_ = 0, budget_ = 0;
    std::vector<std::int64_t> in_;
    std::vector<FloorEdge> edges_;
    EndAttachment att_;
    std::vector<AttachedDiagram> out_;
};

template <class W>
typename W::value_type marked_value(const AttachedDiagram& m)
{
    typename W::value_type v = W::one();
    for (const auto& e : m.diagram.edges) {
        auto f = W::edge(e.weight);
        v = v * f * f;
    }
    for (const auto* side : {&m.ends.left, &m.ends.right}) {
        for (const auto& ws : *side) {
            for (auto w : ws)
                v = v * W::edge(w);
        }
    }
    return v;
}

template <class W>
typename W::value_type floor_count_with(std::int64_t k, std::int64_t a, const std::vector<std::int64_t>& w_left,
                                        const std::vector<std::int64_t>& w_right, std::int64_t g, bool connected)
{
    check_weight_data(k, a, w_left, w_right);
    typename W::value_type total = W::zero();
    for (const auto& m : AttachedEnumerator(k, a, w_left, w_right, g, connected).run())
        total += marked_value<W>(m) * W::from_int(m.markings());
    return total;
}

} // namespace

std::int64_t FloorDiagram::divergence(std::int64_t v) const
{
    std::int64_t d = 0;
    for (const auto& e : edges) {
        if (e.target == v)
            d += e.weight;
        if (e.source == v)
            d -= e.weight;
    }
    return d;
}

std::int64_t FloorDiagram::components() const { return components_of(a, edges); }

std::int64_t AttachedDiagram::black_count() const
{
    std::int64_t n = static_cast<std::int64_t>(diagram.edges.size());
    for (std::size_t v = 0; v < ends.left.size(); ++v)
        n += static_cast<std::int64_t>(ends.left[v].size() + ends.right[v].size());
    return n;
}

BigInt AttachedDiagram::markings() const
{
    std::vector<std::pair<std::int64_t, std::int64_t>> slots;
    // identical black vertices: same kind, same endpoints, same weight
    std::map<std::tuple<int, std::int64_t, std::int64_t, std::int64_t>, std::int64_t> types;
    for (const auto& e : diagram.edges) {
        slots.emplace_back(e.source, e.target - 1);
        ++types[{0, e.source, e.target, e.weight}];
    }
    for (std::size_t i = 0; i < ends.left.size(); ++i) {
        const auto v = static_cast<std::int64_t>(i) + 1;
        for (auto w : ends.left[i]) {
            slots.emplace_back(0, v - 1);
            ++types[{1, v, 0, w}];
        }
        for (auto w : ends.right[i]) {
            slots.emplace_back(v, diagram.a);
            ++types[{2, v, 0, w}];
        }
    }
    BigInt aut = 1;
    for (const auto& [t, c] : types)
        aut *= factorial(c);
    BigInt ext = count_chain_extensions(diagram.a, slots);
    if (ext % aut != 0)
        throw InvalidArgument("internal error: automorphisms do not act freely on markings");
    return ext / aut;
}

std::vector<FloorDiagram> enumerate_diagrams(std::int64_t k, std::int64_t a, std::int64_t g, bool connected)
{
    if (a < 1 || k < 0)
        throw InvalidArgument("enumerate_diagrams needs a >= 1 and k >= 0");
    const std::int64_t edges_max = a - 1 + g;
    std::vector<FloorDiagram> out;
    if (edges_max < 0)
        return out;
    std::vector<FloorEdge> edges;
    std::vector<std::int64_t> in(static_cast<std::size_t>(a) + 2, 0);
    // flow across the cut after v is at most k (a - v) since div <= k on the right part
    auto vertex = [&](auto&& self, std::int64_t v, std::int64_t flow) -> void {
        const std::int64_t inw = in[static_cast<std::size_t>(v)];
        if (v == a) {
            if (inw <= k && static_cast<std::int64_t>(edges.size()) == edges_max) {
                FloorDiagram d{k, a, edges};
                std::sort(d.edges.begin(), d.edges.end());
                if (!connected || d.connected())
                    out.push_back(std::move(d));
            }
            return;
        }
        const std::int64_t lo = std::max<std::int64_t>(0, inw - k);
        const std::int64_t hi = k * (a - v) - flow + inw;
        for (std::int64_t t = lo; t <= hi; ++t) {
            std::vector<FloorEdge> types;
            for (std::int64_t tg = v + 1; tg <= a; ++tg)
                for (std::int64_t w = 1; w <= t; ++w)
                    types.push_back({v, tg, w});
            auto dist = [&](auto&& dself, std::size_t i, std::int64_t left) -> void {
                if (left == 0) {
                    self(self, v + 1, flow + t - inw);
                    return;
                }
                if (i == types.size())
                    return;
                const auto& e = types[i];
                std::size_t pushed = 0;
                for (std::int64_t n = 0;; ++n) {
                    dself(dself, i + 1, left - n * e.weight);
                    if ((n + 1) * e.weight > left || static_cast<std::int64_t>(edges.size()) + 1 > edges_max)
                        break;
                    edges.push_back(e);
                    in[static_cast<std::size_t>(e.target)] += e.weight;
                    ++pushed;
                }
                for (std::size_t p = 0; p < pushed; ++p) {
                    edges.pop_back();
                    in[static_cast<std::size_t>(e.target)] -= e.weight;
                }
            };
            dist(dist, 0, t);
        }
    };
    vertex(vertex, 1, 0);
    return out;
}

std::vector<AttachedDiagram> enumerate_attached(std::int64_t k, std::int64_t a, const std::vector<std::int64_t>& w_left,
                                                const std::vector<std::int64_t>& w_right, std::int64_t g,
                                                bool connected)
{
    check_weight_data(k, a, w_left, w_right);
    return AttachedEnumerator(k, a, w_left, w_right, g, connected).run();
}

BigInt count_markings(const FloorDiagram& d, const std::vector<std::int64_t>& w_left,
                      const std::vector<std::int64_t>& w_right)
{
    check_weight_data(d.k, d.a, w_left, w_right);
    for (const auto& e : d.edges) {
        if (e.source < 1 || e.target > d.a || e.source >= e.target || e.weight < 1)
            throw InvalidArgument("malformed floor diagram edge");
    }
    WeightBag left = bag_of(w_left), right = bag_of(w_right);
    AttachedDiagram m{d, {}};
    m.ends.left.assign(static_cast<std::size_t>(d.a), {});
    m.ends.right.assign(static_cast<std::size_t>(d.a), {});
    BigInt total = 0;
    auto rec = [&](auto&& self, std::int64_t v) -> void {
        if (v > d.a) {
            if (left.empty() && right.empty())
                total += m.markings();
            return;
        }
        const std::int64_t div = d.divergence(v);
        const WeightBag lh = left;
        for_each_sub_bag(lh, [&](const std::vector<std::int64_t>& L) {
            const std::int64_t sl = sum_of(L);
            remove_from(left, L);
            const WeightBag rh = right;
            for_each_sub_bag(rh, [&](const std::vector<std::int64_t>& R) {
                if (div + sl - sum_of(R) != d.k)
                    return;
                remove_from(right, R);
                m.ends.left[static_cast<std::size_t>(v - 1)] = L;
                m.ends.right[static_cast<std::size_t>(v - 1)] = R;
                self(self, v + 1);
                add_to(right, R);
            });
            add_to(left, L);
        });
    };
    rec(rec, 1);
    return total;
}

GWElement diagram_mult(const FloorDiagram& d)
{
    GWElement m = GWElement::one();
    for (const auto& e : d.edges)
        m *= edge_factor(e.weight);
    return m;
}

GWElement marked_mult(const AttachedDiagram& m) { return marked_value<ArithmeticWeights>(m); }
BigInt marked_complex_mult(const AttachedDiagram& m) { return marked_value<ComplexWeights>(m); }
BigInt marked_real_mult(const AttachedDiagram& m) { return marked_value<RealWeights>(m); }

GWElement floor_count(std::int64_t k, std::int64_t a, const std::vector<std::int64_t>& w_left,
                      const std::vector<std::int64_t>& w_right, std::int64_t g, bool connected)
{
    return floor_count_with<ArithmeticWeights>(k, a, w_left, w_right, g, connected);
}

BigInt floor_count_complex(std::int64_t k, std::int64_t a, const std::vector<std::int64_t>& w_left,
                           const std::vector<std::int64_t>& w_right, std::int64_t g, bool connected)
{
    return floor_count_with<ComplexWeights>(k, a, w_left, w_right, g, connected);
}

BigInt floor_count_real(std::int64_t k, std::int64_t a, const std::vector<std::int64_t>& w_left,
                        const std::vector<std::int64_t>& w_right, std::int64_t g, bool connected)
{
    return floor_count_with<RealWeights>(k, a, w_left, w_right, g, connected);
}

GWElement severi_count(std::int64_t d, std::int64_t delta)
{
    if (d < 1 || delta < 0)
        throw InvalidArgument("severi_count needs d >= 1 and delta >= 0");
    return floor_count(1, d, std::vector<std::int64_t>(static_cast<std::size_t>(d), 1), {},
                       (d - 1) * (d - 2) / 2 - delta);
}

BigInt severi_count_complex(std::int64_t d, std::int64_t delta)
{
    if (d < 1 || delta < 0)
        throw InvalidArgument("severi_count needs d >= 1 and delta >= 0");
    return floor_count_complex(1, d, std::vector<std::int64_t>(static_cast<std::size_t>(d), 1), {},
                               (d - 1) * (d - 2) / 2 - delta);
}

GWElement hirzebruch_function(std::int64_t k, std::int64_t a, std::int64_t g, const std::vector<std::int64_t>& w_left,
                              const std::vector<std::int64_t>& w_right)
{
    for (const auto* ws : {&w_left, &w_right}) {
        for (auto w : *ws) {
            if (w % 2 == 0)
                throw InvalidArgument("hirzebruch_function: all weights must be odd");
        }
    }
    return floor_count(k, a, w_left, w_right, g);
}

nlohmann::json diagram_to_json(const FloorDiagram& d)
{
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : d.edges)
        edges.push_back({e.source, e.target, e.weight});
    return {{"k", d.k}, {"floors", d.a}, {"edges", edges}};
}

nlohmann::json attached_to_json(const AttachedDiagram& m)
{
    nlohmann::json j = diagram_to_json(m.diagram);
    j["left_ends"] = m.ends.left;
    j["right_ends"] = m.ends.right;
    return j;
}

} // namespace gwtrop
